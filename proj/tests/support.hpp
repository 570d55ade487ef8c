#pragma once

#include <vector>

#include "khecke/word.hpp"

namespace khecke::testing {

/// Every word of length <= max_len over [k], shortest first.
inline std::vector<Word> words_up_to(int max_len, int k) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter x = 1; x <= k; ++x) {
        auto v = w;
        v.push_back(x);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace khecke::testing
