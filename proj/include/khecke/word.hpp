#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "khecke/partition.hpp"

namespace khecke {

using Letter = int;

/// Finite sequence of positive letters.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  /// "15133" reads one letter per digit; "10,2,3" reads comma-separated
  /// letters. "" and "-" give the empty word.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(Letter x);
  Word& operator+=(const Word& other);

  /// Digits run together when every letter is below 10, else comma separated.
  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

 private:
  std::vector<Letter> letters_;
};

/// Sorted distinct letters of w.
std::vector<Letter> support(const Word& w);
Letter max_letter(const Word& w);

/// Support equals {1, ..., k} for some k >= 0.
bool is_initial(const Word& w);

/// Replaces each letter by its rank among the distinct letters (42254 -> 21132).
Word flatten_word(const Word& w);

/// Letters of w lying in [lo, hi], in order.
Word restrict_word(const Word& w, Letter lo, Letter hi);

/// Adds n to every letter.
Word shift(const Word& w, int n);

/// D(w) = { i : w_i > w_{i+1} }, 1-indexed.
std::vector<int> descent_set(const Word& w);

/// Throws std::invalid_argument on the empty word.
Composition descent_composition(const Word& w);

/// Longest strictly increasing / strictly decreasing subsequence.
int lis(const Word& w);
int lds(const Word& w);

}  // namespace khecke

template <>
struct std::hash<khecke::Word> {
  std::size_t operator()(const khecke::Word& w) const noexcept;
};
