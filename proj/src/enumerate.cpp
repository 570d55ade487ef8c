#include "khecke/enumerate.hpp"

#include <algorithm>
#include <map>

namespace khecke {

IncreasingFillings::IncreasingFillings(SkewShape shape, Letter max_letter, Letter min_letter)
    : shape_(std::move(shape)),
      max_letter_(max_letter),
      min_letter_(min_letter),
      cells_(shape_.cells()) {
  std::map<Cell, int> index;
  for (std::size_t k = 0; k < cells_.size(); ++k) index[cells_[k]] = static_cast<int>(k);
  for (const auto& c : cells_) {
    auto l = index.find({c.row, c.col - 1});
    auto a = index.find({c.row - 1, c.col});
    left_.push_back(l == index.end() ? -1 : l->second);
    above_.push_back(a == index.end() ? -1 : a->second);
  }
  values_.assign(cells_.size(), 0);
}

void IncreasingFillings::reset() {
  started_ = false;
  done_ = false;
}

Letter IncreasingFillings::lower_bound_at(std::size_t k) const {
  Letter lo = min_letter_;
  if (left_[k] >= 0) lo = std::max(lo, values_[static_cast<std::size_t>(left_[k])] + 1);
  if (above_[k] >= 0) lo = std::max(lo, values_[static_cast<std::size_t>(above_[k])] + 1);
  return lo;
}

IncreasingTableau IncreasingFillings::build() const {
  Rows rows(static_cast<std::size_t>(shape_.num_rows()));
  for (std::size_t k = 0; k < cells_.size(); ++k)
    rows[static_cast<std::size_t>(cells_[k].row - 1)].push_back(values_[k]);
  return IncreasingTableau(IncreasingTableau::unchecked, shape_.inner(), std::move(rows));
}

bool IncreasingFillings::next(IncreasingTableau& out) {
  if (done_) return false;
  const std::size_t n = cells_.size();
  // k is the cell whose value is advanced next; cells before k stay fixed
  std::size_t k = 0;
  bool advance = false;
  if (!started_) {
    started_ = true;
    if (n == 0) {
      done_ = true;
      out = build();
      return true;
    }
  } else {
    if (n == 0) {
      done_ = true;
      return false;
    }
    k = n - 1;
    advance = true;
  }
  while (true) {
    Letter v = advance ? values_[k] + 1 : lower_bound_at(k);
    if (v > max_letter_) {
      if (k == 0) {
        done_ = true;
        return false;
      }
      --k;
      advance = true;
      continue;
    }
    values_[k] = v;
    if (k + 1 == n) {
      out = build();
      return true;
    }
    ++k;
    advance = false;
  }
}

std::vector<IncreasingTableau> increasing_tableaux(const SkewShape& shape, Letter max_letter) {
  std::vector<IncreasingTableau> out;
  for_each_increasing_tableau(shape, max_letter,
                              [&](const IncreasingTableau& t) { out.push_back(t); });
  return out;
}

namespace {

void box_shapes_rec(int rows_left, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  out.emplace_back(prefix);
  if (rows_left == 0) return;
  for (int p = 1; p <= max_part; ++p) {
    prefix.push_back(p);
    box_shapes_rec(rows_left - 1, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> shapes_in_box(int k) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  box_shapes_rec(k, k, prefix, out);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  });
  return out;
}

std::vector<IncreasingTableau> all_increasing_tableaux(Letter max_letter) {
  std::vector<IncreasingTableau> out;
  for (const auto& shape : shapes_in_box(max_letter)) {
    // the minimal tableau is the pointwise smallest filling of its shape
    if (minimal_tableau(shape).max_entry() > max_letter) continue;
    for_each_increasing_tableau(SkewShape(shape), max_letter,
                                [&](const IncreasingTableau& t) { out.push_back(t); });
  }
  return out;
}

}  // namespace khecke
