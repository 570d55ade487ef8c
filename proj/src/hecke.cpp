#include "khecke/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace khecke {

namespace {

// Entry at 0-indexed (r, k) of a straight tableau, or 0 outside the shape.
Letter entry(const Rows& rows, std::size_t r, std::size_t k) {
  if (r >= rows.size() || k >= rows[r].size()) return 0;
  return rows[r][k];
}

bool has(const Rows& rows, std::size_t r, std::size_t k) {
  return r < rows.size() && k < rows[r].size();
}

// Insert into rows in place; returns (corner, added).
std::pair<Cell, bool> insert_in_place(Rows& rows, Letter x) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      // a fresh row below the tableau: the box goes under column 1
      if (r == 0 || rows[r - 1][0] < x) {
        rows.push_back({x});
        return {{static_cast<int>(r) + 1, 1}, true};
      }
      throw std::logic_error("Hecke insertion reached an empty row that cannot accept the letter");
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      // x is weakly larger than every entry of the row
      const std::size_t k = row.size();
      const bool fits = row.back() < x && (r == 0 || (has(rows, r - 1, k) && rows[r - 1][k] < x));
      if (fits) {  // H1
        row.push_back(x);
        return {{static_cast<int>(r) + 1, static_cast<int>(k) + 1}, true};
      }
      // H2: bottom of the column holding the last box of this row
      std::size_t bottom = r;
      while (has(rows, bottom + 1, k - 1)) ++bottom;
      return {{static_cast<int>(bottom) + 1, static_cast<int>(k)}, false};
    }
    const auto k = static_cast<std::size_t>(it - row.begin());
    const Letter y = *it;
    const bool left_ok = k == 0 || row[k - 1] < x;
    const bool above_ok = r == 0 || entry(rows, r - 1, k) < x;
    if (left_ok && above_ok) row[k] = x;  // H3; otherwise H4 leaves the row alone
    x = y;
  }
}

}  // namespace

std::vector<Cell> corners(const Partition& shape) {
  std::vector<Cell> out;
  for (int i = 1; i <= shape.length(); ++i)
    if (shape.row_length(i + 1) < shape.row_length(i)) out.push_back({i, shape.row_length(i)});
  return out;
}

InsertionOutcome insert_letter(const IncreasingTableau& y, Letter x) {
  if (!y.is_straight()) throw std::invalid_argument("Hecke insertion requires a straight shape");
  if (x < 1) throw std::invalid_argument("inserted letter must be positive");
  Rows rows = y.rows();
  auto [corner, added] = insert_in_place(rows, x);
  return {IncreasingTableau(IncreasingTableau::unchecked, std::move(rows)), corner, added};
}

std::pair<IncreasingTableau, Letter> reverse_insert(const IncreasingTableau& z, Cell c,
                                                    bool added) {
  if (!z.is_straight()) throw std::invalid_argument("reverse insertion requires a straight shape");
  const auto shape = z.shape();
  const auto cs = corners(shape);
  if (std::find(cs.begin(), cs.end(), c) == cs.end())
    throw std::invalid_argument("not a corner cell");

  Rows rows = z.rows();
  auto r = static_cast<std::size_t>(c.row - 1);
  Letter y = rows[r][static_cast<std::size_t>(c.col - 1)];
  if (added) {  // rH1
    rows[r].pop_back();
    if (rows[r].empty()) rows.pop_back();
  }
  while (r > 0) {
    --r;
    auto& row = rows[r];
    // largest x < y
    auto it = std::lower_bound(row.begin(), row.end(), y);
    if (it == row.begin())
      throw std::logic_error("reverse insertion found no smaller entry in the row above");
    --it;
    const auto k = static_cast<std::size_t>(it - row.begin());
    const Letter x = *it;
    const bool right_ok = k + 1 >= row.size() || y < row[k + 1];
    const bool below_ok = !has(rows, r + 1, k) || y < rows[r + 1][k];
    if (right_ok && below_ok) row[k] = y;  // rH3; otherwise rH4
    y = x;
  }
  return {IncreasingTableau(IncreasingTableau::unchecked, std::move(rows)), y};
}

InsertionPair insert_word(const Word& w) {
  Rows p;
  SetRows q;
  Letter step = 0;
  for (Letter x : w) {
    ++step;
    if (x < 1) throw std::invalid_argument("word letters must be positive");
    auto [corner, added] = insert_in_place(p, x);
    const auto r = static_cast<std::size_t>(corner.row - 1);
    const auto k = static_cast<std::size_t>(corner.col - 1);
    if (added) {
      if (r == q.size()) q.emplace_back();
      q[r].push_back({step});
    } else {
      q[r][k].push_back(step);
    }
  }
  return {IncreasingTableau(IncreasingTableau::unchecked, std::move(p)),
          SetValuedTableau(std::move(q))};
}

IncreasingTableau insertion_tableau(const Word& w) {
  Rows p;
  for (Letter x : w) insert_in_place(p, x);
  return IncreasingTableau(IncreasingTableau::unchecked, std::move(p));
}

Word reverse_word(const IncreasingTableau& p, const SetValuedTableau& q) {
  if (!p.is_straight() || p.shape() != q.shape())
    throw std::invalid_argument("insertion and recording tableaux must have the same shape");
  if (!q.is_standard())
    throw std::invalid_argument("recording tableau must use each of 1..n exactly once");
  SetRows rec = q.rows();
  IncreasingTableau current = p;
  const int n = q.weight();
  std::vector<Letter> letters(static_cast<std::size_t>(n));
  for (int l = n; l >= 1; --l) {
    Cell c{};
    for (std::size_t r = 0; r < rec.size() && c.row == 0; ++r)
      for (std::size_t k = 0; k < rec[r].size(); ++k)
        if (rec[r][k].back() == l) {
          c = {static_cast<int>(r) + 1, static_cast<int>(k) + 1};
          break;
        }
    auto& box = rec[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
    const bool alone = box.size() == 1;
    auto [prev, x] = reverse_insert(current, c, alone);
    letters[static_cast<std::size_t>(l - 1)] = x;
    current = std::move(prev);
    box.pop_back();
    if (alone) {
      auto& row = rec[static_cast<std::size_t>(c.row - 1)];
      row.pop_back();
      if (row.empty()) rec.pop_back();
    }
  }
  return Word(std::move(letters));
}

}  // namespace khecke
