#include "khecke/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace khecke {

namespace {

std::string cell_name(int row, int col) {
  return "row " + std::to_string(row) + ", column " + std::to_string(col);
}

void normalize(const Partition& inner, Rows& rows) {
  if (rows.size() < static_cast<std::size_t>(inner.length()))
    rows.resize(static_cast<std::size_t>(inner.length()));
  while (rows.size() > static_cast<std::size_t>(inner.length()) && rows.back().empty())
    rows.pop_back();
}

std::string rows_to_string(const Rows& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(rows[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

IncreasingTableau::IncreasingTableau(Rows rows) : IncreasingTableau(Partition{}, std::move(rows)) {}

IncreasingTableau::IncreasingTableau(Partition inner, Rows rows)
    : inner_(std::move(inner)), rows_(std::move(rows)) {
  normalize(inner_, rows_);
  if (auto v = find_violation(inner_, rows_))
    throw std::invalid_argument("not an increasing tableau: " + *v);
}

std::optional<std::string> IncreasingTableau::find_violation(const Partition& inner,
                                                             const Rows& raw) {
  Rows rows = raw;
  normalize(inner, rows);
  int prev_outer = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int i = static_cast<int>(r) + 1;
    const int start = inner.row_length(i);
    const int outer = start + static_cast<int>(rows[r].size());
    if (r > 0 && outer > prev_outer)
      return "row " + std::to_string(i) + " is longer than the row above";
    prev_outer = outer;
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      const int j = start + static_cast<int>(k) + 1;
      const Letter x = rows[r][k];
      if (x < 1) return cell_name(i, j) + ": entry must be positive";
      if (k > 0 && rows[r][k - 1] >= x)
        return cell_name(i, j) + ": entry " + std::to_string(x) +
               " is not greater than the entry to its left";
      if (r > 0) {
        const int above_start = inner.row_length(i - 1);
        const int above_end = above_start + static_cast<int>(rows[r - 1].size());
        if (j > above_start && j <= above_end) {
          const Letter above = rows[r - 1][static_cast<std::size_t>(j - above_start - 1)];
          if (above >= x)
            return cell_name(i, j) + ": entry " + std::to_string(x) +
                   " is not greater than the entry above";
        }
      }
    }
  }
  return std::nullopt;
}

Partition IncreasingTableau::outer() const {
  std::vector<int> parts;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    parts.push_back(inner_.row_length(static_cast<int>(r) + 1) + static_cast<int>(rows_[r].size()));
  return Partition(std::move(parts));
}

int IncreasingTableau::num_cells() const noexcept {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

Letter IncreasingTableau::at(Cell c) const noexcept {
  if (c.row < 1 || c.row > num_rows()) return 0;
  const auto& row = rows_[static_cast<std::size_t>(c.row - 1)];
  const int k = c.col - inner_.row_length(c.row) - 1;
  if (k < 0 || k >= static_cast<int>(row.size())) return 0;
  return row[static_cast<std::size_t>(k)];
}

Letter IncreasingTableau::max_entry() const noexcept {
  Letter m = 0;
  for (const auto& row : rows_)
    for (Letter x : row) m = std::max(m, x);
  return m;
}

std::vector<Letter> IncreasingTableau::support() const {
  std::vector<Letter> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IncreasingTableau IncreasingTableau::restrict_to_max(Letter k) const {
  if (!is_straight())
    throw std::invalid_argument("restrict_to_max requires a straight-shape tableau");
  Rows out;
  for (const auto& row : rows_) {
    std::vector<Letter> kept;
    for (Letter x : row)
      if (x <= k) kept.push_back(x);
    if (kept.empty()) break;
    out.push_back(std::move(kept));
  }
  return IncreasingTableau(unchecked, std::move(out));
}

IncreasingTableau IncreasingTableau::shifted(int n) const {
  Rows out = rows_;
  for (auto& row : out)
    for (auto& x : row) x += n;
  return IncreasingTableau(unchecked, inner_, std::move(out));
}

std::string IncreasingTableau::to_string() const {
  if (is_straight()) return rows_to_string(rows_);
  return inner_.to_string() + ":" + rows_to_string(rows_);
}

Word reading_word(const IncreasingTableau& t) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(t.num_cells()));
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
    out.insert(out.end(), it->begin(), it->end());
  return Word(std::move(out));
}

IncreasingTableau flatten_tableau(const IncreasingTableau& t) {
  const auto sup = t.support();
  Rows rows = t.rows();
  for (auto& row : rows)
    for (auto& x : row)
      x = static_cast<Letter>(std::lower_bound(sup.begin(), sup.end(), x) - sup.begin()) + 1;
  return IncreasingTableau(IncreasingTableau::unchecked, t.inner(), std::move(rows));
}

IncreasingTableau minimal_tableau(const Partition& shape) {
  Rows rows;
  for (int i = 1; i <= shape.length(); ++i) {
    std::vector<Letter> row;
    for (int j = 1; j <= shape.row_length(i); ++j) row.push_back(i + j - 1);
    rows.push_back(std::move(row));
  }
  return IncreasingTableau(IncreasingTableau::unchecked, std::move(rows));
}

IncreasingTableau superstandard_tableau(const Partition& shape) {
  Rows rows;
  Letter next = 1;
  for (int p : shape.parts()) {
    std::vector<Letter> row;
    for (int j = 0; j < p; ++j) row.push_back(next++);
    rows.push_back(std::move(row));
  }
  return IncreasingTableau(IncreasingTableau::unchecked, std::move(rows));
}

// ---------------------------------------------------------------------------

template <bool Strict>
BasicSetTableau<Strict>::BasicSetTableau(SetRows rows) : rows_(std::move(rows)) {
  for (auto& row : rows_)
    for (auto& box : row) std::sort(box.begin(), box.end());
  if (auto v = find_violation(rows_))
    throw std::invalid_argument(std::string(Strict ? "not a set-valued tableau: "
                                                   : "not a weak set-valued tableau: ") +
                                *v);
}

template <bool Strict>
std::optional<std::string> BasicSetTableau<Strict>::find_violation(const SetRows& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int i = static_cast<int>(r) + 1;
    if (rows[r].empty()) return "row " + std::to_string(i) + " is empty";
    if (r > 0 && rows[r].size() > rows[r - 1].size())
      return "row " + std::to_string(i) + " is longer than the row above";
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      const int j = static_cast<int>(k) + 1;
      const auto& box = rows[r][k];
      if (box.empty()) return cell_name(i, j) + ": box is empty";
      if (!std::is_sorted(box.begin(), box.end()))
        return cell_name(i, j) + ": box entries must be sorted";
      if (box.front() < 1) return cell_name(i, j) + ": entries must be positive";
      if (Strict && std::adjacent_find(box.begin(), box.end()) != box.end())
        return cell_name(i, j) + ": repeated entry in a set-valued box";
      if (k > 0 && box.front() < rows[r][k - 1].back())
        return cell_name(i, j) + ": smallest entry is less than the largest entry to the left";
      if (r > 0 && box.front() <= rows[r - 1][k].back())
        return cell_name(i, j) + ": smallest entry is not greater than the largest entry above";
    }
  }
  return std::nullopt;
}

template <bool Strict>
Partition BasicSetTableau<Strict>::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

template <bool Strict>
int BasicSetTableau<Strict>::num_cells() const noexcept {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

template <bool Strict>
int BasicSetTableau<Strict>::weight() const noexcept {
  int n = 0;
  for (const auto& row : rows_)
    for (const auto& box : row) n += static_cast<int>(box.size());
  return n;
}

template <bool Strict>
bool BasicSetTableau<Strict>::is_standard() const {
  std::vector<Letter> all;
  for (const auto& row : rows_)
    for (const auto& box : row) all.insert(all.end(), box.begin(), box.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<Letter>(i) + 1) return false;
  return true;
}

template <bool Strict>
std::string BasicSetTableau<Strict>::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t k = 0; k < rows_[r].size(); ++k) {
      if (k) out += ",";
      out += "{";
      for (std::size_t e = 0; e < rows_[r][k].size(); ++e) {
        if (e) out += ",";
        out += std::to_string(rows_[r][k][e]);
      }
      out += "}";
    }
    out += "]";
  }
  return out + "]";
}

template class BasicSetTableau<true>;
template class BasicSetTableau<false>;

SetValuedTableau standardize_weak_tableau(const WeakSetValuedTableau& w) {
  // value -> list of (column, row, index within box) occurrences
  std::map<Letter, std::vector<std::tuple<int, int, std::size_t>>> occurrences;
  const auto& rows = w.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < rows[r].size(); ++k)
      for (std::size_t e = 0; e < rows[r][k].size(); ++e)
        occurrences[rows[r][k][e]].emplace_back(static_cast<int>(k), static_cast<int>(r), e);

  SetRows out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) out[r].resize(rows[r].size());

  Letter next = 1;
  for (auto& [value, cells] : occurrences) {
    // southwest to northeast: copies of one value never share a column, so
    // increasing column order is the required order; copies in one box are
    // consecutive
    std::sort(cells.begin(), cells.end());
    for (const auto& [col, row, idx] : cells)
      out[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].push_back(next++);
  }
  return SetValuedTableau(std::move(out));
}

std::vector<int> descent_set(const SetValuedTableau& standard) {
  if (!standard.is_standard())
    throw std::invalid_argument("descent set requires a standard set-valued tableau");
  std::vector<int> row_of(static_cast<std::size_t>(standard.weight()) + 2, 0);
  const auto& rows = standard.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& box : rows[r])
      for (Letter x : box) row_of[static_cast<std::size_t>(x)] = static_cast<int>(r);
  std::vector<int> out;
  for (int i = 1; i < standard.weight(); ++i)
    if (row_of[static_cast<std::size_t>(i) + 1] > row_of[static_cast<std::size_t>(i)])
      out.push_back(i);
  return out;
}

Composition descent_composition(const SetValuedTableau& standard) {
  if (standard.weight() == 0)
    throw std::invalid_argument("empty tableau has no descent composition");
  return Composition::from_descent_set(descent_set(standard), standard.weight());
}

}  // namespace khecke
