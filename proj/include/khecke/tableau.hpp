#pragma once

#include <optional>
#include <string>
#include <vector>

#include "khecke/partition.hpp"
#include "khecke/word.hpp"

namespace khecke {

using Rows = std::vector<std::vector<Letter>>;

/// Filling of a (possibly skew) shape, strictly increasing along rows and
/// down columns. rows()[i] holds the cells of row i+1 from column
/// inner.row_length(i+1)+1 onward; rows of a skew shape may be empty.
class IncreasingTableau {
 public:
  struct unchecked_t {};
  static constexpr unchecked_t unchecked{};

  IncreasingTableau() = default;
  explicit IncreasingTableau(Rows rows);
  IncreasingTableau(Partition inner, Rows rows);
  IncreasingTableau(unchecked_t, Rows rows) : rows_(std::move(rows)) {}
  IncreasingTableau(unchecked_t, Partition inner, Rows rows)
      : inner_(std::move(inner)), rows_(std::move(rows)) {}

  /// First violated invariant, if any, phrased for error messages.
  static std::optional<std::string> find_violation(const Partition& inner, const Rows& rows);

  const Rows& rows() const noexcept { return rows_; }
  const Partition& inner() const noexcept { return inner_; }
  Partition outer() const;
  /// Outer shape; only meaningful for straight tableaux.
  Partition shape() const { return outer(); }
  SkewShape skew_shape() const { return SkewShape(outer(), inner_); }

  bool is_straight() const noexcept { return inner_.empty(); }
  bool empty() const noexcept { return num_cells() == 0; }
  int num_cells() const noexcept;
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }

  /// Entry at a 1-indexed cell, or 0 when the cell is not in the shape.
  Letter at(Cell c) const noexcept;

  Letter max_entry() const noexcept;
  std::vector<Letter> support() const;

  /// Straight tableau of the entries <= k (an order ideal of a straight shape).
  IncreasingTableau restrict_to_max(Letter k) const;

  /// Adds n to every entry.
  IncreasingTableau shifted(int n) const;

  std::string to_string() const;

  friend bool operator==(const IncreasingTableau&, const IncreasingTableau&) = default;
  friend auto operator<=>(const IncreasingTableau& a, const IncreasingTableau& b) {
    if (auto c = a.inner_ <=> b.inner_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  Partition inner_;
  Rows rows_;
};

/// Row reading word: rows bottom to top, each left to right.
Word reading_word(const IncreasingTableau& t);

/// Replaces each entry by its rank among the distinct entries.
IncreasingTableau flatten_tableau(const IncreasingTableau& t);

/// Cell (i,j) holds i+j-1.
IncreasingTableau minimal_tableau(const Partition& shape);

/// Row i holds the next shape[i] consecutive integers.
IncreasingTableau superstandard_tableau(const Partition& shape);

using SetRows = std::vector<std::vector<std::vector<Letter>>>;

/// Straight-shape filling by nonempty finite sets (Strict) or multisets of
/// letters. Each box is kept sorted. The smallest entry of a box is >= the
/// largest entry of the box to its left and > the largest entry above it.
template <bool Strict>
class BasicSetTableau {
 public:
  BasicSetTableau() = default;
  explicit BasicSetTableau(SetRows rows);

  static std::optional<std::string> find_violation(const SetRows& rows);

  const SetRows& rows() const noexcept { return rows_; }
  Partition shape() const;
  int num_cells() const noexcept;
  /// Total number of entries counted with multiplicity.
  int weight() const noexcept;
  const std::vector<Letter>& at(Cell c) const { return rows_.at(c.row - 1).at(c.col - 1); }

  /// Entries are exactly 1..N, each used once.
  bool is_standard() const;

  std::string to_string() const;

  friend bool operator==(const BasicSetTableau&, const BasicSetTableau&) = default;

 private:
  SetRows rows_;
};

using SetValuedTableau = BasicSetTableau<true>;
using WeakSetValuedTableau = BasicSetTableau<false>;

/// Relabels the entries 1..N: the copies of each value are replaced, in
/// southwest to northeast order, by the next consecutive integers.
SetValuedTableau standardize_weak_tableau(const WeakSetValuedTableau& w);

/// Descent set of a standard set-valued tableau: i such that i+1 sits in a
/// strictly lower row than i.
std::vector<int> descent_set(const SetValuedTableau& standard);
Composition descent_composition(const SetValuedTableau& standard);

}  // namespace khecke
