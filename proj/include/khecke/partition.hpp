#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace khecke {

/// A box of a Young diagram. Rows and columns are 1-indexed, row 1 at the top.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive row lengths. Trailing zeros are
/// dropped on construction, so (2,1,0) and (2,1) compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Parses "3,1". The strings "", "0" and "-" denote the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Length of row i (1-indexed); zero past the last row.
  int row_length(int i) const noexcept;
  int column_length(int j) const noexcept;
  bool has_cell(Cell c) const noexcept;
  bool contains(const Partition& other) const noexcept;
  Partition conjugate() const;

  /// Cells in row-major order.
  std::vector<Cell> cells() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

/// All partitions with lo <= size <= hi, grouped by size.
std::vector<Partition> partitions_between(int lo, int hi);

/// Skew diagram outer/inner. A straight shape has an empty inner partition.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  bool is_straight() const noexcept { return inner_.empty(); }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  int num_rows() const noexcept { return outer_.length(); }

  /// First and last column of row i occupied by the skew shape.
  int first_col(int i) const noexcept { return inner_.row_length(i) + 1; }
  int last_col(int i) const noexcept { return outer_.row_length(i); }

  bool has_cell(Cell c) const noexcept;
  std::vector<Cell> cells() const;

  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// lambda and mu placed corner to corner: mu sits strictly northeast of
/// lambda with no shared rows or columns. (3,1)+(2,2) = (5,5,3,1)/(3,3).
SkewShape direct_sum_shape(const Partition& lambda, const Partition& mu);

/// Composition of n. Compositions of n correspond to subsets of [n-1].
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  /// C(S) for S a subset of [n-1]; S need not be sorted.
  static Composition from_descent_set(const std::vector<int>& set, int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;
  /// S_alpha = partial sums without the last one.
  std::vector<int> descent_set() const;

  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

}  // namespace khecke
