#pragma once

#include <vector>

#include "khecke/tableau.hpp"

namespace khecke {

/// Restartable stream of every increasing filling of a shape with entries in
/// [min_letter, max_letter], in row-major lexicographic order of the entry
/// sequence. Independent instances share nothing, so shapes can be split
/// across workers.
class IncreasingFillings {
 public:
  IncreasingFillings(SkewShape shape, Letter max_letter, Letter min_letter = 1);

  /// Writes the next filling into out; false once the stream is exhausted.
  bool next(IncreasingTableau& out);
  void reset();

 private:
  Letter lower_bound_at(std::size_t k) const;
  IncreasingTableau build() const;

  SkewShape shape_;
  Letter max_letter_;
  Letter min_letter_;
  std::vector<Cell> cells_;
  std::vector<int> left_;   // index of the cell to the left, or -1
  std::vector<int> above_;  // index of the cell above, or -1
  std::vector<Letter> values_;
  bool started_ = false;
  bool done_ = false;
};

template <class F>
void for_each_increasing_tableau(const SkewShape& shape, Letter max_letter, F&& visit) {
  IncreasingFillings stream(shape, max_letter);
  IncreasingTableau t;
  while (stream.next(t)) visit(t);
}

std::vector<IncreasingTableau> increasing_tableaux(const SkewShape& shape, Letter max_letter);

/// Straight shapes that can carry an increasing filling over an alphabet of
/// k letters: rows and columns of length at most k.
std::vector<Partition> shapes_in_box(int k);

/// Every straight increasing tableau with entries in [max_letter], including
/// the empty one, ordered by shape (as in shapes_in_box) then by filling.
std::vector<IncreasingTableau> all_increasing_tableaux(Letter max_letter);

}  // namespace khecke
