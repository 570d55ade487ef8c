#pragma once

#include <utility>

#include "khecke/tableau.hpp"

namespace khecke {

/// Result of Hecke-inserting one letter: the new tableau Z, the special
/// corner c, and whether a box was added (alpha = 1) or the shape is
/// unchanged and c marks where insertion stopped (alpha = 0).
struct InsertionOutcome {
  IncreasingTableau tableau;
  Cell corner;
  bool added = false;
};

/// Hecke row insertion of x into a straight increasing tableau.
InsertionOutcome insert_letter(const IncreasingTableau& y, Letter x);

/// Inverse of insert_letter. Throws std::invalid_argument when c is not a
/// corner cell of z.
std::pair<IncreasingTableau, Letter> reverse_insert(const IncreasingTableau& z, Cell c,
                                                    bool added);

/// Insertion tableau P(w) and set-valued recording tableau Q(w).
struct InsertionPair {
  IncreasingTableau p;
  SetValuedTableau q;
};

InsertionPair insert_word(const Word& w);

/// P(w) alone; avoids building Q.
IncreasingTableau insertion_tableau(const Word& w);

/// The unique w with insert_word(w) == (p, q). Throws std::invalid_argument
/// when the shapes differ or q is not standard.
Word reverse_word(const IncreasingTableau& p, const SetValuedTableau& q);

/// Corner cells of a straight shape, top to bottom.
std::vector<Cell> corners(const Partition& shape);

}  // namespace khecke
