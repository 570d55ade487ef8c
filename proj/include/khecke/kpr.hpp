#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "khecke/kknuth.hpp"
#include "khecke/tableau.hpp"
#include "khecke/word.hpp"

namespace khecke {

/// Every interleaving of a and b, as a multiset: C(|a|+|b|, |a|) entries,
/// ordered by the positions taken by a.
std::vector<Word> shuffle(const Word& a, const Word& b);

/// a shuffled with b shifted past the letters of a.
std::vector<Word> shifted_shuffle(const Word& a, const Word& b);

/// Splits of w at every position, each side flattened; |w| + 1 entries.
std::vector<std::pair<Word, Word>> word_coproduct(const Word& w);

/// A K-Knuth class of initial words, represented by its tableaux.
struct KPRClass {
  Word representative;  // shortest, then lexicographically least reading word
  std::vector<IncreasingTableau> tableaux;
  std::size_t bound = 0;
  bool complete = true;  // no tableau left unresolved at the bound
};

/// The class of w computed at the given bound.
KPRClass make_class(const Word& w, std::size_t bound, const SearchLimits& limits = {});

struct TensorTerm {
  KPRClass left;
  KPRClass right;
  int multiplicity = 1;
};

/// Tableaux grouped into K-Knuth classes. Pairs the bound cannot separate
/// or join are reported through the complete flag of the affected classes.
std::vector<KPRClass> group_into_classes(std::vector<IncreasingTableau> tableaux, std::size_t bound,
                                         const SearchLimits& limits = {});

/// Tableaux T over [n+m] with T|[n] equivalent to P(h) and the letters above
/// n of row(T) equivalent to h2 shifted by n.
struct ProductTableaux {
  std::vector<IncreasingTableau> tableaux;
  bool complete = true;
};
ProductTableaux product_tableaux(const Word& h, const Word& h2, std::size_t bound,
                                 const SearchLimits& limits = {});

/// [[h]] . [[h2]] as a list of classes ordered by representative.
std::vector<KPRClass> class_product(const Word& h, const Word& h2, std::size_t bound,
                                    const SearchLimits& limits = {});

/// Pairs (T', T'') of straight tableaux over subsets of support(h) with
/// row(T') row(T'') equivalent to h.
struct CoproductPairs {
  std::vector<std::pair<IncreasingTableau, IncreasingTableau>> pairs;
  bool complete = true;
};
CoproductPairs coproduct_pairs(const Word& h, std::size_t bound, const SearchLimits& limits = {});

/// Delta([[h]]) as flattened class pairs with multiplicities.
std::vector<TensorTerm> class_coproduct(const Word& h, std::size_t bound, const SearchLimits& limits = {});

/// Tableaux T with T|[n] = t1 and P(letters of row(T) above n) = t2 shifted
/// by n. urt_bound is the bound for the URT guard on both inputs.
std::vector<IncreasingTableau> urt_class_product(const IncreasingTableau& t1, const IncreasingTableau& t2,
                                                 std::size_t urt_bound = 12);

/// Pairs (T', T'') with P(row(T') row(T'')) = t0.
std::vector<std::pair<IncreasingTableau, IncreasingTableau>> urt_class_coproduct(
    const IncreasingTableau& t0, std::size_t urt_bound = 12);

}  // namespace khecke
