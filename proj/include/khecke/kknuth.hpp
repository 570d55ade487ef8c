#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "khecke/tableau.hpp"
#include "khecke/word.hpp"

namespace khecke {

/// Thrown when a search would visit more words than its cap allows.
class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchLimits {
  std::size_t max_words = 5'000'000;
};

/// Words reachable from w by one K-Knuth move (either direction, any
/// position), of length at most max_len. Sorted by (length, letters).
std::vector<Word> relation_neighbors(const Word& w, std::size_t max_len);

/// Bounded window of a K-Knuth class.
struct ClassSlice {
  Word seed;
  std::size_t max_len = 0;
  std::vector<Word> words;  // sorted by (length, letters)
  bool saturated = false;   // closure finished below the word cap

  bool contains(const Word& w) const;
};

/// BFS closure of relation_neighbors from w. When the cap is hit the partial
/// slice comes back with saturated = false.
ClassSlice class_slice(const Word& w, std::size_t max_len, const SearchLimits& limits = {});

enum class VerdictKind { equivalent, distinct, unknown };

std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::unknown;
  std::vector<Word> chain;  // equivalent: w1 = chain.front(), ..., w2 = chain.back()
  std::string witness;      // distinct: invariant mismatch; unknown: reason
  std::size_t bound = 0;
};

/// Product of the simple transpositions s_x (x in w) in the 0-Hecke monoid,
/// as a permutation of [max_letter(w) + 1] in one-line notation.
std::vector<int> hecke_permutation(const Word& w);

/// First invariant separating a and b: support, lis, lds, hecke
/// permutation, then the same four on every interval restriction.
std::optional<std::string> invariant_mismatch(const Word& a, const Word& b);

std::size_t default_max_len(const Word& w1, const Word& w2);

/// Bidirectional BFS between w1 and w2 through words of length <= max_len,
/// after an invariant check.
Verdict equivalent(const Word& w1, const Word& w2, std::optional<std::size_t> max_len = {},
                   const SearchLimits& limits = {});

/// True when every consecutive pair of the chain is one relation move apart.
bool is_valid_chain(const std::vector<Word>& chain);

/// Membership oracle for one class window. The slice is built lazily on the
/// first query that invariants cannot settle.
class ClassOracle {
 public:
  ClassOracle(Word seed, std::size_t max_len, SearchLimits limits = {});

  VerdictKind classify(const Word& w);
  const Word& seed() const noexcept { return seed_; }
  std::size_t max_len() const noexcept { return max_len_; }
  /// Number of words in the slice, 0 if it was never needed.
  std::size_t slice_size() const noexcept { return members_.size(); }

 private:
  void build();

  Word seed_;
  std::size_t max_len_;
  SearchLimits limits_;
  bool built_ = false;
  bool saturated_ = false;
  std::unordered_set<std::string> members_;
};

struct TableauClass {
  std::vector<IncreasingTableau> members;     // sorted
  std::vector<IncreasingTableau> unresolved;  // candidates the bound could not settle
  std::size_t bound = 0;

  bool complete() const noexcept { return unresolved.empty(); }
};

/// Increasing tableaux over support(T) whose reading words are equivalent to
/// row(T). Candidates are restricted by lis/lds to first row and column.
TableauClass equivalent_tableaux(const IncreasingTableau& t, std::size_t max_len,
                                 const SearchLimits& limits = {});

/// Same, for the class of an arbitrary word.
TableauClass class_tableaux(const Word& w, std::size_t max_len, const SearchLimits& limits = {});

enum class UrtStatus { urt_within_bound, not_urt, unknown };

std::string to_string(UrtStatus s);

struct UrtVerdict {
  UrtStatus status = UrtStatus::unknown;
  std::optional<IncreasingTableau> witness;
  std::vector<IncreasingTableau> unresolved;
  std::size_t bound = 0;
};

UrtVerdict is_urt(const IncreasingTableau& t, std::size_t max_len, const SearchLimits& limits = {});

}  // namespace khecke
