#include <doctest.h>

#include <deque>
#include <map>
#include <set>

#include "khecke/enumerate.hpp"
#include "khecke/hecke.hpp"
#include "khecke/kknuth.hpp"
#include "support.hpp"

using namespace khecke;
using khecke::testing::words_up_to;

namespace {

using Letters = std::vector<Letter>;

// Each relation as a pair of patterns over letters p < s < q; a move
// replaces one side by the other wherever it occurs.
std::set<Letters> oracle_neighbors(const Letters& w, std::size_t max_len) {
  std::set<Letters> out;
  auto replace = [&](std::size_t i, std::size_t len, const Letters& by) {
    Letters v(w.begin(), w.begin() + static_cast<long>(i));
    v.insert(v.end(), by.begin(), by.end());
    v.insert(v.end(), w.begin() + static_cast<long>(i + len), w.end());
    if (v.size() <= max_len) out.insert(v);
  };
  auto matches = [&](std::size_t i, const Letters& pat) {
    if (i + pat.size() > w.size()) return false;
    return std::equal(pat.begin(), pat.end(), w.begin() + static_cast<long>(i));
  };
  std::set<Letter> alphabet(w.begin(), w.end());
  std::vector<std::pair<Letters, Letters>> rules;
  for (Letter p : alphabet) {
    rules.push_back({{p, p}, {p}});
    for (Letter q : alphabet)
      if (p != q) rules.push_back({{p, q, p}, {q, p, q}});
    for (Letter s : alphabet)
      for (Letter q : alphabet)
        if (p < s && s < q) {
          rules.push_back({{p, q, s}, {q, p, s}});
          rules.push_back({{s, q, p}, {s, p, q}});
        }
  }
  for (std::size_t i = 0; i < w.size(); ++i)
    for (const auto& [lhs, rhs] : rules) {
      if (matches(i, lhs)) replace(i, lhs.size(), rhs);
      if (matches(i, rhs)) replace(i, rhs.size(), lhs);
    }
  return out;
}

std::set<Letters> oracle_closure(const Letters& w, std::size_t max_len) {
  std::set<Letters> seen{w};
  std::deque<Letters> queue{w};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& n : oracle_neighbors(cur, max_len))
      if (seen.insert(n).second) queue.push_back(n);
  }
  return seen;
}

std::set<Letters> as_set(const std::vector<Word>& ws) {
  std::set<Letters> out;
  for (const auto& w : ws) out.insert(w.letters());
  return out;
}

Word W(const char* s) { return Word::parse(s); }

}  // namespace

TEST_CASE("relation neighbors of 3124") {
  const auto nb = relation_neighbors(W("3124"), 5);
  const auto s = as_set(nb);
  CHECK(s.contains(W("1324").letters()));
  CHECK(s.contains(W("33124").letters()));
  CHECK(s.contains(W("31124").letters()));
  CHECK(s == oracle_neighbors(W("3124").letters(), 5));
  for (const auto& u : nb) CHECK(u.size() <= 5);
}

TEST_CASE("relation neighbors small cases") {
  CHECK(relation_neighbors(W("2"), 2) == std::vector<Word>{W("22")});
  CHECK(relation_neighbors(W("2"), 1).empty());
  CHECK(as_set(relation_neighbors(W("121"), 3)).contains(W("212").letters()));
}

TEST_CASE("relation neighbors agree with the pattern rewriter") {
  for (const auto& w : words_up_to(5, 4))
    for (std::size_t extra : {0, 1}) {
      const auto mine = as_set(relation_neighbors(w, w.size() + extra));
      REQUIRE_MESSAGE(mine == oracle_neighbors(w.letters(), w.size() + extra), w.to_string());
    }
}

TEST_CASE("class slices") {
  SUBCASE("34124 reaches 3124 at bound 8") {
    const auto slice = class_slice(W("34124"), 8);
    CHECK(slice.saturated);
    CHECK(slice.contains(W("3124")));
    CHECK(std::is_sorted(slice.words.begin(), slice.words.end(), [](const Word& a, const Word& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }));
  }
  SUBCASE("single letter at its own length") {
    const auto slice = class_slice(W("1"), 1);
    CHECK(slice.words == std::vector<Word>{W("1")});
    CHECK(slice.saturated);
  }
  SUBCASE("agrees with an independent closure") {
    for (const char* w : {"12", "21", "121", "312", "3124"})
      for (std::size_t extra : {0, 1, 2}) {
        const std::size_t L = std::string(w).size() + extra;
        CHECK(as_set(class_slice(W(w), L).words) == oracle_closure(W(w).letters(), L));
      }
    CHECK(class_slice(W("12"), 4).words.size() == oracle_closure({1, 2}, 4).size());
    CHECK(class_slice(W("12"), 4).words.size() == 6);
  }
  SUBCASE("word cap leaves the slice unsaturated") {
    const auto slice = class_slice(W("3124"), 9, SearchLimits{50});
    CHECK_FALSE(slice.saturated);
    CHECK(slice.words.size() <= 50);
  }
}

TEST_CASE("members of a slice share every invariant and insertion class") {
  for (const char* w : {"3124", "13524", "2143", "45123", "121"}) {
    const auto slice = class_slice(W(w), std::string(w).size() + 2);
    const auto cls = class_tableaux(W(w), std::string(w).size() + 2);
    for (const auto& u : slice.words) {
      CHECK_FALSE(invariant_mismatch(W(w), u));
      const auto p = insertion_tableau(u);
      CHECK(std::find(cls.members.begin(), cls.members.end(), p) != cls.members.end());
    }
  }
}

TEST_CASE("equivalence verdicts") {
  SUBCASE("34124 and 3124") {
    const auto v = equivalent(W("34124"), W("3124"), 8);
    REQUIRE(v.kind == VerdictKind::equivalent);
    CHECK(v.chain.front() == W("34124"));
    CHECK(v.chain.back() == W("3124"));
    CHECK(is_valid_chain(v.chain));
    for (const auto& u : v.chain) CHECK(u.size() <= 8);
  }
  SUBCASE("lds certificate") {
    const auto v = equivalent(W("13524"), W("15324"));
    CHECK(v.kind == VerdictKind::distinct);
    CHECK(v.witness == "lds 2 vs 3");
  }
  SUBCASE("interval certificate") {
    // whole-word invariants agree; restriction to [2,4] separates them
    const auto m = invariant_mismatch(W("1421"), W("21421"));
    REQUIRE(m);
    CHECK(*m == "interval [2,4]: lis 1 vs 2");
  }
  SUBCASE("reflexive") {
    const auto v = equivalent(W("3124"), W("3124"), 4);
    CHECK(v.kind == VerdictKind::equivalent);
    CHECK(v.chain == std::vector<Word>{W("3124")});
  }
  SUBCASE("too small a bound gives unknown") {
    const auto v = equivalent(W("34124"), W("3124"), 4);
    CHECK(v.kind == VerdictKind::unknown);
    CHECK(v.bound == 4);
    CHECK(equivalent(W("34124"), W("3124"), 5).kind == VerdictKind::equivalent);
  }
  SUBCASE("symmetric with valid chains") {
    const auto ws = words_up_to(3, 3);
    for (const auto& a : ws)
      for (const auto& b : ws) {
        const auto ab = equivalent(a, b, 6);
        const auto ba = equivalent(b, a, 6);
        REQUIRE(ab.kind == ba.kind);
        if (ab.kind == VerdictKind::equivalent) {
          CHECK(is_valid_chain(ab.chain));
          CHECK(is_valid_chain(ba.chain));
        }
      }
  }
}

TEST_CASE("tableau classes") {
  SUBCASE("class of 3124 holds two tableaux") {
    const auto cls = equivalent_tableaux(insertion_tableau(W("3124")), 10);
    CHECK(cls.complete());
    CHECK(cls.members == std::vector<IncreasingTableau>{IncreasingTableau(Rows{{1, 2, 4}, {3}}),
                                                        IncreasingTableau(Rows{{1, 2, 4}, {3, 4}})});
  }
  SUBCASE("single box") {
    const auto cls = equivalent_tableaux(IncreasingTableau(Rows{{1}}), 3);
    CHECK(cls.members == std::vector<IncreasingTableau>{IncreasingTableau(Rows{{1}})});
  }
  SUBCASE("pairwise search over two letters") {
    std::vector<IncreasingTableau> over_two;
    for (const auto& t : all_increasing_tableaux(2))
      if (t.support() == std::vector<Letter>{1, 2}) over_two.push_back(t);
    for (const auto& t : over_two) {
      std::vector<IncreasingTableau> expected;
      for (const auto& u : over_two)
        if (equivalent(reading_word(t), reading_word(u), 10).kind == VerdictKind::equivalent)
          expected.push_back(u);
      std::sort(expected.begin(), expected.end());
      CHECK(equivalent_tableaux(t, 10).members == expected);
    }
  }
  SUBCASE("first row and column follow lis and lds") {
    for (const char* w : {"3124", "45123", "2413", "35124"}) {
      const auto cls = class_tableaux(W(w), std::string(w).size() + 3);
      for (const auto& t : cls.members) {
        CHECK(t.shape().row_length(1) == lis(reading_word(t)));
        CHECK(t.shape().length() == lds(reading_word(t)));
      }
    }
  }
}

TEST_CASE("unique rectification targets") {
  SUBCASE("P(3124) is not one") {
    const auto v = is_urt(insertion_tableau(W("3124")), 12);
    CHECK(v.status == UrtStatus::not_urt);
    REQUIRE(v.witness);
    CHECK(*v.witness == IncreasingTableau(Rows{{1, 2, 4}, {3, 4}}));
  }
  SUBCASE("superstandard and minimal tableaux") {
    CHECK(is_urt(IncreasingTableau(Rows{{1, 2, 3}, {4, 5}}), 12).status == UrtStatus::urt_within_bound);
    CHECK(is_urt(IncreasingTableau(Rows{{1, 2}, {2}}), 12).status == UrtStatus::urt_within_bound);
  }
}

TEST_CASE("hecke permutation") {
  CHECK(hecke_permutation(W("")) == std::vector<int>{1});
  CHECK(hecke_permutation(W("1")) == std::vector<int>{2, 1});
  CHECK(hecke_permutation(W("11")) == std::vector<int>{2, 1});
  CHECK(hecke_permutation(W("121")) == std::vector<int>{3, 2, 1});
  CHECK(hecke_permutation(W("212")) == std::vector<int>{3, 2, 1});
  CHECK(hecke_permutation(W("323123")) == std::vector<int>{4, 3, 2, 1});
  CHECK(hecke_permutation(W("32123")) == std::vector<int>{4, 2, 3, 1});
  // every move preserves it
  for (const auto& w : words_up_to(5, 4))
    for (const auto& u : relation_neighbors(w, w.size() + 1))
      REQUIRE_MESSAGE(hecke_permutation(w) == hecke_permutation(u), (w.to_string() + " " + u.to_string()));
}

TEST_CASE("minimal tableau of shape 3,1,1 is separated from its lookalike") {
  const auto m = invariant_mismatch(W("32123"), W("323123"));
  REQUIRE(m);
  CHECK(*m == "hecke permutation 4231 vs 4321");
}
