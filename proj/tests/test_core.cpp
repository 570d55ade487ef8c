#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "khecke/enumerate.hpp"
#include "khecke/tableau.hpp"

using namespace khecke;

namespace {

// every word of length exactly len over [k]
std::vector<Word> words_of_length(int len, int k) {
  std::vector<Word> out;
  std::vector<Letter> cur(static_cast<std::size_t>(len), 1);
  while (true) {
    out.emplace_back(cur);
    int i = len - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == k) cur[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

// 2^n scan over subsequences
int brute_longest(const Word& w, bool increasing) {
  const auto n = w.size();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int len = 0;
    Letter prev = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (len > 0) ok = increasing ? prev < w[i] : prev > w[i];
      prev = w[i];
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

}  // namespace

TEST_CASE("partitions and skew shapes") {
  Partition p{3, 1};
  CHECK(p.size() == 4);
  CHECK(p.conjugate() == Partition{2, 1, 1});
  CHECK(Partition::parse("3,1") == p);
  CHECK(Partition::parse("").empty());
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK(Partition({2, 1, 0}) == Partition{2, 1});
  CHECK(partitions_of(4).size() == 5);
  CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{1, 1}), std::invalid_argument);
}

TEST_CASE("direct sum shape") {
  auto s = direct_sum_shape(Partition{3, 1}, Partition{2, 2});
  CHECK(s.outer() == Partition{5, 5, 3, 1});
  CHECK(s.inner() == Partition{3, 3});
  CHECK(s.size() == 8);
  auto single = direct_sum_shape(Partition{1}, Partition{1});
  CHECK(single.outer() == Partition{2, 1});
  CHECK(single.inner() == Partition{1});
  CHECK(direct_sum_shape(Partition{2, 1}, Partition{}) == SkewShape(Partition{2, 1}));
  CHECK(direct_sum_shape(Partition{}, Partition{2, 1}) == SkewShape(Partition{2, 1}));
  // no shared rows or columns
  for (auto c : s.cells())
    for (auto d : s.cells()) {
      const bool c_top = c.row <= 2, d_top = d.row <= 2;
      if (c_top != d_top) CHECK(c.col != d.col);
    }
}

TEST_CASE("reading words") {
  IncreasingTableau t(Rows{{2, 4, 5}, {3, 6, 8}, {7, 8}});
  CHECK(reading_word(t) == Word::parse("78368245"));
  CHECK(reading_word(IncreasingTableau{}).empty());
  CHECK(reading_word(IncreasingTableau(Rows{{1, 2, 4}, {3, 4}})) == Word::parse("34124"));
  // skew reading: (3,3,1)/(2,1)
  IncreasingTableau skew(Partition{2, 1}, Rows{{3}, {1, 4}, {2}});
  CHECK(reading_word(skew) == Word::parse("2143"));
}

TEST_CASE("increasing tableau validation") {
  CHECK_THROWS_AS(IncreasingTableau(Rows{{1, 2, 2, 4}, {3, 4}, {5}}), std::invalid_argument);
  CHECK_THROWS_AS(IncreasingTableau(Rows{{1, 2}, {2, 3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(IncreasingTableau(Rows{{1, 3}, {2, 3}}), std::invalid_argument);
  auto v = IncreasingTableau::find_violation({}, Rows{{1, 3}, {1}});
  REQUIRE(v);
  CHECK(v->find("row 2, column 1") != std::string::npos);
  CHECK_NOTHROW(IncreasingTableau(Rows{{1, 2, 4, 5}, {2, 3, 5, 7}, {6, 7}, {8}}));
}

TEST_CASE("flatten_word") {
  CHECK(flatten_word(Word::parse("42254")) == Word::parse("21132"));
  CHECK(flatten_word(Word::parse("1426")) == Word::parse("1324"));
  CHECK(flatten_word(Word::parse("2131")) == Word::parse("2131"));
  CHECK(is_initial(Word::parse("13422")));
  CHECK_FALSE(is_initial(Word::parse("1422")));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> letters;
    for (int i = 0; i < 8; ++i) letters.push_back(1 + static_cast<Letter>(rng() % 9));
    Word w(letters);
    auto f = flatten_word(w);
    CHECK(flatten_word(f) == f);
    CHECK(is_initial(f));
  }
}

TEST_CASE("descent compositions") {
  CHECK(descent_composition(Word::parse("11423532")) == Composition{3, 3, 1, 1});
  CHECK(descent_composition(Word::parse("13324535")) == Composition{3, 3, 2});
  CHECK(descent_composition(Word::parse("1234")) == Composition{4});
  CHECK_THROWS_WITH_AS(descent_composition(Word{}), "empty word has no descent composition",
                       std::invalid_argument);
  CHECK(Composition::from_descent_set({1, 4, 5}, 6) == Composition{1, 3, 1, 1});
  CHECK(Composition({1, 3, 1, 1}).descent_set() == std::vector<int>{1, 4, 5});

  for (int len = 1; len <= 8; ++len)
    for (const auto& w : words_of_length(len, 4)) {
      auto c = descent_composition(w);
      REQUIRE(c.size() == len);
      REQUIRE(c.descent_set() == descent_set(w));
    }
}

TEST_CASE("lis and lds") {
  CHECK(lds(Word::parse("13524")) == 2);
  CHECK(lds(Word::parse("15324")) == 3);
  CHECK(lis(Word{}) == 0);
  CHECK(lis(Word::parse("34124")) == brute_longest(Word::parse("34124"), true));
  CHECK(lis(Word::parse("34124")) == 3);

  for (int len = 0; len <= 8; ++len)
    for (const auto& w : words_of_length(len, 3)) {
      REQUIRE(lis(w) == brute_longest(w, true));
      REQUIRE(lds(w) == brute_longest(w, false));
    }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Letter> letters;
    const int len = static_cast<int>(rng() % 13);
    for (int i = 0; i < len; ++i) letters.push_back(1 + static_cast<Letter>(rng() % 5));
    Word w(letters);
    REQUIRE(lis(w) == brute_longest(w, true));
    REQUIRE(lds(w) == brute_longest(w, false));
  }
}

TEST_CASE("minimal and superstandard tableaux") {
  CHECK(minimal_tableau(Partition{3, 2, 1}).rows() == Rows{{1, 2, 3}, {2, 3}, {3}});
  CHECK(minimal_tableau(Partition{5, 2, 1, 1}).rows() == Rows{{1, 2, 3, 4, 5}, {2, 3}, {3}, {4}});
  CHECK(minimal_tableau(Partition{}).empty());
  CHECK(superstandard_tableau(Partition{3, 2, 1}).rows() == Rows{{1, 2, 3}, {4, 5}, {6}});
  CHECK(superstandard_tableau(Partition{5, 2, 1, 1}).rows() ==
        Rows{{1, 2, 3, 4, 5}, {6, 7}, {8}, {9}});
  CHECK(superstandard_tableau(Partition{1}).rows() == Rows{{1}});
}

TEST_CASE("minimal tableau reading word restricts to smaller minimal tableaux") {
  for (const auto& shape : partitions_between(0, 6)) {
    const auto m = minimal_tableau(shape);
    const auto row = reading_word(m);
    for (Letter k = 0; k <= m.max_entry(); ++k) {
      auto sub = m.restrict_to_max(k);
      CHECK(sub == minimal_tableau(sub.shape()));
      CHECK(restrict_word(row, 1, k) == reading_word(sub));
    }
  }
}

TEST_CASE("set-valued tableaux and standardization") {
  WeakSetValuedTableau w(SetRows{{{1, 2, 2}, {3}, {5, 6}, {8}}, {{3, 4}, {4}, {7}}});
  auto s = standardize_weak_tableau(w);
  CHECK(s.rows() == SetRows{{{1, 2, 3}, {5}, {8, 9}, {11}}, {{4, 6}, {7}, {10}}});
  CHECK(descent_set(s) == std::vector<int>{3, 5, 9});
  CHECK(descent_composition(s) == Composition{3, 2, 4, 2});

  WeakSetValuedTableau column(SetRows{{{1, 1}}, {{2}}});
  CHECK(standardize_weak_tableau(column).rows() == SetRows{{{1, 2}}, {{3}}});

  WeakSetValuedTableau distinct(SetRows{{{1}, {2}}, {{3}}});
  CHECK(standardize_weak_tableau(distinct).rows() == distinct.rows());

  CHECK_THROWS_AS(SetValuedTableau(SetRows{{{1, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(SetValuedTableau(SetRows{{{2}}, {{1}}}), std::invalid_argument);
  CHECK_THROWS_AS(WeakSetValuedTableau(SetRows{{{1, 2}}, {{2}}}), std::invalid_argument);
}

TEST_CASE("increasing fillings") {
  CHECK(increasing_tableaux(SkewShape(Partition{1}), 3).size() == 3);

  // brute force: every assignment of [k] to the cells, keep the increasing ones
  auto brute_count = [](const Partition& shape, int k) {
    const auto cells = shape.cells();
    std::vector<Letter> vals(cells.size(), 1);
    int count = 0;
    while (true) {
      Rows rows(static_cast<std::size_t>(shape.length()));
      for (std::size_t i = 0; i < cells.size(); ++i)
        rows[static_cast<std::size_t>(cells[i].row - 1)].push_back(vals[i]);
      if (!IncreasingTableau::find_violation({}, rows)) ++count;
      std::size_t i = 0;
      while (i < vals.size() && vals[i] == k) vals[i++] = 1;
      if (i == vals.size()) break;
      ++vals[i];
    }
    return count;
  };
  CHECK(brute_count(Partition{2, 2}, 2) == 0);
  CHECK(increasing_tableaux(SkewShape(Partition{2, 2}), 2).empty());
  CHECK(brute_count(Partition{2, 1}, 3) == 5);
  CHECK(increasing_tableaux(SkewShape(Partition{2, 1}), 3).size() == 5);

  for (const auto& shape : partitions_between(1, 5))
    for (int k = 1; k <= 4; ++k) {
      const auto all = increasing_tableaux(SkewShape(shape), k);
      REQUIRE(static_cast<int>(all.size()) == brute_count(shape, k));
      REQUIRE(std::is_sorted(all.begin(), all.end()));
      REQUIRE(!all.empty() == (minimal_tableau(shape).max_entry() <= k));
    }

  // skew fillings, restartable
  IncreasingFillings stream(SkewShape(Partition{4, 3, 1}, Partition{3, 1}), 3);
  IncreasingTableau t;
  int first = 0;
  while (stream.next(t)) ++first;
  stream.reset();
  int second = 0;
  while (stream.next(t)) {
    CHECK_FALSE(IncreasingTableau::find_violation(t.inner(), t.rows()));
    ++second;
  }
  CHECK(first == second);
  CHECK(first > 0);
}
