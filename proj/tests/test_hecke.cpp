#include <doctest.h>

#include <random>
#include <stdexcept>
#include <set>

#include "khecke/enumerate.hpp"
#include "khecke/hecke.hpp"
#include "support.hpp"

using namespace khecke;
using khecke::testing::words_up_to;

TEST_CASE("H4 twice then H2 stops at the bottom of the first column") {
  IncreasingTableau y(Rows{{1, 2, 3, 5}, {2, 3, 4, 6}, {6}, {7}});
  auto out = insert_letter(y, 3);
  CHECK(out.tableau == y);
  CHECK_FALSE(out.added);
  // the 6 bounced off row 3, whose last box is in column 1; that column ends in row 4
  CHECK(out.corner == Cell{4, 1});
}

TEST_CASE("H3 then H4 then H1") {
  IncreasingTableau y(Rows{{2, 4, 6}, {3, 6, 8}, {7}});
  auto out = insert_letter(y, 5);
  CHECK(out.tableau.rows() == Rows{{2, 4, 5}, {3, 6, 8}, {7, 8}});
  CHECK(out.corner == Cell{3, 2});
  CHECK(out.added);
  CHECK(reading_word(out.tableau) == Word::parse("78368245"));
}

TEST_CASE("insert into the empty tableau") {
  auto out = insert_letter(IncreasingTableau{}, 1);
  CHECK(out.tableau.rows() == Rows{{1}});
  CHECK(out.corner == Cell{1, 1});
  CHECK(out.added);
}

TEST_CASE("reverse insertion") {
  IncreasingTableau p(Rows{{1, 3}, {5}});
  auto [same, x] = reverse_insert(p, {1, 2}, false);
  CHECK(same == p);
  CHECK(x == 3);

  auto [empty, one] = reverse_insert(IncreasingTableau(Rows{{1}}), {1, 1}, true);
  CHECK(empty.empty());
  CHECK(one == 1);

  IncreasingTableau p3(Rows{{1, 5}, {5}});
  auto [p4, h3] = reverse_insert(p3, {2, 1}, true);
  CHECK(p4.rows() == Rows{{1, 5}});
  CHECK(h3 == 1);

  auto [p3_again, h4] = reverse_insert(p, {2, 1}, false);
  CHECK(p3_again == p3);
  CHECK(h4 == 3);

  CHECK_THROWS_WITH_AS(reverse_insert(p, {1, 1}, true), "not a corner cell",
                       std::invalid_argument);
}

TEST_CASE("insert_word records special corners") {
  auto [p, q] = insert_word(Word::parse("15133"));
  CHECK(p.rows() == Rows{{1, 3}, {5}});
  CHECK(q.rows() == SetRows{{{1}, {2, 5}}, {{3, 4}}});

  auto [p0, q0] = insert_word(Word{});
  CHECK(p0.empty());
  CHECK(q0.rows().empty());

  auto [p2, q2] = insert_word(Word::parse("13324535"));
  CHECK(p2.rows() == Rows{{1, 2, 3, 5}, {3, 4}});
  CHECK(q2.rows() == SetRows{{{1}, {2, 3}, {5}, {6, 8}}, {{4}, {7}}});
  CHECK(descent_composition(q2) == Composition{3, 3, 2});
  CHECK(descent_composition(Word::parse("13324535")) == descent_composition(q2));

  CHECK(insertion_tableau(Word::parse("34124")).rows() == Rows{{1, 2, 4}, {3, 4}});
  CHECK(insertion_tableau(Word::parse("3124")).rows() == Rows{{1, 2, 4}, {3}});
  CHECK(insertion_tableau(Word::parse("312524")).rows() == Rows{{1, 2, 4}, {3, 5}});
}

TEST_CASE("reverse_word recovers words") {
  IncreasingTableau p(Rows{{1, 3}, {5}});
  SetValuedTableau q(SetRows{{{1}, {2, 5}}, {{3, 4}}});
  CHECK(reverse_word(p, q) == Word::parse("15133"));
  CHECK(reverse_word(IncreasingTableau(Rows{{1}}), SetValuedTableau(SetRows{{{1}}})) == Word{1});
  CHECK_THROWS_AS(reverse_word(p, SetValuedTableau(SetRows{{{1}, {2}}})), std::invalid_argument);
  CHECK_THROWS_AS(reverse_word(p, SetValuedTableau(SetRows{{{1}, {2, 6}}, {{3, 4}}})),
                  std::invalid_argument);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> letters;
    const int len = static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) letters.push_back(1 + static_cast<Letter>(rng() % 4));
    Word w(letters);
    auto [pw, qw] = insert_word(w);
    REQUIRE(reverse_word(pw, qw) == w);
  }
}

TEST_CASE("word <-> (P,Q) roundtrip, restriction, support and descents over [4]") {
  const auto words = words_up_to(6, 4);
  CHECK(words.size() == 5461);
  for (const auto& w : words) {
    auto [p, q] = insert_word(w);
    REQUIRE(reverse_word(p, q) == w);
    REQUIRE(p.support() == support(w));
    for (Letter k = 1; k <= 4; ++k)
      REQUIRE(p.restrict_to_max(k) == insertion_tableau(restrict_word(w, 1, k)));
    if (!w.empty()) REQUIRE(descent_composition(w) == descent_composition(q));
    // first row and column lengths
    REQUIRE(p.shape().row_length(1) == lis(w));
    REQUIRE(p.shape().length() == lds(w));
  }
}

TEST_CASE("consecutive insertions: later corner strictly below iff letters decrease") {
  for (const auto& w : words_up_to(6, 4)) {
    if (w.size() < 2) continue;
    auto [p, q] = insert_word(w);
    std::vector<int> row_of(w.size() + 1);
    for (std::size_t r = 0; r < q.rows().size(); ++r)
      for (const auto& box : q.rows()[r])
        for (Letter x : box) row_of[static_cast<std::size_t>(x)] = static_cast<int>(r);
    for (std::size_t i = 1; i < w.size(); ++i)
      REQUIRE((row_of[i + 1] > row_of[i]) == (w[i - 1] > w[i]));
  }
}

TEST_CASE("insert_letter inverts reverse_insert on every triple") {
  int triples = 0;
  for (const auto& z : all_increasing_tableaux(4)) {
    if (z.num_cells() > 6) continue;
    for (const auto& c : corners(z.shape()))
      for (bool added : {false, true}) {
        auto [y, x] = reverse_insert(z, c, added);
        auto out = insert_letter(y, x);
        REQUIRE(out.tableau == z);
        REQUIRE(out.corner == c);
        REQUIRE(out.added == added);
        ++triples;
      }
  }
  CHECK(triples > 100);
}

TEST_CASE("inserting a reading word reproduces the tableau") {
  int count = 0;
  for (const auto& t : all_increasing_tableaux(5)) {
    if (t.num_cells() > 8) continue;
    REQUIRE(insertion_tableau(reading_word(t)) == t);
    ++count;
  }
  CHECK(count > 500);
}
