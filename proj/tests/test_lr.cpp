#include <doctest.h>

#include <algorithm>
#include <functional>

#include "khecke/enumerate.hpp"
#include "khecke/hecke.hpp"
#include "khecke/kknuth.hpp"
#include "khecke/lr.hpp"
#include "khecke/parallel.hpp"

using namespace khecke;

namespace {

IncreasingTableau skew(Partition inner, Rows rows) { return IncreasingTableau(std::move(inner), std::move(rows)); }

std::vector<IncreasingTableau> sorted(std::vector<IncreasingTableau> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Semistandard fillings of nu/lambda with content mu whose reverse reading
// word is a lattice word.
int classical_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!nu.contains(lambda) || nu.size() != lambda.size() + mu.size()) return 0;
  const SkewShape s(nu, lambda);
  const auto cells = s.cells();
  std::map<Cell, int> fill;
  std::vector<int> left(mu.length() + 1, 0);
  for (int i = 1; i <= mu.length(); ++i) left[i] = mu.row_length(i);
  int count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == cells.size()) {
      std::vector<int> seen(mu.length() + 2, 0);
      for (int r = 1; r <= s.num_rows(); ++r)
        for (int c = s.last_col(r); c >= s.first_col(r); --c) {
          const int x = fill[{r, c}];
          ++seen[x];
          if (x > 1 && seen[x] > seen[x - 1]) return;
        }
      ++count;
      return;
    }
    const Cell c = cells[k];
    int lo = 1;
    if (auto it = fill.find({c.row, c.col - 1}); it != fill.end()) lo = std::max(lo, it->second);
    if (auto it = fill.find({c.row - 1, c.col}); it != fill.end()) lo = std::max(lo, it->second + 1);
    for (int x = lo; x <= mu.length(); ++x) {
      if (left[x] == 0) continue;
      --left[x];
      fill[c] = x;
      go(k + 1);
      fill.erase(c);
      ++left[x];
    }
  };
  go(0);
  return count;
}

}  // namespace

TEST_CASE("product rule reproduces the three fillings of (4,3,1)/(3,1)") {
  const auto r = lr_coefficient(Partition{3, 1}, Partition{2, 1}, Partition{4, 3, 1});
  CHECK(r.count == 3);
  CHECK(r.sign == -1);
  CHECK(r.signed_count() == -3);
  CHECK(r.witnesses.size() == 3);
  const std::vector<IncreasingTableau> expected{
      skew({3, 1}, {{2}, {1, 2}, {3}}),
      skew({3, 1}, {{2}, {1, 3}, {3}}),
      skew({3, 1}, {{2}, {1, 3}, {1}}),
  };
  CHECK(sorted(r.witnesses) == sorted(expected));
  CHECK(lr_coefficient(Partition{3, 1}, Partition{2, 1}, Partition{4, 3, 1}, UrtChoice::minimal).count == 3);
}

TEST_CASE("witnesses come out in enumeration order") {
  const auto r = lr_coefficient(Partition{3, 1}, Partition{2, 1}, Partition{4, 3, 1});
  CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end(),
                       [](const IncreasingTableau& a, const IncreasingTableau& b) {
                         std::vector<Letter> x, y;
                         for (const auto& row : a.rows()) x.insert(x.end(), row.begin(), row.end());
                         for (const auto& row : b.rows()) y.insert(y.end(), row.begin(), row.end());
                         return x < y;
                       }));
}

TEST_CASE("empty mu") {
  const IncreasingTableau empty;
  for (const auto& nu : partitions_between(0, 4)) {
    const auto r = lr_coefficient(Partition{2, 1}, empty, nu);
    CHECK(r.count == (nu == Partition{2, 1} ? 1 : 0));
  }
  const auto table = lr_table(Partition{}, superstandard_tableau(Partition{2, 1}), 3);
  REQUIRE(table.size() == 1);
  CHECK(table.begin()->first == Partition{2, 1});
  CHECK(table.begin()->second.count == 1);
}

TEST_CASE("table for two single boxes") {
  const auto table = lr_table(Partition{1}, superstandard_tableau(Partition{1}), 4);
  REQUIRE(table.size() == 3);
  CHECK(table.at(Partition{2}).signed_count() == 1);
  CHECK(table.at(Partition{1, 1}).signed_count() == 1);
  CHECK(table.at(Partition{2, 1}).signed_count() == -1);
}

TEST_CASE("product rule against the polynomial oracle") {
  const auto rep = verify_product(Partition{3, 1}, superstandard_tableau(Partition{2, 1}), 8, 8);
  CHECK(rep.ok());
  bool saw = false;
  for (const auto& row : rep.rows)
    if (row.nu == Partition{4, 3, 1}) {
      saw = true;
      CHECK(row.count == 3);
      CHECK(row.oracle == -3);
    }
  CHECK(saw);
  CHECK_THROWS_WITH_AS(verify_product(Partition{3, 1}, superstandard_tableau(Partition{2, 1}), 6, 8),
                       doctest::Contains("window insufficient"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(verify_product(Partition{3, 1}, superstandard_tableau(Partition{2, 1}), 8, 4),
                       doctest::Contains("window insufficient"), std::invalid_argument);
}

TEST_CASE("URT independence and symmetry") {
  const std::vector<Partition> shapes{{1}, {2}, {1, 1}, {2, 1}, {3}, {1, 1, 1}};
  for (const auto& lambda : shapes)
    for (const auto& mu : shapes) {
      const int lo = lambda.size() + mu.size();
      const auto a = lr_table(lambda, superstandard_tableau(mu), 2);
      const auto b = lr_table(lambda, minimal_tableau(mu), 2);
      const auto c = lr_table(mu, superstandard_tableau(lambda), 2);
      INFO(lambda.to_string(), " ", mu.to_string());
      REQUIRE(a.size() == b.size());
      REQUIRE(a.size() == c.size());
      for (const auto& [nu, r] : a) {
        CHECK(b.at(nu).count == r.count);
        CHECK(c.at(nu).count == r.count);
        CHECK(r.sign == (((nu.size() - lo) % 2) ? -1 : 1));
      }
    }
}

TEST_CASE("lowest stratum matches classical coefficients") {
  for (const auto& lambda : partitions_between(1, 3))
    for (const auto& mu : partitions_between(1, 3))
      for (const auto& nu : partitions_of(lambda.size() + mu.size())) {
        if (!nu.contains(lambda)) continue;
        INFO(lambda.to_string(), " ", mu.to_string(), " ", nu.to_string());
        CHECK(lr_coefficient(lambda, mu, nu).count == classical_lr(lambda, mu, nu));
      }
}

TEST_CASE("classical brute force sanity") {
  CHECK(classical_lr(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
  CHECK(classical_lr(Partition{1}, Partition{1}, Partition{2}) == 1);
  CHECK(classical_lr(Partition{2}, Partition{2}, Partition{2, 2}) == 1);
}

TEST_CASE("non-URT target undercounts the product") {
  const auto t = insertion_tableau(Word::parse("34124"));
  CHECK(t == IncreasingTableau(Rows{{1, 2, 4}, {3, 4}}));
  const auto fillings = rectifying_fillings(SkewShape(Partition{4, 3, 2}, Partition{2, 1}), t);
  CHECK(fillings.size() == 2);
  CHECK(sorted(fillings) == sorted({skew({2, 1}, {{2, 4}, {2, 4}, {1, 3}}), skew({2, 1}, {{2, 4}, {1, 4}, {3, 4}})}));
  const auto oracle = expand_product(Partition{2, 1}, Partition{3, 2}, 9, 9).coefficients;
  CHECK(oracle.at(Partition{4, 3, 2}) == -3);
  CHECK_THROWS_WITH_AS(lr_coefficient(Partition{2, 1}, t, Partition{4, 3, 2}),
                       doctest::Contains("not a unique rectification target"), std::invalid_argument);
}

TEST_CASE("coproduct rule reproduces the three fillings of (2,1)+(2,1)") {
  const auto t0 = superstandard_tableau(Partition{3, 2});
  CHECK(reading_word(t0) == Word::parse("45123"));
  const auto r = dual_lr_coefficient(t0, Partition{2, 1}, Partition{2, 1});
  CHECK(r.count == 3);
  CHECK(r.sign == -1);
  const Partition inner{2, 2};
  const std::vector<IncreasingTableau> expected{
      skew(inner, {{2, 3}, {5}, {1, 2}, {4}}),
      skew(inner, {{2, 3}, {5}, {1, 4}, {4}}),
      skew(inner, {{2, 3}, {5}, {1, 5}, {4}}),
  };
  CHECK(r.witnesses == expected);
  CHECK(dual_lr_coefficient(t0, Partition{}, Partition{3, 2}).count == 1);
  CHECK(dual_lr_coefficient(t0, Partition{3, 2}, Partition{}).count == 1);
}

TEST_CASE("coproduct rule against the polynomial oracle") {
  const auto rep = verify_coproduct(superstandard_tableau(Partition{3, 2}), 6, 5);
  CHECK(rep.ok());
  bool saw = false;
  for (const auto& row : rep.rows)
    if (row.lambda == Partition{2, 1} && row.mu == Partition{2, 1}) {
      saw = true;
      CHECK(row.count == 3);
      CHECK(row.oracle == -3);
    }
  CHECK(saw);
  for (const auto& nu : std::vector<Partition>{{1}, {2}, {1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
    INFO(nu.to_string());
    CHECK(verify_coproduct(superstandard_tableau(nu), nu.size() + 1, nu.size() + 1).ok());
    CHECK(verify_coproduct(minimal_tableau(nu), nu.size() + 1, nu.size() + 1).ok());
  }
}

TEST_CASE("non-URT target misses coproduct terms") {
  const auto t0 = insertion_tableau(Word::parse("34124"));
  const auto fillings = rectifying_fillings(direct_sum_shape(Partition{2, 1}, Partition{3, 1}), t0);
  REQUIRE(fillings.size() == 1);
  CHECK(fillings[0] == skew({2, 2}, {{1, 2, 4}, {4}, {1, 4}, {3}}));
  const auto chain = equivalent(reading_word(fillings[0]), Word::parse("34124"), 10);
  CHECK(chain.kind == VerdictKind::equivalent);
  CHECK(is_valid_chain(chain.chain));
  const auto oracle = coproduct_G(Partition{3, 2}, 6, 5);
  CHECK(oracle.at({Partition{2, 1}, Partition{3, 1}}) == 2);
  CHECK_THROWS_WITH_AS(dual_lr_coefficient(t0, Partition{2, 1}, Partition{3, 1}),
                       doctest::Contains("not a unique rectification target"), std::invalid_argument);
}

TEST_CASE("URT choice parsing") {
  CHECK(parse_urt_choice("minimal") == UrtChoice::minimal);
  CHECK(parse_urt_choice("superstandard") == UrtChoice::superstandard);
  CHECK_THROWS_AS(parse_urt_choice("other"), std::invalid_argument);
}

TEST_CASE("tables do not depend on the worker count") {
  const auto saved = jobs();
  set_jobs(1);
  const auto a = lr_table(Partition{2, 1}, superstandard_tableau(Partition{2, 1}), 3);
  const auto da = dual_lr_table(superstandard_tableau(Partition{3, 2}));
  set_jobs(4);
  const auto b = lr_table(Partition{2, 1}, superstandard_tableau(Partition{2, 1}), 3);
  const auto db = dual_lr_table(superstandard_tableau(Partition{3, 2}));
  set_jobs(saved);
  REQUIRE(a.size() == b.size());
  for (const auto& [nu, r] : a) CHECK(b.at(nu).witnesses == r.witnesses);
  REQUIRE(da.size() == db.size());
  for (const auto& [k, r] : da) CHECK(db.at(k).witnesses == r.witnesses);
}
