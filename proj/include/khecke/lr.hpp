#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khecke/partition.hpp"
#include "khecke/symfun.hpp"
#include "khecke/tableau.hpp"

namespace khecke {

enum class UrtChoice { superstandard, minimal };

std::string to_string(UrtChoice c);
UrtChoice parse_urt_choice(const std::string& s);

IncreasingTableau urt_for(const Partition& shape, UrtChoice choice);

struct LRReport {
  int count = 0;
  int sign = 1;  // (-1)^(|nu| - |lambda| - |mu|)
  std::vector<IncreasingTableau> witnesses;
  std::optional<Integer> oracle;  // signed structure constant, when checked

  /// sign * count
  Integer signed_count() const { return Integer(sign * count); }
  bool oracle_agrees() const { return oracle && *oracle == signed_count(); }
};

/// Increasing fillings R of the skew shape over the alphabet of t with
/// P(row(R)) = t, in enumeration order. No URT check.
std::vector<IncreasingTableau> rectifying_fillings(const SkewShape& shape, const IncreasingTableau& t);

/// Product rule: fillings of nu/lambda rectifying to t, a URT of shape mu.
/// Throws when t is not a URT at urt_bound.
LRReport lr_coefficient(const Partition& lambda, const IncreasingTableau& t, const Partition& nu,
                        std::size_t urt_bound = 12);
LRReport lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                        UrtChoice choice = UrtChoice::superstandard, std::size_t urt_bound = 12);

/// Every nu with |lambda|+|mu| <= |nu| <= |lambda|+|mu|+max_extra and a
/// nonzero count.
std::map<Partition, LRReport> lr_table(const Partition& lambda, const IncreasingTableau& t, int max_extra,
                                       std::size_t urt_bound = 12);

/// Coproduct rule: fillings of lambda (+) mu rectifying to t0, a URT.
LRReport dual_lr_coefficient(const IncreasingTableau& t0, const Partition& lambda, const Partition& mu,
                             std::size_t urt_bound = 12);

/// Every (lambda, mu) with a nonzero dual count.
std::map<std::pair<Partition, Partition>, LRReport> dual_lr_table(const IncreasingTableau& t0,
                                                                   std::size_t urt_bound = 12);

struct OracleRow {
  Partition lambda, mu, nu;
  int count = 0;
  int sign = 1;
  Integer oracle = 0;
  bool agrees() const { return oracle == Integer(sign * count); }
};

struct OracleReport {
  std::vector<OracleRow> rows;  // every shape in the window with a nonzero side
  std::vector<OracleRow> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Counts from the product rule against the expansion of G_lambda G_mu at
/// (n, d), for every nu with |nu| <= min(d, max_degree).
OracleReport verify_product(const Partition& lambda, const IncreasingTableau& t, int n, int d,
                            std::optional<int> max_degree = {}, std::size_t urt_bound = 12);

/// Counts from the coproduct rule against coproduct_G(shape(t0), n, d).
OracleReport verify_coproduct(const IncreasingTableau& t0, int n, int d, std::size_t urt_bound = 12);

}  // namespace khecke
