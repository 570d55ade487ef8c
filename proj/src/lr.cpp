#include "khecke/lr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "khecke/enumerate.hpp"
#include "khecke/hecke.hpp"
#include "khecke/kknuth.hpp"
#include "khecke/parallel.hpp"

namespace khecke {

std::string to_string(UrtChoice c) { return c == UrtChoice::minimal ? "minimal" : "superstandard"; }

UrtChoice parse_urt_choice(const std::string& s) {
  if (s == "superstandard") return UrtChoice::superstandard;
  if (s == "minimal") return UrtChoice::minimal;
  throw std::invalid_argument("unknown URT choice '" + s + "'");
}

IncreasingTableau urt_for(const Partition& shape, UrtChoice choice) {
  return choice == UrtChoice::minimal ? minimal_tableau(shape) : superstandard_tableau(shape);
}

namespace {

int sign_of(int excess) { return excess % 2 == 0 ? 1 : -1; }

bool fits_alphabet(const SkewShape& s, int k) {
  for (int i = 1; i <= s.num_rows(); ++i)
    if (s.last_col(i) - s.first_col(i) + 1 > k) return false;
  const Partition oc = s.outer().conjugate(), ic = s.inner().conjugate();
  for (int j = 1; j <= oc.length(); ++j)
    if (oc.row_length(j) - ic.row_length(j) > k) return false;
  return true;
}

void require_urt(const IncreasingTableau& t, std::size_t bound, const char* example) {
  const auto v = is_urt(t, bound);
  if (v.status == UrtStatus::urt_within_bound) return;
  std::string msg = "tableau " + t.to_string() + " is not a unique rectification target (" + to_string(v.status) +
                    " at bound " + std::to_string(bound) + ")";
  if (v.witness) msg += ", equivalent to " + v.witness->to_string();
  msg += "; the count can miss terms, e.g. ";
  msg += example;
  throw std::invalid_argument(msg);
}

constexpr const char* product_example = "P(34124) gives 2 fillings of (4,3,2)/(2,1) where the coefficient is 3";
constexpr const char* coproduct_example = "P(34124) has no filling of (2,1)+(3,1) where the coefficient is nonzero";

LRReport make_report(std::vector<IncreasingTableau> witnesses, int excess) {
  LRReport r;
  r.count = static_cast<int>(witnesses.size());
  r.sign = sign_of(excess);
  r.witnesses = std::move(witnesses);
  return r;
}

std::vector<Partition> subshapes(const Partition& nu) {
  std::vector<Partition> out;
  for (const auto& p : partitions_between(0, nu.size()))
    if (nu.contains(p)) out.push_back(p);
  return out;
}

}  // namespace

std::vector<IncreasingTableau> rectifying_fillings(const SkewShape& shape, const IncreasingTableau& t) {
  std::vector<IncreasingTableau> out;
  const Letter k = t.max_entry();
  if (shape.size() < t.num_cells()) return out;
  if (shape.size() == 0) {
    if (t.empty()) out.emplace_back(IncreasingTableau::unchecked, shape.inner(), Rows(shape.num_rows()));
    return out;
  }
  if (k == 0 || !fits_alphabet(shape, k)) return out;
  const auto supp = t.support();
  std::vector<bool> allowed(k + 1, false);
  for (Letter x : supp) allowed[x] = true;
  for_each_increasing_tableau(shape, k, [&](const IncreasingTableau& r) {
    std::vector<bool> seen(k + 1, false);
    std::size_t distinct = 0;
    for (const auto& row : r.rows())
      for (Letter x : row) {
        if (!allowed[x]) return;
        if (!seen[x]) seen[x] = true, ++distinct;
      }
    if (distinct != supp.size()) return;
    if (insertion_tableau(reading_word(r)) == t) out.push_back(r);
  });
  return out;
}

LRReport lr_coefficient(const Partition& lambda, const IncreasingTableau& t, const Partition& nu,
                        std::size_t urt_bound) {
  if (!t.is_straight()) throw std::invalid_argument("target tableau must have straight shape");
  require_urt(t, urt_bound, product_example);
  const Partition mu = t.shape();
  if (!nu.contains(lambda)) return make_report({}, nu.size() - lambda.size() - mu.size());
  return make_report(rectifying_fillings(SkewShape(nu, lambda), t), nu.size() - lambda.size() - mu.size());
}

LRReport lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, UrtChoice choice,
                        std::size_t urt_bound) {
  return lr_coefficient(lambda, urt_for(mu, choice), nu, urt_bound);
}

std::map<Partition, LRReport> lr_table(const Partition& lambda, const IncreasingTableau& t, int max_extra,
                                       std::size_t urt_bound) {
  require_urt(t, urt_bound, product_example);
  const int lo = lambda.size() + t.num_cells();
  const int k = t.max_entry();
  std::vector<Partition> shapes;
  for (const auto& nu : partitions_between(lo, lo + std::max(0, max_extra)))
    if (nu.contains(lambda) && (k > 0 ? fits_alphabet(SkewShape(nu, lambda), k) : nu == lambda))
      shapes.push_back(nu);
  std::vector<LRReport> reports(shapes.size());
  parallel_for(shapes.size(), [&](std::size_t i) {
    reports[i] = make_report(rectifying_fillings(SkewShape(shapes[i], lambda), t), shapes[i].size() - lo);
  });
  std::map<Partition, LRReport> out;
  for (std::size_t i = 0; i < shapes.size(); ++i)
    if (reports[i].count > 0) out.emplace(shapes[i], std::move(reports[i]));
  return out;
}

LRReport dual_lr_coefficient(const IncreasingTableau& t0, const Partition& lambda, const Partition& mu,
                             std::size_t urt_bound) {
  if (!t0.is_straight()) throw std::invalid_argument("target tableau must have straight shape");
  require_urt(t0, urt_bound, coproduct_example);
  return make_report(rectifying_fillings(direct_sum_shape(lambda, mu), t0),
                     lambda.size() + mu.size() - t0.num_cells());
}

std::map<std::pair<Partition, Partition>, LRReport> dual_lr_table(const IncreasingTableau& t0,
                                                                   std::size_t urt_bound) {
  require_urt(t0, urt_bound, coproduct_example);
  const Partition nu = t0.shape();
  const auto subs = subshapes(nu);
  std::vector<std::pair<Partition, Partition>> pairs;
  for (const auto& a : subs)
    for (const auto& b : subs)
      if (a.size() + b.size() >= nu.size()) pairs.emplace_back(a, b);
  std::vector<LRReport> reports(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto& [a, b] = pairs[i];
    reports[i] = make_report(rectifying_fillings(direct_sum_shape(a, b), t0), a.size() + b.size() - nu.size());
  });
  std::map<std::pair<Partition, Partition>, LRReport> out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (reports[i].count > 0) out.emplace(pairs[i], std::move(reports[i]));
  return out;
}

OracleReport verify_product(const Partition& lambda, const IncreasingTableau& t, int n, int d,
                            std::optional<int> max_degree, std::size_t urt_bound) {
  const Partition mu = t.shape();
  const int lo = lambda.size() + mu.size();
  if (n < d || d < lo)
    throw std::invalid_argument("window insufficient: need n >= d >= |lambda|+|mu| = " + std::to_string(lo) +
                                ", got n=" + std::to_string(n) + " d=" + std::to_string(d));
  const int top = std::min(d, max_degree.value_or(d));
  const auto table = lr_table(lambda, t, top - lo, urt_bound);
  const auto oracle = expand_product(lambda, mu, n, d, Basis::G).coefficients;
  std::set<Partition> shapes;
  for (const auto& [nu, r] : table) shapes.insert(nu);
  for (const auto& [nu, c] : oracle)
    if (nu.size() <= top && c != 0) shapes.insert(nu);
  OracleReport rep;
  for (const auto& nu : shapes) {
    OracleRow row{lambda, mu, nu, 0, sign_of(nu.size() - lo), 0};
    if (auto it = table.find(nu); it != table.end()) row.count = it->second.count;
    if (auto it = oracle.find(nu); it != oracle.end()) row.oracle = it->second;
    rep.rows.push_back(row);
    if (!row.agrees()) rep.mismatches.push_back(row);
  }
  return rep;
}

OracleReport verify_coproduct(const IncreasingTableau& t0, int n, int d, std::size_t urt_bound) {
  const Partition nu = t0.shape();
  if (n < d || d < nu.size())
    throw std::invalid_argument("window insufficient: need n >= d >= |nu| = " + std::to_string(nu.size()) +
                                ", got n=" + std::to_string(n) + " d=" + std::to_string(d));
  const auto table = dual_lr_table(t0, urt_bound);
  const auto oracle = coproduct_G(nu, n, d);
  std::set<std::pair<Partition, Partition>> keys;
  for (const auto& [k, r] : table) keys.insert(k);
  for (const auto& [k, c] : oracle)
    if (c != 0) keys.insert(k);
  OracleReport rep;
  for (const auto& key : keys) {
    const auto& [a, b] = key;
    OracleRow row{a, b, nu, 0, sign_of(a.size() + b.size() - nu.size()), 0};
    if (auto it = table.find(key); it != table.end()) row.count = it->second.count;
    if (auto it = oracle.find(key); it != oracle.end()) row.oracle = it->second;
    rep.rows.push_back(row);
    if (!row.agrees()) rep.mismatches.push_back(row);
  }
  return rep;
}

}  // namespace khecke
