#include "khecke/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "khecke/hecke.hpp"
#include "khecke/kknuth.hpp"
#include "khecke/parallel.hpp"

namespace khecke {

namespace {

int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Partitions with size <= d and at most n parts, smallest size first.
std::vector<Partition> window_partitions(int n, int d) {
  std::vector<Partition> out;
  for (const auto& p : partitions_between(0, d))
    if (p.length() <= n) out.push_back(p);
  return out;
}

Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.rbegin(), parts.rend());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Exponent padded(const Partition& p, int n) {
  Exponent e(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= p.length(); ++i) e[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(p.row_length(i));
  return e;
}

void check_window(int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("variable count and degree must be nonnegative");
  if (d > 255) throw std::invalid_argument("degree above 255 is not supported");
}

}  // namespace

std::string to_string(const Integer& c) { return c.str(); }

// ---------------------------------------------------------------- TruncatedPoly

TruncatedPoly::TruncatedPoly(int num_vars, int max_degree) : n_(num_vars), d_(max_degree) {
  check_window(n_, d_);
}

TruncatedPoly TruncatedPoly::one(int num_vars, int max_degree) {
  TruncatedPoly p(num_vars, max_degree);
  p.add_term(Exponent(static_cast<std::size_t>(num_vars), 0), 1);
  return p;
}

Integer TruncatedPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TruncatedPoly::add_term(const Exponent& e, const Integer& c) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length does not match variable count");
  if (c == 0 || degree(e) > d_) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& other) {
  if (other.n_ != n_) throw std::invalid_argument("variable counts differ");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

TruncatedPoly& TruncatedPoly::operator-=(const TruncatedPoly& other) {
  if (other.n_ != n_) throw std::invalid_argument("variable counts differ");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

TruncatedPoly& TruncatedPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("variable counts differ");
  const int d = std::min(a.d_, b.d_);
  const std::size_t n = static_cast<std::size_t>(a.n_);
  std::vector<std::pair<const Exponent*, const Integer*>> left, right;
  std::vector<int> left_deg, right_deg;
  for (const auto& [e, c] : a.terms_) {
    left.emplace_back(&e, &c);
    left_deg.push_back(degree(e));
  }
  for (const auto& [e, c] : b.terms_) {
    right.emplace_back(&e, &c);
    right_deg.push_back(degree(e));
  }
  constexpr std::size_t block = 64;
  const std::size_t blocks = (left.size() + block - 1) / block;
  std::vector<TruncatedPoly> partial(blocks, TruncatedPoly(a.n_, d));
  parallel_for(blocks, [&](std::size_t bi) {
    Exponent e(n);
    for (std::size_t i = bi * block; i < std::min(left.size(), (bi + 1) * block); ++i)
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (left_deg[i] + right_deg[j] > d) continue;
        for (std::size_t k = 0; k < n; ++k)
          e[k] = static_cast<std::uint8_t>((*left[i].first)[k] + (*right[j].first)[k]);
        partial[bi].add_term(e, *left[i].second * *right[j].second);
      }
  });
  TruncatedPoly out(a.n_, d);
  for (const auto& p : partial) out += p;
  return out;
}

TruncatedPoly TruncatedPoly::permuted(const std::vector<int>& perm) const {
  TruncatedPoly out(n_, d_);
  Exponent f(static_cast<std::size_t>(n_));
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(perm[i])] = e[i];
    out.add_term(f, c);
  }
  return out;
}

bool TruncatedPoly::is_symmetric() const {
  for (int i = 0; i + 1 < n_; ++i) {
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i) + 1]);
      if (coefficient(f) != c) return false;
    }
  }
  return true;
}

std::string TruncatedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Integer>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    const int dx = degree(x.first), dy = degree(y.first);
    if (dx != dy) return dx < dy;
    return x.first > y.first;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mono.empty())
      out += mag.str();
    else
      out += (mag == 1 ? "" : mag.str() + "*") + mono;
  }
  return out;
}

// ---------------------------------------------------------------- SymPoly

SymPoly::SymPoly(int num_vars, int max_degree) : n_(num_vars), d_(max_degree) { check_window(n_, d_); }

Integer SymPoly::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SymPoly::add_term(const Partition& lambda, const Integer& c) {
  if (c == 0 || lambda.size() > d_ || lambda.length() > n_) return;
  auto [it, fresh] = terms_.try_emplace(lambda, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("variable counts differ");
  const int d = std::min(a.d_, b.d_);
  const auto targets = window_partitions(a.n_, d);
  std::vector<Integer> coeffs(targets.size());
  // [x^gamma](fg) = sum over a <= gamma of f[sort a] g[sort(gamma - a)]
  parallel_for(targets.size(), [&](std::size_t t) {
    const auto& gamma = targets[t].parts();
    const std::size_t len = gamma.size();
    std::vector<int> split(len, 0);
    Integer total = 0;
    while (true) {
      std::vector<int> rest(len);
      for (std::size_t i = 0; i < len; ++i) rest[i] = gamma[i] - split[i];
      const Integer fa = a.coefficient(sorted_partition(split));
      if (fa != 0) total += fa * b.coefficient(sorted_partition(rest));
      std::size_t i = 0;
      while (i < len && split[i] == gamma[i]) split[i++] = 0;
      if (i == len) break;
      ++split[i];
    }
    coeffs[t] = std::move(total);
  });
  SymPoly out(a.n_, d);
  for (std::size_t t = 0; t < targets.size(); ++t) out.add_term(targets[t], coeffs[t]);
  return out;
}

SymPoly SymPoly::from_poly(const TruncatedPoly& p) {
  if (!p.is_symmetric()) throw std::invalid_argument("polynomial is not symmetric");
  SymPoly out(p.num_vars(), p.max_degree());
  for (const auto& [e, c] : p.terms())
    if (std::is_sorted(e.rbegin(), e.rend())) out.add_term(sorted_partition({e.begin(), e.end()}), c);
  return out;
}

TruncatedPoly SymPoly::to_poly() const {
  TruncatedPoly out(n_, d_);
  for (const auto& [p, c] : terms_) {
    Exponent e = padded(p, n_);
    std::sort(e.begin(), e.end());
    do out.add_term(e, c);
    while (std::next_permutation(e.begin(), e.end()));
  }
  return out;
}

BiTruncatedPoly BiTruncatedPoly::tensor(const TruncatedPoly& f, const TruncatedPoly& g, int max_degree) {
  const int n = f.num_vars(), m = g.num_vars();
  TruncatedPoly a(n + m, max_degree), b(n + m, max_degree);
  for (const auto& [e, c] : f.terms()) {
    Exponent x(e);
    x.resize(static_cast<std::size_t>(n + m), 0);
    a.add_term(x, c);
  }
  for (const auto& [e, c] : g.terms()) {
    Exponent x(static_cast<std::size_t>(n), 0);
    x.insert(x.end(), e.begin(), e.end());
    b.add_term(x, c);
  }
  return {a * b, n};
}

BiTruncatedPoly BiTruncatedPoly::split_alphabet(const TruncatedPoly& f) {
  if (f.num_vars() % 2) throw std::invalid_argument("splitting needs an even number of variables");
  return {f, f.num_vars() / 2};
}

// ---------------------------------------------------------------- tableau enumeration

namespace {

// Fills the cells of a shape in row-major order with sets (Strict) or
// multisets of letters in [n], at most d letters in total.
template <bool Strict>
class SetFillingCounter {
 public:
  SetFillingCounter(const Partition& shape, int n, int d) : n_(n), d_(d), poly_(n, d) {
    for (const auto& c : shape.cells()) cells_.push_back(c);
    size_ = shape.size();
    max_in_.assign(cells_.size(), 0);
    min_in_.assign(cells_.size(), 0);
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      left_.push_back(-1);
      above_.push_back(-1);
      for (std::size_t j = 0; j < k; ++j) {
        if (cells_[j].row == cells_[k].row && cells_[j].col + 1 == cells_[k].col) left_[k] = static_cast<int>(j);
        if (cells_[j].col == cells_[k].col && cells_[j].row + 1 == cells_[k].row) above_[k] = static_cast<int>(j);
      }
    }
    exp_.assign(static_cast<std::size_t>(n), 0);
  }

  TruncatedPoly run() {
    if (cells_.empty()) {
      poly_.add_term(exp_, 1);
      return poly_;
    }
    if (size_ > d_) return poly_;
    start_cell(0, 0);
    return poly_;
  }

 private:
  void start_cell(std::size_t k, int used) {
    if (k == cells_.size()) {
      const int extra = used - size_;
      poly_.add_term(exp_, Strict && (extra % 2) ? Integer(-1) : Integer(1));
      return;
    }
    int lo = 1;
    if (left_[k] >= 0) lo = std::max(lo, max_in_[static_cast<std::size_t>(left_[k])]);
    if (above_[k] >= 0) lo = std::max(lo, max_in_[static_cast<std::size_t>(above_[k])] + 1);
    for (int v = lo; v <= n_; ++v) {
      min_in_[k] = v;
      place(k, v, used + 1);
    }
  }

  void place(std::size_t k, int v, int used) {
    // letters still owed: one per later cell
    if (used + static_cast<int>(cells_.size() - k - 1) > d_) return;
    ++exp_[static_cast<std::size_t>(v - 1)];
    max_in_[k] = v;
    start_cell(k + 1, used);
    for (int w = Strict ? v + 1 : v; w <= n_; ++w) place(k, w, used + 1);
    --exp_[static_cast<std::size_t>(v - 1)];
  }

  int n_, d_, size_ = 0;
  TruncatedPoly poly_;
  std::vector<Cell> cells_;
  std::vector<int> left_, above_;
  std::vector<int> max_in_, min_in_;
  Exponent exp_;
};

}  // namespace

TruncatedPoly grothendieck_G(const Partition& lambda, int n, int d) {
  if (d < lambda.size()) throw std::invalid_argument("degree cap is below |lambda|");
  return SetFillingCounter<true>(lambda, n, d).run();
}

TruncatedPoly weak_J(const Partition& lambda, int n, int d) {
  if (d < lambda.size()) throw std::invalid_argument("degree cap is below |lambda|");
  return SetFillingCounter<false>(lambda, n, d).run();
}

// ---------------------------------------------------------------- branching

namespace {

// mu with nu/mu a horizontal strip.
void horizontal_strips(const Partition& nu, std::size_t i, std::vector<int>& cur, std::vector<Partition>& out) {
  const auto& p = nu.parts();
  if (i == p.size()) {
    out.push_back(sorted_partition(cur));
    return;
  }
  const int hi = p[i];
  const int lo = i + 1 < p.size() ? p[i + 1] : 0;
  for (int v = lo; v <= hi; ++v) {
    cur.push_back(v);
    horizontal_strips(nu, i + 1, cur, out);
    cur.pop_back();
  }
}

// cells of mu that may also hold the new largest letter
int free_corners(const Partition& mu, const Partition& nu) {
  int e = 0;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.row_length(i) > nu.row_length(i + 1)) ++e;
  return e;
}

class BranchingTable {
 public:
  explicit BranchingTable(bool weak) : weak_(weak) {}

  Integer get(const Partition& nu, const Partition& alpha) {
    if (alpha.empty()) return nu.empty() ? 1 : 0;
    if (nu.length() > alpha.length() || nu.size() > alpha.size()) return 0;
    const auto key = std::pair{nu, alpha};
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    std::vector<int> rest(alpha.parts());
    const int k = rest.back();
    rest.pop_back();
    const Partition shorter(rest);
    std::vector<Partition> strips;
    std::vector<int> cur;
    horizontal_strips(nu, 0, cur, strips);
    Integer total = 0;
    for (const auto& mu : strips) {
      const int s = nu.size() - mu.size();
      if (s > k) continue;
      const int e = free_corners(mu, nu);
      Integer factor;
      if (weak_) {
        // [x^k] x^s (1-x)^-(s+e)
        factor = (s + e == 0) ? Integer(k == s ? 1 : 0) : binomial(k + e - 1, k - s);
      } else {
        // [x^k] x^s (1-x)^e
        factor = binomial(e, k - s);
        if ((k - s) % 2) factor = -factor;
      }
      if (factor != 0) total += factor * get(mu, shorter);
    }
    std::lock_guard lock(mutex_);
    memo_.emplace(key, total);
    return total;
  }

 private:
  bool weak_;
  std::mutex mutex_;
  std::map<std::pair<Partition, Partition>, Integer> memo_;
};

BranchingTable& g_table() {
  static BranchingTable table(false);
  return table;
}

BranchingTable& j_table() {
  static BranchingTable table(true);
  return table;
}

SymPoly branching_poly(BranchingTable& table, const Partition& lambda, int n, int d) {
  if (d < lambda.size()) throw std::invalid_argument("degree cap is below |lambda|");
  SymPoly out(n, d);
  for (const auto& alpha : window_partitions(n, d)) out.add_term(alpha, table.get(lambda, alpha));
  return out;
}

}  // namespace

Integer grothendieck_coefficient(const Partition& lambda, const Partition& alpha) {
  return g_table().get(lambda, alpha);
}

Integer weak_coefficient(const Partition& lambda, const Partition& alpha) { return j_table().get(lambda, alpha); }

SymPoly grothendieck_G_sym(const Partition& lambda, int n, int d) { return branching_poly(g_table(), lambda, n, d); }

SymPoly weak_J_sym(const Partition& lambda, int n, int d) { return branching_poly(j_table(), lambda, n, d); }

// ---------------------------------------------------------------- L and substitution

TruncatedPoly fundamental_L(const Composition& alpha, int n, int d) {
  TruncatedPoly out(n, d);
  const int k = alpha.size();
  if (k > d) return out;
  std::vector<bool> strict(static_cast<std::size_t>(k) + 1, false);
  for (int s : alpha.descent_set()) strict[static_cast<std::size_t>(s)] = true;
  Exponent e(static_cast<std::size_t>(n), 0);
  // position j (1-indexed) takes index i >= previous, strictly when j-1 is in S
  auto rec = [&](auto&& self, int j, int prev) -> void {
    if (j > k) {
      out.add_term(e, 1);
      return;
    }
    const int lo = j == 1 ? 1 : (strict[static_cast<std::size_t>(j - 1)] ? prev + 1 : prev);
    for (int i = lo; i <= n; ++i) {
      ++e[static_cast<std::size_t>(i - 1)];
      self(self, j + 1, i);
      --e[static_cast<std::size_t>(i - 1)];
    }
  };
  rec(rec, 1, 1);
  return out;
}

TruncatedPoly substitute_neg_geometric(const Partition& lambda, int n, int d) {
  const TruncatedPoly g = grothendieck_G(lambda, n, std::max(d, lambda.size()));
  TruncatedPoly out(n, d);
  const Integer outer_sign = lambda.size() % 2 ? -1 : 1;
  Exponent e(static_cast<std::size_t>(n), 0);
  for (const auto& [a, c] : g.terms()) {
    // (-x/(1-x))^m = (-1)^m sum_{k>=m} C(k-1, m-1) x^k
    auto rec = [&](auto&& self, std::size_t i, int budget, const Integer& coeff) -> void {
      if (i == a.size()) {
        out.add_term(e, coeff);
        return;
      }
      const int m = a[i];
      if (m == 0) {
        e[i] = 0;
        self(self, i + 1, budget, coeff);
        return;
      }
      const Integer sign = m % 2 ? -1 : 1;
      for (int k = m; k <= budget; ++k) {
        e[i] = static_cast<std::uint8_t>(k);
        self(self, i + 1, budget - k, coeff * sign * binomial(k - 1, m - 1));
      }
      e[i] = 0;
    };
    rec(rec, 0, d, c * outer_sign);
  }
  return out;
}

// ---------------------------------------------------------------- expansion

std::string to_string(Basis b) { return b == Basis::G ? "G" : "J"; }

BasisExpansion expand_in_basis(const SymPoly& f, Basis basis) {
  const int n = f.num_vars(), d = f.max_degree();
  std::map<Partition, SymPoly> cache;
  auto element = [&](const Partition& p) -> const SymPoly& {
    auto it = cache.find(p);
    if (it == cache.end())
      it = cache.emplace(p, basis == Basis::G ? grothendieck_G_sym(p, n, d) : weak_J_sym(p, n, d)).first;
    return it->second;
  };
  BasisExpansion out{{}, f};
  while (!out.residual.is_zero()) {
    const auto& terms = out.residual.terms();
    auto best = terms.begin();
    for (auto it = terms.begin(); it != terms.end(); ++it) {
      const int s = it->first.size(), bs = best->first.size();
      if (s < bs || (s == bs && it->first > best->first)) best = it;
    }
    const Partition lambda = best->first;
    const Integer c = best->second;
    SymPoly scaled = element(lambda);
    scaled *= c;
    out.residual -= scaled;
    out.coefficients[lambda] += c;
  }
  // reconstruction check
  SymPoly rebuilt(n, d);
  for (const auto& [p, c] : out.coefficients) {
    SymPoly scaled = element(p);
    scaled *= c;
    rebuilt += scaled;
  }
  out.residual = f - rebuilt;
  return out;
}

BasisExpansion expand_in_basis(const TruncatedPoly& f, Basis basis) {
  if (f.num_vars() < f.max_degree()) throw std::invalid_argument("n < d: too few variables to separate m_lambda");
  return expand_in_basis(SymPoly::from_poly(f), basis);
}

BasisExpansion expand_in_G(const TruncatedPoly& f) { return expand_in_basis(f, Basis::G); }

BasisExpansion expand_product(const Partition& lambda, const Partition& mu, int n, int d, Basis basis) {
  if (n < d) throw std::invalid_argument("n < d: too few variables to separate m_lambda");
  auto make = [&](const Partition& p) {
    return basis == Basis::G ? grothendieck_G_sym(p, n, std::max(d, p.size()))
                             : weak_J_sym(p, n, std::max(d, p.size()));
  };
  SymPoly product = make(lambda) * make(mu);
  SymPoly truncated(n, d);
  for (const auto& [p, c] : product.terms()) truncated.add_term(p, c);
  return expand_in_basis(truncated, basis);
}

BiSymTerms split_grothendieck(const Partition& nu, int n, int d) {
  // G_nu is symmetric in y and z together, so [y^a z^b] = [x^sort(a, b)]
  BiSymTerms out;
  const auto parts = window_partitions(n, d);
  for (const auto& a : parts)
    for (const auto& b : parts) {
      std::vector<int> joined(a.parts());
      joined.insert(joined.end(), b.parts().begin(), b.parts().end());
      Integer c = grothendieck_coefficient(nu, sorted_partition(joined));
      if (c != 0) out.emplace(std::pair{a, b}, std::move(c));
    }
  return out;
}

std::map<std::pair<Partition, Partition>, Integer> coproduct_G(const Partition& nu, int n, int d) {
  if (n < d) throw std::invalid_argument("n < d: too few variables to separate m_lambda");
  if (d < nu.size()) throw std::invalid_argument("degree cap is below |nu|");
  BiSymTerms residual = split_grothendieck(nu, n, d);
  std::map<Partition, SymPoly> cache;
  auto element = [&](const Partition& p) -> const SymPoly& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, grothendieck_G_sym(p, n, d)).first;
    return it->second;
  };
  auto before = [](const Partition& x, const Partition& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x > y;
  };
  std::map<std::pair<Partition, Partition>, Integer> out;
  while (!residual.empty()) {
    auto best = residual.begin();
    for (auto it = residual.begin(); it != residual.end(); ++it) {
      const auto& [a, b] = it->first;
      const auto& [ba, bb] = best->first;
      if (before(a, ba) || (a == ba && before(b, bb))) best = it;
    }
    const auto [lambda, mu] = best->first;
    const Integer c = best->second;
    out[{lambda, mu}] += c;
    for (const auto& [a, ca] : element(lambda).terms())
      for (const auto& [b, cb] : element(mu).terms()) {
        auto [it, fresh] = residual.try_emplace({a, b}, 0);
        it->second -= c * ca * cb;
        if (it->second == 0) residual.erase(it);
      }
  }
  return out;
}

// ---------------------------------------------------------------- phi

TruncatedPoly sum_fundamental(const std::vector<Word>& words, int n, int d) {
  std::map<Composition, Integer> counts;
  Integer empties = 0;
  for (const auto& w : words) {
    if (static_cast<int>(w.size()) > d) continue;
    if (w.empty())
      ++empties;
    else
      ++counts[descent_composition(w)];
  }
  TruncatedPoly out(n, d);
  if (empties != 0) {
    auto one = TruncatedPoly::one(n, d);
    one *= empties;
    out += one;
  }
  for (const auto& [alpha, c] : counts) {
    auto l = fundamental_L(alpha, n, d);
    l *= c;
    out += l;
  }
  return out;
}

TruncatedPoly j_from_insertion(const IncreasingTableau& t, int n, int d) {
  if (!t.is_straight()) throw std::invalid_argument("j_from_insertion needs a straight tableau");
  const auto sup = t.support();
  const Partition shape = t.shape();
  std::vector<Word> words;
  std::vector<Letter> cur;
  auto rec = [&](auto&& self, const IncreasingTableau& p) -> void {
    if (p == t) words.emplace_back(cur);
    if (static_cast<int>(cur.size()) == d) return;
    for (Letter x : sup) {
      auto next = insert_letter(p, x).tableau;
      if (!shape.contains(next.shape())) continue;
      cur.push_back(x);
      self(self, next);
      cur.pop_back();
    }
  };
  rec(rec, IncreasingTableau{});
  return sum_fundamental(words, n, d);
}

PhiResult phi_class(const Word& h, int n, int d, std::size_t bound) {
  const auto cls = class_tableaux(h, bound);
  PhiResult out{TruncatedPoly(n, d), cls.complete()};
  for (const auto& t : cls.members) out.value += j_from_insertion(t, n, d);
  return out;
}

}  // namespace khecke
