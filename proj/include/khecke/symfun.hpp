#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "khecke/partition.hpp"
#include "khecke/tableau.hpp"
#include "khecke/word.hpp"

namespace khecke {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::vector<std::uint8_t>;

/// Polynomial in x_1..x_n keeping only monomials of total degree <= d.
class TruncatedPoly {
 public:
  TruncatedPoly(int num_vars, int max_degree);

  static TruncatedPoly one(int num_vars, int max_degree);

  int num_vars() const noexcept { return n_; }
  int max_degree() const noexcept { return d_; }
  const std::map<Exponent, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Exponent& e) const;
  /// Adds c x^e; drops the term when it leaves the window.
  void add_term(const Exponent& e, const Integer& c);

  TruncatedPoly& operator+=(const TruncatedPoly& other);
  TruncatedPoly& operator-=(const TruncatedPoly& other);
  TruncatedPoly& operator*=(const Integer& c);
  friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
  friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) { return a -= b; }
  friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);
  friend bool operator==(const TruncatedPoly&, const TruncatedPoly&) = default;

  /// Invariant under swapping x_i and x_{i+1} for every i.
  bool is_symmetric() const;
  /// Same with the variables permuted: result[perm[i]] = exponent[i].
  TruncatedPoly permuted(const std::vector<int>& perm) const;

  /// "x1^2*x2 - 2*x1*x2*x3 + ...", ordered by degree then exponent.
  std::string to_string() const;

 private:
  int n_;
  int d_;
  std::map<Exponent, Integer> terms_;
};

/// Symmetric polynomial in x_1..x_n, truncated at degree d, stored by its
/// coefficients on the monomial symmetric functions m_lambda.
class SymPoly {
 public:
  SymPoly(int num_vars, int max_degree);

  int num_vars() const noexcept { return n_; }
  int max_degree() const noexcept { return d_; }
  const std::map<Partition, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Integer& c);

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly& operator*=(const Integer& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  /// Throws std::invalid_argument when p is not symmetric.
  static SymPoly from_poly(const TruncatedPoly& p);
  TruncatedPoly to_poly() const;

 private:
  int n_;
  int d_;
  std::map<Partition, Integer> terms_;
};

/// Coefficients on m_alpha(y) m_beta(z).
using BiSymTerms = std::map<std::pair<Partition, Partition>, Integer>;

/// Polynomial in y_1..y_n, z_1..z_n with a joint degree cap.
struct BiTruncatedPoly {
  TruncatedPoly poly;  // variables y_1..y_n, z_1..z_n in that order
  int split;           // n

  /// f(y) g(z) truncated at the joint cap.
  static BiTruncatedPoly tensor(const TruncatedPoly& f, const TruncatedPoly& g, int max_degree);
  /// f(y_1..y_n, z_1..z_n) from f in 2n variables.
  static BiTruncatedPoly split_alphabet(const TruncatedPoly& f);
};

/// Signed generating function of set-valued tableaux of shape lambda with
/// entries <= n and size <= d. Direct enumeration.
TruncatedPoly grothendieck_G(const Partition& lambda, int n, int d);

/// Generating function of weak set-valued tableaux. Direct enumeration.
TruncatedPoly weak_J(const Partition& lambda, int n, int d);

/// Same polynomials in the m basis, from the branching rule that peels off
/// the largest variable. Requires d >= |lambda|.
SymPoly grothendieck_G_sym(const Partition& lambda, int n, int d);
SymPoly weak_J_sym(const Partition& lambda, int n, int d);

/// Coefficient of x^alpha in G_lambda (resp. J_lambda), alpha a partition.
Integer grothendieck_coefficient(const Partition& lambda, const Partition& alpha);
Integer weak_coefficient(const Partition& lambda, const Partition& alpha);

/// L_alpha truncated; zero when |alpha| > d.
TruncatedPoly fundamental_L(const Composition& alpha, int n, int d);

/// (-1)^|lambda| G_lambda(-x/(1-x)) as a truncated power series.
TruncatedPoly substitute_neg_geometric(const Partition& lambda, int n, int d);

enum class Basis { G, J };

std::string to_string(Basis b);

/// f = sum c_lambda B_lambda + residual, by repeatedly removing the minimal
/// surviving m_lambda: lowest degree first, then the lexicographically
/// largest partition (a linear extension of reverse dominance).
struct BasisExpansion {
  std::map<Partition, Integer> coefficients;
  SymPoly residual;
};

BasisExpansion expand_in_basis(const SymPoly& f, Basis basis);
/// Checks symmetry and n >= d first.
BasisExpansion expand_in_basis(const TruncatedPoly& f, Basis basis);
BasisExpansion expand_in_G(const TruncatedPoly& f);

/// B_lambda B_mu expanded in the same basis at (n, d).
BasisExpansion expand_product(const Partition& lambda, const Partition& mu, int n, int d, Basis basis = Basis::G);

/// Delta(G_nu) = sum coefficient G_lambda(y) G_mu(z); terms of y-degree and
/// z-degree up to d each. Coefficients carry their sign.
std::map<std::pair<Partition, Partition>, Integer> coproduct_G(const Partition& nu, int n, int d);

/// G_nu(y; z) on the m(y) m(z) basis, per-block degree cap d.
BiSymTerms split_grothendieck(const Partition& nu, int n, int d);

/// Sum of L_C(h) over words h of length <= d with P(h) = t.
TruncatedPoly j_from_insertion(const IncreasingTableau& t, int n, int d);

struct PhiResult {
  TruncatedPoly value;
  bool complete;  // the tableau class of h was fully resolved
};

/// Sum of L_C(w) over w equivalent to h with |w| <= d, computed as the sum
/// of j_from_insertion over the tableaux of the class of h at the bound.
PhiResult phi_class(const Word& h, int n, int d, std::size_t bound);

/// L_C(w) summed over a word list (empty word contributes 1).
TruncatedPoly sum_fundamental(const std::vector<Word>& words, int n, int d);

std::string to_string(const Integer& c);

}  // namespace khecke
