#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flopgw/algebra/rational.hpp"

namespace flopgw::quantize {

using algebra::Rational;
using RatMat = std::vector<std::vector<Rational>>;

/// Symmetric invertible metric on H; the default is the identity.
class Metric {
 public:
  explicit Metric(int dim);
  explicit Metric(RatMat g);
  int dim() const { return static_cast<int>(g_.size()); }
  const Rational& operator()(int i, int j) const { return g_[i][j]; }
  const Rational& inverse(int i, int j) const { return inv_[i][j]; }

 private:
  RatMat g_;
  RatMat inv_;
};

/// Element of H((z^{-1})) truncated to z-exponents -K-1 <= k <= K.
class LoopVector {
 public:
  /// (component i, z-exponent k).
  using Slot = std::pair<int, int>;

  LoopVector(int dim, int cutoff);
  static LoopVector basis(int dim, int cutoff, int i, int k, Rational c = Rational(1));

  int dim() const { return dim_; }
  int cutoff() const { return cutoff_; }
  bool in_range(int i, int k) const { return i >= 0 && i < dim_ && k >= -cutoff_ - 1 && k <= cutoff_; }
  const std::map<Slot, Rational>& coefficients() const { return coeffs_; }
  Rational coeff(int i, int k) const;
  /// Adds c to the slot; slots outside the window are dropped.
  void add(int i, int k, const Rational& c);

  LoopVector& operator+=(const LoopVector& o);
  friend LoopVector operator+(LoopVector a, const LoopVector& b) { return a += b; }
  friend LoopVector operator*(const Rational& c, LoopVector v);
  friend bool operator==(const LoopVector& a, const LoopVector& b);
  std::string to_string() const;

 private:
  int dim_;
  int cutoff_;
  std::map<Slot, Rational> coeffs_;
};

/// Omega(f, g) = Res_{z=0} (f(-z), g(z)).
Rational symplectic_form(const LoopVector& f, const LoopVector& g, const Metric& metric);
Rational symplectic_form(const LoopVector& f, const LoopVector& g);

/// sum_n z^n M_n with M_n acting on H.
using LaurentMatrix = std::map<int, RatMat>;

LaurentMatrix z_power(int dim, int n, const Rational& c = Rational(1));
LaurentMatrix z_power_times(int n, const RatMat& m);
LaurentMatrix commutator(const LaurentMatrix& a, const LaurentMatrix& b);

/// A f, truncated to the window of f.
LoopVector apply(const LaurentMatrix& a, const LoopVector& f);

bool is_infinitesimal_symplectic(const LaurentMatrix& a, int dim, int cutoff, const Metric& metric);
bool is_infinitesimal_symplectic(const LaurentMatrix& a, int dim, int cutoff);

/// Darboux variable q^i_k (is_p false) or p^i_k (is_p true), 0 <= k <= K.
struct Var {
  bool is_p;
  int i;
  int k;
  auto operator<=>(const Var&) const = default;
};

/// f = sum q^i_k T_i z^k + sum p^i_k (-z)^{-1-k} g^{ij} T_j.
LoopVector darboux_vector(const Var& v, int cutoff, const Metric& metric);

/// Quadratic form sum c * x y over Darboux monomials.
class QuadHamiltonian {
 public:
  using Index = std::pair<int, int>;
  /// Keys are ordered pairs a <= b for pp and qq; pq is keyed (q index, p index).
  using Block = std::map<std::pair<Index, Index>, Rational>;

  /// Adds c * x * y for Darboux variables x, y.
  void add(const Var& x, const Var& y, const Rational& c);

  const Block& pp() const { return pp_; }
  const Block& pq() const { return pq_; }
  const Block& qq() const { return qq_; }
  bool is_zero() const { return pp_.empty() && pq_.empty() && qq_.empty(); }
  Rational coeff(const Var& x, const Var& y) const;

  /// Drops every term touching an index with k > max_k.
  QuadHamiltonian restricted(int max_k) const;

  QuadHamiltonian& operator+=(const QuadHamiltonian& o);
  friend QuadHamiltonian operator+(QuadHamiltonian a, const QuadHamiltonian& b) { return a += b; }
  friend QuadHamiltonian operator*(const Rational& c, QuadHamiltonian h);
  friend bool operator==(const QuadHamiltonian& a, const QuadHamiltonian& b);
  std::string to_string() const;

 private:
  Block pp_;
  Block pq_;
  Block qq_;
};

/// P(A)(f) = 1/2 Omega(Af, f) in Darboux coordinates; terms leaving the window are omitted.
QuadHamiltonian hamiltonian_of(const LaurentMatrix& a, int dim, int cutoff, const Metric& metric);
QuadHamiltonian hamiltonian_of(const LaurentMatrix& a, int dim, int cutoff);

/// {F, G} = sum dF/dp dG/dq - dF/dq dG/dp.
QuadHamiltonian poisson_bracket(const QuadHamiltonian& f, const QuadHamiltonian& g);

/// t^i_k = q^i_k + delta^{i,unit} delta_{k,1}.
LoopVector dilaton_shift(const LoopVector& q, int unit = 0);
LoopVector dilaton_unshift(const LoopVector& t, int unit = 0);

}  // namespace flopgw::quantize
