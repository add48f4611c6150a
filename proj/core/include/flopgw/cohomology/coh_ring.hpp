#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flopgw/algebra/rational.hpp"

namespace flopgw::cohomology {

using algebra::Rational;

/// Unreduced polynomial in h and xi: (a, b) -> coefficient of h^a xi^b.
using HXPoly = std::map<std::pair<int, int>, Rational>;

HXPoly hx_add(const HXPoly& a, const HXPoly& b, const Rational& scale = Rational(1));
HXPoly hx_mul(const HXPoly& a, const HXPoly& b);
HXPoly hx_pow(const HXPoly& a, int exponent);
/// Homogeneous part of total degree k.
HXPoly hx_degree(const HXPoly& a, int k);
/// Substitution h -> xi - h, xi -> xi.
HXPoly hx_flop_substitute(const HXPoly& a);

/// Class in H*(X) = Q[h, xi]/(h^{r+1}, xi (xi - h)^{r+1}) on the basis
/// h^a xi^b, 0 <= a <= r, 0 <= b <= r + 1.
class CohClass {
 public:
  explicit CohClass(int r) : r_(r) {}

  static CohClass one(int r);
  static CohClass h(int r);
  static CohClass xi(int r);
  static CohClass monomial(int r, int a, int b, Rational c = Rational(1));

  int r() const { return r_; }
  const HXPoly& coeffs() const { return coeffs_; }
  Rational coeff(int a, int b) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Graded piece of complex degree k.
  CohClass degree_part(int k) const;

  CohClass operator-() const;
  CohClass& operator+=(const CohClass& o);
  CohClass& operator-=(const CohClass& o);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(const CohClass& a, const CohClass& b);
  friend CohClass operator*(const Rational& s, CohClass a);
  friend bool operator==(const CohClass& a, const CohClass& b) { return a.r_ == b.r_ && a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  friend CohClass reduce(int r, const HXPoly& p);
  int r_;
  HXPoly coeffs_;
};

/// Canonical form on the monomial basis.
CohClass reduce(int r, const HXPoly& p);
/// Coefficient of h^r xi^{r+1}.
Rational integrate(const CohClass& c);

/// (1 + h)^{r+1} (1 + xi) (1 + xi - h)^{r+1} as an unreduced polynomial.
HXPoly total_chern_polynomial(int r);
CohClass total_chern(int r);
/// c_k(X).
CohClass chern_class(int r, int k);

/// integrate(c_{2r}(X) (2h - xi)); equals -(r + 1).
Rational chern_flop_identity(int r);
/// Degree-zero genus-one one-point invariant -(1/24) integrate(c_{2r}(X) alpha).
Rational genus1_degree0(const CohClass& alpha);
/// integrate(c_3 - c_2 c_1) for r = 1.
Rational c3_minus_c2c1(int r);
/// Same number computed from the flop-side presentation h -> xi - h.
Rational c3_minus_c2c1_flop_side(int r);

/// Pairing matrix integrate(e_i e_j) on the monomial basis, in basis order.
std::vector<std::vector<Rational>> pairing_matrix(int r);
/// Basis monomials (a, b) in the order used by pairing_matrix.
std::vector<std::pair<int, int>> basis(int r);

/// Exact determinant by fraction-free elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace flopgw::cohomology
