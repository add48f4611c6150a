#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flopgw/algebra/rational.hpp"

namespace flopgw::batyrev {

using algebra::Rational;

/// Polynomial in q1, q2: (i, j) -> coefficient of q1^i q2^j.
using Poly2 = std::map<std::pair<int, int>, Rational>;

/// Element num / D^k of Q[q1, q2][1/D], D = 1 + (-1)^r q1.
/// Kept with the smallest k.
class LocPoly {
 public:
  LocPoly() = default;
  LocPoly(int r, Poly2 num, int dpow = 0);
  static LocPoly constant(int r, Rational c);
  static LocPoly monomial(int r, int i, int j, Rational c = Rational(1));

  int r() const { return r_; }
  const Poly2& numerator() const { return num_; }
  int denominator_power() const { return dpow_; }
  bool is_zero() const { return num_.empty(); }
  bool is_polynomial() const { return dpow_ == 0; }

  std::complex<double> evaluate(std::complex<double> q1, std::complex<double> q2) const;

  LocPoly operator-() const;
  LocPoly& operator+=(const LocPoly& o);
  LocPoly& operator-=(const LocPoly& o);
  friend LocPoly operator+(LocPoly a, const LocPoly& b) { return a += b; }
  friend LocPoly operator-(LocPoly a, const LocPoly& b) { return a -= b; }
  friend LocPoly operator*(const LocPoly& a, const LocPoly& b);
  friend bool operator==(const LocPoly& a, const LocPoly& b);

  std::string to_string() const;

 private:
  void normalize();
  int r_ = 1;
  Poly2 num_;
  int dpow_ = 0;
};

/// (r+1)(r+2) basis monomials h^a y^b with y = xi - h, 0 <= a <= r, 0 <= b <= r+1.
std::vector<std::pair<int, int>> ring_basis(int r);

/// Element of the quantum ring on the basis h^a y^b.
using QRingElement = std::map<std::pair<int, int>, LocPoly>;

/// Normal form of h^a y^b under h^{r+1} = q1 y^{r+1} and xi y^{r+1} = q2.
QRingElement reduce_monomial(int r, int a, int b);

enum class Divisor { h, xi };

using LocMatrix = std::vector<std::vector<LocPoly>>;

/// Column k holds d * (basis element k) on the basis.
LocMatrix quantum_mult_matrix(int r, Divisor d);

LocMatrix mat_mul(const LocMatrix& a, const LocMatrix& b);
bool mat_is_zero(const LocMatrix& m);
/// Specialization q1 = q2 = 0 (all entries must be polynomial there).
LocMatrix classical_limit(const LocMatrix& m);
/// Exact determinant by expansion over column subsets; practical up to size ~12.
LocPoly determinant(const LocMatrix& m);

std::vector<std::vector<std::complex<double>>> evaluate(const LocMatrix& m, std::complex<double> q1,
                                                        std::complex<double> q2);

}  // namespace flopgw::batyrev
