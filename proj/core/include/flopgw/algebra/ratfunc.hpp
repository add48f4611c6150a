#pragma once

#include <map>
#include <string>

#include "flopgw/algebra/cyclotomic.hpp"
#include "flopgw/algebra/polynomial.hpp"

namespace flopgw::algebra {

using CPoly = Poly<CycNumber>;

/// Rational function num(w)/den(w) over cyclotomic coefficients, where w is
/// a formal root of the Novikov variable: w^root = q.
///
/// Always reduced: gcd(num, den) = 1, den monic, zero stored as 0/1.
/// Operands with different roots are lifted to the lcm of their roots.
class RatFunc {
 public:
  RatFunc() : den_(CycNumber(1)) {}
  RatFunc(CycNumber constant, int root = 1);  // NOLINT(google-explicit-constructor)
  RatFunc(long constant) : RatFunc(CycNumber(constant)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(CPoly num, CPoly den, int root);

  /// coeff * w^k, k may be negative.
  static RatFunc w_power(long k, int root, CycNumber coeff = CycNumber(1));
  /// q = w^root.
  static RatFunc q(int root) { return w_power(root, root); }
  /// Finite Laurent polynomial from exponent -> coefficient.
  static RatFunc from_laurent(const std::map<long, CycNumber>& terms, int root);

  int root() const { return root_; }
  const CPoly& num() const { return num_; }
  const CPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  /// Constant value; throws DomainError otherwise.
  CycNumber constant_value() const;
  /// True when the denominator is a power of w.
  bool is_laurent() const { return den_.is_monomial(); }
  /// Exponent -> coefficient; throws DomainError unless is_laurent().
  std::map<long, CycNumber> laurent_terms() const;

  /// Same function written in w' with w'^new_root = q; new_root must be a multiple of root().
  RatFunc with_root(int new_root) const;
  /// Inverse of with_root: rewrites in w' with w'^new_root = q, where new_root
  /// divides root(). Throws DomainError if f is not a function of w'.
  RatFunc descend_root(int new_root) const;

  /// q d/dq = (w/root) d/dw.
  RatFunc delta() const;
  /// q -> 1/q, i.e. w -> 1/w.
  RatFunc reciprocal() const;
  /// Value at w = 0; throws ExpansionError on a pole.
  CycNumber value_at_zero() const;
  /// Galois action on every coefficient.
  RatFunc galois(long k) const;

  RatFunc inverse() const;
  RatFunc pow(long exponent) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  /// Exact equality by cross multiplication.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  std::string to_string() const;

 private:
  void normalize();

  CPoly num_;
  CPoly den_;
  int root_ = 1;
};

/// Poly<CycNumber> rendered as "c0 + c1*w + ...".
std::string poly_to_string(const CPoly& p, const std::string& var = "w");

}  // namespace flopgw::algebra
