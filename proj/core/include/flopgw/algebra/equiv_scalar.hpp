#pragma once

#include <map>
#include <string>

#include "flopgw/algebra/ratfunc.hpp"

namespace flopgw::algebra {

/// Finite Laurent polynomial in the equivariant weight lambda with
/// RatFunc coefficients. Zero coefficients are never stored.
class EquivScalar {
 public:
  EquivScalar() = default;
  EquivScalar(RatFunc value);  // NOLINT(google-explicit-constructor)
  EquivScalar(long value) : EquivScalar(RatFunc(value)) {}  // NOLINT(google-explicit-constructor)

  /// coeff * lambda^k.
  static EquivScalar lambda_power(long k, RatFunc coeff = RatFunc(1));

  const std::map<long, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(long k) const;
  /// True when exactly one lambda-power is present.
  bool is_monomial() const { return terms_.size() == 1; }
  long min_degree() const;
  long max_degree() const;

  /// Non-equivariant limit lambda -> 0; throws LimitError if a negative power survives.
  RatFunc lambda_limit() const;

  /// delta applied coefficientwise (lambda is q-independent).
  EquivScalar delta() const;

  /// Only lambda-monomials are invertible.
  EquivScalar inverse() const;
  EquivScalar pow(long exponent) const;

  EquivScalar operator-() const;
  EquivScalar& operator+=(const EquivScalar& o);
  EquivScalar& operator-=(const EquivScalar& o);
  EquivScalar& operator*=(const EquivScalar& o);
  EquivScalar& operator/=(const EquivScalar& o) { return *this *= o.inverse(); }
  friend EquivScalar operator+(EquivScalar a, const EquivScalar& b) { return a += b; }
  friend EquivScalar operator-(EquivScalar a, const EquivScalar& b) { return a -= b; }
  friend EquivScalar operator*(const EquivScalar& a, const EquivScalar& b);
  friend EquivScalar operator/(EquivScalar a, const EquivScalar& b) { return a /= b; }

  friend bool operator==(const EquivScalar& a, const EquivScalar& b);

  std::string to_string() const;

 private:
  std::map<long, RatFunc> terms_;
};

}  // namespace flopgw::algebra
