#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "flopgw/algebra/cyclotomic.hpp"

namespace flopgw::algebra {

/// Truncated series in q1^{1/(r+1)} and q2^{1/(r+2)}.
///
/// The key (a, b) stands for q1^{a/(r+1)} q2^{b/(r+2)}. Truncation is on the
/// q1-numerator: every term with a > order() is dropped. Products stay exact
/// for a <= order() because a is never negative.
class FracSeries {
 public:
  using Exponent = std::pair<long, long>;

  FracSeries(int r, long order);
  static FracSeries constant(int r, long order, CycNumber c);
  /// c * q1^{a/(r+1)} q2^{b/(r+2)}.
  static FracSeries monomial(int r, long order, long a, long b, CycNumber c = CycNumber(1));

  int r() const { return r_; }
  long order() const { return order_; }
  const std::map<Exponent, CycNumber>& terms() const { return terms_; }
  CycNumber coeff(long a, long b) const;
  bool is_zero() const { return terms_.empty(); }

  /// Lowest exponent in (a, b) lexicographic order; throws on zero.
  Exponent leading_exponent() const;

  /// Principal branch evaluation at complex q1, q2.
  std::complex<double> evaluate(std::complex<double> q1, std::complex<double> q2) const;

  FracSeries operator-() const;
  FracSeries& operator+=(const FracSeries& o);
  FracSeries& operator-=(const FracSeries& o);
  FracSeries& operator*=(const FracSeries& o);
  friend FracSeries operator+(FracSeries a, const FracSeries& b) { return a += b; }
  friend FracSeries operator-(FracSeries a, const FracSeries& b) { return a -= b; }
  friend FracSeries operator*(const FracSeries& a, const FracSeries& b);
  FracSeries pow(long exponent) const;

  friend bool operator==(const FracSeries& a, const FracSeries& b);

  std::string to_string() const;

 private:
  void add_term(Exponent e, const CycNumber& c);
  void check_compatible(const FracSeries& o) const;

  int r_;
  long order_;
  std::map<Exponent, CycNumber> terms_;
};

/// (f)^alpha for f = 1 + g, where every term of g has a >= 1, truncated at `order`.
FracSeries binomial_power(const FracSeries& f, const Rational& alpha, long order);

}  // namespace flopgw::algebra
