#pragma once

#include <map>
#include <string>
#include <tuple>

#include "flopgw/algebra/ratfunc.hpp"

namespace flopgw::flop {

using algebra::Rational;

/// Element of the ring generated over Q[NE] by the free symbol G.
///
/// The key (k, a, b) stands for G^k q^{a l + b gamma}; a may be negative
/// (localized in q^l), b >= 0. G is only tied to q by to_ratfunc().
class RingRElement {
 public:
  using Key = std::tuple<int, long, long>;

  explicit RingRElement(int r) : r_(r) {}
  static RingRElement constant(int r, Rational c);
  static RingRElement g(int r);
  /// q^{a l + b gamma}.
  static RingRElement q_power(int r, long a, long b = 0);

  int r() const { return r_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest G-degree present; -1 for zero.
  int g_degree() const;

  /// delta = q^l d/dq^l with delta G = G + (-1)^{r+1} G^2.
  RingRElement delta() const;
  /// Substitutes G = q/(1 - (-1)^{r+1} q); only terms with b = 0 are allowed.
  algebra::RatFunc to_ratfunc() const;

  RingRElement operator-() const;
  RingRElement& operator+=(const RingRElement& o);
  RingRElement& operator-=(const RingRElement& o);
  friend RingRElement operator+(RingRElement a, const RingRElement& b) { return a += b; }
  friend RingRElement operator-(RingRElement a, const RingRElement& b) { return a -= b; }
  friend RingRElement operator*(const RingRElement& a, const RingRElement& b);
  friend bool operator==(const RingRElement& a, const RingRElement& b) {
    return a.r_ == b.r_ && a.terms_ == b.terms_;
  }
  RingRElement pow(int exponent) const;

  std::string to_string() const;

 private:
  void add(const Key& k, const Rational& c);
  int r_;
  std::map<Key, Rational> terms_;
};

/// G -> (-1)^r - G, q^{a l + b gamma} -> q^{(b - a) l + b gamma}.
RingRElement flop_transform(const RingRElement& x);

}  // namespace flopgw::flop
