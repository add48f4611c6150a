#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "flopgw/error.hpp"

namespace flopgw::algebra {

/// Dense univariate polynomial over a field `T`, coefficients stored from
/// the constant term upwards. The zero polynomial has no coefficients.
///
/// `T` must provide value semantics, `T{}` as zero, `T(1)` as one,
/// `is_zero()`, `inverse()` and the four arithmetic operators.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  explicit Poly(T constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
  }

  static Poly monomial(T coeff, std::size_t degree) {
    if (coeff.is_zero()) return Poly();
    std::vector<T> c(degree + 1);
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(T(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T{}; }
  const T& leading() const { return coeffs_.back(); }

  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    return -1;
  }

  /// True when exactly one coefficient is nonzero.
  bool is_monomial() const { return !is_zero() && valuation() == degree(); }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Poly operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const T& s) const {
    if (s.is_zero()) return Poly();
    Poly out = *this;
    for (auto& c : out.coeffs_) c *= s;
    out.trim();
    return out;
  }

  /// Multiplication by x^shift.
  Poly shifted(std::size_t shift) const {
    if (is_zero()) return Poly();
    std::vector<T> out(shift);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(out));
  }

  /// Division by x^shift; requires valuation() >= shift.
  Poly unshifted(std::size_t shift) const {
    if (is_zero()) return Poly();
    if (static_cast<int>(shift) > valuation()) throw DomainError("unshift below valuation");
    return Poly(std::vector<T>(coeffs_.begin() + static_cast<std::ptrdiff_t>(shift), coeffs_.end()));
  }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(), *this};
    std::vector<T> rem = coeffs_;
    std::vector<T> quot(coeffs_.size() - d.coeffs_.size() + 1);
    const T lead_inv = d.leading().inverse();
    for (int k = degree(); k >= d.degree(); --k) {
      const T& top = rem[static_cast<std::size_t>(k)];
      if (top.is_zero()) continue;
      const T factor = top * lead_inv;
      const std::size_t shift = static_cast<std::size_t>(k - d.degree());
      quot[shift] = factor;
      for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[shift + j] -= factor * d.coeffs_[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }

  Poly monic() const {
    if (is_zero()) return Poly();
    return scaled(leading().inverse());
  }

  /// Monic greatest common divisor; gcd(0, 0) = 0.
  friend Poly gcd(Poly a, Poly b) {
    if (a.is_monomial() && b.is_monomial()) {
      const int v = std::min(a.valuation(), b.valuation());
      return monomial(T(1), static_cast<std::size_t>(v));
    }
    while (!b.is_zero()) {
      Poly r = a.divmod(b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<T> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * T(static_cast<long>(k));
    return Poly(std::move(out));
  }

  /// Coefficient sequence reversed to length degree()+1: x^deg p(1/x).
  Poly reversed() const {
    std::vector<T> out(coeffs_.rbegin(), coeffs_.rend());
    return Poly(std::move(out));
  }

  /// p(x^k).
  Poly compose_power(std::size_t k) const {
    if (is_zero()) return Poly();
    std::vector<T> out((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
    return Poly(std::move(out));
  }

  template <class V>
  V evaluate(const V& x) const {
    V acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
    return true;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

}  // namespace flopgw::algebra
