#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "flopgw/algebra/rational.hpp"

namespace flopgw::algebra {

/// The cyclotomic field Q(zeta_N) presented as Q[x]/Phi_N(x).
///
/// Immutable once built; share it through `std::shared_ptr<const ...>`.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> make(int order);

  int order() const { return order_; }
  /// phi(N), the dimension over Q.
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Phi_N, monic, constant term first.
  const std::vector<Rational>& modulus() const { return modulus_; }
  /// x^k mod Phi_N for 0 <= k < table size (at least max(N, 2 phi - 1)).
  const std::vector<Rational>& power(int k) const { return powers_[static_cast<std::size_t>(k)]; }
  int power_table_size() const { return static_cast<int>(powers_.size()); }

 private:
  explicit CyclotomicField(int order);

  int order_;
  std::vector<Rational> modulus_;
  std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<Rational> cyclotomic_polynomial(int order);

/// Element of Q(zeta_N), stored as coefficients of 1, zeta, ..., zeta^{phi(N)-1}.
/// A null field means the element is rational; such elements combine with any
/// field. Mixed orders are embedded into the field of their lcm.
class CycNumber {
 public:
  CycNumber() : coeffs_{Rational(0)} {}
  CycNumber(long value) : coeffs_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  CycNumber(Rational value) : coeffs_{std::move(value)} {}  // NOLINT(google-explicit-constructor)
  CycNumber(FieldPtr field, std::vector<Rational> coeffs);

  /// zeta_N^k in the given field.
  static CycNumber zeta(const FieldPtr& field, long k);

  const FieldPtr& field() const { return field_; }
  /// Order of the ambient field, 1 for rationals.
  int order() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws DomainError unless is_rational().
  Rational to_rational() const;
  std::complex<double> to_complex() const;

  /// Image under the inclusion Q(zeta_N) -> Q(zeta_M), N | M.
  CycNumber embed(const FieldPtr& target) const;
  /// Galois automorphism zeta -> zeta^k with gcd(k, N) = 1.
  CycNumber galois(long k) const;

  CycNumber inverse() const;
  CycNumber pow(long exponent) const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o) { return *this *= o.inverse(); }
  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }

  friend bool operator==(const CycNumber& a, const CycNumber& b);

  /// "p/q" for rationals, otherwise "[c0,c1,...]@N".
  std::string to_string() const;

 private:
  friend void unify(CycNumber& a, CycNumber& b);

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

/// Brings both operands into a common field.
void unify(CycNumber& a, CycNumber& b);

/// Sum of zeta_N^{k i} for i = 0..N-1.
CycNumber cyc_power_sum(int order, long k);

/// k-th elementary symmetric polynomial of `values` with entry `omit` removed.
CycNumber elementary_symmetric_omitting(const std::vector<CycNumber>& values, std::size_t omit, int k);

/// k-th elementary symmetric polynomial of all `values`.
CycNumber elementary_symmetric(const std::vector<CycNumber>& values, int k);

long lcm_order(long a, long b);

}  // namespace flopgw::algebra
