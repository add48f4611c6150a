#include "flopgw/algebra/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "flopgw/algebra/polynomial.hpp"
#include "flopgw/error.hpp"

namespace flopgw::algebra {

namespace {

using QPoly = Poly<Rational>;

QPoly cyclotomic_poly(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[0] = Rational(-1);
  c[static_cast<std::size_t>(n)] = Rational(1);
  QPoly out(std::move(c));
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = out.divmod(cyclotomic_poly(d));
    if (!r.is_zero()) throw Error("cyclotomic polynomial division left a remainder");
    out = q;
  }
  return out;
}

long mod(long a, long n) {
  const long m = a % n;
  return m < 0 ? m + n : m;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int order) {
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  return cyclotomic_poly(order).coeffs();
}

CyclotomicField::CyclotomicField(int order) : order_(order) {
  modulus_ = cyclotomic_polynomial(order);
  const int phi = degree();
  const int table = std::max(order, 2 * phi - 1) + 1;
  powers_.reserve(static_cast<std::size_t>(table));
  std::vector<Rational> cur(static_cast<std::size_t>(phi), Rational(0));
  cur[0] = Rational(1);
  for (int k = 0; k < table; ++k) {
    powers_.push_back(cur);
    // Multiply by x and reduce with the monic modulus.
    std::vector<Rational> next(static_cast<std::size_t>(phi), Rational(0));
    const Rational top = cur[static_cast<std::size_t>(phi - 1)];
    for (int j = phi - 1; j >= 1; --j) next[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
    if (!top.is_zero())
      for (int j = 0; j < phi; ++j) next[static_cast<std::size_t>(j)] -= top * modulus_[static_cast<std::size_t>(j)];
    cur = std::move(next);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(int order) {
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  return std::shared_ptr<const CyclotomicField>(new CyclotomicField(order));
}

CycNumber::CycNumber(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  const std::size_t phi = field_ ? static_cast<std::size_t>(field_->degree()) : 1;
  if (coeffs_.size() > phi) {
    // Reduce an over-long coefficient vector.
    std::vector<Rational> out(phi, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      if (!field_) throw DomainError("rational CycNumber takes a single coefficient");
      if (static_cast<int>(k) >= field_->power_table_size())
        throw DomainError("coefficient vector too long for reduction");
      const auto& p = field_->power(static_cast<int>(k));
      for (std::size_t j = 0; j < phi; ++j) out[j] += coeffs_[k] * p[j];
    }
    coeffs_ = std::move(out);
  }
  coeffs_.resize(phi, Rational(0));
  if (field_ && field_->order() <= 2) {
    // Q(zeta_1) = Q(zeta_2) = Q: collapse to the rational representation.
    field_.reset();
  }
}

CycNumber CycNumber::zeta(const FieldPtr& field, long k) {
  if (!field) throw DomainError("zeta requires a field");
  const int e = static_cast<int>(mod(k, field->order()));
  return CycNumber(field, field->power(e));
}

int CycNumber::order() const { return field_ ? field_->order() : 1; }

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

bool CycNumber::is_one() const { return is_rational() && coeffs_[0].is_one(); }

Rational CycNumber::to_rational() const {
  if (!is_rational()) throw DomainError("cyclotomic number " + to_string() + " is not rational");
  return coeffs_[0];
}

std::complex<double> CycNumber::to_complex() const {
  std::complex<double> out{0.0, 0.0};
  const double n = order();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    out += coeffs_[k].to_double() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n);
  }
  return out;
}

CycNumber CycNumber::embed(const FieldPtr& target) const {
  if (!target) {
    if (!is_rational()) throw DomainError("cannot embed into Q");
    return CycNumber(coeffs_[0]);
  }
  if (target->order() % order() != 0) throw DomainError("embedding requires N | M");
  if (!field_) return CycNumber(target, {coeffs_[0]});
  const long step = target->order() / order();
  std::vector<Rational> out(static_cast<std::size_t>(target->degree()), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const auto& p = target->power(static_cast<int>(static_cast<long>(k) * step % target->order()));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs_[k] * p[j];
  }
  return CycNumber(target, std::move(out));
}

CycNumber CycNumber::galois(long k) const {
  if (!field_) return *this;
  const long n = field_->order();
  if (std::gcd(mod(k, n), n) != 1) throw DomainError("galois exponent must be a unit mod N");
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const auto& p = field_->power(static_cast<int>(mod(static_cast<long>(j) * k, n)));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeffs_[j] * p[i];
  }
  return CycNumber(field_, std::move(out));
}

long lcm_order(long a, long b) { return std::lcm(a, b); }

void unify(CycNumber& a, CycNumber& b) {
  if (a.order() == b.order()) {
    if (!a.field_ && b.field_) a = a.embed(b.field_);
    return;
  }
  if (!a.field_) {
    a = a.embed(b.field_);
    return;
  }
  if (!b.field_) {
    b = b.embed(a.field_);
    return;
  }
  if (a.order() % b.order() == 0) {
    b = b.embed(a.field_);
  } else if (b.order() % a.order() == 0) {
    a = a.embed(b.field_);
  } else {
    auto target = CyclotomicField::make(static_cast<int>(lcm_order(a.order(), b.order())));
    a = a.embed(target);
    b = b.embed(target);
  }
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  if (order() == o.order() && (field_ || !o.field_)) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  CycNumber rhs = o;
  unify(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  if (!o.field_) {
    if (o.coeffs_[0].is_one()) return *this;
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (!field_) {
    const Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  CycNumber rhs = o;
  if (order() != o.order()) unify(*this, rhs);
  const std::size_t phi = coeffs_.size();
  std::vector<Rational> prod(2 * phi - 1, Rational(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(phi));
  for (std::size_t k = phi; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    const auto& p = field_->power(static_cast<int>(k));
    for (std::size_t j = 0; j < phi; ++j) out[j] += prod[k] * p[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  if (!field_) return CycNumber(coeffs_[0].inverse());
  // Extended Euclid: s * a + t * Phi = 1.
  QPoly a(coeffs_);
  QPoly m(field_->modulus());
  QPoly s0(Rational(1)), s1;
  QPoly r0 = a, r1 = m;
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    QPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw DivisionByZero("element is not invertible modulo Phi_N");
  QPoly inv = s0.scaled(r0.leading().inverse());
  std::vector<Rational> c = inv.coeffs();
  return CycNumber(field_, std::move(c));
}

CycNumber CycNumber::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycNumber base = *this;
  CycNumber out(1);
  while (exponent > 0) {
    if (exponent & 1) out *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return out;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.order() == b.order()) {
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
    return true;
  }
  CycNumber x = a, y = b;
  unify(x, y);
  return x.coeffs_ == y.coeffs_;
}

std::string CycNumber::to_string() const {
  if (is_rational()) return coeffs_[0].to_short_string();
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ',';
    os << coeffs_[k].to_short_string();
  }
  os << "]@" << order();
  return os.str();
}

CycNumber cyc_power_sum(int order, long k) {
  if (order < 1) throw DomainError("cyc_power_sum requires N >= 1");
  auto field = CyclotomicField::make(order);
  CycNumber out;
  for (long i = 0; i < order; ++i) out += CycNumber::zeta(field, k * i);
  return out;
}

CycNumber elementary_symmetric(const std::vector<CycNumber>& values, int k) {
  if (k < 0) return CycNumber(0);
  // e_0..e_k by the usual product recurrence.
  std::vector<CycNumber> e(static_cast<std::size_t>(k) + 1, CycNumber(0));
  e[0] = CycNumber(1);
  for (const auto& v : values)
    for (int j = k; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * v;
  return e[static_cast<std::size_t>(k)];
}

CycNumber elementary_symmetric_omitting(const std::vector<CycNumber>& values, std::size_t omit, int k) {
  if (omit >= values.size()) throw DomainError("omitted index out of range");
  if (k < 0 || k > static_cast<int>(values.size()) - 1) throw DomainError("k out of range");
  std::vector<CycNumber> rest;
  rest.reserve(values.size() - 1);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (i != omit) rest.push_back(values[i]);
  return elementary_symmetric(rest, k);
}

}  // namespace flopgw::algebra
