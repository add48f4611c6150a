#include "flopgw/algebra/frac_series.hpp"

#include <sstream>

#include "flopgw/error.hpp"

namespace flopgw::algebra {

FracSeries::FracSeries(int r, long order) : r_(r), order_(order) {
  if (r < 1) throw DomainError("FracSeries requires r >= 1");
  if (order < 0) throw DomainError("truncation order must be nonnegative");
}

FracSeries FracSeries::constant(int r, long order, CycNumber c) { return monomial(r, order, 0, 0, std::move(c)); }

FracSeries FracSeries::monomial(int r, long order, long a, long b, CycNumber c) {
  if (a < 0 || b < 0) throw DomainError("FracSeries exponents must be nonnegative");
  FracSeries out(r, order);
  out.add_term({a, b}, c);
  return out;
}

void FracSeries::add_term(Exponent e, const CycNumber& c) {
  if (e.first > order_ || c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void FracSeries::check_compatible(const FracSeries& o) const {
  if (r_ != o.r_) throw DomainError("FracSeries with different r");
}

CycNumber FracSeries::coeff(long a, long b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? CycNumber(0) : it->second;
}

FracSeries::Exponent FracSeries::leading_exponent() const {
  if (terms_.empty()) throw DomainError("leading exponent of zero series");
  return terms_.begin()->first;
}

std::complex<double> FracSeries::evaluate(std::complex<double> q1, std::complex<double> q2) const {
  const std::complex<double> u = std::pow(q1, 1.0 / (r_ + 1));
  const std::complex<double> v = std::pow(q2, 1.0 / (r_ + 2));
  std::complex<double> out{0.0, 0.0};
  for (const auto& [e, c] : terms_)
    out += c.to_complex() * std::pow(u, static_cast<double>(e.first)) * std::pow(v, static_cast<double>(e.second));
  return out;
}

FracSeries FracSeries::operator-() const {
  FracSeries out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

FracSeries& FracSeries::operator+=(const FracSeries& o) {
  check_compatible(o);
  order_ = std::min(order_, o.order_);
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->first.first > order_ ? terms_.erase(it) : std::next(it);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

FracSeries& FracSeries::operator-=(const FracSeries& o) { return *this += -o; }

FracSeries operator*(const FracSeries& a, const FracSeries& b) {
  a.check_compatible(b);
  FracSeries out(a.r_, std::min(a.order_, b.order_));
  for (const auto& [ea, ca] : a.terms_) {
    if (ea.first > out.order_) break;
    for (const auto& [eb, cb] : b.terms_) {
      if (ea.first + eb.first > out.order_) break;
      out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return out;
}

FracSeries& FracSeries::operator*=(const FracSeries& o) { return *this = *this * o; }

FracSeries FracSeries::pow(long exponent) const {
  if (exponent < 0) throw DomainError("negative power of FracSeries");
  FracSeries out = constant(r_, order_, CycNumber(1));
  FracSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1) out *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return out;
}

bool operator==(const FracSeries& a, const FracSeries& b) {
  if (a.r_ != b.r_) return false;
  const long order = std::min(a.order_, b.order_);
  FracSeries diff(a.r_, order);
  diff += a;
  diff -= b;
  return diff.is_zero();
}

std::string FracSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*q1^(" << e.first << '/' << r_ + 1 << ")*q2^(" << e.second << '/' << r_ + 2
       << ')';
  }
  return os.str();
}

FracSeries binomial_power(const FracSeries& f, const Rational& alpha, long order) {
  const long ord = std::min(order, f.order());
  FracSeries g(f.r(), ord);
  for (const auto& [e, c] : f.terms()) {
    if (e.first == 0 && e.second == 0) {
      if (!c.is_one()) throw ExpansionError("binomial_power needs constant term 1");
      continue;
    }
    if (e.first < 1) throw ExpansionError("binomial_power needs every non-constant term to carry q1");
    g += FracSeries::monomial(f.r(), ord, e.first, e.second, c);
  }
  if (f.coeff(0, 0).is_zero()) throw ExpansionError("binomial_power needs constant term 1");
  // Each power of g raises the q1-numerator by at least one.
  FracSeries out = FracSeries::constant(f.r(), ord, CycNumber(1));
  FracSeries gk = FracSeries::constant(f.r(), ord, CycNumber(1));
  for (long k = 1; k <= ord; ++k) {
    gk *= g;
    if (gk.is_zero()) break;
    const Rational b = binomial(alpha, k);
    if (b.is_zero()) break;
    for (const auto& [e, c] : gk.terms()) out += FracSeries::monomial(f.r(), ord, e.first, e.second, c * CycNumber(b));
  }
  return out;
}

}  // namespace flopgw::algebra
