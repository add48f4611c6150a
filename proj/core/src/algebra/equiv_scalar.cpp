#include "flopgw/algebra/equiv_scalar.hpp"

#include <sstream>

#include "flopgw/error.hpp"

namespace flopgw::algebra {

EquivScalar::EquivScalar(RatFunc value) {
  if (!value.is_zero()) terms_.emplace(0, std::move(value));
}

EquivScalar EquivScalar::lambda_power(long k, RatFunc coeff) {
  EquivScalar out;
  if (!coeff.is_zero()) out.terms_.emplace(k, std::move(coeff));
  return out;
}

RatFunc EquivScalar::coeff(long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? RatFunc() : it->second;
}

long EquivScalar::min_degree() const {
  if (terms_.empty()) throw DomainError("degree of zero");
  return terms_.begin()->first;
}

long EquivScalar::max_degree() const {
  if (terms_.empty()) throw DomainError("degree of zero");
  return terms_.rbegin()->first;
}

RatFunc EquivScalar::lambda_limit() const {
  if (!terms_.empty() && terms_.begin()->first < 0)
    throw LimitError("lambda^" + std::to_string(terms_.begin()->first) + " survives the non-equivariant limit");
  return coeff(0);
}

EquivScalar EquivScalar::delta() const {
  EquivScalar out;
  for (const auto& [k, c] : terms_) {
    RatFunc d = c.delta();
    if (!d.is_zero()) out.terms_.emplace(k, std::move(d));
  }
  return out;
}

EquivScalar EquivScalar::inverse() const {
  if (terms_.size() != 1) throw DomainError("only lambda-monomials are invertible: " + to_string());
  const auto& [k, c] = *terms_.begin();
  return lambda_power(-k, c.inverse());
}

EquivScalar EquivScalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  EquivScalar out(1);
  EquivScalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) out *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return out;
}

EquivScalar EquivScalar::operator-() const {
  EquivScalar out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

EquivScalar& EquivScalar::operator+=(const EquivScalar& o) {
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      continue;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

EquivScalar& EquivScalar::operator-=(const EquivScalar& o) { return *this += -o; }

EquivScalar operator*(const EquivScalar& a, const EquivScalar& b) {
  EquivScalar out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out += EquivScalar::lambda_power(ka + kb, ca * cb);
  return out;
}

EquivScalar& EquivScalar::operator*=(const EquivScalar& o) { return *this = *this * o; }

bool operator==(const EquivScalar& a, const EquivScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

std::string EquivScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '{' << c.to_string() << "}*lambda^" << k;
  }
  return os.str();
}

}  // namespace flopgw::algebra
