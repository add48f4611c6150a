#include "flopgw/flop/ring_r.hpp"

#include <sstream>

#include "flopgw/error.hpp"
#include "flopgw/flop/g_function.hpp"

namespace flopgw::flop {

void RingRElement::add(const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  if (std::get<2>(k) < 0) throw DomainError("negative gamma exponent");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RingRElement RingRElement::constant(int r, Rational c) {
  RingRElement out(r);
  out.add({0, 0, 0}, c);
  return out;
}

RingRElement RingRElement::g(int r) {
  RingRElement out(r);
  out.add({1, 0, 0}, Rational(1));
  return out;
}

RingRElement RingRElement::q_power(int r, long a, long b) {
  RingRElement out(r);
  out.add({0, a, b}, Rational(1));
  return out;
}

int RingRElement::g_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, std::get<0>(k));
  return d;
}

RingRElement RingRElement::delta() const {
  const Rational s(-parity_sign(r_));
  RingRElement out(r_);
  for (const auto& [key, c] : terms_) {
    const auto [k, a, b] = key;
    out.add(key, c * Rational(a));
    if (k > 0) {
      out.add({k, a, b}, c * Rational(k));
      out.add({k + 1, a, b}, c * Rational(k) * s);
    }
  }
  return out;
}

algebra::RatFunc RingRElement::to_ratfunc() const {
  const algebra::RatFunc g = g_function(r_).value;
  algebra::RatFunc out;
  for (const auto& [key, c] : terms_) {
    const auto [k, a, b] = key;
    if (b != 0) throw DomainError("q^gamma has no image as a function of q");
    out += algebra::RatFunc(algebra::CycNumber(c)) * g.pow(k) * algebra::RatFunc::w_power(a, 1);
  }
  return out;
}

RingRElement RingRElement::operator-() const {
  RingRElement out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

RingRElement& RingRElement::operator+=(const RingRElement& o) {
  if (o.r_ != r_) throw DomainError("ring elements for different r");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

RingRElement& RingRElement::operator-=(const RingRElement& o) { return *this += -o; }

RingRElement operator*(const RingRElement& a, const RingRElement& b) {
  if (a.r_ != b.r_) throw DomainError("ring elements for different r");
  RingRElement out(a.r_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add({std::get<0>(ka) + std::get<0>(kb), std::get<1>(ka) + std::get<1>(kb), std::get<2>(ka) + std::get<2>(kb)},
              ca * cb);
  return out;
}

RingRElement RingRElement::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative power in the ring");
  RingRElement out = constant(r_, Rational(1));
  for (int k = 0; k < exponent; ++k) out = out * *this;
  return out;
}

std::string RingRElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*G^" << std::get<0>(key) << "*q^(" << std::get<1>(key) << "l+" << std::get<2>(key) << "g)";
  }
  return os.str();
}

RingRElement flop_transform(const RingRElement& x) {
  const int r = x.r();
  const RingRElement image_g = RingRElement::constant(r, Rational(parity_sign(r))) - RingRElement::g(r);
  RingRElement out(r);
  for (const auto& [key, c] : x.terms()) {
    const auto [k, a, b] = key;
    out += RingRElement::constant(r, c) * image_g.pow(k) * RingRElement::q_power(r, b - a, b);
  }
  return out;
}

}  // namespace flopgw::flop
