#include "flopgw/algebra/ratfunc.hpp"

#include <numeric>
#include <sstream>

#include "flopgw/error.hpp"

namespace flopgw::algebra {

namespace {

CPoly constant_poly(const CycNumber& c) { return CPoly(c); }

CPoly galois_poly(const CPoly& p, long k) {
  std::vector<CycNumber> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(x.galois(k));
  return CPoly(std::move(c));
}

}  // namespace

RatFunc::RatFunc(CycNumber constant, int root) : num_(std::move(constant)), den_(CycNumber(1)), root_(root) {
  if (root < 1) throw DomainError("root must be positive");
}

RatFunc::RatFunc(CPoly num, CPoly den, int root) : num_(std::move(num)), den_(std::move(den)), root_(root) {
  if (root < 1) throw DomainError("root must be positive");
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = CPoly(CycNumber(1));
    return;
  }
  const int v = std::min(num_.valuation(), den_.valuation());
  if (v > 0) {
    num_ = num_.unshifted(static_cast<std::size_t>(v));
    den_ = den_.unshifted(static_cast<std::size_t>(v));
  }
  if (den_.degree() > 0 && num_.degree() > 0 && !den_.is_monomial()) {
    CPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  if (!den_.leading().is_one()) {
    const CycNumber inv = den_.leading().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::w_power(long k, int root, CycNumber coeff) {
  if (coeff.is_zero()) return RatFunc(CycNumber(0), root);
  const std::size_t n = static_cast<std::size_t>(k < 0 ? -k : k);
  if (k >= 0) return RatFunc(CPoly::monomial(std::move(coeff), n), CPoly(CycNumber(1)), root);
  return RatFunc(constant_poly(coeff), CPoly::monomial(CycNumber(1), n), root);
}

RatFunc RatFunc::from_laurent(const std::map<long, CycNumber>& terms, int root) {
  long low = 0;
  for (const auto& [e, c] : terms)
    if (!c.is_zero()) low = std::min(low, e);
  std::vector<CycNumber> coeffs;
  for (const auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    const std::size_t idx = static_cast<std::size_t>(e - low);
    if (coeffs.size() <= idx) coeffs.resize(idx + 1);
    coeffs[idx] += c;
  }
  return RatFunc(CPoly(std::move(coeffs)), CPoly::monomial(CycNumber(1), static_cast<std::size_t>(-low)), root);
}

CycNumber RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("rational function is not constant: " + to_string());
  return num_.is_zero() ? CycNumber(0) : num_.coeffs()[0];
}

std::map<long, CycNumber> RatFunc::laurent_terms() const {
  if (!is_laurent()) throw DomainError("not a Laurent polynomial in w: " + to_string());
  std::map<long, CycNumber> out;
  const long shift = den_.degree();
  const auto& c = num_.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) out.emplace(static_cast<long>(k) - shift, c[k]);
  return out;
}

RatFunc RatFunc::with_root(int new_root) const {
  if (new_root == root_) return *this;
  if (new_root % root_ != 0) throw DomainError("new root must be a multiple of the current root");
  const std::size_t k = static_cast<std::size_t>(new_root / root_);
  RatFunc out;
  out.num_ = num_.compose_power(k);
  out.den_ = den_.compose_power(k);
  out.root_ = new_root;
  return out;
}

namespace {

CPoly compress(const CPoly& p, std::size_t k) {
  std::vector<CycNumber> out;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (i % k != 0) throw DomainError("not a function of the coarser root");
    if (out.size() <= i / k) out.resize(i / k + 1);
    out[i / k] = c[i];
  }
  return CPoly(std::move(out));
}

}  // namespace

RatFunc RatFunc::descend_root(int new_root) const {
  if (new_root == root_) return *this;
  if (new_root < 1 || root_ % new_root != 0) throw DomainError("new root must divide the current root");
  const std::size_t k = static_cast<std::size_t>(root_ / new_root);
  RatFunc out;
  out.num_ = compress(num_, k);
  out.den_ = compress(den_, k);
  out.root_ = new_root;
  return out;
}

RatFunc RatFunc::delta() const {
  if (num_.is_zero()) return RatFunc(CycNumber(0), root_);
  CPoly n = (num_.derivative() * den_ - num_ * den_.derivative()).shifted(1);
  CPoly d = (den_ * den_).scaled(CycNumber(Rational(root_)));
  return RatFunc(std::move(n), std::move(d), root_);
}

RatFunc RatFunc::reciprocal() const {
  // num(1/w)/den(1/w) = w^{dd-dn} rev(num)/rev(den).
  const long diff = static_cast<long>(den_.degree()) - static_cast<long>(std::max(num_.degree(), 0));
  CPoly n = num_.reversed();
  CPoly d = den_.reversed();
  if (diff >= 0)
    n = n.shifted(static_cast<std::size_t>(diff));
  else
    d = d.shifted(static_cast<std::size_t>(-diff));
  return RatFunc(std::move(n), std::move(d), root_);
}

CycNumber RatFunc::value_at_zero() const {
  if (den_.coeff(0).is_zero()) throw ExpansionError("pole at w = 0");
  return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::galois(long k) const { return RatFunc(galois_poly(num_, k), galois_poly(den_, k), root_); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RatFunc(den_, num_, root_);
}

RatFunc RatFunc::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RatFunc out(CycNumber(1), root_);
  RatFunc base = *this;
  while (exponent > 0) {
    if (exponent & 1) out *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return out;
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) {
    return *this;
  }
  if (root_ != o.root_) {
    const int m = std::lcm(root_, o.root_);
    *this = with_root(m);
    return *this += o.with_root(m);
  }
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (root_ != o.root_) {
    const int m = std::lcm(root_, o.root_);
    *this = with_root(m);
    return *this *= o.with_root(m);
  }
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc(CycNumber(0), root_);
  if (o.is_constant()) {
    num_ = num_.scaled(o.num_.coeffs()[0]);
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.root_ != b.root_) {
    const int m = std::lcm(a.root_, b.root_);
    return a.with_root(m) == b.with_root(m);
  }
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string poly_to_string(const CPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c[k].to_string() << ')';
    if (k == 1) os << '*' << var;
    if (k > 1) os << '*' << var << '^' << k;
  }
  return os.str();
}

std::string RatFunc::to_string() const {
  std::string s = poly_to_string(num_);
  if (!(den_.degree() == 0)) s = "[" + s + "]/[" + poly_to_string(den_) + "]";
  if (root_ != 1) s += " {w^" + std::to_string(root_) + "=q}";
  return s;
}

}  // namespace flopgw::algebra
