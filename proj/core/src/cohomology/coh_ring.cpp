#include "flopgw/cohomology/coh_ring.hpp"

#include <sstream>

#include "flopgw/error.hpp"

namespace flopgw::cohomology {

namespace {

void add_to(HXPoly& p, std::pair<int, int> e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

void check_r(int r) {
  if (r < 1) throw DomainError("r must be at least 1");
}

}  // namespace

HXPoly hx_add(const HXPoly& a, const HXPoly& b, const Rational& scale) {
  HXPoly out = a;
  for (const auto& [e, c] : b) add_to(out, e, c * scale);
  return out;
}

HXPoly hx_mul(const HXPoly& a, const HXPoly& b) {
  HXPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_to(out, {ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

HXPoly hx_pow(const HXPoly& a, int exponent) {
  HXPoly out{{{0, 0}, Rational(1)}};
  for (int k = 0; k < exponent; ++k) out = hx_mul(out, a);
  return out;
}

HXPoly hx_degree(const HXPoly& a, int k) {
  HXPoly out;
  for (const auto& [e, c] : a)
    if (e.first + e.second == k) out.emplace(e, c);
  return out;
}

HXPoly hx_flop_substitute(const HXPoly& a) {
  const HXPoly xi_minus_h{{{0, 1}, Rational(1)}, {{1, 0}, Rational(-1)}};
  HXPoly out;
  for (const auto& [e, c] : a) {
    HXPoly term = hx_mul(hx_pow(xi_minus_h, e.first), HXPoly{{{0, e.second}, c}});
    out = hx_add(out, term);
  }
  return out;
}

CohClass reduce(int r, const HXPoly& p) {
  check_r(r);
  CohClass out(r);
  HXPoly work = p;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    const auto [e, c] = *it;
    work.erase(it);
    const auto [a, b] = e;
    if (a < 0 || b < 0) throw DomainError("negative exponent in cohomology polynomial");
    if (a > r) continue;
    if (b <= r + 1) {
      add_to(out.coeffs_, e, c);
      continue;
    }
    // xi^{r+2} = -sum_{k>=1} C(r+1, k) (-h)^k xi^{r+2-k}
    for (int k = 1; k <= r + 1; ++k) {
      const Rational coef = -c * algebra::binomial(r + 1, k) * Rational(k % 2 ? -1 : 1);
      add_to(work, {a + k, b - k}, coef);
    }
  }
  return out;
}

CohClass CohClass::one(int r) { return monomial(r, 0, 0); }
CohClass CohClass::h(int r) { return monomial(r, 1, 0); }
CohClass CohClass::xi(int r) { return monomial(r, 0, 1); }

CohClass CohClass::monomial(int r, int a, int b, Rational c) { return reduce(r, HXPoly{{{a, b}, std::move(c)}}); }

Rational CohClass::coeff(int a, int b) const {
  auto it = coeffs_.find({a, b});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

CohClass CohClass::degree_part(int k) const {
  CohClass out(r_);
  out.coeffs_ = hx_degree(coeffs_, k);
  return out;
}

CohClass CohClass::operator-() const {
  CohClass out = *this;
  for (auto& [e, c] : out.coeffs_) c = -c;
  return out;
}

CohClass& CohClass::operator+=(const CohClass& o) {
  if (o.r_ != r_) throw DomainError("cohomology classes for different r");
  coeffs_ = hx_add(coeffs_, o.coeffs_);
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
  if (o.r_ != r_) throw DomainError("cohomology classes for different r");
  coeffs_ = hx_add(coeffs_, o.coeffs_, Rational(-1));
  return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b) {
  if (a.r_ != b.r_) throw DomainError("cohomology classes for different r");
  return reduce(a.r_, hx_mul(a.coeffs_, b.coeffs_));
}

CohClass operator*(const Rational& s, CohClass a) {
  if (s.is_zero()) return CohClass(a.r_);
  for (auto& [e, c] : a.coeffs_) c *= s;
  return a;
}

std::string CohClass::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*h^" << e.first << "*xi^" << e.second;
  }
  return os.str();
}

Rational integrate(const CohClass& c) { return c.coeff(c.r(), c.r() + 1); }

HXPoly total_chern_polynomial(int r) {
  check_r(r);
  const HXPoly one_h{{{0, 0}, Rational(1)}, {{1, 0}, Rational(1)}};
  const HXPoly one_xi{{{0, 0}, Rational(1)}, {{0, 1}, Rational(1)}};
  const HXPoly one_xi_h{{{0, 0}, Rational(1)}, {{0, 1}, Rational(1)}, {{1, 0}, Rational(-1)}};
  return hx_mul(hx_mul(hx_pow(one_h, r + 1), one_xi), hx_pow(one_xi_h, r + 1));
}

CohClass total_chern(int r) { return reduce(r, total_chern_polynomial(r)); }

CohClass chern_class(int r, int k) { return reduce(r, hx_degree(total_chern_polynomial(r), k)); }

Rational chern_flop_identity(int r) {
  const CohClass alpha = Rational(2) * CohClass::h(r) - CohClass::xi(r);
  return integrate(chern_class(r, 2 * r) * alpha);
}

Rational genus1_degree0(const CohClass& alpha) {
  return Rational(-1, 24) * integrate(chern_class(alpha.r(), 2 * alpha.r()) * alpha);
}

namespace {

Rational c3_c2c1_from(const HXPoly& total, int r) {
  const HXPoly c1 = hx_degree(total, 1);
  const HXPoly c2 = hx_degree(total, 2);
  const HXPoly c3 = hx_degree(total, 3);
  return integrate(reduce(r, hx_add(c3, hx_mul(c2, c1), Rational(-1))));
}

}  // namespace

Rational c3_minus_c2c1(int r) {
  if (r != 1) throw DomainError("c3 - c2 c1 is defined for the threefold case r = 1 only");
  return c3_c2c1_from(total_chern_polynomial(r), r);
}

Rational c3_minus_c2c1_flop_side(int r) {
  if (r != 1) throw DomainError("c3 - c2 c1 is defined for the threefold case r = 1 only");
  return c3_c2c1_from(hx_flop_substitute(total_chern_polynomial(r)), r);
}

std::vector<std::pair<int, int>> basis(int r) {
  check_r(r);
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= r; ++a)
    for (int b = 0; b <= r + 1; ++b) out.emplace_back(a, b);
  return out;
}

std::vector<std::vector<Rational>> pairing_matrix(int r) {
  const auto B = basis(r);
  std::vector<std::vector<Rational>> m(B.size(), std::vector<Rational>(B.size()));
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j)
      m[i][j] = integrate(CohClass::monomial(r, B[i].first + B[j].first, B[i].second + B[j].second));
  return m;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = m[col][col].inverse();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      const Rational f = m[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

}  // namespace flopgw::cohomology
