#include "flopgw/algebra/calculus.hpp"

#include "flopgw/error.hpp"

namespace flopgw::algebra {

RatFunc integrate_in_t(const RatFunc& f, IntegrationMode mode) {
  if (!f.is_laurent()) throw DomainError("integrate_in_t needs a Laurent polynomial in w");
  std::map<long, CycNumber> out;
  for (const auto& [a, c] : f.laurent_terms()) {
    if (a == 0) {
      if (mode == IntegrationMode::strict)
        throw NonIntegrableConstant("nonzero constant term " + c.to_string() + " cannot be integrated in t");
      continue;
    }
    out.emplace(a, c * CycNumber(Rational(f.root(), a)));
  }
  return RatFunc::from_laurent(out, f.root());
}

std::vector<CycNumber> series_expand(const RatFunc& f, long order) {
  if (order < 0) throw DomainError("negative expansion order");
  const auto& d = f.den();
  if (d.coeff(0).is_zero()) throw ExpansionError("pole at w = 0: " + f.to_string());
  const CycNumber d0inv = d.coeff(0).inverse();
  std::vector<CycNumber> s(static_cast<std::size_t>(order) + 1);
  // d * s = n, solved term by term.
  for (long k = 0; k <= order; ++k) {
    CycNumber acc = f.num().coeff(static_cast<std::size_t>(k));
    for (long j = 1; j <= k && j <= d.degree(); ++j)
      acc -= d.coeff(static_cast<std::size_t>(j)) * s[static_cast<std::size_t>(k - j)];
    s[static_cast<std::size_t>(k)] = acc * d0inv;
  }
  return s;
}

std::vector<CycNumber> fit_polynomial_in(const RatFunc& f, const RatFunc& g, long max_degree) {
  if (g.is_zero() || !g.value_at_zero().is_zero()) throw DomainError("fit basis must vanish at w = 0");
  std::vector<CycNumber> out;
  RatFunc rest = f;
  for (long k = 0; k <= max_degree && !rest.is_zero(); ++k) {
    if (rest.den().coeff(0).is_zero()) throw DomainError("not a polynomial in the basis: pole at w = 0");
    const CycNumber c = rest.value_at_zero();
    out.push_back(c);
    rest = (rest - RatFunc(c, f.root())) / g;
  }
  if (!rest.is_zero()) throw DomainError("not a polynomial of degree <= " + std::to_string(max_degree) + " in the basis");
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

RatFunc evaluate_polynomial_in(const std::vector<CycNumber>& coeffs, const RatFunc& g) {
  RatFunc acc(CycNumber(0), g.root());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * g + RatFunc(*it, g.root());
  return acc;
}

}  // namespace flopgw::algebra
