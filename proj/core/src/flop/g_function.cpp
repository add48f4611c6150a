#include "flopgw/flop/g_function.hpp"

#include "flopgw/algebra/calculus.hpp"
#include "flopgw/error.hpp"

namespace flopgw::flop {

using algebra::CycNumber;

int parity_sign(int r) { return r % 2 == 0 ? 1 : -1; }

GFunction g_function(int r) {
  if (r < 1) throw DomainError("r must be at least 1");
  const RatFunc q = RatFunc::q(1);
  return {r, q / (RatFunc(1) - RatFunc(-parity_sign(r)) * q)};
}

RatFunc reflection_sum(int r) {
  const RatFunc g = g_function(r).value;
  return g + g.reciprocal();
}

bool verify_reflection(int r) { return reflection_sum(r) == RatFunc(parity_sign(r)); }

std::vector<Rational> delta_g_polynomial(int r, int m) {
  if (m < 0) throw DomainError("m must be nonnegative");
  // delta p(G) = p'(G) (G + s G^2)
  const Rational s(-parity_sign(r));
  std::vector<Rational> p{Rational(0), Rational(1)};
  for (int step = 0; step < m; ++step) {
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (std::size_t k = 1; k < p.size(); ++k) {
      const Rational d = p[k] * Rational(static_cast<long>(k));
      next[k] += d;
      next[k + 1] += d * s;
    }
    while (!next.empty() && next.back().is_zero()) next.pop_back();
    p = std::move(next);
  }
  return p;
}

RatFunc delta_power_g(int r, int m) {
  if (m < 0) throw DomainError("m must be nonnegative");
  RatFunc f = g_function(r).value;
  for (int k = 0; k < m; ++k) f = f.delta();
  return f;
}

std::vector<Rational> delta_g_polynomial_direct(int r, int m) {
  const auto c = algebra::fit_polynomial_in(delta_power_g(r, m), g_function(r).value, m + 1);
  std::vector<Rational> out;
  for (const auto& x : c) out.push_back(x.to_rational());
  return out;
}

bool reciprocal_antisymmetry(int r, int m) {
  if (m < 1) throw DomainError("m must be at least 1");
  const RatFunc h = delta_power_g(r, m);
  const int sign = (m - 1) % 2 == 0 ? 1 : -1;
  return h.reciprocal() == RatFunc(sign) * h;
}

}  // namespace flopgw::flop
