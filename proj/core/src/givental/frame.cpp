#include "flopgw/givental/frame.hpp"

#include "flopgw/algebra/cyclotomic.hpp"
#include "flopgw/error.hpp"

namespace flopgw::givental {

using algebra::CyclotomicField;

CycNumber Context::zeta(long k) const { return CycNumber::zeta(field, k); }

RatFunc Context::g() const { return q() / (constant(CycNumber(1)) + q() * constant(CycNumber(sign()))); }

Context make_context(int r) {
  if (r < 1) throw DomainError("r must be at least 1");
  return Context{r, r + 1, CyclotomicField::make(2 * (r + 1))};
}

CanonicalFrame build_spectrum(int r) {
  CanonicalFrame f{make_context(r), {}, {}, {}, {}, {}};
  const Context& ctx = f.ctx;
  for (int i = 0; i <= r; ++i) {
    RatFunc c = ctx.w(-1, CycNumber(ctx.sign()) * ctx.xi(i));
    RatFunc a = ctx.constant(CycNumber(1)) + c;
    f.p.push_back(EquivScalar::lambda_power(1, a.inverse()));
    f.c.push_back(std::move(c));
    f.a.push_back(std::move(a));
  }
  return f;
}

EquivScalar charpoly_residual(const CanonicalFrame& f, int i) {
  const auto& ctx = f.ctx;
  const EquivScalar& p = f.p.at(static_cast<std::size_t>(i));
  return EquivScalar(ctx.q()) * (ctx.lambda() - p).pow(ctx.m) - p.pow(ctx.m);
}

std::vector<RatFunc> charpoly_coefficients(const CanonicalFrame& f) {
  const int n = f.ctx.m;
  std::vector<EquivScalar> e(static_cast<std::size_t>(n) + 1);
  e[0] = EquivScalar(f.ctx.constant(CycNumber(1)));
  for (const auto& p : f.p)
    for (int k = n; k >= 1; --k) e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k - 1)] * p;
  std::vector<RatFunc> out;
  for (int k = 0; k <= n; ++k) {
    const EquivScalar& ek = e[static_cast<std::size_t>(k)];
    for (const auto& [deg, c] : ek.terms())
      if (deg != k) throw VerificationFailure("e_k is not homogeneous of lambda-degree k");
    out.push_back(ek.coeff(k));
  }
  return out;
}

std::vector<RatFunc> charpoly_coefficients_closed_form(const Context& ctx) {
  std::vector<RatFunc> out{ctx.constant(CycNumber(1))};
  for (int k = 1; k <= ctx.m; ++k)
    out.push_back(ctx.constant(CycNumber(Rational(ctx.sign()) * algebra::binomial(ctx.m, k))) * ctx.g());
  return out;
}

EquivScalar equiv_pairing(const Context& ctx, int k, int l) {
  if (k < 0 || l < 0) throw DomainError("pairing exponents must be nonnegative");
  const int d = k + l;
  if (d > ctx.r) return EquivScalar();
  const Rational c = algebra::binomial(2 * ctx.r - d, ctx.r - d);
  return EquivScalar::lambda_power(-(2 * ctx.r + 1 - d), ctx.constant(CycNumber(c)));
}

EquivScalar pair(const Context& ctx, const PPoly& f, const PPoly& g) {
  EquivScalar out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k].is_zero()) continue;
    for (std::size_t l = 0; l < g.size(); ++l) {
      if (g[l].is_zero() || static_cast<int>(k + l) > ctx.r) continue;
      out += f[k] * g[l] * equiv_pairing(ctx, static_cast<int>(k), static_cast<int>(l));
    }
  }
  return out;
}

PPoly ppoly_mul(const PPoly& f, const PPoly& g) {
  if (f.empty() || g.empty()) return {};
  PPoly out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  return out;
}

EquivScalar lemma_zero_value(const Context& ctx, int k) {
  const EquivScalar inv_lambda = ctx.lambda(-1);
  const PPoly p_over{EquivScalar(), inv_lambda};
  const PPoly one_minus{EquivScalar(ctx.constant(CycNumber(1))), -inv_lambda};
  PPoly f{EquivScalar(ctx.constant(CycNumber(1)))};
  for (int i = 0; i < k; ++i) f = ppoly_mul(f, p_over);
  for (int i = 0; i < 2 * ctx.r - k; ++i) f = ppoly_mul(f, one_minus);
  return pair(ctx, f, PPoly{EquivScalar(ctx.constant(CycNumber(1)))});
}

EquivScalar du(const CanonicalFrame& f, int j, const PPoly& poly) {
  const EquivScalar& pj = f.p.at(static_cast<std::size_t>(j));
  EquivScalar acc;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * pj + *it;
  return acc;
}

void canonical_basis(CanonicalFrame& f) {
  const auto& ctx = f.ctx;
  f.epsilon.clear();
  const EquivScalar inv_lambda = ctx.lambda(-1);
  for (int i = 0; i <= ctx.r; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    RatFunc lead = ctx.q() * f.c[ui] * f.a[ui].pow(ctx.r) * ctx.constant(CycNumber(Rational(1, ctx.m)));
    PPoly eps{EquivScalar(lead)};
    for (int l = 0; l <= ctx.r; ++l) {
      if (l == i) continue;
      eps = ppoly_mul(eps, PPoly{EquivScalar(ctx.constant(CycNumber(1))), -(inv_lambda * f.a[static_cast<std::size_t>(l)])});
    }
    f.epsilon.push_back(std::move(eps));
  }
}

EquivScalar epsilon_norm_closed_form(const CanonicalFrame& f, int i) {
  const auto& ctx = f.ctx;
  const auto ui = static_cast<std::size_t>(i);
  RatFunc c = ctx.q() * f.c[ui] * f.a[ui].pow(2 * ctx.r) * ctx.constant(CycNumber(Rational(1, ctx.m)));
  return EquivScalar::lambda_power(-(2 * ctx.r + 1), c);
}

void delta_i(CanonicalFrame& f) {
  const auto& ctx = f.ctx;
  f.delta.clear();
  for (int i = 0; i <= ctx.r; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    RatFunc c = ctx.constant(CycNumber(ctx.m)) * ctx.q().inverse() * f.c[ui].inverse();
    f.delta.push_back(ctx.lambda() * EquivScalar(c) * f.p[ui].pow(2 * ctx.r));
  }
}

EquivScalar product_delta(const CanonicalFrame& f) {
  EquivScalar out(f.ctx.constant(CycNumber(1)));
  for (const auto& d : f.delta) out *= d;
  return out;
}

EquivScalar product_delta_closed_form(const Context& ctx) {
  const int r = ctx.r;
  const Rational lead = Rational(ctx.m).pow(ctx.m);
  RatFunc c = ctx.constant(CycNumber(lead) * ctx.xi(-(static_cast<long>(r) * (r + 1) / 2))) * ctx.q().pow(-r) *
              ctx.g().pow(2 * r);
  return EquivScalar::lambda_power(static_cast<long>(2 * r + 1) * (r + 1), c);
}

CanonicalFrame build_frame(int r) {
  CanonicalFrame f = build_spectrum(r);
  canonical_basis(f);
  delta_i(f);
  return f;
}

}  // namespace flopgw::givental
