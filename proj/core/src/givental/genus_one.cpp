#include "flopgw/givental/genus_one.hpp"

#include "flopgw/algebra/calculus.hpp"
#include "flopgw/error.hpp"

namespace flopgw::givental {

RatFunc term_log_delta(const CanonicalFrame& f) {
  const EquivScalar prod = product_delta(f);
  if (!prod.is_monomial()) throw VerificationFailure("prod Delta_i is not a lambda-monomial");
  const RatFunc& c = prod.terms().begin()->second;
  return c.delta() / c;
}

RatFunc term_log_delta_closed_form(const Context& ctx) {
  return ctx.constant(CycNumber(ctx.r)) * (ctx.constant(CycNumber(1)) - ctx.constant(CycNumber(2 * ctx.sign())) * ctx.g());
}

TermCMinusOne term_c_minus_one(const CanonicalFrame& f) {
  const auto& ctx = f.ctx;
  TermCMinusOne out;
  const EquivScalar c_minus_one = EquivScalar::lambda_power(-1, ctx.constant(CycNumber(Rational(ctx.m, 24))));
  for (int k = 0; k <= ctx.r; ++k) {
    EquivScalar power_sum;
    for (const auto& p : f.p) power_sum += p.pow(k);
    out.components.push_back(c_minus_one * power_sum);
  }
  out.dt1_limit = out.components.at(1).lambda_limit();
  for (int k = 2; k <= ctx.r; ++k)
    if (!out.components[static_cast<std::size_t>(k)].lambda_limit().is_zero())
      throw LimitError("dt_" + std::to_string(k) + " component survives the limit");
  return out;
}

RatFunc term_c_minus_one_closed_form(const Context& ctx) {
  return ctx.constant(CycNumber(Rational(ctx.sign() * ctx.m * ctx.m, 24))) * ctx.g();
}

GenusOneForm genus_one_form(const CanonicalFrame& f, const std::vector<EquivScalar>& r1_diag) {
  const auto& ctx = f.ctx;
  GenusOneForm out{ctx.r, RatFunc(), Rational(0), {}, {}, {}};
  out.log_delta_part = EquivScalar(term_log_delta(f) * ctx.constant(CycNumber(Rational(1, 48))));
  EquivScalar c_part;
  const EquivScalar c_minus_one = EquivScalar::lambda_power(-1, ctx.constant(CycNumber(Rational(ctx.m, 24))));
  for (const auto& p : f.p) c_part += c_minus_one * p;
  out.c_part = -c_part;
  EquivScalar r1_part;
  for (std::size_t i = 0; i < f.p.size(); ++i) r1_part += r1_diag.at(i) * f.p[i];
  out.r1_part = r1_part * EquivScalar(ctx.constant(CycNumber(Rational(1, 2))));

  const EquivScalar total = out.log_delta_part + out.c_part + out.r1_part;
  for (const auto& [k, c] : total.terms())
    if (k != 0) throw LimitError("lambda^" + std::to_string(k) + " does not cancel in dG");
  const RatFunc value = total.lambda_limit().descend_root(1);
  const CycNumber a = value.value_at_zero();
  out.constant = a.to_rational();
  out.coefficient = value - RatFunc(a);
  return out;
}

GenusOneForm genus_one_form(int r, BranchFlip flip) {
  const CanonicalFrame f = build_frame(r);
  const RatMatrix conn = connection_form(f, flip);
  const Matrix off = r1_offdiagonal(f, conn);
  return genus_one_form(f, r1_diagonal(conn, off));
}

RatFunc genus_one_closed_form(int r) {
  const int s = r % 2 == 0 ? 1 : -1;
  const RatFunc q = RatFunc::q(1);
  return RatFunc(CycNumber(Rational(-s * (r + 1), 24))) * q / (RatFunc(1) + RatFunc(s) * q);
}

std::vector<Rational> genus_one_table(const RatFunc& dg_coeff, int dmax) {
  if (dmax < 1) throw DomainError("dmax must be at least 1");
  const auto s = algebra::series_expand(dg_coeff.descend_root(1), dmax);
  std::vector<Rational> out;
  for (int d = 1; d <= dmax; ++d) out.push_back(s[static_cast<std::size_t>(d)].to_rational() / Rational(d));
  return out;
}

std::vector<Rational> genus_one_table(int r, int dmax) { return genus_one_table(genus_one_form(r).coefficient, dmax); }

Rational genus_one_invariant_closed_form(int r, int d) {
  const int sign = (static_cast<long>(d) * (r + 1)) % 2 == 0 ? 1 : -1;
  return Rational(sign * (r + 1), 24 * d);
}

}  // namespace flopgw::givental
