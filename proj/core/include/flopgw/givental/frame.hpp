#pragma once

#include <vector>

#include "flopgw/algebra/equiv_scalar.hpp"

namespace flopgw::givental {

using algebra::CycNumber;
using algebra::EquivScalar;
using algebra::FieldPtr;
using algebra::Rational;
using algebra::RatFunc;

using Matrix = std::vector<std::vector<EquivScalar>>;

/// Shared constants for one value of r: the field Q(zeta_{2(r+1)}) and the
/// root w with w^{r+1} = q.
struct Context {
  int r;
  int m;  // r + 1
  FieldPtr field;

  /// zeta_{2(r+1)}^k.
  CycNumber zeta(long k) const;
  /// xi^k with xi = zeta^2 a primitive (r+1)-st root of unity.
  CycNumber xi(long k) const { return zeta(2 * k); }
  /// (-1)^r.
  int sign() const { return r % 2 == 0 ? 1 : -1; }
  RatFunc w(long k, CycNumber coeff = CycNumber(1)) const { return RatFunc::w_power(k, m, std::move(coeff)); }
  RatFunc constant(CycNumber c) const { return RatFunc(std::move(c), m); }
  RatFunc q() const { return w(m); }
  /// G = q/(1 + (-1)^r q) in the variable w.
  RatFunc g() const;
  EquivScalar lambda(long k = 1) const { return EquivScalar::lambda_power(k, constant(CycNumber(1))); }
};

Context make_context(int r);

/// Polynomial in p with EquivScalar coefficients, lowest power first.
using PPoly = std::vector<EquivScalar>;

struct CanonicalFrame {
  Context ctx;
  std::vector<RatFunc> c;       // (-1)^r xi^i w^{-1}
  std::vector<RatFunc> a;       // 1 + c_i
  std::vector<EquivScalar> p;   // lambda / a_i
  std::vector<PPoly> epsilon;   // idempotents on {1, p, ..., p^r}
  std::vector<EquivScalar> delta;
};

/// Fills ctx, c, a, p.
CanonicalFrame build_spectrum(int r);
/// q (lambda - p_i)^{r+1} - p_i^{r+1}.
EquivScalar charpoly_residual(const CanonicalFrame& f, int i);
/// e_k(p_0, ..., p_r) / lambda^k for k = 0..r+1.
std::vector<RatFunc> charpoly_coefficients(const CanonicalFrame& f);
/// (-1)^r C(r+1, k) G for k >= 1, and 1 for k = 0.
std::vector<RatFunc> charpoly_coefficients_closed_form(const Context& ctx);

/// <p^k, p^l> = C(2r - d, r - d) lambda^{-(2r+1-d)}, d = k + l; zero for d > r.
EquivScalar equiv_pairing(const Context& ctx, int k, int l);
/// Bilinear extension of equiv_pairing.
EquivScalar pair(const Context& ctx, const PPoly& f, const PPoly& g);
/// <(p/lambda)^k (1 - p/lambda)^{2r-k}>.
EquivScalar lemma_zero_value(const Context& ctx, int k);

PPoly ppoly_mul(const PPoly& f, const PPoly& g);
/// Value of f at p = p_j.
EquivScalar du(const CanonicalFrame& f, int j, const PPoly& poly);

/// Fills epsilon.
void canonical_basis(CanonicalFrame& f);
/// q c_i a_i^{2r} / ((r+1) lambda^{2r+1}).
EquivScalar epsilon_norm_closed_form(const CanonicalFrame& f, int i);
/// Fills delta with (r+1) lambda q^{-1} c_i^{-1} p_i^{2r}.
void delta_i(CanonicalFrame& f);
EquivScalar product_delta(const CanonicalFrame& f);
/// (r+1)^{r+1} lambda^{(2r+1)(r+1)} xi^{-r(r+1)/2} q^{-r} G^{2r}.
EquivScalar product_delta_closed_form(const Context& ctx);

/// All of the above in order.
CanonicalFrame build_frame(int r);

}  // namespace flopgw::givental
