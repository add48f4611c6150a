#include <gtest/gtest.h>

#include "flopgw/algebra/calculus.hpp"
#include "flopgw/error.hpp"
#include "flopgw/flop/g_function.hpp"
#include "flopgw/flop/invariance.hpp"
#include "flopgw/flop/ring_r.hpp"

using namespace flopgw;
using namespace flopgw::flop;
using algebra::CycNumber;

namespace {

std::vector<Rational> series_of(const RatFunc& f, long order) {
  std::vector<Rational> out;
  for (const auto& c : algebra::series_expand(f, order)) out.push_back(c.to_rational());
  return out;
}

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(GFunction, Formula) {
  const RatFunc q = RatFunc::q(1);
  EXPECT_EQ(g_function(1).value, q / (RatFunc(1) - q));
  EXPECT_EQ(g_function(2).value, q / (RatFunc(1) + q));
  EXPECT_EQ(series_of(g_function(2).value, 3), ints({0, 1, -1, 1}));
  // sum over d of (-1)^{(d-1)(r+1)} q^d
  for (int r = 1; r <= 6; ++r) {
    auto s = series_of(g_function(r).value, 30);
    for (long d = 1; d <= 30; ++d) EXPECT_EQ(s[static_cast<std::size_t>(d)], Rational(((d - 1) * (r + 1)) % 2 ? -1 : 1));
  }
}

TEST(GFunction, Reflection) {
  EXPECT_EQ(reflection_sum(1), RatFunc(-1));
  EXPECT_EQ(reflection_sum(2), RatFunc(1));
  for (int r = 1; r <= 8; ++r) EXPECT_TRUE(verify_reflection(r));
}

TEST(GFunction, DeltaPolynomials) {
  EXPECT_EQ(delta_g_polynomial(3, 0), ints({0, 1}));
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(delta_g_polynomial(r, 1), ints({0, 1, r % 2 ? 1 : -1}));
  EXPECT_EQ(delta_g_polynomial(1, 2), ints({0, 1, 3, 2}));
  for (int r = 1; r <= 5; ++r)
    for (int m = 0; m <= 7; ++m) {
      const auto p = delta_g_polynomial(r, m);
      EXPECT_EQ(p, delta_g_polynomial_direct(r, m));
      for (const auto& c : p) EXPECT_TRUE(c.is_integer());
      // series oracle: d^m times the coefficients of G
      const auto s = series_of(delta_power_g(r, m), 30);
      const auto g = series_of(g_function(r).value, 30);
      for (long d = 0; d <= 30; ++d) {
        Rational dm(1);
        for (int k = 0; k < m; ++k) dm *= Rational(d);
        EXPECT_EQ(s[static_cast<std::size_t>(d)], dm * g[static_cast<std::size_t>(d)]);
      }
    }
}

TEST(GFunction, ReciprocalAntisymmetry) {
  const RatFunc q = RatFunc::q(1);
  EXPECT_EQ(delta_power_g(1, 1), q / (RatFunc(1) - q).pow(2));
  EXPECT_EQ(delta_power_g(1, 2), q * (RatFunc(1) + q) / (RatFunc(1) - q).pow(3));
  for (int r = 1; r <= 5; ++r)
    for (int m = 1; m <= 7; ++m) EXPECT_TRUE(reciprocal_antisymmetry(r, m)) << r << ' ' << m;
}

TEST(RingR, FlopTransform) {
  const int r = 2;
  const auto g = RingRElement::g(r);
  EXPECT_EQ(flop_transform(g), RingRElement::constant(r, Rational(1)) - g);
  EXPECT_EQ(flop_transform(flop_transform(g)), g);
  EXPECT_EQ(flop_transform(RingRElement::q_power(r, 0, 1)), RingRElement::q_power(r, 1, 1));
  EXPECT_EQ(flop_transform(RingRElement::q_power(r, 1, 1)), RingRElement::q_power(r, 0, 1));
  EXPECT_EQ(flop_transform(RingRElement::q_power(r, 3, 0)), RingRElement::q_power(r, -3, 0));
  const auto x = g.pow(3) * RingRElement::q_power(r, 2, 1) + RingRElement::constant(r, Rational(5, 3));
  EXPECT_EQ(flop_transform(flop_transform(x)), x);
}

TEST(RingR, TransformMatchesAnalyticContinuation) {
  for (int r = 1; r <= 4; ++r) {
    const auto x = RingRElement::g(r).pow(2) * RingRElement::q_power(r, 1) - RingRElement::g(r);
    // F acts on functions of q by q -> 1/q when there is no gamma part
    EXPECT_EQ(flop_transform(x).to_ratfunc(), x.to_ratfunc().reciprocal());
  }
}

TEST(RingR, DeltaClosure) {
  for (int r = 1; r <= 4; ++r) {
    auto x = RingRElement::g(r);
    for (int m = 1; m <= 6; ++m) {
      const RatFunc before = x.to_ratfunc();
      x = x.delta();
      EXPECT_EQ(x.to_ratfunc(), before.delta());
      EXPECT_EQ(x.g_degree(), m + 1);
    }
    const auto y = RingRElement::q_power(r, -2) * RingRElement::g(r) + RingRElement::q_power(r, 3);
    EXPECT_EQ(y.delta().to_ratfunc(), y.to_ratfunc().delta());
  }
}

TEST(Invariance, NPoint) {
  const RatFunc q = RatFunc::q(1);
  RatFunc lhs = RatFunc(CycNumber(genus_one_kappa(1))) * g_function(1).value;
  EXPECT_EQ(lhs.delta(), RatFunc(CycNumber(Rational(1, 12))) * q / (RatFunc(1) - q).pow(2));
  for (int r = 1; r <= 4; ++r)
    for (int n = 2; n <= 6; ++n) EXPECT_TRUE(genus1_npoint_invariance(r, n)) << r << ' ' << n;
  EXPECT_THROW(genus1_npoint_invariance(1, 1), DomainError);
}

TEST(Invariance, OnePointDefect) {
  for (int r = 1; r <= 6; ++r) EXPECT_EQ(genus1_onepoint_defect(r), Rational(0));
  EXPECT_EQ(genus1_onepoint_defect(1, genus_one_kappa(1), Rational(-1)), Rational(1, 24));
  EXPECT_EQ(genus1_onepoint_defect(1, genus_one_kappa(1), Rational(1)), Rational(-1, 24));
}

TEST(Invariance, FaberPandharipande) {
  for (int m : {1, 3, 5, 7}) EXPECT_TRUE(fp_generating_invariance(m));
  EXPECT_THROW(fp_generating_invariance(2), DomainError);
}

TEST(Invariance, PolynomialFit) {
  const int r = 1;
  const RatFunc g = g_function(r).value;
  const RatFunc q = RatFunc::q(1);
  auto fit = g_polynomial_fit(r, series_of(g, 12), 0, 3);
  EXPECT_EQ(fit.polys.size(), 1u);
  EXPECT_EQ(fit.polys[0], ints({0, 1}));

  fit = g_polynomial_fit(r, series_of(q + g * g, 16), 1, 4);
  EXPECT_EQ(fit.polys[0], ints({0, 0, 1}));
  EXPECT_EQ(fit.polys[1], ints({1}));

  const RatFunc cube = RatFunc(1) / (RatFunc(1) - q).pow(3);
  EXPECT_THROW(g_polynomial_fit(r, series_of(cube, 20), 0, 2), VerificationFailure);
  fit = g_polynomial_fit(r, series_of(cube, 20), 0, 3);
  EXPECT_EQ(fit.polys[0], ints({1, 3, 3, 1}));
  EXPECT_THROW(g_polynomial_fit(r, series_of(g, 3), 0, 3), DomainError);
}
