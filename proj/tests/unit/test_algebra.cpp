#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "flopgw/algebra/calculus.hpp"
#include "flopgw/algebra/cyclotomic.hpp"
#include "flopgw/algebra/equiv_scalar.hpp"
#include "flopgw/algebra/frac_series.hpp"
#include "flopgw/algebra/ratfunc.hpp"
#include "flopgw/error.hpp"

using namespace flopgw;
using namespace flopgw::algebra;

namespace {

CycNumber random_cyc(const FieldPtr& f, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<Rational> c;
  for (int k = 0; k < f->degree(); ++k) c.emplace_back(d(rng), 1 + std::abs(d(rng)));
  return CycNumber(f, c);
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

// geometric series oracle for w^m/(1 + s w^m)
RatFunc g_of(int m, int s) {
  CPoly num = CPoly::monomial(CycNumber(1), static_cast<std::size_t>(m));
  CPoly den = CPoly(CycNumber(1)) + CPoly::monomial(CycNumber(s), static_cast<std::size_t>(m));
  return RatFunc(num, den, m);
}

}  // namespace

TEST(Rational, ReducesAndPrints) {
  Rational a(6, -4);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(Rational(5).to_string(), "5/1");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
  EXPECT_THROW(Rational::parse("x/2"), DomainError);
  EXPECT_EQ(binomial(5, 2), Rational(10));
  EXPECT_EQ(binomial(Rational(1, 2), 2), Rational(-1, 8));
}

TEST(Cyclotomic, PolynomialsMatchKnownTable) {
  auto as_ints = [](int n) {
    std::vector<long> out;
    for (const auto& c : cyclotomic_polynomial(n)) out.push_back(c.numerator().get_si());
    return out;
  };
  EXPECT_EQ(as_ints(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(as_ints(4), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(as_ints(6), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(as_ints(12), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(as_ints(9), (std::vector<long>{1, 0, 0, 1, 0, 0, 1}));
}

TEST(Cyclotomic, PowerSums) {
  EXPECT_EQ(cyc_power_sum(4, 2), CycNumber(0));
  EXPECT_EQ(cyc_power_sum(4, 0), CycNumber(4));
  EXPECT_EQ(cyc_power_sum(5, 3), CycNumber(0));
  for (int n = 1; n <= 12; ++n)
    for (long k = -3; k <= 2 * n; ++k) EXPECT_EQ(cyc_power_sum(n, k), CycNumber(k % n == 0 ? n : 0)) << n << ' ' << k;
}

TEST(Cyclotomic, ZetaHasExactOrder) {
  for (int n = 1; n <= 15; ++n) {
    auto f = CyclotomicField::make(n);
    EXPECT_TRUE(CycNumber::zeta(f, 1).pow(n).is_one());
    EXPECT_TRUE(close(CycNumber::zeta(f, 1).to_complex(), std::polar(1.0, 2 * std::numbers::pi / n)));
  }
}

TEST(Cyclotomic, FieldAxiomsAgainstComplexOracle) {
  std::mt19937 rng(17);
  for (int n : {3, 5, 8, 12, 20}) {
    auto f = CyclotomicField::make(n);
    for (int t = 0; t < 20; ++t) {
      CycNumber a = random_cyc(f, rng), b = random_cyc(f, rng), c = random_cyc(f, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE(close((a * b).to_complex(), a.to_complex() * b.to_complex(), 1e-6));
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Cyclotomic, MixedOrdersEmbed) {
  auto f4 = CyclotomicField::make(4);
  auto f6 = CyclotomicField::make(6);
  CycNumber i = CycNumber::zeta(f4, 1);
  CycNumber w = CycNumber::zeta(f6, 1);
  CycNumber p = i * w;
  EXPECT_EQ(p.order(), 12);
  EXPECT_TRUE(close(p.to_complex(), i.to_complex() * w.to_complex()));
  EXPECT_EQ(i * i, CycNumber(-1));
  EXPECT_TRUE((i * i).is_rational());
  EXPECT_EQ(CycNumber::zeta(f6, 3), CycNumber(-1));
}

TEST(Cyclotomic, Galois) {
  auto f = CyclotomicField::make(7);
  CycNumber z = CycNumber::zeta(f, 1);
  EXPECT_EQ(z.galois(3), z.pow(3));
  EXPECT_THROW(z.galois(7), DomainError);
}

TEST(Cyclotomic, ElementarySymmetricOmitting) {
  for (int n : {2, 3, 4, 5, 6}) {
    auto f = CyclotomicField::make(n);
    std::vector<CycNumber> roots;
    for (int i = 0; i < n; ++i) roots.push_back(CycNumber::zeta(f, i));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        EXPECT_EQ(elementary_symmetric_omitting(roots, static_cast<std::size_t>(i), k),
                  CycNumber(k % 2 ? -1 : 1) * CycNumber::zeta(f, static_cast<long>(k) * i));
  }
  auto f3 = CyclotomicField::make(3);
  std::vector<CycNumber> r3{CycNumber(1), CycNumber::zeta(f3, 1), CycNumber::zeta(f3, 2)};
  EXPECT_EQ(elementary_symmetric_omitting(r3, 0, 2), CycNumber(1));
  EXPECT_EQ(elementary_symmetric_omitting(r3, 1, 0), CycNumber(1));
  EXPECT_THROW(elementary_symmetric_omitting(r3, 3, 0), DomainError);
}

TEST(RatFunc, ReducesToLowestTerms) {
  // (w^2 - 1)/(w - 1) = w + 1
  RatFunc f(CPoly({CycNumber(-1), CycNumber(0), CycNumber(1)}), CPoly({CycNumber(-1), CycNumber(1)}), 1);
  EXPECT_EQ(f.den().degree(), 0);
  EXPECT_EQ(f, RatFunc(CPoly({CycNumber(1), CycNumber(1)}), CPoly(CycNumber(1)), 1));
  EXPECT_THROW(RatFunc(CPoly(CycNumber(1)), CPoly(), 1), DivisionByZero);
}

TEST(RatFunc, DeltaExamples) {
  EXPECT_EQ(RatFunc::q(1).pow(4).delta(), RatFunc::q(1).pow(4) * RatFunc(4));
  RatFunc g = g_of(1, -1);
  RatFunc expected = RatFunc::q(1) / (RatFunc(1) - RatFunc::q(1)).pow(2);
  EXPECT_EQ(g.delta(), expected);
  EXPECT_EQ(RatFunc::w_power(1, 3).delta(), RatFunc::w_power(1, 3) * RatFunc(CycNumber(Rational(1, 3))));
}

TEST(RatFunc, DeltaIsDerivation) {
  RatFunc a = g_of(3, 1);
  RatFunc b = RatFunc::w_power(-2, 3, CycNumber(5)) + RatFunc(CycNumber(Rational(2, 7)), 3);
  EXPECT_EQ((a * b).delta(), a.delta() * b + a * b.delta());
}

TEST(RatFunc, MixedRootsLift) {
  RatFunc q1 = RatFunc::q(1);
  RatFunc w3 = RatFunc::w_power(1, 3);
  EXPECT_EQ(w3.pow(3), q1);
  EXPECT_EQ((q1 + w3).root(), 3);
}

TEST(RatFunc, Reciprocal) {
  // q/(1-q) -> 1/(q-1)
  RatFunc g = g_of(1, -1);
  EXPECT_EQ(g.reciprocal(), RatFunc(1) / (RatFunc::q(1) - RatFunc(1)));
  EXPECT_EQ(g.reciprocal().reciprocal(), g);
}

TEST(Calculus, IntegrateInT) {
  EXPECT_EQ(integrate_in_t(RatFunc::w_power(1, 3)), RatFunc::w_power(1, 3, CycNumber(3)));
  for (int r = 1; r <= 4; ++r) {
    auto f = CyclotomicField::make(r + 1);
    for (int i = 0; i <= r; ++i) {
      RatFunc in = RatFunc::w_power(1, r + 1, CycNumber::zeta(f, -i)) + RatFunc::w_power(-1, r + 1, CycNumber::zeta(f, i));
      RatFunc out = RatFunc::w_power(1, r + 1, CycNumber::zeta(f, -i)) - RatFunc::w_power(-1, r + 1, CycNumber::zeta(f, i));
      EXPECT_EQ(integrate_in_t(in), out * RatFunc(r + 1));
    }
  }
  EXPECT_EQ(integrate_in_t(RatFunc(5), IntegrationMode::drop_constant), RatFunc(0));
  EXPECT_THROW(integrate_in_t(RatFunc(5)), NonIntegrableConstant);
  EXPECT_THROW(integrate_in_t(g_of(1, -1)), DomainError);
}

TEST(Calculus, IntegrateInvertsDelta) {
  RatFunc f = RatFunc::from_laurent({{-3, CycNumber(2)}, {1, CycNumber(Rational(1, 5))}, {4, CycNumber(-7)}}, 2);
  EXPECT_EQ(integrate_in_t(f.delta()), f);
}

TEST(Calculus, SeriesExpand) {
  auto s = series_expand(g_of(1, -1), 3);
  EXPECT_EQ(s, (std::vector<CycNumber>{0, 1, 1, 1}));
  RatFunc inv = RatFunc(1) / (RatFunc(1) + RatFunc::q(1));
  EXPECT_EQ(series_expand(inv, 2), (std::vector<CycNumber>{1, -1, 1}));
  // q/(1+q)^2 = q - 2q^2 + 3q^3 - ...
  auto d = series_expand(g_of(1, 1).delta(), 4);
  EXPECT_EQ(d, (std::vector<CycNumber>{0, 1, -2, 3, -4}));
  EXPECT_THROW(series_expand(RatFunc::w_power(-1, 1), 3), ExpansionError);
  RatFunc zero = g_of(2, 1) - RatFunc::w_power(2, 2) / (RatFunc(1) + RatFunc::q(2));
  for (long k : {0L, 5L, 20L})
    for (const auto& c : series_expand(zero, k)) EXPECT_TRUE(c.is_zero());
}

TEST(Calculus, FitPolynomial) {
  RatFunc g = g_of(1, -1);
  RatFunc f = g * g * RatFunc(3) + RatFunc(2);
  auto c = fit_polynomial_in(f, g, 4);
  EXPECT_EQ(c, (std::vector<CycNumber>{2, 0, 3}));
  EXPECT_EQ(evaluate_polynomial_in(c, g), f);
  EXPECT_THROW(fit_polynomial_in(RatFunc::q(1) * RatFunc::q(1) + RatFunc::w_power(-1, 1), g, 5), DomainError);
}

TEST(EquivScalar, Arithmetic) {
  EquivScalar lam = EquivScalar::lambda_power(1);
  EquivScalar x = lam * RatFunc::q(1) + EquivScalar(3);
  EXPECT_EQ((x - x), EquivScalar());
  EXPECT_EQ(lam.inverse() * lam, EquivScalar(1));
  EXPECT_THROW(x.inverse(), DomainError);
  EXPECT_EQ(x.lambda_limit(), RatFunc(3));
  EXPECT_THROW((x * lam.inverse()).lambda_limit(), LimitError);
  EXPECT_EQ(x.delta(), lam * RatFunc::q(1));
}

TEST(FracSeries, BinomialPower) {
  const int r = 1;
  FracSeries u = FracSeries::monomial(r, 3, 1, 0);
  FracSeries one = FracSeries::constant(r, 3, CycNumber(1));
  FracSeries geo = binomial_power(one + u, Rational(-1), 3);
  FracSeries expected = one - u + u * u - u * u * u;
  EXPECT_EQ(geo, expected);
  FracSeries half = binomial_power(one + u, Rational(1, 2), 2);
  EXPECT_EQ(half.coeff(1, 0), CycNumber(Rational(1, 2)));
  EXPECT_EQ(half.coeff(2, 0), CycNumber(Rational(-1, 8)));
  EXPECT_EQ(half.terms().size(), 3u);
  EXPECT_EQ(binomial_power(one + u, Rational(0), 5), one);
  EXPECT_THROW(binomial_power(u, Rational(1, 2), 3), ExpansionError);
  EXPECT_THROW(binomial_power(one + FracSeries::monomial(r, 3, 0, 1), Rational(1, 2), 3), ExpansionError);
}

TEST(FracSeries, SquareOfSqrtAgainstNumeric) {
  const int r = 2;
  FracSeries f = FracSeries::constant(r, 8, CycNumber(1)) + FracSeries::monomial(r, 8, 1, 0, CycNumber(Rational(1, 3)));
  FracSeries s = binomial_power(f, Rational(-1, 4), 8);
  EXPECT_EQ(s.pow(4) * f, FracSeries::constant(r, 8, CycNumber(1)));
  std::complex<double> q1{0.01, 0.002}, q2{0.3, 0};
  EXPECT_TRUE(close(s.evaluate(q1, q2), std::pow(f.evaluate(q1, q2), -0.25), 1e-8));
}
