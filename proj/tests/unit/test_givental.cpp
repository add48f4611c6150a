#include <gtest/gtest.h>

#include <chrono>

#include "flopgw/algebra/calculus.hpp"
#include "flopgw/error.hpp"
#include "flopgw/givental/genus_one.hpp"
#include "flopgw/givental/r_matrix.hpp"

using namespace flopgw;
using namespace flopgw::givental;

namespace {

RatFunc rc(const Context& ctx, Rational x) { return ctx.constant(CycNumber(std::move(x))); }

}  // namespace

TEST(Spectrum, CharacteristicPolynomial) {
  for (int r = 1; r <= 5; ++r) {
    const auto f = build_spectrum(r);
    for (int i = 0; i <= r; ++i) {
      EXPECT_TRUE(charpoly_residual(f, i).is_zero()) << r << ' ' << i;
      EXPECT_EQ(f.p[static_cast<std::size_t>(i)].min_degree(), 1);
      EXPECT_EQ(f.p[static_cast<std::size_t>(i)].max_degree(), 1);
    }
  }
}

TEST(Spectrum, SymmetricFunctionsLieInG) {
  for (int r = 1; r <= 5; ++r) {
    const auto f = build_spectrum(r);
    const auto e = charpoly_coefficients(f);
    EXPECT_EQ(e, charpoly_coefficients_closed_form(f.ctx));
    for (std::size_t k = 1; k < e.size(); ++k) {
      const auto c = algebra::fit_polynomial_in(e[k], f.ctx.g(), 3);
      ASSERT_EQ(c.size(), 2u);
      EXPECT_TRUE(c[1].is_rational());
    }
  }
  // r = 1: p_0 + p_1 from expanding (p - p_0)(p - p_1) by hand: 2 lambda q/(q - 1)
  const auto f = build_spectrum(1);
  const RatFunc q = f.ctx.q();
  EXPECT_EQ((f.p[0] + f.p[1]).coeff(1), rc(f.ctx, 2) * q / (q - rc(f.ctx, 1)));
}

TEST(Frame, PairingIdentities) {
  const auto ctx1 = make_context(1);
  EXPECT_EQ(equiv_pairing(ctx1, 0, 0), EquivScalar::lambda_power(-3, rc(ctx1, 2)));
  for (int r = 1; r <= 5; ++r) {
    const auto ctx = make_context(r);
    EXPECT_EQ(equiv_pairing(ctx, r, 0), ctx.lambda(-(r + 1)));
    EXPECT_TRUE(equiv_pairing(ctx, r, 1).is_zero());
    for (int k = 0; k <= r - 1; ++k) EXPECT_TRUE(lemma_zero_value(ctx, k).is_zero()) << r << ' ' << k;
  }
}

TEST(Frame, IdempotentsAndDelta) {
  for (int r = 1; r <= 5; ++r) {
    const auto f = build_frame(r);
    const auto& ctx = f.ctx;
    const auto one = EquivScalar(rc(ctx, 1));
    for (int i = 0; i <= r; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      for (int j = 0; j <= r; ++j) {
        EXPECT_EQ(du(f, j, f.epsilon[ui]), i == j ? one : EquivScalar()) << r << ' ' << i << ' ' << j;
        const auto e = pair(ctx, f.epsilon[ui], f.epsilon[static_cast<std::size_t>(j)]);
        if (i != j) EXPECT_TRUE(e.is_zero());
        else EXPECT_EQ(e, epsilon_norm_closed_form(f, i));
      }
      EXPECT_EQ(f.delta[ui] * pair(ctx, f.epsilon[ui], f.epsilon[ui]), one);
    }
    EXPECT_EQ(product_delta(f), product_delta_closed_form(ctx));
  }
  const auto f = build_frame(1);
  const auto& ctx = f.ctx;
  EXPECT_EQ(f.delta[0], ctx.lambda() * EquivScalar(rc(ctx, 2) * ctx.q().inverse() * f.c[0].inverse()) * f.p[0].pow(2));
}

TEST(GenusOneTerms, LogDelta) {
  const auto q = RatFunc::q(1);
  const auto f1 = build_frame(1);
  EXPECT_EQ(term_log_delta(f1).descend_root(1), (RatFunc(1) + q) / (RatFunc(1) - q));
  for (int r = 1; r <= 5; ++r) {
    const auto f = build_frame(r);
    const RatFunc t = term_log_delta(f);
    EXPECT_EQ(t, term_log_delta_closed_form(f.ctx));
    EXPECT_EQ(t.value_at_zero(), CycNumber(r));
  }
}

TEST(GenusOneTerms, CMinusOne) {
  const auto f1 = build_frame(1);
  EXPECT_EQ(term_c_minus_one(f1).dt1_limit, rc(f1.ctx, Rational(-1, 6)) * f1.ctx.g());
  const auto f2 = build_frame(2);
  EXPECT_EQ(term_c_minus_one(f2).dt1_limit, rc(f2.ctx, Rational(9, 24)) * f2.ctx.g());
  for (int r = 1; r <= 5; ++r) {
    const auto f = build_frame(r);
    const auto t = term_c_minus_one(f);
    EXPECT_EQ(t.dt1_limit, term_c_minus_one_closed_form(f.ctx));
    for (int k = 2; k <= r; ++k) EXPECT_TRUE(t.components[static_cast<std::size_t>(k)].lambda_limit().is_zero());
    EXPECT_THROW(t.components[0].lambda_limit(), LimitError);
  }
}

TEST(Connection, MatchesClosedFormUpToSign) {
  const auto f1 = build_frame(1);
  const auto conn1 = connection_form(f1);
  EXPECT_EQ(conn1[0][1], f1.ctx.constant(f1.ctx.zeta(1) * CycNumber(Rational(1, 4))));
  for (int r = 1; r <= 5; ++r) {
    const auto f = build_frame(r);
    const auto conn = connection_form(f);
    const auto closed = connection_closed_form(f.ctx);
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= r; ++j) {
        const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        EXPECT_TRUE(conn[ui][uj].is_constant());
        EXPECT_EQ(conn[ui][uj] + conn[uj][ui], RatFunc()) << r << ' ' << i << ' ' << j;
        EXPECT_EQ(conn[ui][uj] + closed[ui][uj], RatFunc()) << r << ' ' << i << ' ' << j;
      }
  }
}

TEST(Connection, R1OffDiagonal) {
  for (int r = 1; r <= 5; ++r) {
    const auto f = build_frame(r);
    const auto conn = connection_form(f);
    const auto off = r1_offdiagonal(f, conn);
    const auto closed = r1_offdiagonal_closed_form(f);
    for (std::size_t i = 0; i < off.size(); ++i)
      for (std::size_t j = 0; j < off.size(); ++j) {
        if (i == j) continue;
        EXPECT_EQ(off[i][j] + closed[i][j], EquivScalar()) << r << ' ' << i << ' ' << j;
        EXPECT_EQ(off[i][j], off[j][i]);
        EXPECT_EQ(off[i][j].min_degree(), -1);
        EXPECT_EQ(off[i][j].max_degree(), -1);
      }
  }
}

TEST(Connection, XiConstant) {
  EXPECT_EQ(xi_constant(1).value, CycNumber(Rational(-1, 2)));
  EXPECT_EQ(xi_constant(2).value, CycNumber(-3));
  EXPECT_EQ(xi_constant(8).value, CycNumber(-270));
  for (int r = 1; r <= 8; ++r) {
    const auto x = xi_constant(r);
    ASSERT_TRUE(x.value.is_rational());
    EXPECT_EQ(x.value.to_rational(), xi_constant_closed_form(r));
    EXPECT_TRUE(x.twisted_sum.is_zero());
  }
}

TEST(Connection, R1Diagonal) {
  for (int r = 1; r <= 5; ++r) {
    const auto f = build_frame(r);
    const auto conn = connection_form(f);
    const auto off = r1_offdiagonal(f, conn);
    const auto diag = r1_diagonal(conn, off);
    const auto closed = r1_diagonal_closed_form(f.ctx);
    const auto deriv = r1_diagonal_derivative(conn, off);
    for (std::size_t i = 0; i < diag.size(); ++i) {
      EXPECT_EQ(diag[i], closed[i]) << r << ' ' << i;
      EXPECT_EQ(diag[i].delta(), deriv[i]);
      EXPECT_EQ(diag[i].min_degree(), -1);
    }
  }
}

TEST(GenusOne, MatchesClosedForm) {
  for (int r = 1; r <= 5; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto g = genus_one_form(r);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_EQ(g.coefficient, genus_one_closed_form(r)) << r;
    EXPECT_EQ(g.constant, Rational(-r * (r + 1), 48));
    EXPECT_LT(secs, 60.0);
  }
  const auto q = RatFunc::q(1);
  EXPECT_EQ(genus_one_closed_form(1), RatFunc(algebra::CycNumber(Rational(1, 12))) * q / (RatFunc(1) - q));
  EXPECT_EQ(genus_one_closed_form(2), RatFunc(algebra::CycNumber(Rational(-1, 8))) * q / (RatFunc(1) + q));
}

TEST(GenusOne, BranchIndependence) {
  for (int r = 1; r <= 3; ++r)
    for (int j = 1; j <= r; ++j) EXPECT_EQ(genus_one_form(r, std::make_pair(0, j)).coefficient, genus_one_closed_form(r));
}

TEST(GenusOne, Table) {
  const auto t1 = genus_one_table(1, 10);
  for (int d = 1; d <= 10; ++d) EXPECT_EQ(t1[static_cast<std::size_t>(d - 1)], Rational(1, 12 * d));
  for (int r = 1; r <= 4; ++r) {
    const auto t = genus_one_table(r, 10);
    for (int d = 1; d <= 10; ++d) EXPECT_EQ(t[static_cast<std::size_t>(d - 1)], genus_one_invariant_closed_form(r, d));
  }
  EXPECT_EQ(genus_one_invariant_closed_form(2, 1), Rational(-1, 8));
  EXPECT_EQ(genus_one_invariant_closed_form(3, 2), Rational(1, 12));
}

TEST(RMatrix, FirstOrderAndUnitarity) {
  for (int r = 1; r <= 3; ++r) {
    const auto f = build_frame(r);
    const auto conn = connection_form(f);
    const auto orders = r_matrix_recursion(f, conn, 3);
    const auto off = r1_offdiagonal(f, conn);
    const auto diag = r1_diagonal(conn, off);
    for (std::size_t i = 0; i < off.size(); ++i)
      for (std::size_t j = 0; j < off.size(); ++j)
        EXPECT_EQ(orders[0].entries[i][j], i == j ? diag[i] : off[i][j]);
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(is_zero(unitarity_residual(orders, n))) << r << ' ' << n;
    for (const auto& c : orders[0].diagonal_constants) EXPECT_TRUE(c.is_zero());
    for (const auto& c : orders[2].diagonal_constants) EXPECT_TRUE(c.is_zero());
  }
}

TEST(RMatrix, ZeroConstantsBreakUnitarityAtOrderTwo) {
  for (int r = 1; r <= 3; ++r) {
    const auto orders = r_matrix_recursion(r, 2, DiagonalConstants::zero);
    EXPECT_TRUE(is_zero(unitarity_residual(orders, 1)));
    const auto res = unitarity_residual(orders, 2);
    EXPECT_FALSE(is_zero(res));
    for (std::size_t i = 0; i < res.size(); ++i)
      for (std::size_t j = 0; j < res.size(); ++j) {
        if (i != j) EXPECT_TRUE(res[i][j].is_zero());
        else
          for (const auto& [k, c] : res[i][i].terms()) EXPECT_TRUE(c.is_constant());
      }
  }
}
