#include <gtest/gtest.h>

#include <cmath>

#include "flopgw/algebra/cyclotomic.hpp"
#include "flopgw/batyrev/eigen.hpp"
#include "flopgw/batyrev/quantum_ring.hpp"
#include "flopgw/error.hpp"

using namespace flopgw;
using namespace flopgw::batyrev;
using algebra::CycNumber;
using algebra::FracSeries;

namespace {

LocMatrix scalar_times_identity(int r, int n, const LocPoly& c) {
  LocMatrix m(static_cast<std::size_t>(n), std::vector<LocPoly>(static_cast<std::size_t>(n), LocPoly::constant(r, 0)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = c;
  return m;
}

}  // namespace

TEST(QuantumRing, BasisSize) {
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(ring_basis(r).size(), static_cast<std::size_t>((r + 1) * (r + 2)));
}

TEST(QuantumRing, ClassicalLimitNilpotent) {
  for (int r = 1; r <= 3; ++r) {
    for (auto d : {Divisor::h, Divisor::xi}) {
      const auto m0 = classical_limit(quantum_mult_matrix(r, d));
      LocMatrix p = m0;
      for (int k = 1; k < 2 * r + 2; ++k) p = mat_mul(p, m0);
      EXPECT_TRUE(mat_is_zero(p)) << "r=" << r;
    }
  }
}

TEST(QuantumRing, Commute) {
  for (int r = 1; r <= 3; ++r) {
    const auto mh = quantum_mult_matrix(r, Divisor::h);
    const auto mx = quantum_mult_matrix(r, Divisor::xi);
    const auto a = mat_mul(mh, mx);
    const auto b = mat_mul(mx, mh);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ(a[i][j], b[i][j]) << "r=" << r;
  }
}

TEST(QuantumRing, MatricesSatisfyRelations) {
  for (int r = 1; r <= 3; ++r) {
    const int n = (r + 1) * (r + 2);
    const auto mh = quantum_mult_matrix(r, Divisor::h);
    const auto mx = quantum_mult_matrix(r, Divisor::xi);
    LocMatrix my = mx;
    for (std::size_t i = 0; i < my.size(); ++i)
      for (std::size_t j = 0; j < my.size(); ++j) my[i][j] = mx[i][j] - mh[i][j];
    LocMatrix hp = mh, yp = my;
    for (int k = 1; k <= r; ++k) {
      hp = mat_mul(hp, mh);
      yp = mat_mul(yp, my);
    }
    const auto q1y = mat_mul(scalar_times_identity(r, n, LocPoly::monomial(r, 1, 0)), yp);
    LocMatrix rel1 = hp;
    for (std::size_t i = 0; i < rel1.size(); ++i)
      for (std::size_t j = 0; j < rel1.size(); ++j) rel1[i][j] = hp[i][j] - q1y[i][j];
    EXPECT_TRUE(mat_is_zero(rel1)) << "r=" << r;

    const auto xy = mat_mul(mx, yp);
    LocMatrix rel2 = xy;
    for (std::size_t i = 0; i < xy.size(); ++i)
      for (std::size_t j = 0; j < xy.size(); ++j)
        rel2[i][j] = xy[i][j] - (i == j ? LocPoly::monomial(r, 0, 1) : LocPoly::constant(r, 0));
    EXPECT_TRUE(mat_is_zero(rel2)) << "r=" << r;
  }
}

TEST(QuantumRing, ReduceRespectsRelations) {
  const int r = 2;
  const auto lhs = reduce_monomial(r, r + 1, 0);
  const auto rhs = reduce_monomial(r, 0, r + 1);
  ASSERT_EQ(lhs.size(), rhs.size());
  for (const auto& [k, v] : rhs) EXPECT_EQ(lhs.at(k), v * LocPoly::monomial(r, 1, 0));
}

TEST(EigenFormulas, SatisfyRelations) {
  for (int r = 1; r <= 3; ++r) {
    const auto rep = verify_eigen_relations(r, 10);
    EXPECT_EQ(rep.pairs_checked, (r + 1) * (r + 2));
    EXPECT_TRUE(rep.failures.empty()) << "r=" << r << " first failure relation " << rep.failures.front().relation;
  }
}

TEST(EigenFormulas, CorruptedSignDetected) {
  for (int r = 1; r <= 3; ++r) {
    auto p = eigen_formulas(r, 0, 0, 10);
    const auto u = FracSeries::monomial(r, 10, 1, 0);
    const auto v = FracSeries::monomial(r, 10, 0, 1);
    const auto F = FracSeries::constant(r, 10, CycNumber(1)) - u;
    p.h = u * v * algebra::binomial_power(F, algebra::Rational(-1, r + 2), 10);
    EXPECT_FALSE(check_eigen_pair(p).empty()) << "r=" << r;
  }
}

TEST(EigenFormulas, RatioMatchesCanonicalFrame) {
  for (int r = 1; r <= 3; ++r)
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= r + 1; ++j) {
        const auto p = eigen_formulas(r, i, j, 10);
        const auto field = eigen_field(r);
        const auto u = FracSeries::monomial(r, 10, 1, 0, CycNumber::zeta(field, static_cast<long>(r + 2) * i));
        EXPECT_EQ(p.h * (FracSeries::constant(r, 10, CycNumber(1)) + u), u * p.xi);
      }
}

TEST(EigenFormulas, SumMatchesTrace) {
  for (int r = 1; r <= 2; ++r) {
    const long order = 3 * (r + 1);
    FracSeries sum(r, order);
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= r + 1; ++j) sum += eigen_formulas(r, i, j, order).h;
    const auto mh = quantum_mult_matrix(r, Divisor::h);
    LocPoly tr = LocPoly::constant(r, 0);
    for (std::size_t i = 0; i < mh.size(); ++i) tr = tr + mh[i][i];
    EXPECT_EQ(sum, to_frac_series(tr, order)) << "r=" << r;
  }
}

TEST(EigenFormulas, ProductMatchesDeterminant) {
  for (int r = 1; r <= 2; ++r) {
    const long order = static_cast<long>(r + 1) * (r + 2) + 4;
    const auto scaled = determinant(quantum_mult_matrix(r, Divisor::h));
    const LocPoly expected = LocPoly(r, {{{r + 2, r + 1}, Rational(1)}}, 1);
    EXPECT_TRUE(scaled == expected || scaled == -expected) << scaled.to_string();
    const auto prod = eigenvalue_product(r, order);
    EXPECT_EQ(prod, to_frac_series(scaled, order)) << "r=" << r;
  }
}

TEST(Semisimplicity, CertifiedAtSamples) {
  const auto rep1 = semisimplicity_certificate(1, {0.3, 0.0}, {0.7, 0.0});
  EXPECT_EQ(rep1.status, CertificateStatus::certified);
  EXPECT_LT(rep1.max_mismatch, 1e-9);
  EXPECT_LT(rep1.simultaneous_residual, 1e-8);
  const auto rep2 = semisimplicity_certificate(2, {0.2, 0.1}, {0.5, -0.3});
  EXPECT_EQ(rep2.status, CertificateStatus::certified);
  EXPECT_EQ(rep2.formula_eigenvalues.size(), 12u);
}

TEST(Semisimplicity, RejectsZeroParameter) {
  EXPECT_THROW(semisimplicity_certificate(1, {0.0, 0.0}, {0.5, 0.0}), DomainError);
  EXPECT_THROW(semisimplicity_certificate(1, {0.5, 0.0}, {0.0, 0.0}), DomainError);
}
