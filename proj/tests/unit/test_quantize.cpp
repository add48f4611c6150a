#include <gtest/gtest.h>

#include "flopgw/error.hpp"
#include "flopgw/quantize/fock.hpp"
#include "flopgw/quantize/loop_space.hpp"

using namespace flopgw;
using namespace flopgw::quantize;

namespace {

Var q(int i, int k) { return {false, i, k}; }
Var p(int i, int k) { return {true, i, k}; }

QuadHamiltonian mono(const Var& x, const Var& y, Rational c = Rational(1)) {
  QuadHamiltonian h;
  h.add(x, y, c);
  return h;
}

// -q0^2/2 - sum_{m<K} q_{m+1} p_m for one component.
QuadHamiltonian cse_expected(int K) {
  QuadHamiltonian h = mono(q(0, 0), q(0, 0), Rational(-1, 2));
  for (int m = 0; m < K; ++m) h.add(q(0, m + 1), p(0, m), Rational(-1));
  return h;
}

const RatMat kOffDiag{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
const RatMat kLower{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}};
const RatMat kUpper{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}};

}  // namespace

TEST(SymplecticForm, Examples) {
  EXPECT_EQ(symplectic_form(LoopVector::basis(1, 3, 0, 0), LoopVector::basis(1, 3, 0, -1)), Rational(1));
  EXPECT_EQ(symplectic_form(LoopVector::basis(1, 3, 0, 1), LoopVector::basis(1, 3, 0, -2)), Rational(-1));
}

TEST(SymplecticForm, AntisymmetricAndNondegenerate) {
  const int N = 2, K = 2;
  std::vector<LoopVector> basis;
  for (int i = 0; i < N; ++i)
    for (int k = -K - 1; k <= K; ++k) basis.push_back(LoopVector::basis(N, K, i, k));
  LoopVector f(N, K);
  for (std::size_t a = 0; a < basis.size(); ++a) f += Rational(static_cast<long>(a * a) - 3, 2) * basis[a];
  EXPECT_TRUE(symplectic_form(f, f).is_zero());
  for (const auto& x : basis) {
    int partners = 0;
    for (const auto& y : basis) {
      EXPECT_EQ(symplectic_form(x, y), -symplectic_form(y, x));
      if (!symplectic_form(x, y).is_zero()) ++partners;
    }
    EXPECT_EQ(partners, 1);
  }
}

TEST(SymplecticForm, DarbouxWithMetric) {
  const Metric g(kOffDiag);
  const int K = 2;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k <= K; ++k)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l <= K; ++l) {
          const auto P = darboux_vector(p(i, k), K, g);
          const auto Q = darboux_vector(q(j, l), K, g);
          EXPECT_EQ(symplectic_form(P, Q, g), Rational(i == j && k == l ? 1 : 0));
          EXPECT_TRUE(symplectic_form(P, darboux_vector(p(j, l), K, g), g).is_zero());
        }
}

TEST(InfinitesimalSymplectic, Examples) {
  EXPECT_TRUE(is_infinitesimal_symplectic(z_power(1, -1), 1, 4));
  EXPECT_TRUE(is_infinitesimal_symplectic(z_power(1, 1), 1, 4));
  EXPECT_FALSE(is_infinitesimal_symplectic(z_power(1, 0), 1, 4));
  EXPECT_TRUE(is_infinitesimal_symplectic(z_power_times(1, kLower), 2, 3, Metric(kOffDiag)));
  EXPECT_FALSE(is_infinitesimal_symplectic(z_power_times(0, kLower), 2, 3, Metric(kOffDiag)));
}

TEST(Hamiltonian, StringEquationForm) {
  for (int K = 1; K <= 6; ++K) EXPECT_EQ(hamiltonian_of(z_power(1, -1), 1, K), cse_expected(K)) << "K=" << K;
  EXPECT_TRUE(hamiltonian_of(LaurentMatrix{}, 1, 3).is_zero());
  EXPECT_THROW(hamiltonian_of(z_power(1, 0), 1, 3), DomainError);
}

TEST(Hamiltonian, EvenPowerRejected) {
  EXPECT_FALSE(is_infinitesimal_symplectic(z_power(1, -2), 1, 4));
  EXPECT_THROW(hamiltonian_of(z_power(1, -2), 1, 4), DomainError);
}

// Residue oracle: Omega(z^{a-3}, z^b) = (-1)^{a-3} when a + b = 2.
TEST(Hamiltonian, InverseCube) {
  const int K = 5;
  const auto h = hamiltonian_of(z_power(1, -3), 1, K);
  QuadHamiltonian expected = mono(q(0, 0), q(0, 2), Rational(-1));
  expected.add(q(0, 1), q(0, 1), Rational(1, 2));
  for (int m = 0; m + 3 <= K; ++m) expected.add(q(0, m + 3), p(0, m), Rational(-1));
  EXPECT_EQ(h, expected) << h.to_string();
}

TEST(Quantize, Table) {
  const auto q0 = FockPolynomial::variable(0, 0);
  EXPECT_EQ(quantize::quantize(mono(p(0, 0), p(0, 0)))(q0 * q0), FockPolynomial::hbar_power(1) * FockPolynomial::constant(Rational(2)));
  EXPECT_EQ(quantize::quantize(mono(q(0, 0), q(0, 0)))(FockPolynomial::constant(Rational(1))), (q0 * q0).times_hbar(-1));
  EXPECT_EQ(quantize::quantize(mono(q(0, 1), p(0, 0)))(q0), FockPolynomial::variable(0, 1));
}

TEST(Quantize, StringEquationOperator) {
  const int K = 5;
  const auto op = quantize::quantize(hamiltonian_of(z_power(1, -1), 1, K));
  const auto one = FockPolynomial::constant(Rational(1));
  const auto q0 = FockPolynomial::variable(0, 0);
  EXPECT_EQ(op(one), Rational(-1, 2) * (q0 * q0).times_hbar(-1));
  for (int m = 0; m < K; ++m) {
    const auto qm = FockPolynomial::variable(0, m);
    const auto expected = Rational(-1, 2) * (q0 * q0 * qm).times_hbar(-1) - FockPolynomial::variable(0, m + 1);
    EXPECT_EQ(op(qm), expected) << "m=" << m;
  }
}

TEST(Cocycle, Examples) {
  EXPECT_EQ(commutator_cocycle(mono(p(0, 0), p(0, 0)), mono(q(0, 0), q(0, 0))), Rational(2));
  EXPECT_EQ(commutator_cocycle(mono(p(0, 0), p(0, 1)), mono(q(0, 0), q(0, 1))), Rational(1));
  EXPECT_EQ(commutator_cocycle(mono(p(0, 0), p(0, 1)), mono(p(1, 0), p(0, 2))), Rational(0));
  EXPECT_EQ(commutator_cocycle(mono(q(0, 1), p(0, 0)), mono(q(0, 0), q(0, 0))), Rational(0));
}

TEST(Cocycle, FullTable) {
  const int N = 2, K = 3;
  std::vector<QuadHamiltonian::Index> idx;
  for (int i = 0; i < N; ++i)
    for (int k = 0; k <= K; ++k) idx.emplace_back(i, k);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a; b < idx.size(); ++b)
      for (std::size_t c = 0; c < idx.size(); ++c)
        for (std::size_t d = c; d < idx.size(); ++d) {
          const auto P1 = mono(p(idx[a].first, idx[a].second), p(idx[b].first, idx[b].second));
          const auto P2 = mono(q(idx[c].first, idx[c].second), q(idx[d].first, idx[d].second));
          const long expected = (a == c && b == d ? 1 : 0) + (a == d && b == c ? 1 : 0);
          ASSERT_EQ(commutator_cocycle(P1, P2), Rational(expected)) << a << b << c << d;
        }
}

TEST(Cocycle, NonScalarDefectRejected) {
  const auto h1 = mono(p(0, 0), p(0, 0));
  const auto h2 = mono(q(0, 0), q(0, 1));
  EXPECT_EQ(commutator_cocycle(h1, h2, poisson_bracket(h1, h2)), Rational(0));
  EXPECT_THROW(commutator_cocycle(h1, h2, Rational(2) * poisson_bracket(h1, h2)), FormalismViolation);
}

TEST(LieHomomorphism, HamiltoniansOfCommutators) {
  const Metric g(kOffDiag);
  const int K = 8;
  const std::vector<LaurentMatrix> ops{z_power(2, -1), z_power(2, -3), z_power_times(1, kLower),
                                       z_power_times(-1, kUpper), z_power_times(1, kUpper)};
  int nontrivial = 0;
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = 0; b < ops.size(); ++b) {
      ASSERT_TRUE(is_infinitesimal_symplectic(ops[b], 2, K, g));
      const auto c = commutator(ops[a], ops[b]);
      if (!c.empty()) ++nontrivial;
      const auto lhs = hamiltonian_of(c, 2, K, g).restricted(K - 6);
      const auto rhs = poisson_bracket(hamiltonian_of(ops[a], 2, K, g), hamiltonian_of(ops[b], 2, K, g)).restricted(K - 6);
      EXPECT_EQ(lhs, rhs) << a << "," << b << "\n" << lhs.to_string() << "\n" << rhs.to_string();
    }
  EXPECT_GT(nontrivial, 0);
}

TEST(DilatonShift, Examples) {
  const LoopVector zero(2, 3);
  const auto t = dilaton_shift(zero);
  EXPECT_EQ(t, LoopVector::basis(2, 3, 0, 1));
  LoopVector v(2, 3);
  v.add(1, 1, Rational(5));
  v.add(0, 0, Rational(-2, 3));
  EXPECT_EQ(dilaton_unshift(dilaton_shift(v)), v);
  const auto s = dilaton_shift(v);
  EXPECT_EQ(s.coeff(0, 1), Rational(1));
  EXPECT_EQ(s.coeff(1, 1), Rational(5));
  EXPECT_EQ(s.coeff(0, 0), Rational(-2, 3));
  EXPECT_THROW(dilaton_shift(LoopVector(1, 0)), DomainError);
}
