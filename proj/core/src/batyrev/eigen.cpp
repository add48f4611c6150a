#include "flopgw/batyrev/eigen.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>

#include "flopgw/algebra/cyclotomic.hpp"
#include "flopgw/error.hpp"

namespace flopgw::batyrev {

using algebra::Rational;

algebra::FieldPtr eigen_field(int r) {
  if (r < 1) throw DomainError("r must be at least 1");
  return algebra::CyclotomicField::make((r + 1) * (r + 2));
}

EigenPair eigen_formulas(int r, int i, int j, long order) {
  if (i < 0 || i > r || j < 0 || j > r + 1) throw DomainError("eigenvalue label out of range");
  const auto field = eigen_field(r);
  const CycNumber omega_i = CycNumber::zeta(field, static_cast<long>(r + 2) * i);
  const CycNumber eta_j = CycNumber::zeta(field, static_cast<long>(r + 1) * j);
  const FracSeries one = FracSeries::constant(r, order, CycNumber(1));
  const FracSeries u = FracSeries::monomial(r, order, 1, 0, omega_i);
  const FracSeries v = FracSeries::monomial(r, order, 0, 1, eta_j);
  const FracSeries F = one + u;
  const FracSeries h = u * v * algebra::binomial_power(F, Rational(-1, r + 2), order);
  const FracSeries xi = v * algebra::binomial_power(F, Rational(r + 1, r + 2), order);
  return {i, j, h, xi};
}

std::vector<RelationFailure> check_eigen_pair(const EigenPair& pair) {
  const int r = pair.h.r();
  const long order = std::min(pair.h.order(), pair.xi.order());
  const FracSeries q1 = FracSeries::monomial(r, order, r + 1, 0);
  const FracSeries q2 = FracSeries::monomial(r, order, 0, r + 2);
  const FracSeries y = pair.xi - pair.h;
  const FracSeries yr = y.pow(r + 1);
  std::vector<RelationFailure> out;
  auto record = [&](int which, const FracSeries& res) {
    if (res.is_zero()) return;
    const auto e = res.leading_exponent();
    out.push_back({pair.i, pair.j, which, e.first, e.second, res.coeff(e.first, e.second).to_string()});
  };
  record(1, pair.h.pow(r + 1) - q1 * yr);
  record(2, pair.xi * yr - q2);
  return out;
}

EigenRelationReport verify_eigen_relations(int r, long order) {
  if (order < 1) throw DomainError("order must be at least 1");
  EigenRelationReport rep{r, order, 0, {}};
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r + 1; ++j) {
      const auto f = check_eigen_pair(eigen_formulas(r, i, j, order));
      rep.failures.insert(rep.failures.end(), f.begin(), f.end());
      ++rep.pairs_checked;
    }
  return rep;
}

FracSeries eigenvalue_product(int r, long order) {
  FracSeries out = FracSeries::constant(r, order, CycNumber(1));
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r + 1; ++j) out *= eigen_formulas(r, i, j, order).h;
  return out;
}

FracSeries to_frac_series(const LocPoly& p, long order) {
  const int r = p.r();
  FracSeries num(r, order);
  for (const auto& [e, c] : p.numerator())
    num += FracSeries::monomial(r, order, static_cast<long>(e.first) * (r + 1), static_cast<long>(e.second) * (r + 2),
                                CycNumber(c));
  if (p.denominator_power() == 0) return num;
  const FracSeries D = FracSeries::constant(r, order, CycNumber(1)) +
                       FracSeries::monomial(r, order, r + 1, 0, CycNumber(r % 2 == 0 ? 1 : -1));
  return num * algebra::binomial_power(D, Rational(-p.denominator_power()), order);
}

namespace {

using CMatrix = Eigen::MatrixXcd;

CMatrix to_eigen(const std::vector<std::vector<std::complex<double>>>& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  CMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return out;
}

}  // namespace

SemisimplicityReport semisimplicity_certificate(int r, std::complex<double> q1, std::complex<double> q2,
                                                double gap_tolerance, double agreement_tolerance) {
  if (std::abs(q1) == 0.0 || std::abs(q2) == 0.0)
    throw DomainError("semisimplicity certificate needs q1 and q2 nonzero");
  SemisimplicityReport rep{r, q1, q2, {}, {}, std::numeric_limits<double>::infinity(), 0.0, 0.0,
                           CertificateStatus::certified};
  const std::complex<double> u0 = std::pow(q1, 1.0 / (r + 1));
  const std::complex<double> v0 = std::pow(q2, 1.0 / (r + 2));
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r + 1; ++j) {
      const std::complex<double> u = std::polar(1.0, 2 * std::numbers::pi * i / (r + 1)) * u0;
      const std::complex<double> v = std::polar(1.0, 2 * std::numbers::pi * j / (r + 2)) * v0;
      rep.formula_eigenvalues.push_back(u * v * std::pow(1.0 + u, -1.0 / (r + 2)));
    }
  const CMatrix Mh = to_eigen(evaluate(quantum_mult_matrix(r, Divisor::h), q1, q2));
  const CMatrix Mxi = to_eigen(evaluate(quantum_mult_matrix(r, Divisor::xi), q1, q2));
  Eigen::ComplexEigenSolver<CMatrix> solver(Mh);
  if (solver.info() != Eigen::Success) throw Error("eigen solver failed");
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) rep.matrix_eigenvalues.push_back(solver.eigenvalues()(k));

  const auto& f = rep.formula_eigenvalues;
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = a + 1; b < f.size(); ++b) rep.min_gap = std::min(rep.min_gap, std::abs(f[a] - f[b]));

  // Greedy nearest matching of the two multisets.
  std::vector<bool> used(rep.matrix_eigenvalues.size(), false);
  for (const auto& x : f) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t k = 0; k < used.size(); ++k)
      if (!used[k] && std::abs(x - rep.matrix_eigenvalues[k]) < best) {
        best = std::abs(x - rep.matrix_eigenvalues[k]);
        arg = k;
      }
    used[arg] = true;
    rep.max_mismatch = std::max(rep.max_mismatch, best);
  }

  const CMatrix V = solver.eigenvectors();
  const CMatrix T = V.inverse() * Mxi * V;
  double off = 0.0;
  for (Eigen::Index i = 0; i < T.rows(); ++i)
    for (Eigen::Index j = 0; j < T.cols(); ++j)
      if (i != j) off = std::max(off, std::abs(T(i, j)));
  rep.simultaneous_residual = off / std::max(1.0, Mxi.norm());

  if (rep.min_gap <= gap_tolerance) rep.status = CertificateStatus::not_certified;
  else if (rep.max_mismatch > agreement_tolerance) rep.status = CertificateStatus::discrepancy;
  return rep;
}

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::certified:
      return "certified";
    case CertificateStatus::not_certified:
      return "not-certified";
    case CertificateStatus::discrepancy:
      return "discrepancy";
  }
  return "unknown";
}

}  // namespace flopgw::batyrev
