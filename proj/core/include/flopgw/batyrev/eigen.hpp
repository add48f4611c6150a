#pragma once

#include <complex>
#include <string>
#include <vector>

#include "flopgw/algebra/frac_series.hpp"
#include "flopgw/batyrev/quantum_ring.hpp"

namespace flopgw::batyrev {

using algebra::CycNumber;
using algebra::FracSeries;

/// Closed-form eigenvalues of h* and xi* for the labels (i, j).
struct EigenPair {
  int i;
  int j;
  FracSeries h;
  FracSeries xi;
};

/// Field Q(zeta_{(r+1)(r+2)}) holding omega and eta.
algebra::FieldPtr eigen_field(int r);

/// h = eta^j omega^i q1^{1/(r+1)} q2^{1/(r+2)} (1 + omega^i q1^{1/(r+1)})^{-1/(r+2)},
/// xi = eta^j q2^{1/(r+2)} (1 + omega^i q1^{1/(r+1)})^{(r+1)/(r+2)}.
EigenPair eigen_formulas(int r, int i, int j, long order);

struct RelationFailure {
  int i;
  int j;
  /// 1 for h^{r+1} - q1 (xi-h)^{r+1}, 2 for xi (xi-h)^{r+1} - q2.
  int relation;
  long a;
  long b;
  std::string coefficient;
};

struct EigenRelationReport {
  int r;
  long order;
  int pairs_checked;
  std::vector<RelationFailure> failures;
};

/// Residuals of both quantum relations for one pair; empty when both vanish through the order.
std::vector<RelationFailure> check_eigen_pair(const EigenPair& pair);
EigenRelationReport verify_eigen_relations(int r, long order);

/// Product of all h-eigenvalues, truncated.
FracSeries eigenvalue_product(int r, long order);
/// Series of a LocPoly in the same variables.
FracSeries to_frac_series(const LocPoly& p, long order);

enum class CertificateStatus { certified, not_certified, discrepancy };

struct SemisimplicityReport {
  int r;
  std::complex<double> q1;
  std::complex<double> q2;
  std::vector<std::complex<double>> formula_eigenvalues;
  std::vector<std::complex<double>> matrix_eigenvalues;
  double min_gap;
  double max_mismatch;
  /// Largest off-diagonal entry of xi* in the eigenbasis of h*, relative to its norm.
  double simultaneous_residual;
  CertificateStatus status;
};

/// Numeric certificate at a sample point; q1 and q2 must be nonzero.
SemisimplicityReport semisimplicity_certificate(int r, std::complex<double> q1, std::complex<double> q2,
                                                double gap_tolerance = 1e-6, double agreement_tolerance = 1e-9);

std::string to_string(CertificateStatus s);

}  // namespace flopgw::batyrev
