#pragma once

#include <vector>

#include "flopgw/algebra/ratfunc.hpp"

namespace flopgw::flop {

using algebra::Rational;
using algebra::RatFunc;

/// Genus-one coefficient (-1)^{r+1}(r+1)/24 of G in dG/dlog q.
Rational genus_one_kappa(int r);

/// delta^n G(q) == (-1)^{n-2} (delta'^n G')(1/q), where dG/dlog q = dg_coeff
/// on both sides of the flop. n >= 2.
bool genus1_npoint_invariance(int r, int n, const RatFunc& dg_coeff);
/// Same with dg_coeff = kappa * G.
bool genus1_npoint_invariance(int r, int n);

/// <h>_1^X - <Fh>_1^{X'} with the degree-zero part from the Chern numbers
/// (shifted by chern_shift for negative controls) and the quantum part
/// kappa (G(q) + G(1/q)). Zero when everything is consistent.
Rational genus1_onepoint_defect(int r, const Rational& kappa, const Rational& chern_shift = Rational(0));
Rational genus1_onepoint_defect(int r);

/// Invariance of the d >= 1 part delta^m G (r = 1, m odd) plus the
/// coefficient pattern d^m through q^pattern_order.
bool fp_generating_invariance(int m, long pattern_order = 12);

/// Result of expressing a series as p_0(G) + q p_1 + ... + q^{d2} p_{d2}.
struct GFit {
  /// polys[j] are the coefficients of p_j in G, lowest first; p_j for j >= 1 are constants.
  std::vector<std::vector<Rational>> polys;
};

/// Fits the truncated q-series `series` (coefficient of q^t at index t) in the
/// basis {G^k : k <= degree_bound} and {q^j : 1 <= j <= d2}. Throws
/// VerificationFailure when the extra coefficients are inconsistent.
GFit g_polynomial_fit(int r, const std::vector<Rational>& series, int d2, int degree_bound);

}  // namespace flopgw::flop
