#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flopgw/givental/frame.hpp"

namespace flopgw::givental {

using RatMatrix = std::vector<std::vector<RatFunc>>;

/// Exact inverse over RatFunc by Gauss-Jordan elimination.
RatMatrix invert(RatMatrix m);

/// Optional branch flip: the pair (i, j) whose ratio d_i/d_j changes sign.
using BranchFlip = std::optional<std::pair<int, int>>;

/// dt-coefficient of Psi dPsi^{-1} on the q-line, from Psi = D M with
/// M^i_mu = p_i^{mu-r} and d_i/d_j = zeta^{i-j}.
RatMatrix connection_form(const CanonicalFrame& f, BranchFlip flip = std::nullopt);
/// The displayed off-diagonal closed form zeta^{j-i}/(r+1)^2 sum_mu mu xi^{mu(j-i)}; zero on the diagonal.
RatMatrix connection_closed_form(const Context& ctx);

/// R1_ij = conn_ij / (p_i - p_j) for i != j, zero on the diagonal.
Matrix r1_offdiagonal(const CanonicalFrame& f, const RatMatrix& conn);
/// The displayed closed form (-1)^r xi^{(j-i)/2} q^{1/(r+1)} a_i a_j S_{j-i} / ((r+1)^2 lambda (xi^j - xi^i)).
Matrix r1_offdiagonal_closed_form(const CanonicalFrame& f);

/// sum_mu mu x^mu for mu = 1..r.
CycNumber mu_sum(const Context& ctx, long exponent);

struct XiConstant {
  CycNumber value;        // sum_k g_k(xi)
  CycNumber twisted_sum;  // sum_k (xi^k + 1) g_k(xi)
};

/// Brute force over Q(zeta_{r+1}).
XiConstant xi_constant(int r);
/// -(r+2)(r+1)^2 r / 24.
Rational xi_constant_closed_form(int r);

/// dt-coefficient of dR1_ii, which is -sum_j conn_ij R1_ji.
std::vector<EquivScalar> r1_diagonal_derivative(const RatMatrix& conn, const Matrix& r1_off);
/// Integrates dR1_ii in t with zero constant; a nonzero w^0 term is a flatness violation.
std::vector<EquivScalar> r1_diagonal(const RatMatrix& conn, const Matrix& r1_off);
/// (-1)^r Xi_r/((r+1)^3 lambda) (xi^{-i} w + xi^i w^{-1}).
std::vector<EquivScalar> r1_diagonal_closed_form(const Context& ctx);

/// Applies integrate_in_t (strict) to every lambda-coefficient.
EquivScalar integrate_equiv(const EquivScalar& x);

}  // namespace flopgw::givental
