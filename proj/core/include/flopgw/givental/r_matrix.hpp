#pragma once

#include <vector>

#include "flopgw/givental/connection.hpp"

namespace flopgw::givental {

/// One order R_n of the R-matrix in the normalized canonical frame on the q-line.
struct RMatrixOrder {
  int n;
  Matrix entries;
  /// Diagonal integration constants used at this order (zero for odd n).
  std::vector<EquivScalar> diagonal_constants;
};

enum class DiagonalConstants {
  /// Even orders take the w^0 constants forced by unitarity.
  unitary,
  /// Every integration constant is zero.
  zero,
};

/// R_1..R_N. Off-diagonal entries solve
///   (R_n)_ij (p_i - p_j) = [conn R_{n-1} + delta R_{n-1}]_ij,
/// diagonals integrate delta (R_n)_ii = -[conn R_n]_ii. For even n the w^0
/// constants on the diagonal are the ones forced by unitarity at order n
/// unless `constants` is zero.
std::vector<RMatrixOrder> r_matrix_recursion(const CanonicalFrame& f, const RatMatrix& conn, int N,
                                             DiagonalConstants constants = DiagonalConstants::unitary);
std::vector<RMatrixOrder> r_matrix_recursion(int r, int N, DiagonalConstants constants = DiagonalConstants::unitary);

/// sum_{a+b=n} (-1)^a R_a^T R_b with R_0 = Id.
Matrix unitarity_residual(const std::vector<RMatrixOrder>& orders, int n);

bool is_zero(const Matrix& m);

}  // namespace flopgw::givental
