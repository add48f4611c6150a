#include "flopgw/givental/r_matrix.hpp"

#include "flopgw/error.hpp"

namespace flopgw::givental {

namespace {

Matrix identity(const Context& ctx) {
  const auto n = static_cast<std::size_t>(ctx.m);
  Matrix out(n, std::vector<EquivScalar>(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = EquivScalar(ctx.constant(CycNumber(1)));
  return out;
}

// w^0 part of every lambda-coefficient.
EquivScalar constant_part(const EquivScalar& x) {
  EquivScalar out;
  for (const auto& [k, c] : x.terms()) {
    const auto terms = c.laurent_terms();
    auto it = terms.find(0);
    if (it != terms.end()) out += EquivScalar::lambda_power(k, RatFunc(it->second, c.root()));
  }
  return out;
}

const Matrix& order_matrix(const std::vector<RMatrixOrder>& orders, const Matrix& id, int a) {
  return a == 0 ? id : orders.at(static_cast<std::size_t>(a - 1)).entries;
}

EquivScalar unitarity_entry(const std::vector<RMatrixOrder>& orders, const Matrix& id, int n, std::size_t i,
                            std::size_t j) {
  EquivScalar acc;
  const std::size_t dim = id.size();
  for (int a = 0; a <= n; ++a) {
    const Matrix& A = order_matrix(orders, id, a);
    const Matrix& B = order_matrix(orders, id, n - a);
    EquivScalar s;
    for (std::size_t k = 0; k < dim; ++k) {
      if (A[k][i].is_zero() || B[k][j].is_zero()) continue;
      s += A[k][i] * B[k][j];
    }
    if (a % 2) acc -= s;
    else acc += s;
  }
  return acc;
}

}  // namespace

std::vector<RMatrixOrder> r_matrix_recursion(const CanonicalFrame& f, const RatMatrix& conn, int N,
                                             DiagonalConstants constants) {
  if (N < 1) throw DomainError("R-matrix order must be at least 1");
  const auto& ctx = f.ctx;
  const auto dim = static_cast<std::size_t>(ctx.m);
  const Matrix id = identity(ctx);
  std::vector<RMatrixOrder> orders;
  Matrix prev = id;
  for (int n = 1; n <= N; ++n) {
    RMatrixOrder cur{n, Matrix(dim, std::vector<EquivScalar>(dim)), std::vector<EquivScalar>(dim)};
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        if (i == j) continue;
        EquivScalar rhs = prev[i][j].delta();
        for (std::size_t k = 0; k < dim; ++k)
          if (!prev[k][j].is_zero()) rhs += EquivScalar(conn[i][k]) * prev[k][j];
        cur.entries[i][j] = rhs * (f.p[i] - f.p[j]).inverse();
      }
    for (std::size_t i = 0; i < dim; ++i) {
      EquivScalar d;
      for (std::size_t j = 0; j < dim; ++j)
        if (j != i) d -= EquivScalar(conn[i][j]) * cur.entries[j][i];
      try {
        cur.entries[i][i] = integrate_equiv(d);
      } catch (const NonIntegrableConstant& e) {
        throw NonIntegrableConstant("R_" + std::to_string(n) + " diagonal entry " + std::to_string(i) + ": " +
                                    e.what());
      }
    }
    if (n % 2 == 0 && constants == DiagonalConstants::unitary) {
      orders.push_back(cur);
      for (std::size_t i = 0; i < dim; ++i) {
        const EquivScalar u = unitarity_entry(orders, id, n, i, i);
        const EquivScalar c = constant_part(u) * EquivScalar(ctx.constant(CycNumber(Rational(-1, 2))));
        cur.diagonal_constants[i] = c;
        cur.entries[i][i] += c;
      }
      orders.pop_back();
    }
    prev = cur.entries;
    orders.push_back(std::move(cur));
  }
  return orders;
}

std::vector<RMatrixOrder> r_matrix_recursion(int r, int N, DiagonalConstants constants) {
  const CanonicalFrame f = build_frame(r);
  return r_matrix_recursion(f, connection_form(f), N, constants);
}

Matrix unitarity_residual(const std::vector<RMatrixOrder>& orders, int n) {
  if (orders.empty()) throw DomainError("no R-matrix orders");
  if (n < 1 || n > static_cast<int>(orders.size())) throw DomainError("unitarity order out of range");
  const std::size_t dim = orders.front().entries.size();
  Matrix id(dim, std::vector<EquivScalar>(dim));
  for (std::size_t i = 0; i < dim; ++i) id[i][i] = EquivScalar(1);
  Matrix out(dim, std::vector<EquivScalar>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out[i][j] = unitarity_entry(orders, id, n, i, j);
  return out;
}

bool is_zero(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

}  // namespace flopgw::givental
