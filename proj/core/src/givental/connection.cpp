#include "flopgw/givental/connection.hpp"

#include "flopgw/algebra/calculus.hpp"
#include "flopgw/algebra/cyclotomic.hpp"
#include "flopgw/error.hpp"

namespace flopgw::givental {

RatMatrix invert(RatMatrix m) {
  const std::size_t n = m.size();
  const int root = n ? m[0][0].root() : 1;
  RatMatrix inv(n, std::vector<RatFunc>(n, RatFunc(algebra::CycNumber(0), root)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = RatFunc(algebra::CycNumber(1), root);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw DivisionByZero("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const RatFunc s = m[col][col].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      m[col][k] *= s;
      inv[col][k] *= s;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const RatFunc f = m[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[row][k] -= f * m[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

RatMatrix connection_form(const CanonicalFrame& f, BranchFlip flip) {
  const auto& ctx = f.ctx;
  const auto n = static_cast<std::size_t>(ctx.m);
  // M = A Lambda with A^i_mu = a_i^{r-mu}, so M dM^{-1} = -(dA) A^{-1}.
  RatMatrix A(n, std::vector<RatFunc>(n));
  RatMatrix dA(n, std::vector<RatFunc>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t mu = 0; mu < n; ++mu) {
      A[i][mu] = f.a[i].pow(ctx.r - static_cast<long>(mu));
      dA[i][mu] = A[i][mu].delta();
    }
  const RatMatrix Ainv = invert(A);
  const RatFunc dlog_d = ctx.constant(CycNumber(Rational(ctx.r, 2 * ctx.m)));
  RatMatrix out(n, std::vector<RatFunc>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatFunc acc = ctx.constant(CycNumber(0));
      for (std::size_t k = 0; k < n; ++k) acc -= dA[i][k] * Ainv[k][j];
      CycNumber ratio = ctx.zeta(static_cast<long>(i) - static_cast<long>(j));
      if (flip) {
        const auto [fi, fj] = *flip;
        if ((static_cast<int>(i) == fi && static_cast<int>(j) == fj) ||
            (static_cast<int>(i) == fj && static_cast<int>(j) == fi))
          ratio = -ratio;
      }
      out[i][j] = ctx.constant(ratio) * acc;
      if (i == j) out[i][j] -= dlog_d;
    }
  return out;
}

CycNumber mu_sum(const Context& ctx, long exponent) {
  CycNumber s(0);
  for (int mu = 1; mu <= ctx.r; ++mu) s += CycNumber(mu) * ctx.xi(mu * exponent);
  return s;
}

RatMatrix connection_closed_form(const Context& ctx) {
  const auto n = static_cast<std::size_t>(ctx.m);
  RatMatrix out(n, std::vector<RatFunc>(n, ctx.constant(CycNumber(0))));
  const CycNumber scale(Rational(1, ctx.m * ctx.m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const long d = static_cast<long>(j) - static_cast<long>(i);
      out[i][j] = ctx.constant(ctx.zeta(d) * scale * mu_sum(ctx, d));
    }
  return out;
}

Matrix r1_offdiagonal(const CanonicalFrame& f, const RatMatrix& conn) {
  const auto n = f.p.size();
  Matrix out(n, std::vector<EquivScalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      out[i][j] = EquivScalar(conn[i][j]) * (f.p[i] - f.p[j]).inverse();
    }
  return out;
}

Matrix r1_offdiagonal_closed_form(const CanonicalFrame& f) {
  const auto& ctx = f.ctx;
  const auto n = static_cast<std::size_t>(ctx.m);
  Matrix out(n, std::vector<EquivScalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const long li = static_cast<long>(i), lj = static_cast<long>(j);
      const CycNumber c = CycNumber(ctx.sign()) * ctx.zeta(lj - li) * mu_sum(ctx, lj - li) /
                          (CycNumber(ctx.m * ctx.m) * (ctx.xi(lj) - ctx.xi(li)));
      out[i][j] = EquivScalar::lambda_power(-1, ctx.w(1, c) * f.a[i] * f.a[j]);
    }
  return out;
}

XiConstant xi_constant(int r) {
  if (r < 1) throw DomainError("r must be at least 1");
  auto field = algebra::CyclotomicField::make(r + 1);
  auto xi = [&](long k) { return CycNumber::zeta(field, k); };
  auto S = [&](long k) {
    CycNumber s(0);
    for (int mu = 1; mu <= r; ++mu) s += CycNumber(mu) * xi(mu * k);
    return s;
  };
  XiConstant out{CycNumber(0), CycNumber(0)};
  for (int k = 1; k <= r; ++k) {
    const CycNumber g = (xi(k) - CycNumber(1)).inverse() * S(k) * S(-k);
    out.value += g;
    out.twisted_sum += (xi(k) + CycNumber(1)) * g;
  }
  return out;
}

Rational xi_constant_closed_form(int r) { return Rational(-(r + 2) * (r + 1) * (r + 1) * r, 24); }

std::vector<EquivScalar> r1_diagonal_derivative(const RatMatrix& conn, const Matrix& r1_off) {
  const auto n = conn.size();
  std::vector<EquivScalar> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      out[i] -= EquivScalar(conn[i][j]) * r1_off[j][i];
    }
  return out;
}

EquivScalar integrate_equiv(const EquivScalar& x) {
  EquivScalar out;
  for (const auto& [k, c] : x.terms()) out += EquivScalar::lambda_power(k, algebra::integrate_in_t(c));
  return out;
}

std::vector<EquivScalar> r1_diagonal(const RatMatrix& conn, const Matrix& r1_off) {
  std::vector<EquivScalar> out;
  for (const auto& d : r1_diagonal_derivative(conn, r1_off)) out.push_back(integrate_equiv(d));
  return out;
}

std::vector<EquivScalar> r1_diagonal_closed_form(const Context& ctx) {
  const Rational xi_r = xi_constant_closed_form(ctx.r);
  const CycNumber scale(Rational(ctx.sign()) * xi_r / Rational(ctx.m).pow(3));
  std::vector<EquivScalar> out;
  for (int i = 0; i <= ctx.r; ++i) {
    RatFunc c = ctx.w(1, scale * ctx.xi(-i)) + ctx.w(-1, scale * ctx.xi(i));
    out.push_back(EquivScalar::lambda_power(-1, c));
  }
  return out;
}

}  // namespace flopgw::givental
