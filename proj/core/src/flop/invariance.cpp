#include "flopgw/flop/invariance.hpp"

#include "flopgw/algebra/calculus.hpp"
#include "flopgw/cohomology/coh_ring.hpp"
#include "flopgw/error.hpp"
#include "flopgw/flop/g_function.hpp"

namespace flopgw::flop {

using algebra::CycNumber;

Rational genus_one_kappa(int r) { return Rational(-parity_sign(r) * (r + 1), 24); }

bool genus1_npoint_invariance(int /*r*/, int n, const RatFunc& dg_coeff) {
  if (n < 2) throw DomainError("n must be at least 2");
  RatFunc lhs = dg_coeff;
  for (int k = 1; k < n; ++k) lhs = lhs.delta();
  const RatFunc rhs = lhs.reciprocal();
  return lhs == RatFunc(n % 2 == 0 ? 1 : -1) * rhs;
}

bool genus1_npoint_invariance(int r, int n) {
  return genus1_npoint_invariance(r, n, RatFunc(CycNumber(genus_one_kappa(r))) * g_function(r).value);
}

Rational genus1_onepoint_defect(int r, const Rational& kappa, const Rational& chern_shift) {
  const auto h = cohomology::CohClass::h(r);
  const auto fh = cohomology::CohClass::xi(r) - h;
  const Rational classical = cohomology::genus1_degree0(h) - cohomology::genus1_degree0(fh);
  const Rational quantum = kappa * reflection_sum(r).constant_value().to_rational();
  return classical + Rational(-1, 24) * chern_shift + quantum;
}

Rational genus1_onepoint_defect(int r) { return genus1_onepoint_defect(r, genus_one_kappa(r)); }

bool fp_generating_invariance(int m, long pattern_order) {
  if (m < 1 || m % 2 == 0) throw DomainError("m = 2g - 3 must be odd and positive");
  if (!reciprocal_antisymmetry(1, m)) return false;
  const auto s = algebra::series_expand(delta_power_g(1, m), pattern_order);
  for (long d = 1; d <= pattern_order; ++d) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(m));
    if (!(s[static_cast<std::size_t>(d)] == CycNumber(Rational(p, mpz_class(1))))) return false;
  }
  return s[0].is_zero();
}

GFit g_polynomial_fit(int r, const std::vector<Rational>& series, int d2, int degree_bound) {
  if (d2 < 0 || degree_bound < 0) throw DomainError("d2 and degree bound must be nonnegative");
  const std::size_t unknowns = static_cast<std::size_t>(degree_bound + 1 + d2);
  if (series.size() < unknowns + 3) throw DomainError("not enough coefficients to determine the fit");
  const long L = static_cast<long>(series.size()) - 1;
  const RatFunc g = g_function(r).value;

  // Columns: G^0..G^K, then q^1..q^{d2}; rows: coefficients of q^0..q^L.
  std::vector<std::vector<Rational>> cols;
  for (int k = 0; k <= degree_bound; ++k) {
    std::vector<Rational> col;
    for (const auto& c : algebra::series_expand(g.pow(k), L)) col.push_back(c.to_rational());
    cols.push_back(std::move(col));
  }
  for (int j = 1; j <= d2; ++j) {
    std::vector<Rational> col(static_cast<std::size_t>(L) + 1, Rational(0));
    if (j <= L) col[static_cast<std::size_t>(j)] = Rational(1);
    cols.push_back(std::move(col));
  }
  const std::size_t rows = static_cast<std::size_t>(L) + 1;
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(unknowns + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) aug[i][j] = cols[j][i];
    aug[i][unknowns] = series[i];
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && aug[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(aug[piv], aug[rank]);
    const Rational inv = aug[rank][col].inverse();
    for (auto& x : aug[rank]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || aug[i][col].is_zero()) continue;
      const Rational f = aug[i][col];
      for (std::size_t k = 0; k <= unknowns; ++k) aug[i][k] -= f * aug[rank][k];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (!aug[i][unknowns].is_zero())
      throw VerificationFailure("series is not of finite polynomial form in G for the given bounds");
  if (rank < unknowns) throw DomainError("fit is underdetermined");
  std::vector<Rational> sol(unknowns);
  for (std::size_t i = 0; i < rank; ++i) sol[pivot_col[i]] = aug[i][unknowns];

  GFit out;
  std::vector<Rational> p0(sol.begin(), sol.begin() + degree_bound + 1);
  while (!p0.empty() && p0.back().is_zero()) p0.pop_back();
  out.polys.push_back(std::move(p0));
  for (int j = 1; j <= d2; ++j) {
    const Rational c = sol[static_cast<std::size_t>(degree_bound + j)];
    out.polys.push_back(c.is_zero() ? std::vector<Rational>{} : std::vector<Rational>{c});
  }
  return out;
}

}  // namespace flopgw::flop
