#include "flopgw/batyrev/quantum_ring.hpp"

#include <sstream>

#include "flopgw/error.hpp"

namespace flopgw::batyrev {

namespace {

void add_to(Poly2& p, std::pair<int, int> e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

Poly2 mul(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_to(out, {ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

Poly2 d_poly(int r) { return Poly2{{{0, 0}, Rational(1)}, {{1, 0}, Rational(r % 2 == 0 ? 1 : -1)}}; }

Poly2 d_power(int r, int k) {
  Poly2 out{{{0, 0}, Rational(1)}};
  const Poly2 d = d_poly(r);
  for (int i = 0; i < k; ++i) out = mul(out, d);
  return out;
}

// Exact division by D = 1 + s q1 if possible.
bool divide_by_d(int r, const Poly2& p, Poly2& out) {
  const Rational s(r % 2 == 0 ? 1 : -1);
  std::map<int, std::map<int, Rational>> by_q2;
  for (const auto& [e, c] : p) by_q2[e.second][e.first] = c;
  out.clear();
  for (auto& [j, col] : by_q2) {
    // Synthetic division of sum c_i q1^i by s q1 + 1 from the top.
    int top = col.rbegin()->first;
    std::map<int, Rational> rem = col;
    for (int i = top; i >= 1; --i) {
      auto it = rem.find(i);
      if (it == rem.end() || it->second.is_zero()) continue;
      const Rational quot = it->second / s;
      add_to(out, {i - 1, j}, quot);
      rem[i - 1] -= quot;
      rem.erase(i);
    }
    auto it = rem.find(0);
    if (it != rem.end() && !it->second.is_zero()) return false;
  }
  return true;
}

}  // namespace

LocPoly::LocPoly(int r, Poly2 num, int dpow) : r_(r), num_(std::move(num)), dpow_(dpow) {
  if (r < 1) throw DomainError("r must be at least 1");
  for (auto it = num_.begin(); it != num_.end();) it = it->second.is_zero() ? num_.erase(it) : std::next(it);
  normalize();
}

LocPoly LocPoly::constant(int r, Rational c) { return LocPoly(r, Poly2{{{0, 0}, std::move(c)}}); }

LocPoly LocPoly::monomial(int r, int i, int j, Rational c) { return LocPoly(r, Poly2{{{i, j}, std::move(c)}}); }

void LocPoly::normalize() {
  if (num_.empty()) {
    dpow_ = 0;
    return;
  }
  if (dpow_ < 0) {
    num_ = mul(num_, d_power(r_, -dpow_));
    dpow_ = 0;
  }
  Poly2 q;
  while (dpow_ > 0 && divide_by_d(r_, num_, q)) {
    num_ = q;
    --dpow_;
  }
}

std::complex<double> LocPoly::evaluate(std::complex<double> q1, std::complex<double> q2) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [e, c] : num_) acc += c.to_double() * std::pow(q1, e.first) * std::pow(q2, e.second);
  const std::complex<double> d = 1.0 + (r_ % 2 == 0 ? 1.0 : -1.0) * q1;
  return acc / std::pow(d, dpow_);
}

LocPoly LocPoly::operator-() const {
  LocPoly out = *this;
  for (auto& [e, c] : out.num_) c = -c;
  return out;
}

LocPoly& LocPoly::operator+=(const LocPoly& o) {
  if (o.num_.empty()) return *this;
  if (num_.empty()) return *this = o;
  if (o.r_ != r_) throw DomainError("LocPoly with different r");
  const int k = std::max(dpow_, o.dpow_);
  Poly2 a = dpow_ < k ? mul(num_, d_power(r_, k - dpow_)) : num_;
  const Poly2 b = o.dpow_ < k ? mul(o.num_, d_power(r_, k - o.dpow_)) : o.num_;
  for (const auto& [e, c] : b) add_to(a, e, c);
  num_ = std::move(a);
  dpow_ = k;
  normalize();
  return *this;
}

LocPoly& LocPoly::operator-=(const LocPoly& o) { return *this += -o; }

LocPoly operator*(const LocPoly& a, const LocPoly& b) {
  if (a.num_.empty() || b.num_.empty()) return LocPoly();
  if (a.r_ != b.r_) throw DomainError("LocPoly with different r");
  return LocPoly(a.r_, mul(a.num_, b.num_), a.dpow_ + b.dpow_);
}

bool operator==(const LocPoly& a, const LocPoly& b) { return (a - b).is_zero(); }

std::string LocPoly::to_string() const {
  if (num_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  os << '(';
  for (const auto& [e, c] : num_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*q1^" << e.first << "*q2^" << e.second;
  }
  os << ')';
  if (dpow_ > 0) os << "/D^" << dpow_;
  return os.str();
}

std::vector<std::pair<int, int>> ring_basis(int r) {
  if (r < 1) throw DomainError("r must be at least 1");
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= r; ++a)
    for (int b = 0; b <= r + 1; ++b) out.emplace_back(a, b);
  return out;
}

QRingElement reduce_monomial(int r, int a, int b) {
  if (a < 0 || b < 0) throw DomainError("negative exponent");
  QRingElement out;
  std::vector<std::tuple<int, int, LocPoly>> work{{a, b, LocPoly::constant(r, Rational(1))}};
  auto emit = [&](int x, int y, const LocPoly& c) {
    auto it = out.find({x, y});
    if (it == out.end()) out.emplace(std::make_pair(x, y), c);
    else it->second += c;
  };
  const LocPoly q1 = LocPoly::monomial(r, 1, 0);
  const LocPoly q2 = LocPoly::monomial(r, 0, 1);
  const LocPoly q2_over_d = LocPoly(r, Poly2{{{0, 1}, Rational(1)}}, 1);
  while (!work.empty()) {
    auto [x, y, c] = std::move(work.back());
    work.pop_back();
    if (x > r) {
      work.emplace_back(x - r - 1, y + r + 1, c * q1);
    } else if (y >= 2 * r + 2) {
      // y^{2r+2} = (q2/D) sum_k (-h)^k y^{r-k}
      for (int k = 0; k <= r; ++k)
        work.emplace_back(x + k, y - 2 * r - 2 + r - k, c * q2_over_d * LocPoly::constant(r, Rational(k % 2 ? -1 : 1)));
    } else if (y >= r + 2) {
      work.emplace_back(x, y - r - 2, c * q2);
      work.emplace_back(x + 1, y - 1, -c);
    } else {
      emit(x, y, c);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

LocMatrix quantum_mult_matrix(int r, Divisor d) {
  const auto B = ring_basis(r);
  const std::size_t n = B.size();
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[B[k]] = k;
  LocMatrix out(n, std::vector<LocPoly>(n));
  auto add_column = [&](std::size_t col, const QRingElement& e) {
    for (const auto& [mono, c] : e) out[index.at(mono)][col] += c;
  };
  for (std::size_t k = 0; k < n; ++k) {
    const auto [a, b] = B[k];
    add_column(k, reduce_monomial(r, a + 1, b));
    if (d == Divisor::xi) add_column(k, reduce_monomial(r, a, b + 1));
  }
  return out;
}

LocMatrix mat_mul(const LocMatrix& a, const LocMatrix& b) {
  const std::size_t n = a.size();
  LocMatrix out(n, std::vector<LocPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

bool mat_is_zero(const LocMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

LocMatrix classical_limit(const LocMatrix& m) {
  LocMatrix out = m;
  for (auto& row : out)
    for (auto& x : row) {
      if (x.is_zero()) continue;
      auto it = x.numerator().find({0, 0});
      x = it == x.numerator().end() ? LocPoly() : LocPoly::constant(x.r(), it->second);
    }
  return out;
}

LocPoly determinant(const LocMatrix& m) {
  const std::size_t n = m.size();
  if (n > 20) throw DomainError("determinant by subset expansion is limited to size 20");
  if (n == 0) throw DomainError("empty matrix");
  int r = 1;
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) r = x.r();
  // dp[mask] = signed sum over assignments of the first popcount(mask) rows to the columns in mask.
  std::vector<LocPoly> dp(std::size_t(1) << n);
  dp[0] = LocPoly::constant(r, Rational(1));
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t(1) << col) || m[row][col].is_zero()) continue;
      // sign from the number of used columns to the right of col
      const int above = __builtin_popcountll(mask >> col);
      const LocPoly term = dp[mask] * m[row][col];
      dp[mask | (std::size_t(1) << col)] += above % 2 ? -term : term;
    }
  }
  return dp.back();
}

std::vector<std::vector<std::complex<double>>> evaluate(const LocMatrix& m, std::complex<double> q1,
                                                        std::complex<double> q2) {
  std::vector<std::vector<std::complex<double>>> out(m.size(), std::vector<std::complex<double>>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m[i][j].is_zero() ? 0.0 : m[i][j].evaluate(q1, q2);
  return out;
}

}  // namespace flopgw::batyrev
