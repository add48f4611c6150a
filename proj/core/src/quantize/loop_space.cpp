#include "flopgw/quantize/loop_space.hpp"

#include <set>
#include <sstream>

#include "flopgw/error.hpp"

namespace flopgw::quantize {

namespace {

RatMat identity(int n) {
  RatMat m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

RatMat invert(RatMat a) {
  const std::size_t n = a.size();
  RatMat inv = identity(static_cast<int>(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) throw DomainError("metric is degenerate");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const Rational s = a[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Rational sign(int k) { return Rational(k % 2 == 0 ? 1 : -1); }

void add_to(QuadHamiltonian::Block& b, std::pair<QuadHamiltonian::Index, QuadHamiltonian::Index> key, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = b.emplace(key, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) b.erase(it);
}

std::vector<Var> darboux_variables(int dim, int cutoff) {
  std::vector<Var> out;
  for (int p = 0; p <= 1; ++p)
    for (int i = 0; i < dim; ++i)
      for (int k = 0; k <= cutoff; ++k) out.push_back({p == 1, i, k});
  return out;
}

}  // namespace

Metric::Metric(int dim) : g_(identity(dim)), inv_(identity(dim)) {
  if (dim < 1) throw DomainError("dimension must be positive");
}

Metric::Metric(RatMat g) : g_(std::move(g)) {
  const std::size_t n = g_.size();
  if (n == 0) throw DomainError("dimension must be positive");
  for (const auto& row : g_)
    if (row.size() != n) throw DomainError("metric must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (g_[i][j] != g_[j][i]) throw DomainError("metric must be symmetric");
  inv_ = invert(g_);
}

LoopVector::LoopVector(int dim, int cutoff) : dim_(dim), cutoff_(cutoff) {
  if (dim < 1 || cutoff < 0) throw DomainError("loop space needs dim >= 1 and cutoff >= 0");
}

LoopVector LoopVector::basis(int dim, int cutoff, int i, int k, Rational c) {
  LoopVector v(dim, cutoff);
  if (!v.in_range(i, k)) throw DomainError("basis slot outside the window");
  v.add(i, k, c);
  return v;
}

Rational LoopVector::coeff(int i, int k) const {
  auto it = coeffs_.find({i, k});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void LoopVector::add(int i, int k, const Rational& c) {
  if (c.is_zero() || !in_range(i, k)) return;
  auto [it, fresh] = coeffs_.emplace(Slot{i, k}, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

LoopVector& LoopVector::operator+=(const LoopVector& o) {
  if (o.dim_ != dim_ || o.cutoff_ != cutoff_) throw DomainError("loop vectors with different windows");
  for (const auto& [s, c] : o.coeffs_) add(s.first, s.second, c);
  return *this;
}

LoopVector operator*(const Rational& c, LoopVector v) {
  if (c.is_zero()) return LoopVector(v.dim_, v.cutoff_);
  for (auto& [s, x] : v.coeffs_) x *= c;
  return v;
}

bool operator==(const LoopVector& a, const LoopVector& b) {
  return a.dim_ == b.dim_ && a.cutoff_ == b.cutoff_ && a.coeffs_ == b.coeffs_;
}

std::string LoopVector::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*T" << s.first << "*z^" << s.second;
  }
  return os.str();
}

Rational symplectic_form(const LoopVector& f, const LoopVector& g, const Metric& metric) {
  if (f.dim() != g.dim() || f.cutoff() != g.cutoff()) throw DomainError("loop vectors with different windows");
  if (metric.dim() != f.dim()) throw DomainError("metric dimension mismatch");
  Rational out(0);
  for (const auto& [s, c] : f.coefficients()) {
    const auto [i, k] = s;
    for (int j = 0; j < f.dim(); ++j) {
      if (metric(i, j).is_zero()) continue;
      const Rational other = g.coeff(j, -1 - k);
      if (!other.is_zero()) out += sign(k) * c * metric(i, j) * other;
    }
  }
  return out;
}

Rational symplectic_form(const LoopVector& f, const LoopVector& g) { return symplectic_form(f, g, Metric(f.dim())); }

LaurentMatrix z_power(int dim, int n, const Rational& c) {
  RatMat m = identity(dim);
  for (int i = 0; i < dim; ++i) m[i][i] = c;
  return z_power_times(n, m);
}

LaurentMatrix z_power_times(int n, const RatMat& m) { return LaurentMatrix{{n, m}}; }

LaurentMatrix commutator(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix out;
  auto accumulate = [&](const LaurentMatrix& x, const LaurentMatrix& y, const Rational& s) {
    for (const auto& [na, ma] : x)
      for (const auto& [nb, mb] : y) {
        const std::size_t n = ma.size();
        auto& target = out[na + nb];
        if (target.empty()) target.assign(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) target[i][j] += s * ma[i][k] * mb[k][j];
      }
  };
  accumulate(a, b, Rational(1));
  accumulate(b, a, Rational(-1));
  for (auto it = out.begin(); it != out.end();) {
    bool zero = true;
    for (const auto& row : it->second)
      for (const auto& x : row) zero = zero && x.is_zero();
    it = zero ? out.erase(it) : std::next(it);
  }
  return out;
}

LoopVector apply(const LaurentMatrix& a, const LoopVector& f) {
  LoopVector out(f.dim(), f.cutoff());
  for (const auto& [n, m] : a) {
    if (static_cast<int>(m.size()) != f.dim()) throw DomainError("operator dimension mismatch");
    for (const auto& [s, c] : f.coefficients())
      for (int i = 0; i < f.dim(); ++i)
        if (!m[i][s.first].is_zero()) out.add(i, s.second + n, m[i][s.first] * c);
  }
  return out;
}

bool is_infinitesimal_symplectic(const LaurentMatrix& a, int dim, int cutoff, const Metric& metric) {
  std::vector<LoopVector> basis;
  for (int i = 0; i < dim; ++i)
    for (int k = -cutoff - 1; k <= cutoff; ++k) basis.push_back(LoopVector::basis(dim, cutoff, i, k));
  std::vector<LoopVector> images;
  for (const auto& e : basis) images.push_back(quantize::apply(a, e));
  for (std::size_t x = 0; x < basis.size(); ++x)
    for (std::size_t y = 0; y < basis.size(); ++y)
      if (!(symplectic_form(images[x], basis[y], metric) + symplectic_form(basis[x], images[y], metric)).is_zero())
        return false;
  return true;
}

bool is_infinitesimal_symplectic(const LaurentMatrix& a, int dim, int cutoff) {
  return is_infinitesimal_symplectic(a, dim, cutoff, Metric(dim));
}

LoopVector darboux_vector(const Var& v, int cutoff, const Metric& metric) {
  LoopVector out(metric.dim(), cutoff);
  if (!v.is_p) {
    out.add(v.i, v.k, Rational(1));
    return out;
  }
  for (int j = 0; j < metric.dim(); ++j) out.add(j, -1 - v.k, sign(v.k + 1) * metric.inverse(v.i, j));
  return out;
}

void QuadHamiltonian::add(const Var& x, const Var& y, const Rational& c) {
  const Index a{x.i, x.k};
  const Index b{y.i, y.k};
  if (x.is_p == y.is_p) {
    add_to(x.is_p ? pp_ : qq_, a <= b ? std::make_pair(a, b) : std::make_pair(b, a), c);
    return;
  }
  add_to(pq_, x.is_p ? std::make_pair(b, a) : std::make_pair(a, b), c);
}

Rational QuadHamiltonian::coeff(const Var& x, const Var& y) const {
  QuadHamiltonian probe;
  probe.add(x, y, Rational(1));
  const auto& [block, mine] = !probe.pp_.empty() ? std::pair{&probe.pp_, &pp_}
                             : !probe.qq_.empty() ? std::pair{&probe.qq_, &qq_}
                                                  : std::pair{&probe.pq_, &pq_};
  auto it = mine->find(block->begin()->first);
  return it == mine->end() ? Rational(0) : it->second;
}

QuadHamiltonian QuadHamiltonian::restricted(int max_k) const {
  QuadHamiltonian out;
  auto copy = [&](const Block& from, Block& to) {
    for (const auto& [key, c] : from)
      if (key.first.second <= max_k && key.second.second <= max_k) to.emplace(key, c);
  };
  copy(pp_, out.pp_);
  copy(pq_, out.pq_);
  copy(qq_, out.qq_);
  return out;
}

QuadHamiltonian& QuadHamiltonian::operator+=(const QuadHamiltonian& o) {
  for (const auto& [k, c] : o.pp_) add_to(pp_, k, c);
  for (const auto& [k, c] : o.pq_) add_to(pq_, k, c);
  for (const auto& [k, c] : o.qq_) add_to(qq_, k, c);
  return *this;
}

QuadHamiltonian operator*(const Rational& c, QuadHamiltonian h) {
  if (c.is_zero()) return QuadHamiltonian();
  for (auto* b : {&h.pp_, &h.pq_, &h.qq_})
    for (auto& [k, x] : *b) x *= c;
  return h;
}

bool operator==(const QuadHamiltonian& a, const QuadHamiltonian& b) {
  return a.pp_ == b.pp_ && a.pq_ == b.pq_ && a.qq_ == b.qq_;
}

std::string QuadHamiltonian::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto name = [](char v, const Index& x) { return std::string(1, v) + std::to_string(x.first) + "_" + std::to_string(x.second); };
  auto emit = [&](const Block& b, char u, char v) {
    for (const auto& [key, c] : b) {
      if (!first) os << " + ";
      first = false;
      os << c << "*" << name(u, key.first) << "*" << name(v, key.second);
    }
  };
  emit(pp_, 'p', 'p');
  emit(pq_, 'q', 'p');
  emit(qq_, 'q', 'q');
  return os.str();
}

QuadHamiltonian hamiltonian_of(const LaurentMatrix& a, int dim, int cutoff, const Metric& metric) {
  if (!is_infinitesimal_symplectic(a, dim, cutoff, metric)) throw DomainError("operator is not infinitesimally symplectic");
  const auto vars = darboux_variables(dim, cutoff);
  std::vector<LoopVector> e;
  std::vector<LoopVector> ae;
  for (const auto& v : vars) {
    e.push_back(darboux_vector(v, cutoff, metric));
    ae.push_back(quantize::apply(a, e.back()));
  }
  QuadHamiltonian out;
  for (std::size_t x = 0; x < vars.size(); ++x)
    for (std::size_t y = x; y < vars.size(); ++y) {
      Rational c = symplectic_form(ae[x], e[y], metric);
      if (x == y) c *= Rational(1, 2);
      out.add(vars[x], vars[y], c);
    }
  return out;
}

QuadHamiltonian hamiltonian_of(const LaurentMatrix& a, int dim, int cutoff) {
  return hamiltonian_of(a, dim, cutoff, Metric(dim));
}

namespace {

using Linear = std::map<Var, Rational>;

void add_linear(Linear& l, const Var& v, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = l.emplace(v, c);
  if (!fresh) it->second += c;
}

// Partial derivative of h in the variable `by`, as a linear form.
Linear gradient(const QuadHamiltonian& h, const Var& by) {
  Linear out;
  const QuadHamiltonian::Index at{by.i, by.k};
  auto square_block = [&](const QuadHamiltonian::Block& b, bool is_p) {
    for (const auto& [key, c] : b) {
      if (key.first == at) add_linear(out, {is_p, key.second.first, key.second.second}, c);
      if (key.second == at) add_linear(out, {is_p, key.first.first, key.first.second}, c);
    }
  };
  if (by.is_p) {
    square_block(h.pp(), true);
    for (const auto& [key, c] : h.pq())
      if (key.second == at) add_linear(out, {false, key.first.first, key.first.second}, c);
  } else {
    square_block(h.qq(), false);
    for (const auto& [key, c] : h.pq())
      if (key.first == at) add_linear(out, {true, key.second.first, key.second.second}, c);
  }
  return out;
}

std::set<QuadHamiltonian::Index> indices(const QuadHamiltonian& h) {
  std::set<QuadHamiltonian::Index> out;
  for (const auto* b : {&h.pp(), &h.pq(), &h.qq()})
    for (const auto& [key, c] : *b) {
      out.insert(key.first);
      out.insert(key.second);
    }
  return out;
}

}  // namespace

QuadHamiltonian poisson_bracket(const QuadHamiltonian& f, const QuadHamiltonian& g) {
  auto idx = indices(f);
  idx.merge(indices(g));
  QuadHamiltonian out;
  auto add_product = [&](const Linear& x, const Linear& y, const Rational& s) {
    for (const auto& [vx, cx] : x)
      for (const auto& [vy, cy] : y) out.add(vx, vy, s * cx * cy);
  };
  for (const auto& [i, k] : idx) {
    const Var p{true, i, k};
    const Var q{false, i, k};
    add_product(gradient(f, p), gradient(g, q), Rational(1));
    add_product(gradient(f, q), gradient(g, p), Rational(-1));
  }
  return out;
}

LoopVector dilaton_shift(const LoopVector& q, int unit) {
  if (!q.in_range(unit, 1)) throw DomainError("dilaton shift needs the unit slot at z^1 inside the window");
  LoopVector t = q;
  t.add(unit, 1, Rational(1));
  return t;
}

LoopVector dilaton_unshift(const LoopVector& t, int unit) {
  if (!t.in_range(unit, 1)) throw DomainError("dilaton shift needs the unit slot at z^1 inside the window");
  LoopVector q = t;
  q.add(unit, 1, Rational(-1));
  return q;
}

}  // namespace flopgw::quantize
