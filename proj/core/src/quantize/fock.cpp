#include "flopgw/quantize/fock.hpp"

#include <set>
#include <sstream>

#include "flopgw/error.hpp"

namespace flopgw::quantize {

FockPolynomial FockPolynomial::constant(const Rational& c) { return monomial({}, c); }

FockPolynomial FockPolynomial::variable(int i, int k) {
  FockMonomial m;
  m.q[{i, k}] = 1;
  return monomial(m);
}

FockPolynomial FockPolynomial::hbar_power(int e) {
  FockMonomial m;
  m.hbar = e;
  return monomial(m);
}

FockPolynomial FockPolynomial::monomial(FockMonomial m, const Rational& c) {
  FockPolynomial out;
  out.add_term(m, c);
  return out;
}

void FockPolynomial::add_term(const FockMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational FockPolynomial::scalar_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == FockMonomial{}) return terms_.begin()->second;
  throw DomainError("not a scalar: " + to_string());
}

FockPolynomial FockPolynomial::derivative(int i, int k) const {
  FockPolynomial out;
  for (const auto& [m, c] : terms_) {
    auto it = m.q.find({i, k});
    if (it == m.q.end()) continue;
    FockMonomial d = m;
    const int n = it->second;
    if (n == 1) d.q.erase({i, k});
    else d.q[{i, k}] = n - 1;
    out.add_term(d, c * Rational(n));
  }
  return out;
}

FockPolynomial FockPolynomial::times_variable(int i, int k) const {
  FockPolynomial out;
  for (const auto& [m, c] : terms_) {
    FockMonomial d = m;
    ++d.q[{i, k}];
    out.add_term(d, c);
  }
  return out;
}

FockPolynomial FockPolynomial::times_hbar(int e) const {
  FockPolynomial out;
  for (const auto& [m, c] : terms_) {
    FockMonomial d = m;
    d.hbar += e;
    out.add_term(d, c);
  }
  return out;
}

FockPolynomial FockPolynomial::operator-() const { return Rational(-1) * *this; }

FockPolynomial& FockPolynomial::operator+=(const FockPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FockPolynomial& FockPolynomial::operator-=(const FockPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FockPolynomial operator*(const FockPolynomial& a, const FockPolynomial& b) {
  FockPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      FockMonomial m = ma;
      m.hbar += mb.hbar;
      for (const auto& [v, n] : mb.q) m.q[v] += n;
      out.add_term(m, ca * cb);
    }
  return out;
}

FockPolynomial operator*(const Rational& c, FockPolynomial f) {
  if (c.is_zero()) return FockPolynomial();
  for (auto& [m, x] : f.terms_) x *= c;
  return f;
}

std::string FockPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (m.hbar != 0) os << "*hbar^" << m.hbar;
    for (const auto& [v, n] : m.q) {
      os << "*q" << v.first << "_" << v.second;
      if (n != 1) os << "^" << n;
    }
  }
  return os.str();
}

FockPolynomial QuantizedOperator::operator()(const FockPolynomial& f) const {
  FockPolynomial out;
  for (const auto& [key, c] : h_.pp())
    out += c * f.derivative(key.second.first, key.second.second).derivative(key.first.first, key.first.second).times_hbar(1);
  for (const auto& [key, c] : h_.pq())
    out += c * f.derivative(key.second.first, key.second.second).times_variable(key.first.first, key.first.second);
  for (const auto& [key, c] : h_.qq())
    out += c * f.times_variable(key.first.first, key.first.second)
                   .times_variable(key.second.first, key.second.second)
                   .times_hbar(-1);
  return out;
}

QuantizedOperator quantize(const QuadHamiltonian& h) { return QuantizedOperator(h); }

std::vector<FockPolynomial> spanning_set(const std::vector<QuadHamiltonian::Index>& vars) {
  std::vector<FockPolynomial> out{FockPolynomial::constant(Rational(1))};
  for (std::size_t a = 0; a < vars.size(); ++a) {
    const auto x = FockPolynomial::variable(vars[a].first, vars[a].second);
    out.push_back(x);
    for (std::size_t b = a; b < vars.size(); ++b) out.push_back(x.times_variable(vars[b].first, vars[b].second));
  }
  return out;
}

Rational commutator_cocycle(const QuadHamiltonian& p1, const QuadHamiltonian& p2) {
  return commutator_cocycle(p1, p2, poisson_bracket(p1, p2));
}

Rational commutator_cocycle(const QuadHamiltonian& p1, const QuadHamiltonian& p2, const QuadHamiltonian& classical) {
  std::set<QuadHamiltonian::Index> idx;
  for (const auto* h : {&p1, &p2, &classical})
    for (const auto* b : {&h->pp(), &h->pq(), &h->qq()})
      for (const auto& [key, c] : *b) {
        idx.insert(key.first);
        idx.insert(key.second);
      }
  const auto a = quantize(p1);
  const auto b = quantize(p2);
  const auto bracket = quantize(classical);
  auto defect = [&](const FockPolynomial& f) { return a(b(f)) - b(a(f)) - bracket(f); };
  const FockPolynomial one = FockPolynomial::constant(Rational(1));
  Rational c;
  try {
    c = defect(one).scalar_value();
  } catch (const DomainError&) {
    throw FormalismViolation("quantization defect on 1 is not a scalar: " + defect(one).to_string());
  }
  for (const auto& f : spanning_set({idx.begin(), idx.end()})) {
    const auto d = defect(f);
    if (d != c * f) throw FormalismViolation("quantization defect is not central on " + f.to_string() + ": " + d.to_string());
  }
  return c;
}

}  // namespace flopgw::quantize
