#pragma once

#include <map>
#include <string>
#include <vector>

#include "flopgw/quantize/loop_space.hpp"

namespace flopgw::quantize {

/// hbar^e * prod (q^i_k)^n.
struct FockMonomial {
  int hbar = 0;
  std::map<QuadHamiltonian::Index, int> q;
  auto operator<=>(const FockMonomial&) const = default;
};

/// Polynomial in the q^i_k and hbar^{+-1} with rational coefficients.
class FockPolynomial {
 public:
  FockPolynomial() = default;
  static FockPolynomial constant(const Rational& c);
  static FockPolynomial variable(int i, int k);
  static FockPolynomial hbar_power(int e);
  static FockPolynomial monomial(FockMonomial m, const Rational& c = Rational(1));

  const std::map<FockMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Value when the polynomial is a plain rational constant; throws otherwise.
  Rational scalar_value() const;

  FockPolynomial derivative(int i, int k) const;
  FockPolynomial times_variable(int i, int k) const;
  FockPolynomial times_hbar(int e) const;

  FockPolynomial operator-() const;
  FockPolynomial& operator+=(const FockPolynomial& o);
  FockPolynomial& operator-=(const FockPolynomial& o);
  friend FockPolynomial operator+(FockPolynomial a, const FockPolynomial& b) { return a += b; }
  friend FockPolynomial operator-(FockPolynomial a, const FockPolynomial& b) { return a -= b; }
  friend FockPolynomial operator*(const FockPolynomial& a, const FockPolynomial& b);
  friend FockPolynomial operator*(const Rational& c, FockPolynomial f);
  friend bool operator==(const FockPolynomial&, const FockPolynomial&) = default;
  std::string to_string() const;

 private:
  void add_term(const FockMonomial& m, const Rational& c);
  std::map<FockMonomial, Rational> terms_;
};

/// Second-order differential operator given by the quantization table:
/// p_a p_b -> hbar d_a d_b, q_a p_b -> q_a d_b, q_a q_b -> q_a q_b / hbar.
class QuantizedOperator {
 public:
  explicit QuantizedOperator(QuadHamiltonian h) : h_(std::move(h)) {}
  const QuadHamiltonian& hamiltonian() const { return h_; }
  FockPolynomial operator()(const FockPolynomial& f) const;

 private:
  QuadHamiltonian h_;
};

QuantizedOperator quantize(const QuadHamiltonian& h);

/// [P1^, P2^] - {P1, P2}^ as a scalar; FormalismViolation if it is not one.
Rational commutator_cocycle(const QuadHamiltonian& p1, const QuadHamiltonian& p2);
/// Same, against a supplied classical bracket.
Rational commutator_cocycle(const QuadHamiltonian& p1, const QuadHamiltonian& p2, const QuadHamiltonian& bracket);

/// Monomials of total degree <= 2 in the given variables, including 1.
std::vector<FockPolynomial> spanning_set(const std::vector<QuadHamiltonian::Index>& vars);

}  // namespace flopgw::quantize
