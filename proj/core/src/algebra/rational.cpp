#include "flopgw/algebra/rational.hpp"

#include <ostream>

#include "flopgw/error.hpp"

namespace flopgw::algebra {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(mpz_class(std::string(text)), mpz_class(1));
    return Rational(mpz_class(std::string(text.substr(0, slash))),
                    mpz_class(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw DomainError("cannot parse rational '" + std::string(text) + "'");
  }
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_short_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return to_string();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_short_string();
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out, mpz_class(1));
}

Rational binomial(const Rational& alpha, long k) {
  if (k < 0) return Rational(0);
  Rational out(1);
  for (long i = 0; i < k; ++i) out *= (alpha - Rational(i)) / Rational(i + 1);
  return out;
}

}  // namespace flopgw::algebra
