#pragma once

#include <stdexcept>
#include <string>

namespace flopgw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Division by zero, or inversion of a non-invertible element.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A Taylor or binomial expansion was requested where none exists.
class ExpansionError : public Error {
 public:
  using Error::Error;
};

/// Integration in t hit a nonzero w^0 term.
class NonIntegrableConstant : public Error {
 public:
  using Error::Error;
};

/// A non-equivariant limit was taken while negative powers of lambda remain.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold exactly produced a nonzero residual.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// A quantized commutator produced a non-scalar defect.
class FormalismViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace flopgw
