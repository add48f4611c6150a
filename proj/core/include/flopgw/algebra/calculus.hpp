#pragma once

#include <vector>

#include "flopgw/algebra/ratfunc.hpp"

namespace flopgw::algebra {

enum class IntegrationMode { strict, drop_constant };

/// Inverse of delta on Laurent polynomials in w: w^a -> (root/a) w^a.
/// Strict mode throws NonIntegrableConstant on a nonzero w^0 term.
RatFunc integrate_in_t(const RatFunc& f, IntegrationMode mode = IntegrationMode::strict);

/// Taylor coefficients of f in w at 0 through w^order.
std::vector<CycNumber> series_expand(const RatFunc& f, long order);

/// Coefficients c_0..c_K with f = sum c_k g^k exactly, where g(0) = 0 and
/// g is not identically zero. Throws DomainError if no such polynomial of
/// degree <= max_degree exists.
std::vector<CycNumber> fit_polynomial_in(const RatFunc& f, const RatFunc& g, long max_degree);

/// sum c_k g^k.
RatFunc evaluate_polynomial_in(const std::vector<CycNumber>& coeffs, const RatFunc& g);

}  // namespace flopgw::algebra
