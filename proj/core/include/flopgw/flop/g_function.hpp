#pragma once

#include <vector>

#include "flopgw/algebra/ratfunc.hpp"

namespace flopgw::flop {

using algebra::Rational;
using algebra::RatFunc;

/// The extremal function q/(1 - (-1)^{r+1} q) for a given r, in the variable q (root 1).
struct GFunction {
  int r;
  RatFunc value;
};

GFunction g_function(int r);

/// (-1)^r as an integer.
int parity_sign(int r);

/// G(q) + G(1/q), which must be the constant (-1)^r.
RatFunc reflection_sum(int r);
bool verify_reflection(int r);

/// Coefficients of p_m with delta^m G = p_m(G), lowest power first.
std::vector<Rational> delta_g_polynomial(int r, int m);
/// Same polynomial obtained by differentiating the rational function and fitting in G.
std::vector<Rational> delta_g_polynomial_direct(int r, int m);

/// delta^m G as a rational function of q.
RatFunc delta_power_g(int r, int m);

/// H_m(1/q) == (-1)^{m-1} H_m(q) for H_m = delta^m G.
bool reciprocal_antisymmetry(int r, int m);

}  // namespace flopgw::flop
