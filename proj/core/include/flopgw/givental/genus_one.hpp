#pragma once

#include <vector>

#include "flopgw/givental/connection.hpp"

namespace flopgw::givental {

/// delta log prod Delta_i as a function of w.
RatFunc term_log_delta(const CanonicalFrame& f);
/// r (1 - 2 (-1)^r G).
RatFunc term_log_delta_closed_form(const Context& ctx);

struct TermCMinusOne {
  /// dt_k components (r+1)/(24 lambda) sum_i p_i^k, k = 0..r.
  std::vector<EquivScalar> components;
  /// dt_1 component after lambda -> 0.
  RatFunc dt1_limit;
};

/// sum_i c^i_{-1} du_i / 24 with c^i_{-1} = (r+1)/lambda.
TermCMinusOne term_c_minus_one(const CanonicalFrame& f);
/// (-1)^r (r+1)^2 G / 24.
RatFunc term_c_minus_one_closed_form(const Context& ctx);

struct GenusOneForm {
  int r;
  /// dG / dlog q with the constant removed, in q (root 1).
  RatFunc coefficient;
  /// The removed q-constant.
  Rational constant;
  /// The three summands along dt_1 before the limit.
  EquivScalar log_delta_part;
  EquivScalar c_part;
  EquivScalar r1_part;
};

/// Full assembly from frame, connection and R1 diagonal. A branch flip
/// changes one ratio d_i/d_j before everything downstream.
GenusOneForm genus_one_form(int r, BranchFlip flip = std::nullopt);
/// Assembly from precomputed pieces.
GenusOneForm genus_one_form(const CanonicalFrame& f, const std::vector<EquivScalar>& r1_diag);

/// (-1)^{r+1}(r+1)/24 q/(1 - (-1)^{r+1} q) in q.
RatFunc genus_one_closed_form(int r);

/// Coefficient of q^d in dG/dlog q divided by d, for d = 1..dmax.
std::vector<Rational> genus_one_table(const RatFunc& dg_coeff, int dmax);
std::vector<Rational> genus_one_table(int r, int dmax);
/// (-1)^{d(r+1)}(r+1)/(24 d).
Rational genus_one_invariant_closed_form(int r, int d);

}  // namespace flopgw::givental
