// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pviforge/char_variety.hpp"

namespace pviforge {

// Local data at t = 0 in the labelling (M0, Mt, M1) = (M1, M2, M3), so that sigma (= sigma_0t),
// sigma_1t and sigma_01 come from m12, m23 and m13.
struct JimboInput {
  BigComplex theta0, thetat, theta1, thetainf;
  BigComplex sigma, sigma01, sigma1t;
  // Exact values when known; used for the validity conditions and the rational prefactor.
  std::optional<std::array<Rational, 4>> theta_exact;  // (theta0, thetat, theta1, thetainf)
  std::optional<Rational> sigma_exact;
};

struct ConditionReport {
  bool theta_nonintegral = true;  // condition b
  bool sigma_valid = true;        // condition c
  bool no_even_integer = true;    // condition d
  std::vector<std::string> failures;

  bool ok() const { return theta_nonintegral && sigma_valid && no_even_integer; }
};

struct BranchLeadingTerm {
  BigComplex coefficient;
  BigComplex exponent;  // 1 - sigma
  std::optional<Rational> exponent_exact;
  BigComplex prefactor;
  std::optional<Rational> prefactor_exact;
  BigComplex s, c, s_hat;
  ConditionReport conditions;
};

// sigma with 2 cos(pi sigma) = tr and 0 <= Re sigma < 1.
BigComplex sigma_from_trace(const BigComplex& tr);
// Both determinations on the boundary Re sigma = 0 (sigma and -sigma); one value otherwise.
std::vector<BigComplex> sigma_candidates(const BigComplex& tr);

// theta = (theta_1, theta_2, theta_3, theta_4) of the char-variety labelling, traces of the branch.
JimboInput make_jimbo_input(const Theta& theta, const TraceData2& traces);

ConditionReport check_conditions(const JimboInput& in);
BigComplex jimbo_s(const JimboInput& in);
BigComplex jimbo_c_gamma(const JimboInput& in);
BranchLeadingTerm leading_term(const JimboInput& in);

// The explicit parameterization of (M0, Mt, M1) for a given s, together with M_inf = (M1 Mt M0)^-1.
std::array<CMatrix, 4> jimbo_matrices(const JimboInput& in, const BigComplex& s);

// The half-angle sines (alpha, beta, gamma, delta, alpha', beta', gamma', delta').
std::array<BigComplex, 8> jimbo_half_angles(const JimboInput& in);

}  // namespace pviforge
