// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pviforge/jimbo.hpp"
#include "pviforge/numerics/ratfunc.hpp"
#include "pviforge/numerics/special.hpp"
#include "pviforge/perm.hpp"

namespace pviforge {

// Truncated series in x = t^(1/N): coeffs[k] multiplies x^(valuation + k), known modulo x^precision.
struct PuiseuxSeries {
  int ramification = 1;
  long valuation = 0;
  std::vector<BigComplex> coeffs;
  long precision = 0;

  Rational leading_exponent() const { return Rational(valuation, ramification); }
  // Truncation order in t.
  Rational t_order() const { return Rational(precision, ramification); }
  // Value at t using the principal branch of t^(1/N).
  BigComplex eval(const BigComplex& t) const;
  // The same series written in x' = t^(1/(N m)).
  PuiseuxSeries refine(int m) const;
};

using PviParams = std::array<Rational, 4>;  // (alpha, beta, gamma, delta)

// y'' minus the right hand side of PVI, as a truncated series; t_order > 0 first truncates y to O(t^t_order).
PuiseuxSeries pvi_residual_series(const PuiseuxSeries& y, const PviParams& params, const Rational& t_order = 0);

struct ExtendOptions {
  int max_doublings = 2;
};

// The branch through the leading term, determined order by order up to O(t^order).
PuiseuxSeries extend_branch(const BranchLeadingTerm& lead, const PviParams& params, int order,
                            const ExtendOptions& opts = {});

// r_0 .. r_{n-1} with y^n + r_{n-1} y^(n-1) + ... + r_0 = prod (y - y_j), as integer-exponent series in t.
std::vector<LaurentSeries> symmetric_laurent(const std::vector<PuiseuxSeries>& branches, Real tol = Real(0));

// F(t, y) = sum_{i,j} coeffs[i][j] y^i t^j.
struct IntegerCurve {
  std::vector<std::vector<Integer>> coeffs;
  int branch_count = 0;
  // F = normalization * (monic-in-y form); the first nonzero coefficient in the order (deg_y desc, deg_t asc)
  // is positive.
  Rational normalization = 1;

  int degree_y() const { return static_cast<int>(coeffs.size()) - 1; }
  int degree_t() const;
  QPoly y_coefficient(int i) const;
  // F(t0, y) as a polynomial in y.
  QPoly fiber(const Rational& t0) const;
  CPoly fiber(const BigComplex& t0) const;
  BigComplex eval(const BigComplex& t, const BigComplex& y) const;
  std::string str() const;
  // Equal to other or to -other.
  bool equal_up_to_sign(const IntegerCurve& other) const;
};

IntegerCurve curve_from_rows(const std::vector<std::vector<long>>& rows);

// Clears the common denominator of y^n + sum r_i y^i; symfns[i] = r_i.
IntegerCurve assemble_curve(const std::vector<RationalFunction>& symfns);

struct RationalParameterization {
  RationalFunction y;
  RationalFunction t;
};

struct ParamResidual {
  RationalFunction residual;  // y'' minus the right hand side of PVI, as a function of s
  // y or t lies identically on one of the polar loci y = 0, 1, t or t = 0, 1; residual is then unset.
  bool singular = false;
  bool zero() const { return !singular && residual.is_zero(); }
};

ParamResidual verify_parameterization(const RationalParameterization& p, const PviParams& params);
bool curve_on_curve_check(const IntegerCurve& c, const RationalParameterization& p);

struct CoverMonodromy {
  Perm around0;
  Perm around1;
  std::vector<BigComplex> base_roots;
};

struct MonodromyOptions {
  Rational base = Rational(2, 5);
  double min_separation = 1e-9;
};

// Permutations of the roots of F(base, y) along the circles |t| = |base| and |t - 1| = |1 - base|.
CoverMonodromy curve_cover_monodromy(const IntegerCurve& c, const MonodromyOptions& opts = {});

struct SingularPoint {
  // Projective point [t : y : z] of the closure in P^2; z = 0 at infinity.
  BigComplex t, y, z;
  int multiplicity = 0;  // number of branches of F(t0, .) meeting there, or 0 at infinity
};

struct SingularityCensus {
  std::vector<SingularPoint> points;
  int over_generic = 0;     // finite points with t not in {0, 1}
  int double_points = 0;    // of those, points where exactly two roots meet
  int over_branch = 0;      // finite points over t = 0, 1 and points at infinity
  QPoly discriminant;       // disc_y F as a polynomial in t
};

QPoly discriminant_in_y(const IntegerCurve& c);
SingularityCensus singularity_census(const IntegerCurve& c);

struct CurvePipelineResult {
  std::vector<BranchLeadingTerm> leads;
  std::vector<PuiseuxSeries> branches;
  std::vector<LaurentSeries> laurent;
  std::vector<RationalFunction> symfns;
  IntegerCurve curve;
};

// Leading terms, branch series, symmetric functions and the integer curve for one orbit of traces.
CurvePipelineResult solve_curve(const Theta& theta, const std::vector<TraceData2>& orbit, int order);

RationalParameterization klein_parameterization();
IntegerCurve klein_curve();

}  // namespace pviforge
