// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "pviforge/numerics/bigcomplex.hpp"
#include "pviforge/numerics/ratfunc.hpp"

namespace pviforge {

BigComplex gamma_fn(const BigComplex& z);
// Gamma(x/2 + 1)
BigComplex gamma_hat(const BigComplex& x);

inline constexpr long kDefaultMaxDen = 1000000;

// Best rational p/q with q <= max_den and |c^k - p/q| < tol; tol <= 0 selects 2^(-bits/2).
std::optional<Rational> recognize_power_rational(const BigComplex& c, long k, long max_den = kDefaultMaxDen,
                                                 Real tol = Real(0));

// Truncated Laurent series: coeffs[k] multiplies t^(valuation + k).
struct LaurentSeries {
  long valuation = 0;
  std::vector<BigComplex> coeffs;
};

struct PadeOptions {
  long max_den = kDefaultMaxDen;
  Real tol = Real(0);  // rank and recognition tolerance; 0 selects 2^(-bits/2)
};

RationalFunction laurent_to_rational(const LaurentSeries& series, int deg_num, int deg_den,
                                     const PadeOptions& opts = {});
// Lowest total degree reconstruction up to max_total.
RationalFunction laurent_to_rational_auto(const LaurentSeries& series, int max_total,
                                          const PadeOptions& opts = {});
// Laurent coefficients of f from t^from up to t^(from + count - 1), exact.
std::vector<Rational> laurent_expand(const RationalFunction& f, long from, std::size_t count);

}  // namespace pviforge
