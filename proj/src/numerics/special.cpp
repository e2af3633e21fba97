// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pviforge/numerics/special.hpp"

#include <mutex>

#include "pviforge/errors.hpp"
#include "pviforge/numerics/matrix.hpp"

namespace pviforge {

namespace {

// B_0, B_2, B_4, ... as exact rationals, grown on demand.
Rational bernoulli_even(std::size_t k) {
  static std::mutex mu;
  static std::vector<Rational> all{Rational(1)};  // B_n for n = 0, 1, 2, ...
  std::lock_guard<std::mutex> lock(mu);
  std::size_t need = 2 * k;
  while (all.size() <= need) {
    std::size_t m = all.size();
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Integer binom = 1;
    Rational s = 0;
    for (std::size_t j = 0; j < m; ++j) {
      s += binom * all[j];
      binom = binom * static_cast<unsigned long>(m + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    all.push_back(-s / Rational(binom));
  }
  return all[need];
}

Integer to_integer(const Real& x) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDN);
  return z;
}

bool is_nonpositive_integer(const BigComplex& z) {
  return z.im == 0 && z.re <= 0 && boost::multiprecision::floor(z.re) == z.re;
}

BigComplex log_gamma_stirling(const BigComplex& w) {
  Real eps = pow2(-static_cast<long>(working_precision()) - 8);
  BigComplex lw = log(w);
  BigComplex half_log_2pi(boost::multiprecision::log(2 * real_pi()) / 2);
  BigComplex sum = (w - BigComplex(Rational(1, 2))) * lw - w + half_log_2pi;
  BigComplex winv = BigComplex(1) / w;
  BigComplex winv2 = winv * winv;
  BigComplex wpow = winv;
  for (std::size_t k = 1; k < 400; ++k) {
    Rational coef = bernoulli_even(k) / Rational(static_cast<long>(2 * k * (2 * k - 1)));
    BigComplex term = BigComplex(coef) * wpow;
    sum += term;
    if (abs(term) < eps) break;
    wpow *= winv2;
  }
  return sum;
}

}  // namespace

BigComplex gamma_fn(const BigComplex& z) {
  if (is_nonpositive_integer(z)) throw PoleError("gamma at nonpositive integer " + z.str(10));
  if (z.re < Real(0.5)) {
    BigComplex pi(real_pi());
    return pi / (sin(pi * z) * gamma_fn(BigComplex(1) - z));
  }
  Real target = Real(0.15) * working_precision() + 10;
  long shift = 0;
  if (z.re < target) shift = static_cast<long>(boost::multiprecision::ceil(target - z.re));
  BigComplex w = z + BigComplex(shift);
  BigComplex g = exp(log_gamma_stirling(w));
  BigComplex prod(1);
  for (long j = 0; j < shift; ++j) prod *= z + BigComplex(j);
  return g / prod;
}

BigComplex gamma_hat(const BigComplex& x) { return gamma_fn(x / BigComplex(2) + BigComplex(1)); }

std::optional<Rational> recognize_power_rational(const BigComplex& c, long k, long max_den, Real tol) {
  if (k < 1) throw std::invalid_argument("recognize_power_rational: k must be >= 1");
  if (tol <= 0) tol = half_precision_tol();
  BigComplex w = pow(c, k);
  if (boost::multiprecision::abs(w.im) >= tol) return std::nullopt;
  Real x = w.re;
  Integer p0 = 1, q0 = 0, p1, q1 = 1;
  Real rem = x;
  Real a = boost::multiprecision::floor(rem);
  p1 = to_integer(a);
  for (int iter = 0; iter < 500; ++iter) {
    if (q1 > max_den) return std::nullopt;
    Rational cand(p1, q1);
    cand.canonicalize();
    if (boost::multiprecision::abs(x - to_real(cand)) < tol) return cand;
    Real frac = rem - a;
    if (frac == 0) return std::nullopt;
    rem = 1 / frac;
    a = boost::multiprecision::floor(rem);
    Integer ai = to_integer(a);
    Integer p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return std::nullopt;
}

namespace {

RationalFunction pade_solve(const LaurentSeries& s, int dn, int dd, const Real& tol, long max_den) {
  long v = s.valuation;
  long m = static_cast<long>(s.coeffs.size());
  long e_lo = std::min(v, 0L);
  long e_hi = v + m - 1;
  std::size_t unknowns = dn + dd + 2;
  std::size_t rows = static_cast<std::size_t>(e_hi - e_lo + 1);
  if (rows < unknowns) throw NoSolutionError("laurent_to_rational: too few coefficients");
  auto f = [&](long e) -> BigComplex {
    if (e < v || e > e_hi) return BigComplex(0);
    return s.coeffs[e - v];
  };
  CMatrix a(rows, unknowns);
  for (long e = e_lo; e <= e_hi; ++e) {
    std::size_t r = static_cast<std::size_t>(e - e_lo);
    if (e >= 0 && e <= dn) a(r, e) = BigComplex(-1);
    for (int j = 0; j <= dd; ++j) a(r, dn + 1 + j) = f(e - j);
  }
  auto kernel = null_space(a, tol);
  if (kernel.empty()) throw NoSolutionError("laurent_to_rational: inconsistent at degrees (" +
                                            std::to_string(dn) + "," + std::to_string(dd) + ")");
  if (kernel.size() > 1) throw AmbiguousError("laurent_to_rational: kernel dimension " +
                                              std::to_string(kernel.size()));
  auto& vec = kernel[0];
  Real scale = 0;
  for (const auto& x : vec) scale = std::max(scale, abs(x));
  int top = -1;
  for (int j = dd; j >= 0; --j)
    if (abs(vec[dn + 1 + j]) > tol * scale) {
      top = j;
      break;
    }
  if (top < 0) throw NoSolutionError("laurent_to_rational: zero denominator");
  BigComplex lead = vec[dn + 1 + top];
  auto rationalize = [&](const BigComplex& c) -> Rational {
    Real mag = abs(c);
    if (mag < tol * (1 + abs(BigComplex(scale) / lead))) return Rational(0);
    auto q = recognize_power_rational(c, 1, max_den, tol * std::max(Real(1), mag));
    if (!q) throw NonRationalCoefficient("laurent_to_rational: coefficient " + c.str(20));
    return *q;
  };
  std::vector<Rational> num, den;
  for (int j = 0; j <= dn; ++j) num.push_back(rationalize(vec[j] / lead));
  for (int j = 0; j <= dd; ++j) den.push_back(rationalize(vec[dn + 1 + j] / lead));
  return RationalFunction(QPoly(num), QPoly(den));
}

Real effective_tol(const PadeOptions& o) { return o.tol > 0 ? o.tol : half_precision_tol(); }

}  // namespace

RationalFunction laurent_to_rational(const LaurentSeries& series, int deg_num, int deg_den,
                                     const PadeOptions& opts) {
  return pade_solve(series, deg_num, deg_den, effective_tol(opts), opts.max_den);
}

std::vector<Rational> laurent_expand(const RationalFunction& f, long from, std::size_t count) {
  const QPoly& den = f.den();
  long shift = 0;
  while (sgn(den.coeff(shift)) == 0) ++shift;
  std::vector<Rational> d(den.coeffs().begin() + shift, den.coeffs().end());
  long need = from + static_cast<long>(count) + shift;  // power series terms of num/d required
  std::vector<Rational> ps;
  for (long k = 0; k < need; ++k) {
    Rational acc = f.num().coeff(k);
    for (long j = 1; j <= k && j < static_cast<long>(d.size()); ++j) acc -= d[j] * ps[k - j];
    ps.push_back(acc / d[0]);
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) {
    long idx = from + static_cast<long>(i) + shift;
    out.push_back(idx >= 0 && idx < need ? ps[idx] : Rational(0));
  }
  return out;
}

RationalFunction laurent_to_rational_auto(const LaurentSeries& series, int max_total, const PadeOptions& opts) {
  Real tol = effective_tol(opts);
  long m = static_cast<long>(series.coeffs.size());
  Real scale = 1;
  for (const auto& c : series.coeffs) scale = std::max(scale, abs(c));
  for (int total = 0; total <= max_total; ++total) {
    if (total + 2 > m) break;
    for (int dd = 0; dd <= total; ++dd) {
      RationalFunction r;
      try {
        r = pade_solve(series, total - dd, dd, tol, opts.max_den);
      } catch (const NoSolutionError&) {
        continue;
      } catch (const AmbiguousError&) {
        continue;
      } catch (const NonRationalCoefficient&) {
        continue;
      }
      auto back = laurent_expand(r, series.valuation, series.coeffs.size());
      bool ok = true;
      for (std::size_t k = 0; k < back.size() && ok; ++k)
        ok = abs(BigComplex(back[k]) - series.coeffs[k]) < tol * scale;
      if (ok) return r;
    }
  }
  throw NoSolutionError("laurent_to_rational: no reconstruction up to total degree " + std::to_string(max_total));
}

}  // namespace pviforge
