// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pviforge/jimbo.hpp"

#include "pviforge/errors.hpp"
#include "pviforge/numerics/special.hpp"

namespace pviforge {

namespace {

BigComplex pi_c() { return BigComplex(real_pi()); }
BigComplex cos_pi(const BigComplex& x) { return cos(pi_c() * x); }
BigComplex sin_pi(const BigComplex& x) { return sin(pi_c() * x); }
BigComplex half_sin(const BigComplex& x) { return sin(pi_c() * x / BigComplex(2)); }

Real tolerance() { return half_precision_tol(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool near_even_integer(const BigComplex& x) {
  Real h = x.re / 2;
  return boost::multiprecision::abs(x.im) < tolerance() &&
         boost::multiprecision::abs(h - boost::multiprecision::round(h)) < tolerance();
}

bool near_integer(const BigComplex& x) {
  return boost::multiprecision::abs(x.im) < tolerance() &&
         boost::multiprecision::abs(x.re - boost::multiprecision::round(x.re)) < tolerance();
}

std::optional<Rational> exact_rational(const BigComplex& x) {
  if (boost::multiprecision::abs(x.im) > tolerance()) return std::nullopt;
  return recognize_power_rational(x, 1, 1000);
}

}  // namespace

BigComplex sigma_from_trace(const BigComplex& tr) {
  Real tol = tolerance();
  if (boost::multiprecision::abs(tr.im) < tol && tr.re <= -2 + tol)
    throw DomainError("sigma_from_trace: trace is real and <= -2");
  if (abs(tr - BigComplex(2)) < tol) throw ZeroSigmaError("sigma_from_trace: trace = 2 gives sigma = 0");
  BigComplex s = acos(tr / BigComplex(2)) / pi_c();
  if (s.re < 0 || (boost::multiprecision::abs(s.re) < tol && s.im < 0)) s = -s;
  return s;
}

std::vector<BigComplex> sigma_candidates(const BigComplex& tr) {
  BigComplex s = sigma_from_trace(tr);
  if (boost::multiprecision::abs(s.re) < tolerance()) return {s, -s};
  return {s};
}

JimboInput make_jimbo_input(const Theta& theta, const TraceData2& traces) {
  JimboInput in;
  in.theta0 = BigComplex(theta[0]);
  in.thetat = BigComplex(theta[1]);
  in.theta1 = BigComplex(theta[2]);
  in.thetainf = BigComplex(theta[3]);
  in.theta_exact = std::array<Rational, 4>{theta[0], theta[1], theta[2], theta[3]};
  in.sigma = sigma_from_trace(traces.m12);
  in.sigma1t = sigma_from_trace(traces.m23);
  in.sigma01 = sigma_from_trace(traces.m13);
  if (auto q = exact_rational(in.sigma)) {
    if (abs(in.sigma - BigComplex(*q)) < tolerance()) {
      in.sigma_exact = *q;
      in.sigma = BigComplex(*q);
    }
  }
  return in;
}

ConditionReport check_conditions(const JimboInput& in) {
  ConditionReport r;
  const char* names[4] = {"theta0", "thetat", "theta1", "thetainf"};
  std::array<BigComplex, 4> th{in.theta0, in.thetat, in.theta1, in.thetainf};
  for (int i = 0; i < 4; ++i) {
    bool integral = in.theta_exact ? is_integer((*in.theta_exact)[i]) : near_integer(th[i]);
    if (integral) {
      r.theta_nonintegral = false;
      r.failures.push_back(std::string("b: ") + names[i] + " is an integer");
    }
  }
  bool exact_sigma = in.sigma_exact.has_value();
  bool zero = exact_sigma ? sgn(*in.sigma_exact) == 0 : abs(in.sigma) < tolerance();
  bool in_strip = exact_sigma ? (sgn(*in.sigma_exact) >= 0 && *in.sigma_exact < 1)
                              : (in.sigma.re > -tolerance() && in.sigma.re < 1 - tolerance());
  if (zero || !in_strip) {
    r.sigma_valid = false;
    r.failures.push_back(zero ? "c: sigma = 0" : "c: Re sigma outside [0, 1)");
  }
  const char* labels[8] = {"theta0+thetat+sigma",     "theta0-thetat-sigma",     "theta0+thetat-sigma",
                           "theta0-thetat+sigma",     "thetainf+theta1+sigma",   "thetainf-theta1-sigma",
                           "thetainf+theta1-sigma",   "thetainf-theta1+sigma"};
  if (in.theta_exact && exact_sigma) {
    const auto& t = *in.theta_exact;
    const Rational& s = *in.sigma_exact;
    std::array<Rational, 8> v{t[0] + t[1] + s, t[0] - t[1] - s, t[0] + t[1] - s, t[0] - t[1] + s,
                              t[3] + t[2] + s, t[3] - t[2] - s, t[3] + t[2] - s, t[3] - t[2] + s};
    for (int k = 0; k < 8; ++k) {
      Rational h = v[k] / 2;
      h.canonicalize();
      if (is_integer(h)) {
        r.no_even_integer = false;
        r.failures.push_back(std::string("d: ") + labels[k] + " is an even integer");
      }
    }
  } else {
    const BigComplex& s = in.sigma;
    std::array<BigComplex, 8> v{in.theta0 + in.thetat + s,     in.theta0 - in.thetat - s,
                                in.theta0 + in.thetat - s,     in.theta0 - in.thetat + s,
                                in.thetainf + in.theta1 + s,   in.thetainf - in.theta1 - s,
                                in.thetainf + in.theta1 - s,   in.thetainf - in.theta1 + s};
    for (int k = 0; k < 8; ++k) {
      if (near_even_integer(v[k])) {
        r.no_even_integer = false;
        r.failures.push_back(std::string("d: ") + labels[k] + " is an even integer");
      }
    }
  }
  return r;
}

std::array<BigComplex, 8> jimbo_half_angles(const JimboInput& in) {
  const BigComplex &t0 = in.theta0, &tt = in.thetat, &t1 = in.theta1, &ti = in.thetainf, &s = in.sigma;
  return {half_sin(ti - t1 + s), half_sin(ti + t1 + s), half_sin(ti + t1 - s), half_sin(ti - t1 - s),
          half_sin(t0 - tt + s), half_sin(t0 + tt + s), half_sin(t0 + tt - s), half_sin(t0 - tt - s)};
}

BigComplex jimbo_s(const JimboInput& in) {
  auto h = jimbo_half_angles(in);
  BigComplex den = BigComplex(4) * h[0] * h[2] * h[4] * h[6];
  if (abs(den) < tolerance()) throw DegenerateDenominator("jimbo_s: 4 alpha gamma alpha' gamma' = 0");
  BigComplex i = BigComplex::i_unit();
  BigComplex eps = expipi(in.sigma);
  BigComplex ss = sin_pi(in.sigma);
  BigComplex c0 = cos_pi(in.theta0), ct = cos_pi(in.thetat), c1 = cos_pi(in.theta1), ci = cos_pi(in.thetainf);
  BigComplex a = eps * (i * ss * cos_pi(in.sigma1t) - ct * ci - c0 * c1);
  BigComplex b = i * ss * cos_pi(in.sigma01) + ct * c1 + ci * c0;
  return (a + b) / den;
}

BigComplex jimbo_c_gamma(const JimboInput& in) {
  const BigComplex &t0 = in.theta0, &tt = in.thetat, &t1 = in.theta1, &ti = in.thetainf, &s = in.sigma;
  BigComplex one(1);
  BigComplex g1 = gamma_fn(one - s), g2 = gamma_fn(one + s);
  BigComplex num = g1 * g1 * gamma_hat(t0 + tt + s) * gamma_hat(-t0 + tt + s) * gamma_hat(ti + t1 + s) *
                   gamma_hat(-ti + t1 + s);
  BigComplex den = g2 * g2 * gamma_hat(t0 + tt - s) * gamma_hat(-t0 + tt - s) * gamma_hat(ti + t1 - s) *
                   gamma_hat(-ti + t1 - s);
  return num / den;
}

BranchLeadingTerm leading_term(const JimboInput& in) {
  BranchLeadingTerm out;
  out.conditions = check_conditions(in);
  if (!out.conditions.ok()) {
    std::string msg = "leading_term: validity conditions fail:";
    for (const auto& f : out.conditions.failures) msg += " [" + f + "]";
    throw ValidityError(msg);
  }
  if (in.theta_exact && in.sigma_exact) {
    const auto& t = *in.theta_exact;
    const Rational& s = *in.sigma_exact;
    Rational p = (t[0] + t[1] + s) * (-t[0] + t[1] + s) * (t[3] + t[2] + s) / (4 * s * s * (t[3] + t[2] - s));
    p.canonicalize();
    out.prefactor_exact = p;
    out.prefactor = BigComplex(p);
    Rational e = 1 - s;
    out.exponent_exact = e;
    out.exponent = BigComplex(e);
  } else {
    const BigComplex &t0 = in.theta0, &tt = in.thetat, &t1 = in.theta1, &ti = in.thetainf, &s = in.sigma;
    out.prefactor = (t0 + tt + s) * (-t0 + tt + s) * (ti + t1 + s) / (BigComplex(4) * s * s * (ti + t1 - s));
    out.exponent = BigComplex(1) - s;
  }
  out.s = jimbo_s(in);
  out.c = jimbo_c_gamma(in);
  out.s_hat = out.c * out.s;
  if (abs(out.s_hat) < tolerance()) throw ZeroShat("leading_term: s_hat = 0");
  out.coefficient = out.prefactor / out.s_hat;
  return out;
}

std::array<CMatrix, 4> jimbo_matrices(const JimboInput& in, const BigComplex& s) {
  auto h = jimbo_half_angles(in);
  const BigComplex &al = h[0], &be = h[1], &ga = h[2], &de = h[3];
  const BigComplex &alp = h[4], &bep = h[5], &gap = h[6], &dep = h[7];
  BigComplex i = BigComplex::i_unit(), two(2);
  BigComplex eps = expipi(in.sigma), epsi = BigComplex(1) / eps;
  BigComplex ei = expipi(in.thetainf), eii = BigComplex(1) / ei;
  BigComplex c0 = cos_pi(in.theta0), ct = cos_pi(in.thetat), c1 = cos_pi(in.theta1);
  BigComplex cs = cos_pi(in.sigma), ss = sin_pi(in.sigma), si = sin_pi(in.thetainf);
  CMatrix C(2, 2, {de, be, al, ga});
  CMatrix Ci = C.inverse();
  BigComplex sinv = BigComplex(1) / s;
  CMatrix A0(2, 2, {eps * c0 - ct, two * s * alp * gap, -two * sinv * bep * dep, -epsi * c0 + ct});
  CMatrix At(2, 2, {eps * ct - c0, -two * s * eps * alp * gap, two * sinv * epsi * bep * dep, -epsi * ct + c0});
  CMatrix A1(2, 2, {cs - eii * c1, -two * eii * be * ga, two * ei * al * de, -cs + ei * c1});
  CMatrix M0 = Ci * A0 * C * (BigComplex(1) / (i * ss));
  CMatrix Mt = Ci * At * C * (BigComplex(1) / (i * ss));
  CMatrix M1 = A1 * (BigComplex(1) / (i * si));
  CMatrix Minf = (M1 * Mt * M0).inverse();
  return {M0, Mt, M1, Minf};
}

}  // namespace pviforge
