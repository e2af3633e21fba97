// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pviforge/char_variety.hpp"

#include <deque>

#include "pviforge/errors.hpp"

namespace pviforge {

BigComplex ReflectionData3::t321() const { return n1 * n1 + n2 * n2 + n3 * n3; }

BigComplex ReflectionData3::t321_prime() const {
  BigComplex a = n1 * n2, b = n2 * n3, c = n1 * n3;
  return a * a + b * b + c * c;
}

namespace {

BigComplex fricke_p(const TraceData2& d) {
  return d.m1 * d.m23 + d.m2 * d.m13 + d.m3 * d.m12 - d.m1 * d.m2 * d.m3;
}

BigComplex fricke_q(const TraceData2& d) {
  return d.m1 * d.m1 + d.m2 * d.m2 + d.m3 * d.m3 + d.m12 * d.m12 + d.m23 * d.m23 + d.m13 * d.m13 +
         d.m12 * d.m23 * d.m13 - d.m1 * d.m2 * d.m12 - d.m2 * d.m3 * d.m23 - d.m1 * d.m3 * d.m13;
}

void step2(TraceData2& d, Gen g) {
  switch (g) {
    case Gen::B1: {
      BigComplex n12 = d.m2 * d.m321 + d.m1 * d.m3 - d.m13 - d.m12 * d.m23;
      d.m13 = d.m12;
      d.m12 = n12;
      std::swap(d.m2, d.m3);
      break;
    }
    case Gen::B1Inv: {
      BigComplex n13 = d.m3 * d.m321 + d.m1 * d.m2 - d.m12 - d.m13 * d.m23;
      d.m12 = d.m13;
      d.m13 = n13;
      std::swap(d.m2, d.m3);
      break;
    }
    case Gen::B2: {
      BigComplex n13 = d.m1 * d.m321 + d.m2 * d.m3 - d.m23 - d.m13 * d.m12;
      d.m23 = d.m13;
      d.m13 = n13;
      std::swap(d.m1, d.m2);
      break;
    }
    case Gen::B2Inv: {
      BigComplex n23 = d.m2 * d.m321 + d.m1 * d.m3 - d.m13 - d.m23 * d.m12;
      d.m13 = d.m23;
      d.m23 = n23;
      std::swap(d.m1, d.m2);
      break;
    }
  }
}

void require_nonzero(const BigComplex& z, const char* what) {
  if (z.is_exact_zero()) throw DivisionByZero(what);
}

void step3(ReflectionData3& d, Gen g) {
  BigComplex s = d.t321(), sp = d.t321_prime();
  BigComplex q1 = d.t1 * d.t1, q2 = d.t2 * d.t2, q3 = d.t3 * d.t3;
  switch (g) {
    case Gen::B1: {
      require_nonzero(q2, "braid3_apply: t2 = 0");
      BigComplex n12 = s + q1 + q3 - d.t13 + (sp - d.t12 * d.t23) / q2;
      d.t13 = d.t12;
      d.t12 = n12;
      std::swap(d.t2, d.t3);
      break;
    }
    case Gen::B1Inv: {
      require_nonzero(q3, "braid3_apply: t3 = 0");
      BigComplex n13 = s + q1 + q2 - d.t12 + (sp - d.t13 * d.t23) / q3;
      d.t12 = d.t13;
      d.t13 = n13;
      std::swap(d.t2, d.t3);
      break;
    }
    case Gen::B2: {
      require_nonzero(q1, "braid3_apply: t1 = 0");
      BigComplex n13 = s + q2 + q3 - d.t23 + (sp - d.t13 * d.t12) / q1;
      d.t23 = d.t13;
      d.t13 = n13;
      std::swap(d.t1, d.t2);
      break;
    }
    case Gen::B2Inv: {
      require_nonzero(q2, "braid3_apply: t2 = 0");
      BigComplex n23 = s + q1 + q3 - d.t13 + (sp - d.t23 * d.t12) / q2;
      d.t13 = d.t23;
      d.t23 = n23;
      std::swap(d.t1, d.t2);
      break;
    }
  }
}

}  // namespace

BigComplex fricke_residual(const TraceData2& d) {
  return d.m321 * d.m321 - fricke_p(d) * d.m321 + fricke_q(d) - BigComplex(4);
}

BigComplex trace_m123(const TraceData2& d) { return fricke_p(d) - d.m321; }

TraceData2 braid2_apply(TraceData2 d, const Word& word) {
  for (Gen g : word) step2(d, g);
  return d;
}

ReflectionData3 braid3_apply(ReflectionData3 d, const Word& word) {
  for (Gen g : word) step3(d, g);
  return d;
}

BigComplex fricke3_residual(const ReflectionData3& d) {
  BigComplex q1 = d.t1 * d.t1, q2 = d.t2 * d.t2, q3 = d.t3 * d.t3;
  BigComplex sp = d.t321_prime();
  BigComplex u123 = q3 * d.t12 + q2 * d.t13 + q1 * d.t23 - q1 * q2 - q2 * q3 - q1 * q3 - sp;
  BigComplex u321 = d.t321() + q1 + q2 + q3 - d.t12 - d.t13 - d.t23;
  BigComplex rhs = (d.t12 - q1 - q2) * (d.t13 - q1 - q3) * (d.t23 - q2 - q3);
  return u123 * u321 - rhs;
}

TraceData2 phi(const ReflectionData3& d) {
  for (const BigComplex* z : {&d.t1, &d.t2, &d.t3, &d.n1, &d.n2, &d.n3})
    if (z->is_exact_zero()) throw DivisionByZero("phi: zero t_i or n_i");
  TraceData2 m;
  m.m1 = d.t1 / d.n1 + d.n1 / d.t1;
  m.m2 = d.t2 / d.n1 + d.n1 / d.t2;
  m.m3 = d.t3 / d.n1 + d.n1 / d.t3;
  m.m12 = d.t12 / (d.t1 * d.t2);
  m.m23 = d.t23 / (d.t2 * d.t3);
  m.m13 = d.t13 / (d.t1 * d.t3);
  m.m321 = d.n2 / d.n3 + d.n3 / d.n2;
  return m;
}

ReflectionData3 cstar_scale(const ReflectionData3& d, const BigComplex& h) {
  BigComplex h2 = h * h;
  return {h * d.t1, h * d.t2, h * d.t3, h * d.n1, h * d.n2, h * d.n3, h2 * d.t12, h2 * d.t23, h2 * d.t13};
}

ReflectionData3 sigma_variant(const ReflectionData3& d, const std::array<int, 3>& perm,
                              const std::array<int, 3>& eps, const std::array<int, 3>& delta) {
  if (eps[0] * eps[1] * eps[2] != delta[0] * delta[1] * delta[2])
    throw SignConstraintError("sigma_variant: eps1 eps2 eps3 != delta1 delta2 delta3");
  std::array<BigComplex, 3> n{d.n1, d.n2, d.n3};
  auto sgn = [](int s) { return BigComplex(static_cast<long>(s)); };
  ReflectionData3 r = d;
  r.t1 = sgn(eps[0]) * d.t1;
  r.t2 = sgn(eps[1]) * d.t2;
  r.t3 = sgn(eps[2]) * d.t3;
  r.n1 = sgn(delta[0]) * n.at(perm[0]);
  r.n2 = sgn(delta[1]) * n.at(perm[1]);
  r.n3 = sgn(delta[2]) * n.at(perm[2]);
  return r;
}

TraceData2 traces_from_triple(const Sl2Triple& t) {
  TraceData2 d;
  d.m1 = t.M1.trace();
  d.m2 = t.M2.trace();
  d.m3 = t.M3.trace();
  d.m12 = (t.M1 * t.M2).trace();
  d.m23 = (t.M2 * t.M3).trace();
  d.m13 = (t.M1 * t.M3).trace();
  d.m321 = (t.M3 * t.M2 * t.M1).trace();
  return d;
}

Sl2Triple triple_from_traces(const TraceData2& d, Real tol) {
  if (tol <= 0) tol = half_precision_tol();
  BigComplex two(2);
  auto near = [&](const BigComplex& a, const BigComplex& b) { return abs(a - b) < tol; };
  if (near(d.m12, two) && near(d.m23, two) && near(d.m13, two))
    throw ReducibleDataError("triple_from_traces: all pairwise traces equal 2");
  if (abs(fricke_residual(d)) > tol) throw ResidualError("triple_from_traces: Fricke relation fails");
  // zeta + 1/zeta = m1
  BigComplex disc = sqrt(d.m1 * d.m1 - BigComplex(4));
  BigComplex z1 = (d.m1 + disc) / two, z2 = (d.m1 - disc) / two;
  auto better = [&tol](const BigComplex& a, const BigComplex& b) {
    if (abs(a.im - b.im) > tol) return a.im > b.im;
    return a.re >= b.re;
  };
  BigComplex zeta = better(z1, z2) ? z1 : z2;
  BigComplex zinv = BigComplex(1) / zeta;
  BigComplex gap = zeta - zinv;
  if (abs(gap) < tol) throw DegenerateError("triple_from_traces: M1 = +-1 cannot be diagonalized");
  BigComplex a = (d.m12 - d.m2 * zinv) / gap, dd = d.m2 - a;
  BigComplex e = (d.m13 - d.m3 * zinv) / gap, h = d.m3 - e;
  BigComplex b(1), c = a * dd - BigComplex(1);
  BigComplex r1 = d.m23 - a * e - dd * h;
  BigComplex r2 = d.m321 - zeta * e * a - h * dd * zinv;
  BigComplex f, g;
  BigComplex det = c * (zinv - zeta);
  if (abs(det) > tol) {
    // c f + g = r1 ; zeta c f + g / zeta = r2
    f = (r1 * zinv - r2) / det;
    g = r1 - c * f;
  } else {
    // M2 upper triangular in this gauge; g is forced, f from det M3 = 1
    if (abs(r1 * zinv - r2) > tol) throw ResidualError("triple_from_traces: inconsistent traces");
    g = r1;
    if (abs(g) < tol) throw ReducibleDataError("triple_from_traces: triple is reducible");
    f = (e * h - BigComplex(1)) / g;
  }
  Sl2Triple t;
  t.M1 = CMatrix(2, 2, {zeta, BigComplex(0), BigComplex(0), zinv});
  t.M2 = CMatrix(2, 2, {a, b, c, dd});
  t.M3 = CMatrix(2, 2, {e, f, g, h});
  return t;
}

namespace {

template <class M>
void braid_step(M& m3, M& m2, M& m1, Gen g) {
  switch (g) {
    case Gen::B1: {
      M n2 = m2.inverse() * m3 * m2;
      m3 = m2;
      m2 = n2;
      break;
    }
    case Gen::B1Inv: {
      M n3 = m3 * m2 * m3.inverse();
      m2 = m3;
      m3 = n3;
      break;
    }
    case Gen::B2: {
      M n1 = m1.inverse() * m2 * m1;
      m2 = m1;
      m1 = n1;
      break;
    }
    case Gen::B2Inv: {
      M n2 = m2 * m1 * m2.inverse();
      m1 = m2;
      m2 = n2;
      break;
    }
  }
}

}  // namespace

Sl2Triple braid_matrices(Sl2Triple t, const Word& word) {
  for (Gen g : word) braid_step(t.M3, t.M2, t.M1, g);
  return t;
}

std::array<CMatrix, 3> braid_matrices(std::array<CMatrix, 3> r, const Word& word) {
  for (Gen g : word) braid_step(r[2], r[1], r[0], g);
  return r;
}

Real distance(const TraceData2& a, const TraceData2& b) {
  Real m = 0;
  for (auto [x, y] : {std::pair{&a.m1, &b.m1}, {&a.m2, &b.m2}, {&a.m3, &b.m3}, {&a.m12, &b.m12},
                      {&a.m23, &b.m23}, {&a.m13, &b.m13}, {&a.m321, &b.m321}})
    m = std::max(m, abs(*x - *y));
  return m;
}

Real distance(const ReflectionData3& a, const ReflectionData3& b) {
  Real m = 0;
  for (auto [x, y] : {std::pair{&a.t1, &b.t1}, {&a.t2, &b.t2}, {&a.t3, &b.t3}, {&a.n1, &b.n1},
                      {&a.n2, &b.n2}, {&a.n3, &b.n3}, {&a.t12, &b.t12}, {&a.t23, &b.t23},
                      {&a.t13, &b.t13}})
    m = std::max(m, abs(*x - *y));
  return m;
}

namespace {

template <class D, class Apply>
Orbit<D> enumerate(const D& seed, BraidAction action, Real tol, std::size_t max_size, Apply apply) {
  if (max_size < 1) throw std::invalid_argument("enumerate_orbit: max_size must be >= 1");
  if (tol <= 0) tol = half_precision_tol();
  std::vector<Word> gens;
  if (action == BraidAction::B3)
    gens = {{Gen::B1}, {Gen::B2}};
  else
    gens = {{Gen::B1, Gen::B1}, {Gen::B2, Gen::B2}};
  Orbit<D> orbit;
  orbit.elements.push_back(seed);
  std::vector<std::vector<int>> images(gens.size());
  auto find = [&](const D& x) -> int {
    for (std::size_t i = 0; i < orbit.elements.size(); ++i)
      if (distance(orbit.elements[i], x) < tol) return static_cast<int>(i);
    return -1;
  };
  for (std::size_t i = 0; i < orbit.elements.size(); ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      D y = apply(orbit.elements[i], gens[g]);
      int j = find(y);
      if (j < 0) {
        if (orbit.elements.size() >= max_size)
          throw OrbitOverflow("enumerate_orbit: orbit exceeds " + std::to_string(max_size));
        orbit.elements.push_back(std::move(y));
        j = static_cast<int>(orbit.elements.size()) - 1;
      }
      images[g].push_back(j);
    }
  }
  if (action == BraidAction::B3) {
    orbit.perm_b1 = images[0];
    orbit.perm_b2 = images[1];
    orbit.perm_b1sq = perm_compose(orbit.perm_b1, orbit.perm_b1);
    orbit.perm_b2sq = perm_compose(orbit.perm_b2, orbit.perm_b2);
  } else {
    orbit.perm_b1sq = images[0];
    orbit.perm_b2sq = images[1];
  }
  if (!perm_is_bijection(orbit.perm_b1sq) || !perm_is_bijection(orbit.perm_b2sq))
    throw OrbitOverflow("enumerate_orbit: dedup tolerance produced a non-bijective action");
  return orbit;
}

}  // namespace

Orbit<TraceData2> enumerate_orbit(const TraceData2& seed, BraidAction action, Real dedup_tol,
                                  std::size_t max_size) {
  return enumerate(seed, action, dedup_tol, max_size,
                   [](const TraceData2& d, const Word& w) { return braid2_apply(d, w); });
}

Orbit<ReflectionData3> enumerate_orbit(const ReflectionData3& seed, BraidAction action, Real dedup_tol,
                                       std::size_t max_size) {
  return enumerate(seed, action, dedup_tol, max_size,
                   [](const ReflectionData3& d, const Word& w) { return braid3_apply(d, w); });
}

Theta theta_from_lambda_mu(const std::array<Rational, 3>& lambda, const std::array<Rational, 3>& mu,
                           std::vector<std::string>* warnings) {
  Rational diff = lambda[0] + lambda[1] + lambda[2] - mu[0] - mu[1] - mu[2];
  Rational half = diff / 2;
  if (half.get_den() != 1)
    throw SignConstraintError("theta_from_lambda_mu: sum(lambda) - sum(mu) = " + diff.get_str() +
                              " is not an even integer");
  if (sgn(diff) != 0 && warnings)
    warnings->push_back("sum(lambda) - sum(mu) = " + diff.get_str() + " (nonzero even integer)");
  Theta th;
  for (int i = 0; i < 3; ++i) th[i] = lambda[i] - mu[0];
  th[3] = mu[2] - mu[1];
  return th;
}

std::array<Rational, 4> pvi_params_from_theta(const Theta& th) {
  Rational a = th[3] - 1;
  return {a * a / 2, -th[0] * th[0] / 2, th[2] * th[2] / 2, (1 - th[1] * th[1]) / 2};
}

}  // namespace pviforge
