// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "pviforge/numerics/matrix.hpp"
#include "pviforge/perm.hpp"

namespace pviforge {

// Invariants of an SL2 triple (M1, M2, M3).
struct TraceData2 {
  BigComplex m1, m2, m3, m12, m23, m13, m321;
};

// Invariants of a pseudo-reflection triple with chosen square roots.
struct ReflectionData3 {
  BigComplex t1, t2, t3, n1, n2, n3, t12, t23, t13;

  BigComplex t321() const;        // n1^2 + n2^2 + n3^2
  BigComplex t321_prime() const;  // (n1 n2)^2 + (n2 n3)^2 + (n1 n3)^2
};

struct Sl2Triple {
  CMatrix M1, M2, M3;
};

enum class Gen { B1, B1Inv, B2, B2Inv };
using Word = std::vector<Gen>;

BigComplex fricke_residual(const TraceData2& d);
BigComplex trace_m123(const TraceData2& d);
TraceData2 braid2_apply(TraceData2 d, const Word& word);
ReflectionData3 braid3_apply(ReflectionData3 d, const Word& word);
BigComplex fricke3_residual(const ReflectionData3& d);

TraceData2 phi(const ReflectionData3& d);
ReflectionData3 cstar_scale(const ReflectionData3& d, const BigComplex& h);
// t_i -> eps_i t_i, n_i -> delta_i n_perm(i); perm is 0-based.
ReflectionData3 sigma_variant(const ReflectionData3& d, const std::array<int, 3>& perm,
                              const std::array<int, 3>& eps, const std::array<int, 3>& delta);

TraceData2 traces_from_triple(const Sl2Triple& t);
Sl2Triple triple_from_traces(const TraceData2& d, Real tol = Real(0));

// Matrix-level braid moves on (M3, M2, M1), for either SL2 or GL3 triples.
Sl2Triple braid_matrices(Sl2Triple t, const Word& word);
std::array<CMatrix, 3> braid_matrices(std::array<CMatrix, 3> r, const Word& word);

enum class BraidAction { B3, P3 };

template <class D>
struct Orbit {
  std::vector<D> elements;
  Perm perm_b1sq;
  Perm perm_b2sq;
  Perm perm_b1;  // only for B3
  Perm perm_b2;
  std::size_t base_point = 0;
};

Orbit<TraceData2> enumerate_orbit(const TraceData2& seed, BraidAction action, Real dedup_tol = Real(0),
                                  std::size_t max_size = 10000);
Orbit<ReflectionData3> enumerate_orbit(const ReflectionData3& seed, BraidAction action,
                                       Real dedup_tol = Real(0), std::size_t max_size = 10000);

Real distance(const TraceData2& a, const TraceData2& b);
Real distance(const ReflectionData3& a, const ReflectionData3& b);

using Theta = std::array<Rational, 4>;

// theta_i = lambda_i - mu_1, theta_4 = mu_3 - mu_2. Requires sum(lambda) - sum(mu) in 2Z; a nonzero
// even difference is reported through warnings.
Theta theta_from_lambda_mu(const std::array<Rational, 3>& lambda, const std::array<Rational, 3>& mu,
                           std::vector<std::string>* warnings = nullptr);
// (alpha, beta, gamma, delta)
std::array<Rational, 4> pvi_params_from_theta(const Theta& theta);

}  // namespace pviforge
