// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pviforge/char_variety.hpp"
#include "pviforge/numerics/matrix.hpp"
#include "pviforge/series_curve.hpp"

namespace pviforge {

// Rank two residues at 0, t, 1 of the isomonodromic 2x2 system, in the normalization
// A_i = [[z_i + theta_i, -q_i z_i], [(z_i + theta_i) / q_i, -z_i]] with (q_1, q_2, q_3) = (u, w, v).
template <class T>
struct JMSystem {
  T z1, z2, z3, u, v, w;
  T t;
  Theta theta;

  Rational k1() const;
  Rational k2() const;
  // Residues at 0, t, 1.
  std::array<Matrix<T>, 3> residues() const;
  // (t + 1) u z1 + t v z3 + w z2.
  T gauge() const;
};

template <class T>
T x_from_y(const T& y, const T& yprime, const T& t, const Theta& theta);

template <class T>
JMSystem<T> jm_from_xy(const T& x, const T& y, const T& t, const Theta& theta);

// Zero of the (1,2) entry of z(z-1)(z-t) A(z), and z1/y + z2/(y-t) + z3/(y-1).
template <class T>
T jm_y(const JMSystem<T>& sys);
template <class T>
T jm_x(const JMSystem<T>& sys);

template <class T>
struct BTraces {
  T t12, t23, t13, t321;  // Tr(B1B2), Tr(B2B3), Tr(B1B3), Tr(B3B2B1)
};

template <class T>
BTraces<T> traces_of(const std::array<Matrix<T>, 3>& b);
template <class T>
BTraces<T> b_traces_from_jm(const JMSystem<T>& sys);

// Residues B1, B2, B3 at 0, t, 1 of a rank three Fuchsian system.
template <class T>
struct FuchsianSystem3 {
  std::array<Matrix<T>, 3> B;
  T t;
  std::array<T, 3> lambda;
  // Eigenvalues of B1 + B2 + B3 in the order used by y_from_B.
  std::optional<std::array<T, 3>> mu;

  Matrix<T> sum() const { return B[0] + B[1] + B[2]; }
};

// Normal form with rows (l1, b12, b13), (b21, l2, b23), (b31, b32, l3) and b21 = b32 = 1.
template <class T>
FuchsianSystem3<T> assemble_B(const BTraces<T>& traces, const std::array<T, 3>& lambda, const T& t);

// The rank three system with lambda_i = theta_i + shift, ordered so that mu = (shift, shift - k1, shift - k2).
template <class T>
FuchsianSystem3<T> fuchsian_from_jm(const JMSystem<T>& sys, const Rational& shift);

template <class T>
FuchsianSystem3<T> scalar_shift_residues(const FuchsianSystem3<T>& sys, const T& lam);

template <class T>
T y_from_B(const FuchsianSystem3<T>& sys);

// Exact (y, y', t) on a rational parameterization at parameter s.
struct ParamPoint {
  Rational t, y, yprime;
};
ParamPoint param_point(const RationalParameterization& p, const Rational& s);

// Rank three system at parameter s: (t, y) from p, x from y', lambda_i = theta_i + shift.
FuchsianSystem3<Rational> reconstruct_at(const RationalParameterization& p, const Theta& theta,
                                         const Rational& s, const Rational& shift);

struct MonodromyLoopOptions {
  BigComplex base = BigComplex(-1);
  // Each loop reaches its circle at the point above the pole (true) or below it (false).
  bool approach_above = true;
  // Loop system: the straight loops transformed by this pure braid word, applied left to right;
  // +i / -i stands for sigma_i^2 / sigma_i^-2 (i = 1, 2). Every loop stays a conjugate of the straight
  // loop around the same pole, and the loop around all three poles is unchanged.
  std::vector<int> pure_braid;
  double local_tol = 1e-20;
  int max_terms = 400;
  long max_steps = 200000;
};

struct MonodromyReport {
  std::array<CMatrix, 3> straight;  // around 0, t, 1 along the straight loops
  std::array<CMatrix, 3> r;         // around 0, t, 1 in the requested loop system
  CMatrix r_inf;              // around a circle enclosing all poles, negatively
  std::array<BigComplex, 3> trace, det;
  BigComplex t12, t23, t13;
  std::vector<BigComplex> product_eigenvalues;  // of r3 r2 r1, sorted by argument in [0, 2 pi)
  Real infinity_residual = 0;                   // |r3 r2 r1 r_inf - 1|
  long steps = 0;
};

// Continuation of the fundamental solution normalized to 1 at the base along loops that leave the base
// by a straight segment to the point above each pole, then circle it positively at radius min-gap/3.
MonodromyReport numeric_monodromy(const FuchsianSystem3<BigComplex>& sys, const MonodromyLoopOptions& opts = {});

// sigma_i^(2 sign) on a triple, preserving r3 r2 r1.
std::array<CMatrix, 3> pure_braid_move(const std::array<CMatrix, 3>& r, int generator);

template <class T>
FuchsianSystem3<BigComplex> to_complex(const FuchsianSystem3<T>& sys);

}  // namespace pviforge
