// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pviforge/numerics/bigcomplex.hpp"

namespace pviforge {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const BigComplex& z) { return z.is_exact_zero(); }

inline Rational magnitude(const Rational& q) { return abs(q); }
inline Real magnitude(const BigComplex& z) { return norm(z); }

template <class T>
T zero_like();
template <>
inline Rational zero_like<Rational>() { return Rational(0); }
template <>
inline BigComplex zero_like<BigComplex>() { return BigComplex(0); }

template <class T>
T one_like();
template <>
inline Rational one_like<Rational>() { return Rational(1); }
template <>
inline BigComplex one_like<BigComplex>() { return BigComplex(1); }

inline BigComplex to_complex(const Rational& q) { return BigComplex(q); }
inline BigComplex to_complex(const BigComplex& z) { return z; }

// Exact zero for rationals; below half precision relative to max(scale, 1) for complex values.
inline bool near_zero(const Rational& q, const Real& = Real(1)) { return sgn(q) == 0; }
inline bool near_zero(const BigComplex& z, const Real& scale = Real(1)) {
  Real s = scale < 1 ? Real(1) : scale;
  return abs(z) <= half_precision_tol() * s;
}

}  // namespace pviforge
