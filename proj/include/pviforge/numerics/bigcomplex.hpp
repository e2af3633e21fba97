// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <string>

namespace pviforge {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr unsigned kDefaultPrecision = 256;

// Working precision in bits; applies to values constructed afterwards.
unsigned working_precision();
void set_working_precision(unsigned bits);

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

// 2^(-bits/2) at the current working precision.
Real half_precision_tol();
Real pow2(long e);

unsigned precision_of(const Real& x);
Real to_real(const Rational& q);
Real real_pi();

class BigComplex {
 public:
  Real re;
  Real im;

  BigComplex();
  BigComplex(const Real& r);  // NOLINT
  BigComplex(const Real& r, const Real& i);
  BigComplex(long v);  // NOLINT
  BigComplex(int v) : BigComplex(static_cast<long>(v)) {}  // NOLINT
  BigComplex(const Rational& q);  // NOLINT
  BigComplex(const Rational& r, const Rational& i);

  static BigComplex i_unit();
  static BigComplex polar(const Real& r, const Real& theta);
  // exp(2 pi i p / q)
  static BigComplex root_of_unity(long p, long q);

  unsigned precision() const;

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);

  BigComplex operator-() const;
  bool is_exact_zero() const;
  std::string str(int digits = 30) const;
};

BigComplex operator+(BigComplex a, const BigComplex& b);
BigComplex operator-(BigComplex a, const BigComplex& b);
BigComplex operator*(BigComplex a, const BigComplex& b);
BigComplex operator/(BigComplex a, const BigComplex& b);
bool operator==(const BigComplex& a, const BigComplex& b);

BigComplex conj(const BigComplex& z);
Real abs(const BigComplex& z);
Real norm(const BigComplex& z);
Real arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);
BigComplex acos(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
BigComplex pow(const BigComplex& z, const BigComplex& w);
// exp(i pi x)
BigComplex expipi(const BigComplex& x);

}  // namespace pviforge
