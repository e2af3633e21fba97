// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "pviforge/numerics/poly.hpp"

namespace pviforge {

// Reduced quotient of rational polynomials with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunction(const QPoly& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RationalFunction(QPoly num, QPoly den);

  static RationalFunction x() { return RationalFunction(QPoly::x()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero_poly(); }

  Rational eval(const Rational& x) const;
  BigComplex eval(const BigComplex& x) const;
  RationalFunction derivative() const;
  // this(g(x))
  RationalFunction compose(const RationalFunction& g) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

}  // namespace pviforge
