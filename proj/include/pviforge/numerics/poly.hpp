// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pviforge/numerics/scalar.hpp"

namespace pviforge {

// Univariate polynomial, coefficients stored low degree first.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Poly(const T& constant) : c_{constant} { trim(); }  // NOLINT

  static Poly monomial(const T& coeff, std::size_t deg) {
    std::vector<T> c(deg + 1, zero_like<T>());
    c[deg] = coeff;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(one_like<T>(), 1); }

  bool is_zero_poly() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : zero_like<T>(); }
  T lead() const { return c_.empty() ? zero_like<T>() : c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }

  template <class U>
  U eval(const U& x) const {
    U r = zero_like<U>();
    for (std::size_t k = c_.size(); k-- > 0;) {
      r *= x;
      r += U(c_[k]);
    }
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_like<T>());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_like<T>());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator-(const Poly& a) { return a * T(-1L); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, zero_like<T>());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly pow(unsigned n) const {
    Poly r(one_like<T>());
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
  }

  // Quotient and remainder; T must be a field.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero_poly()) throw std::domain_error("Poly: division by zero polynomial");
    std::vector<T> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {Poly(), *this};
    std::vector<T> q(degree() - dd + 1, zero_like<T>());
    T inv = one_like<T>() / d.lead();
    for (int k = degree(); k >= dd; --k) {
      if (is_zero(r[k])) continue;
      T f = r[k] * inv;
      q[k - dd] = f;
      for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * d.c_[j];
      r[k] = zero_like<T>();
    }
    r.resize(dd);
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    return *this * (one_like<T>() / lead());
  }

  // p(q(x))
  Poly compose(const Poly& q) const {
    Poly r;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * q + Poly(c_[k]);
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using QPoly = Poly<Rational>;
using CPoly = Poly<BigComplex>;

QPoly gcd(QPoly a, QPoly b);
std::string to_string(const QPoly& p, const std::string& var = "t");
// Content-free integer polynomial proportional to p with positive leading coefficient.
std::vector<Integer> primitive_integer(const QPoly& p);
CPoly to_complex(const QPoly& p);
// Squarefree part p / gcd(p, p') made monic.
QPoly squarefree(const QPoly& p);

// All complex roots of p (degree >= 1) by Aberth iteration with Newton polishing.
std::vector<BigComplex> poly_roots(const CPoly& p, const std::vector<BigComplex>* start = nullptr);

}  // namespace pviforge
