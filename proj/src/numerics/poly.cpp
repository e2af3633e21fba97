// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pviforge/numerics/poly.hpp"

#include <sstream>

namespace pviforge {

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero_poly()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero_poly()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    Rational a = abs(c);
    if (k == 0 || a != 1) {
      os << a.get_str();
      if (k > 0) os << "*";
    }
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::vector<Integer> primitive_integer(const QPoly& p) {
  std::vector<Integer> out;
  if (p.is_zero_poly()) return out;
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Rational s = c * l;
    out.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  if (sgn(out.back()) < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

CPoly to_complex(const QPoly& p) {
  std::vector<BigComplex> c;
  for (const auto& q : p.coeffs()) c.emplace_back(q);
  return CPoly(std::move(c));
}

QPoly squarefree(const QPoly& p) {
  QPoly g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

std::vector<BigComplex> poly_roots(const CPoly& p, const std::vector<BigComplex>* start) {
  int n = p.degree();
  if (n < 1) throw std::invalid_argument("poly_roots: degree < 1");
  CPoly dp = p.derivative();
  std::vector<BigComplex> z;
  if (start && static_cast<int>(start->size()) == n) {
    z = *start;
  } else {
    // Cauchy-type radius bound; points on a slightly rotated circle.
    Real lead = abs(p.lead());
    Real radius = 0;
    for (int k = 0; k < n; ++k) {
      Real r = boost::multiprecision::pow(abs(p.coeff(k)) / lead, Real(1) / (n - k));
      if (r > radius) radius = r;
    }
    if (radius == 0) radius = 1;
    for (int k = 0; k < n; ++k) {
      Real theta = 2 * real_pi() * k / n + Real(0.4);
      z.push_back(BigComplex::polar(radius, theta));
    }
  }
  Real eps = pow2(-static_cast<long>(working_precision()) + 8);
  for (int iter = 0; iter < 2000; ++iter) {
    bool done = true;
    for (int i = 0; i < n; ++i) {
      BigComplex f = p.eval(z[i]);
      if (f.is_exact_zero()) continue;
      BigComplex ratio = f / dp.eval(z[i]);
      BigComplex s(0);
      for (int j = 0; j < n; ++j) {
        if (j != i) s += BigComplex(1) / (z[i] - z[j]);
      }
      BigComplex w = ratio / (BigComplex(1) - ratio * s);
      z[i] -= w;
      if (abs(w) > eps * (1 + abs(z[i]))) done = false;
    }
    if (done) break;
  }
  for (auto& r : z) {
    for (int k = 0; k < 3; ++k) {
      BigComplex d = dp.eval(r);
      if (d.is_exact_zero()) break;
      r -= p.eval(r) / d;
    }
  }
  return z;
}

}  // namespace pviforge
