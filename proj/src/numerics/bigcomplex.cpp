// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pviforge/numerics/bigcomplex.hpp"

#include <atomic>
#include <cmath>
#include <sstream>

namespace pviforge {

namespace {

std::atomic<unsigned> g_bits{0};

unsigned digits10_for(unsigned bits) {
  return static_cast<unsigned>(std::floor(bits * 0.30102999566398)) + 1;
}

void round_to(Real& x, unsigned bits) {
  if (mpfr_get_prec(x.backend().data()) > static_cast<mpfr_prec_t>(bits)) {
    mpfr_prec_round(x.backend().data(), bits, MPFR_RNDN);
  }
}

void settle(BigComplex& z, unsigned bits) {
  round_to(z.re, bits);
  round_to(z.im, bits);
}

}  // namespace

unsigned working_precision() {
  unsigned b = g_bits.load();
  if (b == 0) {
    set_working_precision(kDefaultPrecision);
    b = kDefaultPrecision;
  }
  return b;
}

void set_working_precision(unsigned bits) {
  g_bits.store(bits);
  Real::default_precision(digits10_for(bits));
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_(working_precision()) {
  set_working_precision(bits);
}

PrecisionScope::~PrecisionScope() { set_working_precision(saved_); }

Real pow2(long e) {
  Real r = 1;
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
  return r;
}

Real half_precision_tol() { return pow2(-static_cast<long>(working_precision() / 2)); }

unsigned precision_of(const Real& x) {
  return static_cast<unsigned>(mpfr_get_prec(x.backend().data()));
}

Real to_real(const Rational& q) {
  working_precision();
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real real_pi() {
  working_precision();
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

BigComplex::BigComplex() : re((working_precision(), 0)), im(0) {}
BigComplex::BigComplex(const Real& r) : re(r), im(0) {}
BigComplex::BigComplex(const Real& r, const Real& i) : re(r), im(i) {}
BigComplex::BigComplex(long v) : re((working_precision(), v)), im(0) {}
BigComplex::BigComplex(const Rational& q) : re(to_real(q)), im(0) {}
BigComplex::BigComplex(const Rational& r, const Rational& i) : re(to_real(r)), im(to_real(i)) {}

BigComplex BigComplex::i_unit() { return {Real((working_precision(), 0)), Real(1)}; }

BigComplex BigComplex::polar(const Real& r, const Real& theta) {
  return {r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta)};
}

BigComplex BigComplex::root_of_unity(long p, long q) {
  Real theta = 2 * real_pi() * p / q;
  return polar(Real(1), theta);
}

unsigned BigComplex::precision() const { return std::min(precision_of(re), precision_of(im)); }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  unsigned b = std::min(precision(), o.precision());
  re += o.re;
  im += o.im;
  settle(*this, b);
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  unsigned b = std::min(precision(), o.precision());
  re -= o.re;
  im -= o.im;
  settle(*this, b);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  unsigned b = std::min(precision(), o.precision());
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  settle(*this, b);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  unsigned b = std::min(precision(), o.precision());
  Real d = o.re * o.re + o.im * o.im;
  if (d == 0) throw std::domain_error("BigComplex division by zero");
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  settle(*this, b);
  return *this;
}

BigComplex BigComplex::operator-() const { return {-re, -im}; }

bool BigComplex::is_exact_zero() const { return re == 0 && im == 0; }

std::string BigComplex::str(int digits) const {
  std::ostringstream os;
  os << std::setprecision(digits) << re << (im < 0 ? " - " : " + ") << std::setprecision(digits)
     << boost::multiprecision::abs(im) << "i";
  return os.str();
}

BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
bool operator==(const BigComplex& a, const BigComplex& b) { return a.re == b.re && a.im == b.im; }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
Real norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const BigComplex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real arg(const BigComplex& z) { return boost::multiprecision::atan2(z.im, z.re); }

BigComplex exp(const BigComplex& z) {
  return BigComplex::polar(boost::multiprecision::exp(z.re), z.im);
}

BigComplex log(const BigComplex& z) { return {boost::multiprecision::log(abs(z)), arg(z)}; }

BigComplex sqrt(const BigComplex& z) {
  if (z.is_exact_zero()) return z;
  Real r = abs(z);
  Real a = boost::multiprecision::sqrt((r + boost::multiprecision::abs(z.re)) / 2);
  if (z.re >= 0) return {a, z.im / (2 * a)};
  Real b = z.im < 0 ? Real(-a) : a;
  return {boost::multiprecision::abs(z.im) / (2 * a), b};
}

BigComplex sin(const BigComplex& z) {
  return {boost::multiprecision::sin(z.re) * boost::multiprecision::cosh(z.im),
          boost::multiprecision::cos(z.re) * boost::multiprecision::sinh(z.im)};
}

BigComplex cos(const BigComplex& z) {
  return {boost::multiprecision::cos(z.re) * boost::multiprecision::cosh(z.im),
          -boost::multiprecision::sin(z.re) * boost::multiprecision::sinh(z.im)};
}

BigComplex acos(const BigComplex& z) {
  // -i log(z + i sqrt(1 - z^2)), principal branch with real part in [0, pi]
  BigComplex i = BigComplex::i_unit();
  BigComplex w = log(z + i * sqrt(BigComplex(1) - z * z));
  return {w.im, -w.re};
}

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) return BigComplex(1) / pow(z, -n);
  BigComplex result(1);
  BigComplex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

BigComplex pow(const BigComplex& z, const BigComplex& w) { return exp(w * log(z)); }

BigComplex expipi(const BigComplex& x) { return exp(BigComplex::i_unit() * BigComplex(real_pi()) * x); }

}  // namespace pviforge
