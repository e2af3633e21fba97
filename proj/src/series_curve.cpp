// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pviforge/series_curve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

#include "pviforge/errors.hpp"

namespace pviforge {

namespace {

// Truncated series in x: c[k] multiplies x^(v + k), known modulo x^p; c.size() == p - v.
struct Ser {
  long v = 0;
  long p = 0;
  std::vector<BigComplex> c;

  BigComplex at(long e) const {
    if (e < v || e >= p) return BigComplex(0);
    return c[static_cast<std::size_t>(e - v)];
  }
};

Ser zero_ser(long p) { return {p, p, {}}; }

Ser from_puiseux(const PuiseuxSeries& y) {
  Ser s{y.valuation, y.precision, y.coeffs};
  s.c.resize(static_cast<std::size_t>(std::max(0L, s.p - s.v)), BigComplex(0));
  if (s.v > s.p) s = zero_ser(s.p);
  return s;
}

Ser add(const Ser& a, const Ser& b, bool subtract = false) {
  long p = std::min(a.p, b.p);
  long v = std::min({a.v, b.v, p});
  Ser r{v, p, std::vector<BigComplex>(static_cast<std::size_t>(p - v), BigComplex(0))};
  for (long e = v; e < p; ++e) {
    BigComplex x = a.at(e);
    if (subtract)
      x -= b.at(e);
    else
      x += b.at(e);
    r.c[static_cast<std::size_t>(e - v)] = x;
  }
  return r;
}

Ser sub(const Ser& a, const Ser& b) { return add(a, b, true); }

Ser mul(const Ser& a, const Ser& b) {
  long p = std::min(a.v + b.p, b.v + a.p);
  long v = a.v + b.v;
  if (v >= p) return zero_ser(p);
  std::size_t n = static_cast<std::size_t>(p - v);
  Ser r{v, p, std::vector<BigComplex>(n, BigComplex(0))};
  for (std::size_t i = 0; i < std::min(n, a.c.size()); ++i) {
    if (a.c[i].is_exact_zero()) continue;
    for (std::size_t j = 0; i + j < n && j < b.c.size(); ++j) {
      if (b.c[j].is_exact_zero()) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return r;
}

Ser scale(Ser a, const BigComplex& s) {
  for (auto& x : a.c) x *= s;
  return a;
}

Ser inv(const Ser& a) {
  Real tol = half_precision_tol();
  if (a.c.empty() || abs(a.c[0]) < tol) throw SeriesInversionError("series: leading coefficient vanishes");
  std::size_t n = a.c.size();
  Ser r{-a.v, -a.v + static_cast<long>(n), std::vector<BigComplex>(n, BigComplex(0))};
  BigComplex i0 = BigComplex(1) / a.c[0];
  r.c[0] = i0;
  for (std::size_t k = 1; k < n; ++k) {
    BigComplex acc(0);
    for (std::size_t j = 1; j <= k; ++j)
      if (!a.c[j].is_exact_zero()) acc += a.c[j] * r.c[k - j];
    r.c[k] = -acc * i0;
  }
  return r;
}

// t d/dt
Ser theta(Ser a, int N) {
  for (std::size_t k = 0; k < a.c.size(); ++k) a.c[k] *= BigComplex(Rational(a.v + static_cast<long>(k), N));
  return a;
}

// a * poly(t), exact in precision.
Ser mul_tpoly(const Ser& a, const QPoly& q, int N) {
  if (q.is_zero_poly()) return zero_ser(a.p);
  long lo = 0;
  while (is_zero(q.coeff(static_cast<std::size_t>(lo)))) ++lo;
  long v = a.v + lo * N, p = a.p + lo * N;
  Ser r{v, p, std::vector<BigComplex>(static_cast<std::size_t>(p - v), BigComplex(0))};
  for (int j = static_cast<int>(lo); j <= q.degree(); ++j) {
    if (is_zero(q.coeff(j))) continue;
    BigComplex cj(q.coeff(j));
    for (std::size_t k = 0; k < a.c.size(); ++k) {
      long e = a.v + static_cast<long>(k) + static_cast<long>(j) * N;
      if (e >= p) break;
      r.c[static_cast<std::size_t>(e - v)] += cj * a.c[k];
    }
  }
  return r;
}

Ser add_tpoly(const Ser& a, const QPoly& q, int N) {
  long v = a.v;
  for (int j = 0; j <= q.degree(); ++j)
    if (!is_zero(q.coeff(j)) && static_cast<long>(j) * N < a.p) v = std::min(v, static_cast<long>(j) * N);
  Ser r{v, a.p, std::vector<BigComplex>(static_cast<std::size_t>(a.p - v), BigComplex(0))};
  for (long e = a.v; e < a.p; ++e) r.c[static_cast<std::size_t>(e - v)] = a.at(e);
  for (int j = 0; j <= q.degree(); ++j) {
    long e = static_cast<long>(j) * N;
    if (e < a.p && !is_zero(q.coeff(j))) r.c[static_cast<std::size_t>(e - v)] += BigComplex(q.coeff(j));
  }
  return r;
}

QPoly tp(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v);
}

// t^2 (t-1)^2 (y'' - RHS) with D = t d/dt.
Ser pvi_cleared(const Ser& y, const PviParams& prm, int N) {
  const QPoly t = QPoly::x(), one(Rational(1));
  QPoly tm1 = t - one;
  QPoly tm1sq = tm1 * tm1;
  Ser ym1 = add_tpoly(y, -one, N);
  Ser ymt = add_tpoly(y, -t, N);
  Ser iy = inv(y), iy1 = inv(ym1), iyt = inv(ymt);
  Ser dy = theta(y, N);
  Ser d2y = theta(dy, N);
  Ser a = mul_tpoly(sub(d2y, dy), tm1sq, N);
  Ser q = mul(dy, dy);
  Ser b = mul_tpoly(mul(q, add(add(iy, iy1), iyt)), tm1sq * Rational(1, 2), N);
  Ser c = add(mul_tpoly(dy, tm1 * (t * Rational(2) - one), N), mul_tpoly(mul(dy, iyt), t * tm1sq, N));
  Ser e = scale(mul(mul(y, ym1), ymt), BigComplex(prm[0]));
  e = add(e, scale(mul_tpoly(mul(mul(ym1, ymt), iy), t, N), BigComplex(prm[1])));
  e = add(e, scale(mul_tpoly(mul(mul(y, ymt), iy1), tm1, N), BigComplex(prm[2])));
  e = add(e, scale(mul_tpoly(mul(mul(y, ym1), iyt), t * tm1, N), BigComplex(prm[3])));
  return sub(add(sub(a, b), c), e);
}

PuiseuxSeries to_puiseux(const Ser& s, int N) {
  PuiseuxSeries r;
  r.ramification = N;
  r.valuation = s.v;
  r.precision = s.p;
  r.coeffs = s.c;
  return r;
}

Ser truncate(Ser s, long p) {
  if (p >= s.p) return s;
  if (p <= s.v) return zero_ser(p);
  s.c.resize(static_cast<std::size_t>(p - s.v));
  s.p = p;
  return s;
}

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

QPoly qlcm(const QPoly& a, const QPoly& b) {
  QPoly g = gcd(a, b);
  return (a * b).divmod(g).first.monic();
}

Integer integer_lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer integer_gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Determinant over Q by Gaussian elimination.
Rational det_q(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(m[piv][k]) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      d = -d;
    }
    d *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m[i][k]) == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return d;
}

// Resultant of a and b with formal degrees da, db (Sylvester determinant).
Rational sylvester_resultant(const QPoly& a, int da, const QPoly& b, int db) {
  std::size_t n = static_cast<std::size_t>(da + db);
  if (n == 0) return Rational(1);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (int r = 0; r < db; ++r)
    for (int j = 0; j <= da; ++j) m[r][r + j] = a.coeff(static_cast<std::size_t>(da - j));
  for (int r = 0; r < da; ++r)
    for (int j = 0; j <= db; ++j) m[db + r][r + j] = b.coeff(static_cast<std::size_t>(db - j));
  return det_q(m);
}

// Newton interpolation through (x_k, f_k).
QPoly interpolate(const std::vector<Rational>& x, std::vector<Rational> f) {
  std::size_t n = x.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      f[i] = (f[i] - f[i - 1]) / (x[i] - x[i - j]);
      if (i == j) break;
    }
  QPoly r(f[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) r = r * (QPoly::x() - QPoly(x[i])) + QPoly(f[i]);
  return r;
}

using cd = std::complex<double>;

std::vector<cd> fiber_double(const IntegerCurve& c, cd t) {
  std::vector<cd> out;
  for (const auto& row : c.coeffs) {
    cd acc = 0;
    for (std::size_t j = row.size(); j-- > 0;) acc = acc * t + cd(row[j].get_d(), 0);
    out.push_back(acc);
  }
  return out;
}

std::pair<cd, cd> horner(const std::vector<cd>& p, cd y) {
  cd v = 0, d = 0;
  for (std::size_t k = p.size(); k-- > 0;) {
    d = d * y + v;
    v = v * y + p[k];
  }
  return {v, d};
}

double min_separation(const std::vector<cd>& r) {
  double m = INFINITY;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) m = std::min(m, std::abs(r[i] - r[j]));
  return m;
}

Perm track_loop(const IntegerCurve& c, const std::vector<cd>& start, cd center, cd radius_vec, double min_sep) {
  const double two_pi = 2 * M_PI;
  std::vector<cd> roots = start;
  double theta = 0, h = two_pi / 256;
  while (theta < two_pi) {
    double step = std::min(h, two_pi - theta);
    cd t = center + radius_vec * std::polar(1.0, theta + step);
    auto poly = fiber_double(c, t);
    double sep = min_separation(roots);
    std::vector<cd> next = roots;
    bool ok = true;
    for (auto& r : next) {
      bool conv = false;
      for (int it = 0; it < 40; ++it) {
        auto [v, d] = horner(poly, r);
        if (d == cd(0)) break;
        cd dr = v / d;
        r -= dr;
        if (std::abs(dr) < 1e-13 * (1 + std::abs(r))) {
          conv = true;
          break;
        }
      }
      if (!conv) ok = false;
    }
    if (ok) {
      for (std::size_t i = 0; i < roots.size() && ok; ++i)
        if (std::abs(next[i] - roots[i]) > sep / 4) ok = false;
      if (ok && min_separation(next) < min_sep) ok = false;
    }
    if (!ok) {
      h = step / 2;
      if (h < 1e-12)
        throw PathTooClose("curve_cover_monodromy: roots collide near t = " + std::to_string(t.real()) + " + " +
                           std::to_string(t.imag()) + "i");
      continue;
    }
    roots = next;
    theta += step;
    h = std::min(step * 1.5, two_pi / 64);
  }
  Perm p(start.size());
  double sep = min_separation(start);
  for (std::size_t i = 0; i < start.size(); ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < start.size(); ++j)
      if (std::abs(roots[i] - start[j]) < std::abs(roots[i] - start[best])) best = j;
    if (std::abs(roots[i] - start[best]) > sep / 4)
      throw PathTooClose("curve_cover_monodromy: loop does not close on the base fiber");
    p[i] = static_cast<int>(best);
  }
  if (!perm_is_bijection(p)) throw PathTooClose("curve_cover_monodromy: ambiguous root matching");
  return p;
}

QPoly int_row(const std::vector<Integer>& row) {
  std::vector<Rational> v;
  for (const auto& x : row) v.emplace_back(x);
  return QPoly(v);
}

}  // namespace

BigComplex PuiseuxSeries::eval(const BigComplex& t) const {
  BigComplex x = t.is_exact_zero() ? BigComplex(0) : exp(log(t) / BigComplex(ramification));
  BigComplex acc(0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc * pow(x, valuation);
}

PuiseuxSeries PuiseuxSeries::refine(int m) const {
  PuiseuxSeries r;
  r.ramification = ramification * m;
  r.valuation = valuation * m;
  r.precision = precision * m;
  r.coeffs.assign(static_cast<std::size_t>(std::max(0L, r.precision - r.valuation)), BigComplex(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) r.coeffs[k * static_cast<std::size_t>(m)] = coeffs[k];
  return r;
}

PuiseuxSeries pvi_residual_series(const PuiseuxSeries& y, const PviParams& params, const Rational& t_order) {
  int N = y.ramification;
  Ser s = from_puiseux(y);
  if (sgn(t_order) > 0) {
    Rational px = t_order * N;
    Integer fl = px.get_num() / px.get_den();
    s = truncate(s, fl.get_si());
  }
  Ser g = pvi_cleared(s, params, N);
  // divide by t^2 (t - 1)^2
  long len = std::max(0L, g.p - g.v);
  Ser w{0, len, std::vector<BigComplex>(static_cast<std::size_t>(len), BigComplex(0))};
  for (long j = 0; j * N < len; ++j) w.c[static_cast<std::size_t>(j * N)] = BigComplex(j + 1);
  Ser r = mul(g, w);
  r.v -= 2L * N;
  r.p -= 2L * N;
  return to_puiseux(r, N);
}

PuiseuxSeries extend_branch(const BranchLeadingTerm& lead, const PviParams& params, int order,
                            const ExtendOptions& opts) {
  Rational e0;
  if (lead.exponent_exact) {
    e0 = *lead.exponent_exact;
  } else {
    auto q = recognize_power_rational(lead.exponent, 1, 1000);
    if (!q) throw DomainError("extend_branch: leading exponent is not rational");
    e0 = *q;
  }
  e0.canonicalize();
  if (sgn(e0) <= 0 || e0 >= 1) throw DomainError("extend_branch: leading exponent must lie in (0, 1)");
  int N = static_cast<int>(e0.get_den().get_si());
  for (int attempt = 0;; ++attempt) {
    try {
      Rational en = e0 * N;
      en.canonicalize();
      long E = en.get_num().get_si();
      long P = static_cast<long>(order) * N;
      Ser y{E, E + 1, {lead.coefficient}};
      Real tol = half_precision_tol();
      Ser g0 = pvi_cleared(y, params, N);
      if (abs(g0.at(E)) > tol * (1 + abs(lead.coefficient)))
        throw ResonanceError("extend_branch: leading term does not balance PVI");
      for (long k = 1; E + k < P; ++k) {
        y.c.push_back(BigComplex(0));
        y.p = E + k + 1;
        Ser g = pvi_cleared(y, params, N);
        if (g.p <= E + k) throw SeriesInversionError("extend_branch: precision loss at order " + std::to_string(k));
        // a_k enters its first order with coefficient (k / N)^2
        BigComplex slope(Rational(k * k, static_cast<long>(N) * N));
        y.c.back() = -g.at(E + k) / slope;
      }
      return to_puiseux(y, N);
    } catch (const SeriesInversionError&) {
      if (attempt >= opts.max_doublings) throw;
      N *= 2;
    }
  }
}

std::vector<LaurentSeries> symmetric_laurent(const std::vector<PuiseuxSeries>& branches, Real tol) {
  if (branches.empty()) return {};
  if (tol <= 0) tol = half_precision_tol();
  int N = 1;
  for (const auto& b : branches) N = std::lcm(N, b.ramification);
  std::vector<Ser> ys;
  long P = LONG_MAX;
  for (const auto& b : branches) {
    ys.push_back(from_puiseux(b.refine(N / b.ramification)));
    P = std::min(P, ys.back().p);
  }
  for (auto& y : ys) y = truncate(y, P);
  std::size_t n = ys.size();
  // poly[i] = coefficient of Y^i
  Ser one{0, P, std::vector<BigComplex>(static_cast<std::size_t>(std::max(0L, P)), BigComplex(0))};
  if (P > 0) one.c[0] = BigComplex(1);
  std::vector<Ser> poly{one};
  for (const auto& y : ys) {
    std::vector<Ser> next(poly.size() + 1, zero_ser(P));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = add(next[i + 1], poly[i]);
      next[i] = sub(next[i], mul(y, poly[i]));
    }
    poly = std::move(next);
  }
  std::vector<LaurentSeries> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Ser& s = poly[i];
    Real sc = 1;
    for (const auto& x : s.c) sc = std::max(sc, abs(x));
    LaurentSeries ls;
    ls.valuation = -floor_div(-s.v, N);  // ceil
    long top = floor_div(s.p - 1, N);
    for (long e = s.v; e < s.p; ++e) {
      if (((e % N) + N) % N == 0) continue;
      if (abs(s.at(e)) > tol * sc)
        throw FractionalResidueError("symmetric_laurent: r_" + std::to_string(i) + " has a term at t^(" +
                                     std::to_string(e) + "/" + std::to_string(N) + ")");
    }
    for (long j = ls.valuation; j <= top; ++j) ls.coeffs.push_back(s.at(j * N));
    out.push_back(std::move(ls));
  }
  return out;
}

int IntegerCurve::degree_t() const {
  int d = -1;
  for (const auto& row : coeffs)
    for (std::size_t j = 0; j < row.size(); ++j)
      if (sgn(row[j]) != 0) d = std::max(d, static_cast<int>(j));
  return d;
}

QPoly IntegerCurve::y_coefficient(int i) const {
  if (i < 0 || i > degree_y()) return QPoly();
  return int_row(coeffs[static_cast<std::size_t>(i)]);
}

QPoly IntegerCurve::fiber(const Rational& t0) const {
  std::vector<Rational> v;
  for (int i = 0; i <= degree_y(); ++i) v.push_back(y_coefficient(i).eval(t0));
  return QPoly(v);
}

CPoly IntegerCurve::fiber(const BigComplex& t0) const {
  std::vector<BigComplex> v;
  for (int i = 0; i <= degree_y(); ++i) v.push_back(y_coefficient(i).eval(t0));
  return CPoly(v);
}

BigComplex IntegerCurve::eval(const BigComplex& t, const BigComplex& y) const { return fiber(t).eval(y); }

std::string IntegerCurve::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree_y(); i >= 0; --i) {
    QPoly p = y_coefficient(i);
    if (p.is_zero_poly()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(p, "t") << ")";
    if (i >= 1) os << "*y";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

bool IntegerCurve::equal_up_to_sign(const IntegerCurve& other) const {
  if (degree_y() != other.degree_y()) return false;
  for (int s : {1, -1}) {
    bool eq = true;
    for (int i = 0; i <= degree_y() && eq; ++i) eq = y_coefficient(i) == other.y_coefficient(i) * Rational(s);
    if (eq) return true;
  }
  return false;
}

IntegerCurve curve_from_rows(const std::vector<std::vector<long>>& rows) {
  IntegerCurve c;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (long x : r) row.emplace_back(x);
    c.coeffs.push_back(std::move(row));
  }
  c.branch_count = c.degree_y();
  return c;
}

IntegerCurve assemble_curve(const std::vector<RationalFunction>& symfns) {
  std::size_t n = symfns.size();
  QPoly q(Rational(1));
  for (const auto& r : symfns) q = qlcm(q, r.den());
  std::vector<QPoly> rows;
  for (const auto& r : symfns) rows.push_back(r.num() * q.divmod(r.den()).first);
  rows.push_back(q);
  Integer den = 1;
  for (const auto& p : rows)
    for (const auto& c : p.coeffs()) {
      Rational cc = c;
      cc.canonicalize();
      den = integer_lcm(den, cc.get_den());
    }
  Integer g = 0;
  for (const auto& p : rows)
    for (const auto& c : p.coeffs()) {
      Rational cc = c * Rational(den);
      cc.canonicalize();
      if (cc.get_den() != 1) throw NonRationalCoefficient("assemble_curve: denominator not cleared");
      g = integer_gcd(g, cc.get_num());
    }
  if (g == 0) g = 1;
  Rational factor = Rational(den) / Rational(g);
  factor.canonicalize();
  // first nonzero coefficient in the order (deg_y desc, deg_t asc) is made positive
  for (std::size_t i = n + 1; i-- > 0;) {
    const auto& cs = rows[i].coeffs();
    auto it = std::find_if(cs.begin(), cs.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (it != cs.end()) {
      if (sgn(*it * factor) < 0) factor = -factor;
      break;
    }
  }
  IntegerCurve c;
  c.branch_count = static_cast<int>(n);
  c.normalization = factor;
  for (const auto& p : rows) {
    std::vector<Integer> row;
    for (const auto& x : p.coeffs()) {
      Rational v = x * factor;
      v.canonicalize();
      row.push_back(v.get_num());
    }
    c.coeffs.push_back(std::move(row));
  }
  return c;
}

ParamResidual verify_parameterization(const RationalParameterization& p, const PviParams& prm) {
  ParamResidual out;
  const RationalFunction &y = p.y, &t = p.t;
  RationalFunction one(Rational(1));
  RationalFunction ts = t.derivative();
  RationalFunction ym1 = y - one, ymt = y - t, tm1 = t - one;
  if (ts.is_zero() || y.is_zero() || ym1.is_zero() || ymt.is_zero() || t.is_zero() || tm1.is_zero()) {
    out.singular = true;
    return out;
  }
  RationalFunction yt = y.derivative() / ts;
  RationalFunction ytt = yt.derivative() / ts;
  RationalFunction rhs = RationalFunction(Rational(1, 2)) * (one / y + one / ym1 + one / ymt) * yt * yt -
                         (one / t + one / tm1 + one / ymt) * yt +
                         y * ym1 * ymt / (t * t * tm1 * tm1) *
                             (RationalFunction(prm[0]) + RationalFunction(prm[1]) * t / (y * y) +
                              RationalFunction(prm[2]) * tm1 / (ym1 * ym1) +
                              RationalFunction(prm[3]) * t * tm1 / (ymt * ymt));
  out.residual = ytt - rhs;
  return out;
}

bool curve_on_curve_check(const IntegerCurve& c, const RationalParameterization& p) {
  RationalFunction acc;
  for (int i = c.degree_y(); i >= 0; --i) {
    QPoly row = c.y_coefficient(i);
    RationalFunction ri;
    for (int j = row.degree(); j >= 0; --j) ri = ri * p.t + RationalFunction(row.coeff(static_cast<std::size_t>(j)));
    acc = acc * p.y + ri;
  }
  return acc.is_zero();
}

CoverMonodromy curve_cover_monodromy(const IntegerCurve& c, const MonodromyOptions& opts) {
  if (c.degree_y() < 1) throw DomainError("curve_cover_monodromy: curve has no y dependence");
  CPoly base = c.fiber(BigComplex(opts.base));
  if (base.degree() < c.degree_y()) throw PathTooClose("curve_cover_monodromy: a root is at infinity over the base");
  CoverMonodromy out;
  out.base_roots = base.degree() >= 1 ? poly_roots(base) : std::vector<BigComplex>{};
  std::vector<cd> start;
  for (const auto& r : out.base_roots) start.emplace_back(r.re.convert_to<double>(), r.im.convert_to<double>());
  if (start.size() > 1 && min_separation(start) < opts.min_separation)
    throw PathTooClose("curve_cover_monodromy: base point is on the discriminant");
  double b = to_real(opts.base).convert_to<double>();
  out.around0 = track_loop(c, start, cd(0, 0), cd(b, 0), opts.min_separation);
  out.around1 = track_loop(c, start, cd(1, 0), cd(b - 1, 0), opts.min_separation);
  return out;
}

QPoly discriminant_in_y(const IntegerCurve& c) {
  int n = c.degree_y();
  if (n < 1) return QPoly(Rational(1));
  int dt = std::max(0, c.degree_t());
  int bound = (2 * n - 1) * dt;
  std::vector<QPoly> rows, drows;
  for (int i = 0; i <= n; ++i) rows.push_back(c.y_coefficient(i));
  std::vector<Rational> xs, fs;
  for (int k = 0; k <= bound; ++k) {
    Rational x(k);
    std::vector<Rational> f, fp;
    for (int i = 0; i <= n; ++i) f.push_back(rows[static_cast<std::size_t>(i)].eval(x));
    for (int i = 1; i <= n; ++i) fp.push_back(f[static_cast<std::size_t>(i)] * i);
    xs.push_back(x);
    fs.push_back(sylvester_resultant(QPoly(f), n, QPoly(fp), n - 1));
  }
  QPoly res = interpolate(xs, fs);
  auto [quo, rem] = res.divmod(rows[static_cast<std::size_t>(n)]);
  if (!rem.is_zero_poly()) throw DomainError("discriminant_in_y: resultant not divisible by leading coefficient");
  if ((n * (n - 1) / 2) % 2 == 1) quo = -quo;
  return quo;
}

SingularityCensus singularity_census(const IntegerCurve& c) {
  SingularityCensus out;
  out.discriminant = discriminant_in_y(c);
  int n = c.degree_y();
  const QPoly t = QPoly::x();
  std::vector<QPoly> rows;
  for (int i = 0; i <= n; ++i) rows.push_back(c.y_coefficient(i));
  auto fiber_poly = [&](const std::vector<QPoly>& rr, const Rational& t0) {
    std::vector<Rational> v;
    for (const auto& r : rr) v.push_back(r.eval(t0));
    return QPoly(v);
  };
  std::vector<QPoly> drows;
  for (const auto& r : rows) drows.push_back(r.derivative());

  // finite points over t = 0 and t = 1, exactly
  QPoly sqf = out.discriminant.degree() >= 1 ? squarefree(out.discriminant) : QPoly(Rational(1));
  for (const Rational& t0 : {Rational(0), Rational(1)}) {
    QPoly f = fiber_poly(rows, t0);
    if (f.is_zero_poly()) continue;
    QPoly g = gcd(gcd(f, f.derivative()), fiber_poly(drows, t0));
    if (g.degree() < 1) continue;
    QPoly roots_poly = squarefree(g);
    for (const auto& y0 : poly_roots(to_complex(roots_poly))) {
      int mult = 0;
      CPoly hc = to_complex(f);
      CPoly lf(std::vector<BigComplex>{-y0, BigComplex(1)});
      while (hc.degree() >= 1 && abs(hc.eval(y0)) < half_precision_tol() * (1 + abs(y0))) {
        hc = hc.divmod(lf).first;
        ++mult;
      }
      out.points.push_back({BigComplex(t0), y0, BigComplex(1), mult});
      ++out.over_branch;
    }
    while (sgn(sqf.eval(t0)) == 0) sqf = sqf.divmod(t - QPoly(t0)).first;
  }

  // remaining finite points, numerically
  if (sqf.degree() >= 1) {
    Real tol = pow2(-static_cast<long>(working_precision()) / 4);
    for (const auto& t0 : poly_roots(to_complex(sqf))) {
      CPoly f = c.fiber(t0);
      if (f.degree() < 1) continue;
      auto ys = poly_roots(f);
      std::vector<bool> used(ys.size(), false);
      for (std::size_t i = 0; i < ys.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> cl{i};
        for (std::size_t j = i + 1; j < ys.size(); ++j)
          if (!used[j] && abs(ys[j] - ys[i]) < tol * (1 + abs(ys[i]))) cl.push_back(j);
        if (cl.size() < 2) continue;
        BigComplex y0(0);
        for (auto j : cl) {
          used[j] = true;
          y0 += ys[j];
        }
        y0 /= BigComplex(static_cast<long>(cl.size()));
        BigComplex ft(0);
        for (std::size_t k = drows.size(); k-- > 0;) ft = ft * y0 + drows[k].eval(t0);
        Real sc(1);
        for (const auto& r : drows)
          for (const auto& x : r.coeffs()) sc = std::max(sc, abs(BigComplex(x)));
        if (abs(ft) > tol * sc * (1 + pow(abs(y0), n))) continue;
        out.points.push_back({t0, y0, BigComplex(1), static_cast<int>(cl.size())});
        ++out.over_generic;
        if (cl.size() == 2) ++out.double_points;
      }
    }
  }

  // points at infinity of the closure in P^2
  int d = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= rows[static_cast<std::size_t>(i)].degree(); ++j)
      if (!is_zero(rows[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(j)))) d = std::max(d, i + j);
  // degree-deg part of F at [1 : u : 0]: coefficient of u^i is c_{i, deg - i}
  auto form = [&](int deg) {
    std::vector<Rational> v;
    for (int i = 0; i <= n && i <= deg; ++i) v.push_back(rows[static_cast<std::size_t>(i)].coeff(
        static_cast<std::size_t>(deg - i)));
    return QPoly(v);
  };
  QPoly top = form(d), sub1 = form(d - 1);
  // [1 : u : 0]
  if (top.degree() >= 1) {
    QPoly g = gcd(gcd(top, top.derivative()), sub1);
    if (g.degree() >= 1)
      for (const auto& u : poly_roots(to_complex(squarefree(g)))) {
        out.points.push_back({BigComplex(1), u, BigComplex(0), 0});
        ++out.over_branch;
      }
  }
  // [0 : 1 : 0]: multiplicity of u = infinity in top is d - deg(top); singular when >= 2 and c_{d-1, 0} = 0
  int mult_inf = d - std::max(top.degree(), -1);
  if (top.is_zero_poly()) mult_inf = d + 1;
  bool no_z_term = d - 1 > n || is_zero(rows[static_cast<std::size_t>(d - 1)].coeff(0));
  if (mult_inf >= 2 && no_z_term) {
    out.points.push_back({BigComplex(0), BigComplex(1), BigComplex(0), 0});
    ++out.over_branch;
  }
  return out;
}

CurvePipelineResult solve_curve(const Theta& theta, const std::vector<TraceData2>& orbit, int order) {
  CurvePipelineResult out;
  PviParams params = pvi_params_from_theta(theta);
  for (const auto& tr : orbit) {
    out.leads.push_back(leading_term(make_jimbo_input(theta, tr)));
    out.branches.push_back(extend_branch(out.leads.back(), params, order));
  }
  out.laurent = symmetric_laurent(out.branches);
  for (const auto& ls : out.laurent) {
    int max_total = static_cast<int>(ls.coeffs.size()) - 3;
    out.symfns.push_back(laurent_to_rational_auto(ls, max_total));
  }
  out.curve = assemble_curve(out.symfns);
  return out;
}

RationalParameterization klein_parameterization() {
  QPoly a = tp({5, -8, 5}), b = tp({4, -7, 7}), c = tp({7, -7, 4});
  QPoly s = QPoly::x();
  QPoly den = s * (s - tp({2})) * (s + tp({1})) * (s * Rational(2) - tp({1})) * c;
  RationalFunction y(-(a * b), den);
  RationalFunction t(b * b, s * s * s * c * c);
  return {y, t};
}

IntegerCurve klein_curve() {
  return curve_from_rows({{0, 0, 0, 0, 125, -88, 125},
                          {0, 0, 0, 0, -567, -567},
                          {0, 0, 0, -21, 3444, -21},
                          {0, 0, 14, -2849, -2849, 14},
                          {0, 0, 1407, 2856, 1407},
                          {0, 0, -1701, -1701},
                          {0, -567, 2268, -567},
                          {162, -243, -243, 162}});
}

}  // namespace pviforge
