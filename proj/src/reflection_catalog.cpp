// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pviforge/reflection_catalog.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "pviforge/errors.hpp"
#include "pviforge/numerics/poly.hpp"

namespace pviforge {

QI7& QI7::operator+=(const QI7& o) {
  a += o.a;
  b += o.b;
  return *this;
}

QI7& QI7::operator-=(const QI7& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

QI7& QI7::operator*=(const QI7& o) {
  Rational na = a * o.a - 7 * b * o.b;
  b = a * o.b + b * o.a;
  a = na;
  return *this;
}

QI7& QI7::operator/=(const QI7& o) {
  Rational n = o.norm();
  if (sgn(n) == 0) throw DivisionByZero("QI7 division by zero");
  *this *= o.conj();
  a /= n;
  b /= n;
  return *this;
}

BigComplex QI7::eval() const {
  Real s7 = boost::multiprecision::sqrt(Real(7));
  return {to_real(a), to_real(b) * s7};
}

std::array<Matrix<QI7>, 3> klein_generators_exact() {
  Rational h(1, 2);
  QI7 a(h, h);
  QI7 ab = a.conj();
  Matrix<QI7> r1(3, 3, {QI7(h), QI7(-h), -ab * QI7(h), QI7(-h), QI7(h), -ab * QI7(h), -a * QI7(h), -a * QI7(h), QI7(0)});
  Matrix<QI7> r2 = Matrix<QI7>::diagonal({QI7(1), QI7(1), QI7(-1)});
  Matrix<QI7> r3(3, 3, {QI7(1), QI7(0), QI7(0), QI7(0), QI7(0), QI7(1), QI7(0), QI7(1), QI7(0)});
  return {r1, r2, r3};
}

PseudoReflectionTriple klein_generators() {
  PseudoReflectionTriple T;
  auto ex = klein_generators_exact();
  for (int i = 0; i < 3; ++i) T.r[i] = to_complex(ex[i]);
  T.exact = ex;
  T.group = "klein";
  T.exponents = {3, 5, 13};
  T.coxeter_h = 14;
  return T;
}

BigComplex dm_m(const BigComplex& x1, const BigComplex& x2, const BigComplex& x3) {
  return BigComplex(2) + x1 * x2 * x3 - (x1 * x1 + x2 * x2 + x3 * x3);
}

PseudoReflectionTriple dm_reflections(const BigComplex& x1, const BigComplex& x2, const BigComplex& x3) {
  BigComplex o(1), z(0), m1(-1);
  PseudoReflectionTriple T;
  T.r[0] = CMatrix(3, 3, {m1, -x1, -x3, z, o, z, z, z, o});
  T.r[1] = CMatrix(3, 3, {o, z, z, -x1, m1, -x2, z, z, o});
  T.r[2] = CMatrix(3, 3, {o, z, z, z, o, z, -x3, -x2, m1});
  T.bilinear_form = CMatrix(3, 3, {BigComplex(2), x1, x3, x1, BigComplex(2), x2, x3, x2, BigComplex(2)});
  T.group = "dubrovin-mazzocco";
  T.degenerate = abs(dm_m(x1, x2, x3) - BigComplex(2)) < half_precision_tol();
  return T;
}

Sl2Triple dm_unipotent_triple(const BigComplex& x1, const BigComplex& x2, const BigComplex& x3) {
  if (x1.is_exact_zero()) throw DegenerateError("dm_unipotent_triple: x1 = 0");
  BigComplex o(1), z(0);
  Sl2Triple t;
  t.M1 = CMatrix(2, 2, {o, -x1, z, o});
  t.M2 = CMatrix(2, 2, {o, z, x1, o});
  t.M3 = CMatrix(2, 2, {o + x2 * x3 / x1, -(x2 * x2) / x1, x3 * x3 / x1, o - x2 * x3 / x1});
  return t;
}

Sl2Triple klein_su2_triple() {
  BigComplex phi = BigComplex::root_of_unity(1, 7);
  BigComplex phi2 = phi * phi;
  BigComplex w = (BigComplex(1) + phi2) / (phi - phi2 * phi);
  BigComplex x(boost::multiprecision::sqrt(Real(1) - norm(w)));
  // mu + 1/mu = r is fixed by Tr(M2 M3) = 0.
  Real r = 2 * (w * w).re / norm(x);
  BigComplex mu(r / 2, boost::multiprecision::sqrt(Real(4) - r * r) / 2);
  Sl2Triple t;
  t.M1 = CMatrix(2, 2, {phi, BigComplex(0), BigComplex(0), BigComplex(1) / phi});
  t.M2 = CMatrix(2, 2, {w, x, -x, conj(w)});
  t.M3 = CMatrix(2, 2, {w, mu * x, -x / mu, conj(w)});
  return t;
}

BigComplex half_turn_sqrt(const BigComplex& w) {
  if (w.is_exact_zero()) throw DomainError("half_turn_sqrt: zero");
  Real th = arg(w);
  if (th < 0) {
    if (-th < half_precision_tol()) th = 0;
    else th += 2 * real_pi();
  }
  return BigComplex::polar(boost::multiprecision::sqrt(abs(w)), th / 2);
}

namespace {

Real unit_arg(const BigComplex& w) {
  Real th = arg(w);
  if (th < 0) {
    if (-th < half_precision_tol()) th = 0;
    else th += 2 * real_pi();
  }
  return th;
}

ReflectionData3 assemble(const PseudoReflectionTriple& T, const std::array<BigComplex, 3>& t,
                         const std::array<BigComplex, 3>& n) {
  Real tol = pow2(-static_cast<long>(working_precision()) / 3);
  BigComplex lhs = t[0] * t[1] * t[2];
  BigComplex rhs = n[0] * n[1] * n[2];
  if (abs(lhs - rhs) > tol * (1 + abs(lhs))) {
    throw SignConstraintError("reflection_data: t1 t2 t3 != n1 n2 n3 for the chosen roots");
  }
  ReflectionData3 d;
  d.t1 = t[0];
  d.t2 = t[1];
  d.t3 = t[2];
  d.n1 = n[0];
  d.n2 = n[1];
  d.n3 = n[2];
  d.t12 = (T.r[0] * T.r[1]).trace() - BigComplex(1);
  d.t23 = (T.r[1] * T.r[2]).trace() - BigComplex(1);
  d.t13 = (T.r[0] * T.r[2]).trace() - BigComplex(1);
  return d;
}

}  // namespace

ReflectionData3 reflection_data(const PseudoReflectionTriple& T, const std::array<int, 3>& mu_order,
                                const std::array<int, 6>& sqrt_choice) {
  std::vector<BigComplex> ev = eigenvalues(T.r[2] * T.r[1] * T.r[0]);
  std::vector<std::pair<Real, BigComplex>> keyed;
  for (auto& e : ev) keyed.emplace_back(unit_arg(e), e);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::array<BigComplex, 3> t, n;
  for (int i = 0; i < 3; ++i) {
    t[i] = half_turn_sqrt(T.r[i].det()) * BigComplex(static_cast<long>(sqrt_choice[i]));
    n[i] = half_turn_sqrt(keyed.at(mu_order[i]).second) * BigComplex(static_cast<long>(sqrt_choice[3 + i]));
  }
  return assemble(T, t, n);
}

ReflectionData3 reflection_data_with_roots(const PseudoReflectionTriple& T, const std::array<BigComplex, 3>& t,
                                           const std::array<BigComplex, 3>& n) {
  Real tol = pow2(-static_cast<long>(working_precision()) / 3);
  for (int i = 0; i < 3; ++i) {
    if (abs(t[i] * t[i] - T.r[i].det()) > tol) throw DomainError("reflection_data: t_i^2 != det r_i");
  }
  CMatrix prod = T.r[2] * T.r[1] * T.r[0];
  CMatrix id = CMatrix::identity(3);
  for (int i = 0; i < 3; ++i) {
    if (abs((prod - id * (n[i] * n[i])).det()) > tol * (1 + max_abs(prod))) {
      throw DomainError("reflection_data: n_i^2 is not an eigenvalue of r3 r2 r1");
    }
  }
  return assemble(T, t, n);
}

// Binary dihedral group.

namespace {

int mod(long a, long m) {
  long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

BinaryDihedralElement bd_mul(const BinaryDihedralElement& x, const BinaryDihedralElement& y) {
  int n = 2 * x.d;
  BinaryDihedralElement r;
  r.d = x.d;
  if (!x.has_tau && !y.has_tau) {
    r.exponent = mod(x.exponent + y.exponent, n);
  } else if (!x.has_tau) {
    r.has_tau = true;
    r.exponent = mod(y.exponent - x.exponent, n);
  } else if (!y.has_tau) {
    r.has_tau = true;
    r.exponent = mod(x.exponent + y.exponent, n);
  } else {
    r.exponent = mod(x.d + y.exponent - x.exponent, n);
  }
  return r;
}

BinaryDihedralElement bd_inv(const BinaryDihedralElement& x) {
  int n = 2 * x.d;
  if (!x.has_tau) return {false, mod(-x.exponent, n), x.d};
  return {true, mod(x.exponent + x.d, n), x.d};
}

int bd_class_key(const BinaryDihedralElement& x) {
  int n = 2 * x.d;
  if (x.has_tau) return n + (x.exponent % 2);
  return std::min(x.exponent, (n - x.exponent) % n);
}

int bd_order(int k, int d) {
  int n = 2 * d;
  return n / std::gcd(mod(k, n), n);
}

namespace {

std::pair<BinaryDihedralElement, BinaryDihedralElement> pair_beta(const BinaryDihedralElement& x,
                                                                  const BinaryDihedralElement& y) {
  return {y, bd_mul(bd_mul(bd_inv(y), x), y)};
}

}  // namespace

BdTriple dihedral_p_action(const BdTriple& t, PGen which) {
  BdTriple r = t;
  int i = which == PGen::P1 ? 0 : 1;
  auto s = pair_beta(r[i], r[i + 1]);
  s = pair_beta(s.first, s.second);
  r[i] = s.first;
  r[i + 1] = s.second;
  return r;
}

namespace {

using Code = std::uint32_t;

struct DihedralCodec {
  int d;
  int n;  // 2d
  int m;  // 4d

  int enc(const BinaryDihedralElement& x) const { return (x.has_tau ? n : 0) + x.exponent; }
  BinaryDihedralElement dec(int i) const { return {i >= n, i % n, d}; }
  Code enc(const BdTriple& t) const {
    return static_cast<Code>((enc(t[0]) * m + enc(t[1])) * m + enc(t[2]));
  }
  BdTriple dec(Code c) const {
    int c2 = static_cast<int>(c % m);
    int c1 = static_cast<int>((c / m) % m);
    int c0 = static_cast<int>(c / (static_cast<Code>(m) * m));
    return {dec(c0), dec(c1), dec(c2)};
  }
};

BdTriple canonical_impl(const BdTriple& t) {
  int d = t[0].d;
  int n = 2 * d;
  BdTriple best{};
  DihedralCodec codec{d, n, 2 * n};
  Code best_code = 0;
  bool have = false;
  for (int s : {1, -1}) {
    BdTriple u = t;
    for (auto& e : u) e.exponent = mod(static_cast<long>(s) * e.exponent, n);
    int shift = 0;
    for (auto& e : u) {
      if (e.has_tau) {
        shift = -(e.exponent - e.exponent % 2);
        break;
      }
    }
    for (auto& e : u) {
      if (e.has_tau) e.exponent = mod(e.exponent + shift, n);
    }
    Code c = codec.enc(u);
    if (!have || c < best_code) {
      best = u;
      best_code = c;
      have = true;
    }
  }
  return best;
}

struct ScanOutput {
  DihedralScanSummary summary;
  std::vector<DihedralOrbitRow> rows;
};

ScanOutput scan_one(int d, bool keep_all) {
  DihedralCodec codec{d, 2 * d, 4 * d};
  Code total = static_cast<Code>(codec.m) * codec.m * codec.m;
  std::vector<bool> visited(total, false);
  ScanOutput out;
  out.summary.d = d;
  auto canon_code = [&](const BdTriple& t) { return codec.enc(canonical_impl(t)); };
  for (Code c = 0; c < total; ++c) {
    BdTriple t = codec.dec(c);
    if (codec.enc(canonical_impl(t)) != c) continue;
    ++out.summary.classes;
    if (visited[c]) continue;
    std::vector<Code> orbit{c};
    std::unordered_map<Code, int> index{{c, 0}};
    visited[c] = true;
    std::vector<int> p1, p2;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      BdTriple cur = codec.dec(orbit[k]);
      for (int g = 0; g < 2; ++g) {
        Code nc = canon_code(dihedral_p_action(cur, g == 0 ? PGen::P1 : PGen::P2));
        auto it = index.find(nc);
        int j;
        if (it == index.end()) {
          j = static_cast<int>(orbit.size());
          index.emplace(nc, j);
          orbit.push_back(nc);
          visited[nc] = true;
        } else {
          j = it->second;
        }
        (g == 0 ? p1 : p2).push_back(j);
      }
    }
    ++out.summary.orbits;
    out.summary.max_orbit = std::max(out.summary.max_orbit, orbit.size());
    std::vector<int> ct1 = nontrivial_cycle_type(p1);
    std::vector<int> ct2 = nontrivial_cycle_type(p2);
    bool six = std::count(ct1.begin(), ct1.end(), 6) + std::count(ct2.begin(), ct2.end(), 6) > 0;
    if (six) ++out.summary.orbits_with_6cycle;
    const std::vector<int> target{2, 2, 3};
    bool flagged = orbit.size() == 7 && ct1 == target && ct2 == target;
    if (flagged) ++out.summary.flagged;
    if (orbit.size() == 7) ++out.summary.orbits_size7;
    if (keep_all || orbit.size() == 7) {
      out.rows.push_back({d, codec.dec(c), orbit.size(), ct1, ct2, flagged});
    }
  }
  return out;
}

}  // namespace

BdTriple bd_canonical(const BdTriple& t) { return canonical_impl(t); }

DihedralScanReport dihedral_orbit_scan(int d_max, bool keep_all, unsigned threads) {
  if (d_max < 2) throw DomainError("dihedral_orbit_scan: d_max < 2");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<ScanOutput> results(d_max + 1);
  std::vector<std::future<void>> workers;
  // Largest d first keeps the workers balanced.
  std::vector<int> order;
  for (int d = d_max; d >= 2; --d) order.push_back(d);
  std::atomic<std::size_t> pos{0};
  for (unsigned w = 0; w < threads; ++w) {
    workers.push_back(std::async(std::launch::async, [&] {
      for (std::size_t k = pos++; k < order.size(); k = pos++) results[order[k]] = scan_one(order[k], keep_all);
    }));
  }
  for (auto& f : workers) f.get();
  DihedralScanReport rep;
  for (int d = 2; d <= d_max; ++d) {
    rep.per_d.push_back(results[d].summary);
    rep.flagged += results[d].summary.flagged;
    for (auto& r : results[d].rows) rep.rows.push_back(std::move(r));
  }
  return rep;
}

GenusResult genus_from_permutations(const Perm& p1, const Perm& p2) {
  if (p1.size() != p2.size() || !perm_is_bijection(p1) || !perm_is_bijection(p2)) {
    throw DomainError("genus_from_permutations: invalid permutations");
  }
  if (!generates_transitive({p1, p2})) throw NonTransitiveError("genus_from_permutations: not transitive");
  GenusResult g;
  g.p_inf = perm_inverse(perm_compose(p2, p1));
  long n = static_cast<long>(p1.size());
  long deficiency = 0;
  for (const Perm* p : std::array<const Perm*, 3>{&p1, &p2, &g.p_inf}) deficiency += n - static_cast<long>(cycle_type(*p).size());
  long two_minus_2g = 2 * n - deficiency;
  g.genus = static_cast<int>((2 - two_minus_2g) / 2);
  g.group_order = group_order({p1, p2});
  return g;
}

bool denominator7_obstruction(const Theta& theta) {
  for (const auto& q : theta) {
    if (mpz_divisible_ui_p(q.get_den_mpz_t(), 7)) return true;
  }
  return false;
}

std::vector<Integer> galois_minpoly_numeric(const std::vector<Rational>& value_poly, int root_order, bool eigen) {
  if (root_order < 1) throw DomainError("galois_minpoly_numeric: root_order < 1");
  std::vector<BigComplex> roots;
  for (int k = 1; k <= root_order; ++k) {
    if (std::gcd(k, root_order) != 1) continue;
    BigComplex z = BigComplex::root_of_unity(k, root_order);
    BigComplex v(0), zp(1);
    for (const auto& c : value_poly) {
      v += BigComplex(c) * zp;
      zp *= z;
    }
    if (eigen) {
      BigComplex s = sqrt(v * v - BigComplex(4));
      roots.push_back((v + s) / BigComplex(2));
      roots.push_back((v - s) / BigComplex(2));
    } else {
      roots.push_back(v);
    }
  }
  CPoly prod(std::vector<BigComplex>{BigComplex(1)});
  for (auto& r : roots) prod = prod * CPoly(std::vector<BigComplex>{-r, BigComplex(1)});
  Real tol("1e-30");
  std::vector<Rational> coeffs;
  for (int k = 0; k <= prod.degree(); ++k) {
    BigComplex c = prod.coeff(k);
    Real rounded = boost::multiprecision::round(c.re);
    if (boost::multiprecision::abs(c.re - rounded) > tol || boost::multiprecision::abs(c.im) > tol) {
      throw RoundingError("galois_minpoly_numeric: coefficient " + std::to_string(k) + " is not an integer");
    }
    Integer zi;
    mpfr_get_z(zi.get_mpz_t(), rounded.backend().data(), MPFR_RNDN);
    coeffs.emplace_back(zi);
  }
  return primitive_integer(squarefree(QPoly(coeffs)));
}

}  // namespace pviforge
