#include <algorithm>
#include <chrono>
#include <set>

#include "doctest.h"
#include "pviforge/errors.hpp"
#include "pviforge/reflection_catalog.hpp"
#include "test_util.hpp"

using namespace pviforge;
using testutil::close;

namespace {

QI7 trace(const Matrix<QI7>& m) { return m(0, 0) + m(1, 1) + m(2, 2); }

BinaryDihedralElement zeta(int k, int d) { return {false, ((k % (2 * d)) + 2 * d) % (2 * d), d}; }
BinaryDihedralElement tau(int k, int d) { return {true, ((k % (2 * d)) + 2 * d) % (2 * d), d}; }

BinaryDihedralElement random_element(int d) {
  return {testutil::uniform_int(0, 1) == 1, static_cast<int>(testutil::uniform_int(0, 2 * d - 1)), d};
}

BdTriple conjugate(const BdTriple& t, const BinaryDihedralElement& g) {
  BdTriple r;
  for (int i = 0; i < 3; ++i) r[i] = bd_mul(bd_mul(g, t[i]), bd_inv(g));
  return r;
}

// Direct count of cycles, independent of perm.cpp.
int count_cycles(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true;
  }
  return c;
}

Perm random_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), testutil::rng());
  return p;
}

Perm parse_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = c[(k + 1) % c.size()];
  return p;
}

}  // namespace

TEST_CASE("klein generators are exact order-two reflections with the printed traces") {
  auto r = klein_generators_exact();
  Matrix<QI7> id = Matrix<QI7>::identity(3);
  for (int i = 0; i < 3; ++i) {
    CHECK(r[i].det() == QI7(-1));
    CHECK(r[i] * r[i] == id);
    CHECK(numerical_rank(to_complex(r[i]) - CMatrix::identity(3), pow2(-200)) == 1);
  }
  CHECK(trace(r[0] * r[1]) == QI7(1));
  CHECK(trace(r[1] * r[2]) == QI7(1));
  CHECK(trace(r[0] * r[2]) == QI7(0));
  PseudoReflectionTriple T = klein_generators();
  CHECK(T.exponents == std::vector<int>{3, 5, 13});
  CHECK(T.coxeter_h == 14);
  // characteristic polynomial of r3 r2 r1 vanishes at exp(2 pi i k/14), k = 3, 5, 13
  CMatrix prod = T.r[2] * T.r[1] * T.r[0];
  for (int k : {3, 5, 13}) {
    BigComplex z = BigComplex::root_of_unity(k, 14);
    CHECK(abs((prod - CMatrix::identity(3) * z).det()) < pow2(-200));
  }
}

TEST_CASE("QI7 arithmetic") {
  QI7 a(Rational(1, 2), Rational(1, 2));
  CHECK(a * a.conj() == QI7(2));
  CHECK(a + a.conj() == QI7(1));
  CHECK(a * a - a + QI7(2) == QI7(0));
  CHECK((a / a) == QI7(1));
  CHECK(close(a.eval(), BigComplex(Real(1) / 2, boost::multiprecision::sqrt(Real(7)) / 2), pow2(-240)));
  CHECK_THROWS_AS(a / QI7(0), DivisionByZero);
}

TEST_CASE("klein reflection data") {
  ReflectionData3 d = reflection_data(klein_generators());
  Real tol = pow2(-200);
  BigComplex i = BigComplex::i_unit();
  CHECK(close(d.t1, i, tol));
  CHECK(close(d.t2, i, tol));
  CHECK(close(d.t3, i, tol));
  CHECK(close(d.n1, expipi(BigComplex(Rational(3, 14))), tol));
  CHECK(close(d.n2, expipi(BigComplex(Rational(5, 14))), tol));
  CHECK(close(d.n3, expipi(BigComplex(Rational(13, 14))), tol));
  CHECK(abs(fricke3_residual(d)) < tol);
  CHECK_THROWS_AS(reflection_data(klein_generators(), {0, 1, 2}, {-1, 1, 1, 1, 1, 1}), SignConstraintError);
  ReflectionData3 e = reflection_data(klein_generators(), {0, 1, 2}, {-1, 1, 1, -1, 1, 1});
  CHECK(close(e.t1, -i, tol));
}

TEST_CASE("dubrovin-mazzocco reflections") {
  Real tol = pow2(-200);
  for (int k = 0; k < 500; ++k) {
    BigComplex x1 = testutil::random_complex(2.0), x2 = testutil::random_complex(2.0),
               x3 = testutil::random_complex(2.0);
    PseudoReflectionTriple T = dm_reflections(x1, x2, x3);
    for (int j = 0; j < 3; ++j) {
      CHECK(close(T.r[j].det(), BigComplex(-1), tol));
      CHECK(numerical_rank(T.r[j] - CMatrix::identity(3), pow2(-200)) == 1);
      // the attached form is preserved: r^T G r = G
      CMatrix g = *T.bilinear_form;
      CHECK(max_abs_diff(T.r[j].transpose() * g * T.r[j], g) < pow2(-190));
    }
    CHECK(close((T.r[0] * T.r[1]).trace() - BigComplex(1), x1 * x1 - BigComplex(2), tol * 16));
    CHECK(close((T.r[1] * T.r[2]).trace() - BigComplex(1), x2 * x2 - BigComplex(2), tol * 16));
    CHECK(close((T.r[0] * T.r[2]).trace() - BigComplex(1), x3 * x3 - BigComplex(2), tol * 16));
    // characteristic polynomial (l + 1)(l^2 + m l + 1), independently expanded
    BigComplex m = dm_m(x1, x2, x3);
    auto cp = char_poly(T.r[2] * T.r[1] * T.r[0]);
    std::vector<BigComplex> expect{BigComplex(1), m + BigComplex(1), m + BigComplex(1), BigComplex(1)};
    for (int j = 0; j < 4; ++j) CHECK(close(cp[j], expect[j], pow2(-180)));
  }
  PseudoReflectionTriple Z = dm_reflections(BigComplex(0), BigComplex(0), BigComplex(0));
  CHECK(Z.degenerate);
  for (int j = 0; j < 3; ++j)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b) CHECK(Z.r[j](a, b).is_exact_zero());
  CHECK_FALSE(dm_reflections(BigComplex(1), BigComplex(0), BigComplex(0)).degenerate);
}

TEST_CASE("dubrovin-mazzocco unipotent triple") {
  Real tol = pow2(-200);
  Sl2Triple t = dm_unipotent_triple(BigComplex(1), BigComplex(1), BigComplex(1));
  TraceData2 d = traces_from_triple(t);
  CHECK(close(d.m1, BigComplex(2), tol));
  CHECK(close(d.m12, BigComplex(1), tol));
  CHECK(close(d.m23, BigComplex(1), tol));
  CHECK(close(d.m13, BigComplex(1), tol));
  CHECK(close(d.m321, BigComplex(0), tol));
  CHECK_THROWS_AS(dm_unipotent_triple(BigComplex(0), BigComplex(1), BigComplex(1)), DegenerateError);
  for (int k = 0; k < 500; ++k) {
    BigComplex x1 = testutil::random_complex(2.0) + BigComplex(3), x2 = testutil::random_complex(2.0),
               x3 = testutil::random_complex(2.0);
    TraceData2 e = traces_from_triple(dm_unipotent_triple(x1, x2, x3));
    Real s = pow2(-180);
    CHECK(close(e.m1, BigComplex(2), s));
    CHECK(close(e.m2, BigComplex(2), s));
    CHECK(close(e.m3, BigComplex(2), s));
    CHECK(close(e.m13, BigComplex(2) - x3 * x3, s));
    CHECK(close(e.m321, dm_m(x1, x2, x3), s * 64));
  }
}

TEST_CASE("binary dihedral group laws") {
  for (int d = 2; d <= 9; ++d) {
    for (int k = 0; k < 200; ++k) {
      auto x = random_element(d), y = random_element(d), z = random_element(d);
      CHECK(bd_mul(bd_mul(x, y), z) == bd_mul(x, bd_mul(y, z)));
      CHECK(bd_mul(x, bd_inv(x)) == zeta(0, d));
    }
    CHECK(bd_mul(tau(0, d), tau(0, d)) == zeta(d, d));
    // tau zeta tau^-1 = zeta^-1
    CHECK(bd_mul(bd_mul(tau(0, d), zeta(1, d)), bd_inv(tau(0, d))) == zeta(-1, d));
  }
  CHECK(bd_class_key(zeta(3, 5)) == bd_class_key(zeta(7, 5)));
  CHECK(bd_class_key(tau(1, 5)) == bd_class_key(tau(7, 5)));
  CHECK(bd_class_key(tau(1, 5)) != bd_class_key(tau(2, 5)));
  CHECK(bd_order(2, 3) == 3);
  CHECK(bd_order(0, 3) == 1);
}

TEST_CASE("dihedral p action follows the printed rules") {
  for (int d = 2; d <= 12; ++d) {
    for (int k = 0; k < 100; ++k) {
      int a = static_cast<int>(testutil::uniform_int(0, 2 * d - 1));
      int b = static_cast<int>(testutil::uniform_int(0, 2 * d - 1));
      int c = static_cast<int>(testutil::uniform_int(0, 2 * d - 1));
      BdTriple free{zeta(a, d), zeta(b, d), zeta(c, d)};
      CHECK(dihedral_p_action(free, PGen::P1) == free);
      CHECK(dihedral_p_action(free, PGen::P2) == free);
      BdTriple tt{tau(a, d), tau(b, d), zeta(c, d)};
      BdTriple e1{tau(2 * b - a, d), tau(3 * b - 2 * a, d), zeta(c, d)};
      CHECK(dihedral_p_action(tt, PGen::P1) == e1);
      BdTriple tz{tau(a, d), zeta(b, d), tau(c, d)};
      BdTriple e2{tau(a + 2 * b, d), zeta(-b, d), tau(c, d)};
      CHECK(dihedral_p_action(tz, PGen::P1) == e2);
      BdTriple ptt{zeta(c, d), tau(a, d), tau(b, d)};
      BdTriple e3{zeta(c, d), tau(2 * b - a, d), tau(3 * b - 2 * a, d)};
      CHECK(dihedral_p_action(ptt, PGen::P2) == e3);
    }
  }
}

TEST_CASE("dihedral p action preserves the type partition and commutes with conjugation") {
  for (int k = 0; k < 2000; ++k) {
    int d = static_cast<int>(testutil::uniform_int(2, 15));
    BdTriple t{random_element(d), random_element(d), random_element(d)};
    for (PGen g : {PGen::P1, PGen::P2}) {
      BdTriple u = dihedral_p_action(t, g);
      int nt = 0, nu = 0;
      for (int i = 0; i < 3; ++i) {
        nt += t[i].has_tau;
        nu += u[i].has_tau;
      }
      CHECK(nt == nu);
      BinaryDihedralElement h = random_element(d);
      CHECK(bd_canonical(dihedral_p_action(conjugate(t, h), g)) == bd_canonical(u));
    }
    BinaryDihedralElement h = random_element(d);
    CHECK(bd_canonical(conjugate(t, h)) == bd_canonical(t));
  }
}

TEST_CASE("canonical form is a complete invariant of simultaneous conjugacy") {
  for (int d : {2, 3, 4, 5}) {
    std::vector<BinaryDihedralElement> all;
    for (int h = 0; h < 2; ++h)
      for (int e = 0; e < 2 * d; ++e) all.push_back({h == 1, e, d});
    std::size_t brute = 0;
    std::set<std::vector<int>> seen;
    auto key = [](const BdTriple& t) {
      std::vector<int> v;
      for (auto& e : t) v.push_back(e.has_tau * 1000 + e.exponent);
      return v;
    };
    std::set<std::vector<int>> canon;
    for (auto& x : all)
      for (auto& y : all)
        for (auto& z : all) {
          BdTriple t{x, y, z};
          canon.insert(key(bd_canonical(t)));
          if (seen.count(key(t))) continue;
          ++brute;
          for (auto& g : all) seen.insert(key(conjugate(t, g)));
        }
    CHECK(canon.size() == brute);
  }
}

TEST_CASE("type (tau,tau,tau): p1 cycle length is the order of zeta^(2(b-a))") {
  for (int d = 2; d <= 20; ++d) {
    for (int a = 0; a < 2 * d; ++a)
      for (int b = 0; b < 2 * d; ++b)
        for (int c = 0; c < 2 * d; ++c) {
          BdTriple t = bd_canonical({tau(a, d), tau(b, d), tau(c, d)});
          BdTriple u = t;
          int len = 0;
          do {
            u = bd_canonical(dihedral_p_action(u, PGen::P1));
            ++len;
          } while (!(u == t) && len <= 4 * d);
          CHECK(len == bd_order(2 * (b - a), d));
        }
  }
  // d = 3, k = 2(b - a) of order 3
  BdTriple t = bd_canonical({tau(0, 3), tau(1, 3), tau(0, 3)});
  BdTriple u = bd_canonical(dihedral_p_action(t, PGen::P1));
  BdTriple v = bd_canonical(dihedral_p_action(u, PGen::P1));
  CHECK_FALSE(u == t);
  CHECK_FALSE(v == t);
  CHECK(bd_canonical(dihedral_p_action(v, PGen::P1)) == t);
}

TEST_CASE("dihedral orbit scan") {
  DihedralScanReport small = dihedral_orbit_scan(8, true);
  for (const auto& row : small.rows) {
    bool tau_free = !row.representative[0].has_tau && !row.representative[1].has_tau &&
                    !row.representative[2].has_tau;
    if (tau_free) CHECK(row.size == 1);
  }
  std::size_t with6 = 0;
  for (const auto& s : small.per_d) with6 += s.orbits_with_6cycle;
  CHECK(with6 > 0);
  // d = 6: tau a, tau b, tau c with o(2(b-a)) = 2, o(2(c-b)) = 3 gives a 6-cycle
  bool found = false;
  for (const auto& row : small.rows) {
    if (row.d != 6) continue;
    for (int l : row.p1_cycles) found |= l == 6;
    for (int l : row.p2_cycles) found |= l == 6;
  }
  CHECK(found);
  auto start = std::chrono::steady_clock::now();
  DihedralScanReport full = dihedral_orbit_scan(50);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("dihedral scan d <= 50 took " << secs << " s");
  CHECK(full.flagged == 0);
  CHECK(full.per_d.size() == 49);
  for (const auto& row : full.rows) CHECK(row.size == 7);
}

TEST_CASE("genus from permutations") {
  Perm p1 = parse_cycles(7, {{0, 5}, {1, 4}, {2, 3, 6}});
  Perm p2 = parse_cycles(7, {{0, 3}, {1, 2}, {4, 6, 5}});
  GenusResult g = genus_from_permutations(p1, p2);
  CHECK(g.genus == 0);
  CHECK(g.group_order == 2520);
  CHECK(nontrivial_cycle_type(g.p_inf) == std::vector<int>{2, 2, 3});
  CHECK(genus_from_permutations({0}, {0}).genus == 0);
  CHECK_THROWS_AS(genus_from_permutations({0, 1}, {0, 1}), NonTransitiveError);
  int tested = 0;
  while (tested < 500) {
    int n = static_cast<int>(testutil::uniform_int(2, 9));
    Perm a = random_perm(n), b = random_perm(n);
    if (!generates_transitive({a, b})) continue;
    ++tested;
    GenusResult r = genus_from_permutations(a, b);
    Perm c = perm_inverse(perm_compose(b, a));
    int deficiency = 3 * n - count_cycles(a) - count_cycles(b) - count_cycles(c);
    CHECK(2 - 2 * r.genus == 2 * n - deficiency);
    CHECK(r.genus >= 0);
    CHECK(perm_compose(c, perm_compose(b, a)) == perm_identity(n));
  }
}

TEST_CASE("denominator 7 obstruction") {
  CHECK(denominator7_obstruction({Rational(2, 7), Rational(2, 7), Rational(2, 7), Rational(4, 7)}));
  CHECK_FALSE(denominator7_obstruction({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(denominator7_obstruction({Rational(1, 3), Rational(1, 2), 0, 1}));
  CHECK(denominator7_obstruction({0, 0, 0, Rational(3, 14)}));
  CHECK_FALSE(denominator7_obstruction({Rational(14, 2), 0, 0, 0}));
}

TEST_CASE("galois minimal polynomials") {
  // tau = Tr(M1^4 M2) = -(1 + phi^2)(phi + phi^4 + phi^6)
  std::vector<Rational> tau_poly{0, -2, 0, -1, -1, 0, -2};
  Sl2Triple t = klein_su2_triple();
  BigComplex tr = (t.M1 * t.M1 * t.M1 * t.M1 * t.M2).trace();
  BigComplex phi = BigComplex::root_of_unity(1, 7), v(0), p(1);
  for (auto& c : tau_poly) {
    v += BigComplex(c) * p;
    p *= phi;
  }
  CHECK(close(tr, v, pow2(-200)));
  auto mp = galois_minpoly_numeric(tau_poly, 7, true);
  std::vector<Integer> expect{1, -3, -1, -7, -1, -3, 1};
  CHECK(mp == expect);
  Integer at1 = 0;
  for (auto& c : mp) at1 += c;
  CHECK(at1 == -13);
  CHECK(galois_minpoly_numeric({0, 1}, 4) == std::vector<Integer>{1, 0, 1});
  CHECK_THROWS_AS(galois_minpoly_numeric({Rational(1, 3)}, 1), RoundingError);
}
