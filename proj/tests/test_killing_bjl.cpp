#include "doctest.h"
#include "pviforge/errors.hpp"
#include "pviforge/killing_bjl.hpp"
#include "pviforge/reflection_catalog.hpp"
#include "test_util.hpp"

using namespace pviforge;
using testutil::close;

namespace {

QMatrix random_u(std::size_t n) {
  QMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = testutil::random_rational(9, 7);
  for (std::size_t i = 0; i < n; ++i)
    while (u(i, i) == -1) u(i, i) = testutil::random_rational(9, 7);
  return u;
}

CMatrix random_cu(std::size_t n) {
  CMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = testutil::random_complex(1.5);
  return u;
}

Rational nonzero_rational() {
  Rational q = 0;
  while (sgn(q) == 0) q = testutil::random_rational(9, 7);
  return q;
}

// The product r_n ... r_1 computed directly from e_j -> e_j + u_ij e_i.
QMatrix product_by_action(const QMatrix& u) {
  std::size_t n = u.rows();
  QMatrix p = QMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    QMatrix next = p;
    // apply r_i to every column of p
    for (std::size_t c = 0; c < n; ++c) {
      Rational a = 0;
      for (std::size_t k = 0; k < n; ++k) a += u(i, k) * p(k, c);
      next(i, c) += a;
    }
    p = next;
  }
  return p;
}

TraceData2 traces_of_result(const SemisimplifyResult& r) { return traces_from_triple(r.triple); }

bool traces_close(const TraceData2& a, const TraceData2& b, const Real& tol) {
  return close(a.m1, b.m1, tol) && close(a.m2, b.m2, tol) && close(a.m3, b.m3, tol) && close(a.m12, b.m12, tol) &&
         close(a.m23, b.m23, tol) && close(a.m13, b.m13, tol) && close(a.m321, b.m321, tol);
}

BigComplex root_of(const BigComplex& w) { return sqrt(w); }

}  // namespace

TEST_CASE("trivial u gives the identity product and trivial factors") {
  for (std::size_t n = 1; n <= 4; ++n) {
    QMatrix u(n, n);
    CHECK(reflection_product_in_e_basis(u) == QMatrix::identity(n));
    auto f = killing_factorize(u);
    CHECK(f.u_minus == QMatrix::identity(n));
    CHECK(f.t2 == QMatrix::identity(n));
    CHECK(f.u_plus == QMatrix::identity(n));
    CHECK(recompose(u) == QMatrix::identity(n));
  }
}

TEST_CASE("two reflections with u12 = 1, u21 = 0") {
  QMatrix u(2, 2, {Rational(1), Rational(1), Rational(0), Rational(2)});
  // r1 = [[2, 1], [0, 1]], r2 = [[1, 0], [0, 3]]; r2 r1 = [[2, 1], [0, 3]]
  QMatrix expect(2, 2, {Rational(2), Rational(1), Rational(0), Rational(3)});
  CHECK(reflection_product_in_e_basis(u) == expect);
  CHECK(recompose(u) == expect);
  auto f = killing_factorize(u);
  CHECK(f.u_plus(0, 1) == Rational(1, 2));
  CHECK(f.t2(1, 1) == 3);
}

TEST_CASE("klein u: diagonal -2 and off-diagonal products match the pair traces") {
  PseudoReflectionTriple T = klein_generators();
  std::vector<CMatrix> r(T.r.begin(), T.r.end());
  auto rt = reflection_tuple(r);
  for (int i = 0; i < 3; ++i) CHECK(max_abs_diff(rt.reflection(i), r[i]) < pow2(-200));
  CMatrix u = u_from_reflections(rt);
  Real tol = pow2(-200);
  for (int i = 0; i < 3; ++i) CHECK(close(u(i, i), BigComplex(-2), tol));
  ReflectionData3 d = reflection_data(T);
  auto t2 = [&](int i) { return std::array<BigComplex, 3>{d.t1, d.t2, d.t3}[i] * std::array<BigComplex, 3>{d.t1, d.t2, d.t3}[i]; };
  CHECK(close(u(0, 1) * u(1, 0), d.t12 - t2(0) - t2(1), tol));
  CHECK(close(u(1, 2) * u(2, 1), d.t23 - t2(1) - t2(2), tol));
  CHECK(close(u(0, 2) * u(2, 0), d.t13 - t2(0) - t2(2), tol));
  auto a = char_poly(recompose(u));
  auto b = char_poly(T.r[2] * T.r[1] * T.r[0]);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(close(a[k], b[k], tol));
}

TEST_CASE("dubrovin-mazzocco triples satisfy the u/trace relation") {
  Real tol = pow2(-180);
  for (int c = 0; c < 500; ++c) {
    BigComplex x1 = testutil::random_complex(2), x2 = testutil::random_complex(2), x3 = testutil::random_complex(2);
    PseudoReflectionTriple T = dm_reflections(x1, x2, x3);
    std::vector<CMatrix> r(T.r.begin(), T.r.end());
    CMatrix u = u_from_reflections(reflection_tuple(r));
    BigComplex t[3];
    for (int i = 0; i < 3; ++i) t[i] = T.r[i].det();
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        BigComplex tij = (T.r[i] * T.r[j]).trace() - BigComplex(1);
        CHECK(close(u(i, j) * u(j, i), tij - t[i] - t[j], tol));
      }
  }
}

TEST_CASE("killing factorization certificate on 1000 exact random u") {
  for (int c = 0; c < 1000; ++c) {
    std::size_t n = static_cast<std::size_t>(testutil::uniform_int(2, 6));
    QMatrix u = random_u(n);
    auto f = killing_factorize(u);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i > j) CHECK(f.u_plus(i, j) == 0);
        if (i < j) CHECK(f.u_minus(i, j) == 0);
        if (i != j) CHECK(f.t2(i, j) == 0);
      }
    for (std::size_t i = 0; i < n; ++i) CHECK(f.u_plus(i, i) == 1);
    CHECK(f.t2 * f.u_plus - f.u_minus == u);
    QMatrix p = product_by_action(u);
    REQUIRE(f.recompose() == p);
    CHECK(reflection_product_in_e_basis(u) == p);
    CHECK(u_from_bigcell(p) == u);
    if (u.det() != 0) CHECK(reflections_from_u(u).product() == p);
  }
}

TEST_CASE("degenerate inputs") {
  QMatrix u(2, 2, {Rational(-1), Rational(1), Rational(2), Rational(0)});
  CHECK_THROWS_AS(killing_factorize(u), DegenerateDiagonal);
  CHECK_THROWS_AS(braid_on_u(u, 0), DegenerateDiagonal);
  QMatrix v(2, 2, {Rational(1), Rational(1), Rational(2), Rational(0)});
  CHECK_THROWS_AS(bjl_shift(v, Rational(0)), DegenerateDiagonal);
  CHECK_THROWS_AS(braid_on_u(v, 1), std::invalid_argument);
  QMatrix a(2, 2, {Rational(0), Rational(1), Rational(1), Rational(0)});
  CHECK_THROWS_AS(u_from_bigcell(a), NotInBigCell);
  QMatrix s(2, 2, {Rational(1), Rational(2), Rational(2), Rational(4)});
  CHECK_THROWS_AS(reflections_from_u(s), SingularU);
  CHECK_THROWS_AS(reflection_tuple(std::vector<QMatrix>{QMatrix::identity(3)}), DegenerateError);
}

TEST_CASE("bjl shift is a group action with h = 1 the identity") {
  for (int c = 0; c < 500; ++c) {
    std::size_t n = static_cast<std::size_t>(testutil::uniform_int(2, 5));
    QMatrix u = random_u(n);
    Rational h = nonzero_rational(), g = nonzero_rational();
    CHECK(bjl_shift(u, Rational(1)) == u);
    QMatrix hu;
    try {
      hu = bjl_shift(u, h);
      CHECK(bjl_shift(hu, g) == bjl_shift(u, Rational(h * g)));
    } catch (const DegenerateDiagonal&) {
      continue;
    }
    CHECK(bjl_shift(hu, Rational(1 / h)) == u);
    // recompose scales by h^2, so the pair traces and spectrum scale accordingly
    CHECK(recompose(hu) == recompose(u) * Rational(h * h));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) CHECK(hu(i, j) * hu(j, i) == h * h * u(i, j) * u(j, i));
  }
}

TEST_CASE("bjl shift scales the characteristic polynomial of the product") {
  Real tol = pow2(-200);
  for (int c = 0; c < 500; ++c) {
    std::size_t n = static_cast<std::size_t>(testutil::uniform_int(2, 5));
    CMatrix u = random_cu(n);
    BigComplex h = testutil::random_complex(1.2);
    if (abs(h) < Real(0.1)) continue;
    auto a = char_poly(recompose(u));
    auto b = char_poly(recompose(bjl_shift(u, h)));
    BigComplex h2 = h * h, scale(1);
    for (std::size_t k = n + 1; k-- > 0;) {
      Real s = abs(a[k]) + 1;
      CHECK(close(b[k], scale * a[k], tol * s * 1024));
      scale *= h2;
    }
  }
}

TEST_CASE("klein shifted by exp(-3 pi i / 14) has 1 in the spectrum of the product") {
  PseudoReflectionTriple T = klein_generators();
  std::vector<CMatrix> r(T.r.begin(), T.r.end());
  CMatrix u = u_from_reflections(reflection_tuple(r));
  BigComplex h = expipi(BigComplex(Rational(-3, 14)));
  CMatrix v = bjl_shift(u, h);
  CMatrix p = recompose(v);
  CHECK(abs((p - CMatrix::identity(3)).det()) < pow2(-200));
  CHECK(abs((recompose(u) - CMatrix::identity(3)).det()) > Real(0.1));
  for (int i = 0; i < 3; ++i) CHECK(close(v(i, i), h * h * BigComplex(-1) - BigComplex(1), pow2(-200)));
}

TEST_CASE("braid relation holds exactly on u") {
  for (int c = 0; c < 500; ++c) {
    std::size_t n = static_cast<std::size_t>(testutil::uniform_int(3, 6));
    QMatrix u = random_u(n);
    std::size_t i = static_cast<std::size_t>(testutil::uniform_int(0, static_cast<long>(n) - 3));
    try {
      QMatrix a = braid_on_u(braid_on_u(braid_on_u(u, i), i + 1), i);
      QMatrix b = braid_on_u(braid_on_u(braid_on_u(u, i + 1), i), i + 1);
      CHECK(a == b);
    } catch (const DegenerateDiagonal&) {
    }
    if (n >= 4) {
      std::size_t j = i + 2;
      if (j + 1 < n) CHECK(braid_on_u(braid_on_u(u, i), j) == braid_on_u(braid_on_u(u, j), i));
    }
  }
}

TEST_CASE("braid action on u is induced from the lifted action on reflections") {
  for (int c = 0; c < 500; ++c) {
    std::size_t n = static_cast<std::size_t>(testutil::uniform_int(2, 5));
    std::size_t dim = static_cast<std::size_t>(testutil::uniform_int(2, 5));
    QMatrix e(dim, n), alpha(n, dim);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        e(a, b) = testutil::random_rational(5, 4);
        alpha(b, a) = testutil::random_rational(5, 4);
      }
    ReflectionTuple<Rational> rt{e, alpha};
    QMatrix u = u_from_reflections(rt);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok = ok && u(i, i) != -1;
    if (!ok) continue;
    std::size_t i = static_cast<std::size_t>(testutil::uniform_int(0, static_cast<long>(n) - 2));
    auto moved = braid_on_tuple(rt, i);
    CHECK(u_from_reflections(moved) == braid_on_u(u, i));
    CHECK(moved.product() == rt.product());
    // r'_i = r_{i+1}^{r_i}: r_i r'_i ... written as r'_{i+1} = r_i and r'_{i+1} r'_i = r_{i+1} r_i
    CHECK(moved.reflection(i + 1) == rt.reflection(i));
    CHECK(moved.reflection(i + 1) * moved.reflection(i) == rt.reflection(i + 1) * rt.reflection(i));
  }
}

TEST_CASE("braid action commutes with the big-cell map") {
  for (int c = 0; c < 500; ++c) {
    std::size_t n = static_cast<std::size_t>(testutil::uniform_int(2, 5));
    QMatrix u = random_u(n);
    std::size_t i = static_cast<std::size_t>(testutil::uniform_int(0, static_cast<long>(n) - 2));
    QMatrix a = recompose(u);
    QMatrix moved = braid_on_u(u, i);
    bool degenerate = false;
    for (std::size_t k = 0; k < n; ++k) degenerate = degenerate || moved(k, k) == -1;
    if (degenerate) continue;
    CHECK(braid_on_bigcell(a, i) == recompose(moved));
  }
}

TEST_CASE("bjl shift commutes with the braid action") {
  for (int c = 0; c < 500; ++c) {
    std::size_t n = static_cast<std::size_t>(testutil::uniform_int(2, 5));
    QMatrix u = random_u(n);
    Rational h = nonzero_rational();
    std::size_t i = static_cast<std::size_t>(testutil::uniform_int(0, static_cast<long>(n) - 2));
    try {
      CHECK(bjl_shift(braid_on_u(u, i), h) == braid_on_u(bjl_shift(u, h), i));
    } catch (const DegenerateDiagonal&) {
    }
  }
}

TEST_CASE("reflections from u round trip and determinant identity") {
  for (int c = 0; c < 500; ++c) {
    std::size_t n = static_cast<std::size_t>(testutil::uniform_int(2, 5));
    QMatrix u = random_u(n);
    if (u.det() == 0) {
      CHECK_THROWS_AS(reflections_from_u(u), SingularU);
      continue;
    }
    auto rt = reflections_from_u(u);
    CHECK(u_from_reflections(rt) == u);
    CHECK(u.det() == (recompose(u) - QMatrix::identity(n)).det());
  }
}

TEST_CASE("semisimplification of the shifted klein triple recovers the SL2 traces") {
  PseudoReflectionTriple T = klein_generators();
  ReflectionData3 d = reflection_data(T);
  std::vector<CMatrix> r(T.r.begin(), T.r.end());
  auto shifted = bjl_shift_tuple(reflection_tuple(r), BigComplex(1) / d.n1);
  CHECK(abs((shifted.product() - CMatrix::identity(3)).det()) < pow2(-200));
  SemisimplifyResult res = semisimplify_to_sl2(shifted, {d.t1, d.t2, d.t3}, d.n1);
  CHECK_FALSE(res.span_deficient);
  Real tol = pow2(-150);
  CHECK(traces_close(traces_of_result(res), phi(d), tol));
  for (const auto* m : {&res.triple.M1, &res.triple.M2, &res.triple.M3}) CHECK(close(m->det(), BigComplex(1), tol));
  CHECK(abs(fricke_residual(traces_of_result(res))) < tol);
}

TEST_CASE("semisimplification of a block-diagonal triple") {
  // r_i = diag(1, m_i) with m_i = t_i N_i for an SL2 triple N_i; here every r_i fixes e_1
  Sl2Triple s = klein_su2_triple();
  std::array<CMatrix, 3> n{s.M1, s.M2, s.M3};
  std::array<BigComplex, 3> t{BigComplex(1), BigComplex(1), BigComplex(1)};
  std::vector<CMatrix> r;
  for (int i = 0; i < 3; ++i) {
    CMatrix m = CMatrix::identity(3);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) m(a + 1, b + 1) = n[i](a, b);
    r.push_back(m);
  }
  auto ev = eigenvalues(s.M1);
  BigComplex lambda = ev[0];
  // scale so that each r_i is a pseudo-reflection: diag(1, lambda^-1 N_i) has eigenvalue 1 twice
  for (int i = 0; i < 3; ++i) {
    BigComplex l = eigenvalues(n[i])[0];
    t[i] = BigComplex(1) / l;
    for (int a = 1; a < 3; ++a)
      for (int b = 1; b < 3; ++b) r[i](a, b) = r[i](a, b) / l;
  }
  (void)lambda;
  auto rt = reflection_tuple(r);
  SemisimplifyResult res = semisimplify_to_sl2(rt, t, BigComplex(1));
  TraceData2 got = traces_of_result(res);
  TraceData2 want = traces_from_triple(s);
  Real tol = pow2(-150);
  CHECK(traces_close(got, want, tol));
}

TEST_CASE("semisimplification on random reducible triples matches phi") {
  Real tol = pow2(-120);
  int checked = 0, deficient = 0;
  for (int c = 0; c < 500; ++c) {
    CMatrix u = random_cu(3);
    PseudoReflectionTriple T;
    auto base = reflections_from_u(u);
    for (int i = 0; i < 3; ++i) T.r[i] = base.reflection(static_cast<std::size_t>(i));
    std::array<BigComplex, 3> t;
    for (int i = 0; i < 3; ++i) t[i] = root_of(BigComplex(1) + u(i, i));
    auto ev = eigenvalues(base.product());
    BigComplex n1 = root_of(ev[0]), n2 = root_of(ev[1]);
    BigComplex n3 = t[0] * t[1] * t[2] / (n1 * n2);
    ReflectionData3 d;
    try {
      d = reflection_data_with_roots(T, t, {n1, n2, n3});
    } catch (const std::exception&) {
      continue;
    }
    auto shifted = bjl_shift_tuple(base, BigComplex(1) / n1);
    CHECK(max_abs_diff(u_from_reflections(shifted), bjl_shift(u, BigComplex(1) / n1)) < tol);
    SemisimplifyResult res = semisimplify_to_sl2(shifted, t, n1);
    if (res.span_deficient) ++deficient;
    TraceData2 got = traces_of_result(res);
    TraceData2 want = phi(d);
    Real s = 1;
    for (const auto* z : {&want.m1, &want.m2, &want.m3, &want.m12, &want.m23, &want.m13, &want.m321})
      s = std::max(s, abs(*z));
    CHECK(traces_close(got, want, tol * s));
    for (const auto* m : {&res.triple.M1, &res.triple.M2, &res.triple.M3}) CHECK(close(m->det(), BigComplex(1), tol * s));
    ++checked;
  }
  CHECK(checked >= 480);
  CHECK(deficient == 0);
}

TEST_CASE("semisimplify rejects triples without a unit eigenvalue") {
  PseudoReflectionTriple T = klein_generators();
  std::vector<CMatrix> r(T.r.begin(), T.r.end());
  auto rt = reflection_tuple(r);
  CHECK_THROWS_AS(semisimplify_to_sl2(rt, {BigComplex(Real(0), Real(1)), BigComplex(Real(0), Real(1)), BigComplex(Real(0), Real(1))}), NoUnitEigenvalue);
}

TEST_CASE("span-deficient triples use the invariant plane of the e_i") {
  Real tol = pow2(-150);
  for (int c = 0; c < 500; ++c) {
    CMatrix w(3, 2), ebar(2, 3), alpha(3, 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 2; ++b) w(a, b) = testutil::random_complex(1);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 3; ++b) ebar(a, b) = testutil::random_complex(1);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) alpha(a, b) = testutil::random_complex(1);
    ReflectionTuple<BigComplex> rt{w * ebar, alpha};
    CMatrix restricted = alpha * w;
    std::array<BigComplex, 3> t;
    std::array<CMatrix, 3> expect;
    bool degenerate = false;
    for (std::size_t i = 0; i < 3; ++i) {
      CMatrix m = CMatrix::identity(2);
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) m(a, b) += ebar(a, i) * restricted(i, b);
      BigComplex d = m.det();
      if (abs(d) < Real(1e-3)) degenerate = true;
      t[i] = sqrt(d);
      expect[i] = m * (BigComplex(1) / t[i]);
    }
    if (degenerate) continue;
    SemisimplifyResult res = semisimplify_to_sl2(rt, t);
    CHECK(res.span_deficient);
    TraceData2 want = traces_from_triple({expect[0], expect[1], expect[2]});
    Real s = 1;
    for (const auto* z : {&want.m1, &want.m2, &want.m3, &want.m12, &want.m23, &want.m13, &want.m321})
      s = std::max(s, abs(*z));
    CHECK(traces_close(traces_of_result(res), want, tol * s));
  }
}

TEST_CASE("semisimplify rejects parallel e_i") {
  CMatrix e(3, 3), alpha(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      e(a, b) = BigComplex(static_cast<long>(a + 1) * (b + 1));
      alpha(a, b) = BigComplex(static_cast<long>(a == b ? 1 : 0));
    }
  ReflectionTuple<BigComplex> rt{e, alpha};
  CHECK_THROWS_AS(semisimplify_to_sl2(rt, {BigComplex(1), BigComplex(1), BigComplex(1)}), IrreducibleError);
}
