#include <boost/math/special_functions/gamma.hpp>

#include "doctest.h"
#include "pviforge/errors.hpp"
#include "pviforge/numerics/matrix.hpp"
#include "pviforge/numerics/special.hpp"
#include "test_util.hpp"

using namespace pviforge;
using testutil::close;

TEST_CASE("gamma at integers and half integers") {
  PrecisionScope scope(256);
  Real tol = pow2(-240);
  CHECK(close(gamma_fn(BigComplex(1)), BigComplex(1), tol));
  CHECK(close(gamma_fn(BigComplex(5)), BigComplex(24), tol));
  // independent oracle: boost's real gamma and sqrt(pi)/2
  Real oracle = boost::math::tgamma(Real(3) / 2);
  CHECK(close(gamma_fn(BigComplex(Rational(3, 2))), BigComplex(oracle), tol));
  CHECK(close(gamma_fn(BigComplex(Rational(3, 2))), BigComplex(boost::multiprecision::sqrt(real_pi()) / 2), tol));
  CHECK(close(gamma_fn(BigComplex(Rational(-1, 2))), BigComplex(-2 * boost::multiprecision::sqrt(real_pi())), tol));
  CHECK_THROWS_AS(gamma_fn(BigComplex(0)), PoleError);
  CHECK_THROWS_AS(gamma_fn(BigComplex(-3)), PoleError);
}

TEST_CASE("gamma_hat") {
  Real tol = pow2(-240);
  CHECK(close(gamma_hat(BigComplex(0)), BigComplex(1), tol));
  CHECK(close(gamma_hat(BigComplex(2)), BigComplex(1), tol));
  CHECK(close(gamma_hat(BigComplex(1)), BigComplex(boost::math::tgamma(Real(3) / 2)), tol));
  CHECK_THROWS_AS(gamma_hat(BigComplex(-2)), PoleError);
}

TEST_CASE("gamma recurrence on random complex arguments") {
  PrecisionScope scope(256);
  Real tol = pow2(-200);
  for (int k = 0; k < 1000; ++k) {
    BigComplex z = testutil::random_complex(6.0);
    BigComplex lhs = gamma_fn(z + BigComplex(1));
    BigComplex rhs = z * gamma_fn(z);
    REQUIRE(abs(lhs - rhs) < tol * abs(rhs));
  }
}

TEST_CASE("gamma on the real line matches boost") {
  for (int k = 0; k < 50; ++k) {
    Real x = testutil::random_real(-7.5, 9.5);
    Real g = boost::math::tgamma(x);
    CHECK(abs(gamma_fn(BigComplex(x)) - BigComplex(g)) < pow2(-200) * boost::multiprecision::abs(g));
  }
}

TEST_CASE("recognize_power_rational") {
  CHECK_FALSE(recognize_power_rational(BigComplex(Real(1), Real(0.3)), 2).has_value());
  auto r = recognize_power_rational(BigComplex(Rational(-7, 81)), 1);
  REQUIRE(r.has_value());
  CHECK(*r == Rational(-7, 81));
  BigComplex c = sqrt(BigComplex(Rational(2, 3)));
  auto r2 = recognize_power_rational(c, 2);
  REQUIRE(r2.has_value());
  CHECK(*r2 == Rational(2, 3));
  CHECK_FALSE(recognize_power_rational(BigComplex(real_pi()), 1, 1000000).has_value());
}

TEST_CASE("recognize_power_rational recovers random small rationals") {
  for (int k = 0; k < 1000; ++k) {
    long q = testutil::uniform_int(1, 10000);
    long p = testutil::uniform_int(-10000, 10000);
    Rational x(p, q);
    x.canonicalize();
    auto r = recognize_power_rational(BigComplex(x), 1, q);
    REQUIRE(r.has_value());
    CHECK(*r == x);
  }
}

TEST_CASE("laurent_to_rational examples") {
  LaurentSeries geo{0, std::vector<BigComplex>(12, BigComplex(1))};
  RationalFunction f = laurent_to_rational(geo, 0, 1);
  RationalFunction expect_f{QPoly(std::vector<Rational>{1}), QPoly(std::vector<Rational>{1, -1})};
  CHECK(f == expect_f);

  LaurentSeries lau{-1, {BigComplex(1), BigComplex(2), BigComplex(1), BigComplex(0), BigComplex(0), BigComplex(0)}};
  RationalFunction g = laurent_to_rational(lau, 2, 1);
  RationalFunction expect_g{QPoly(std::vector<Rational>{1, 2, 1}), QPoly(std::vector<Rational>{0, 1})};
  CHECK(g == expect_g);

  CHECK_THROWS_AS(laurent_to_rational(geo, 0, 0), NoSolutionError);
  LaurentSeries padded = lau;
  padded.coeffs.resize(12, BigComplex(0));
  CHECK_THROWS_AS(laurent_to_rational(padded, 3, 2), AmbiguousError);
  CHECK_THROWS_AS(laurent_to_rational(lau, 3, 2), NoSolutionError);
}

TEST_CASE("laurent_to_rational round trip on random rational functions") {
  for (int trial = 0; trial < 40; ++trial) {
    int dn = static_cast<int>(testutil::uniform_int(0, 4));
    int dd = static_cast<int>(testutil::uniform_int(0, 3));
    std::vector<Rational> num, den;
    for (int j = 0; j <= dn; ++j) num.push_back(testutil::random_rational());
    for (int j = 0; j <= dd; ++j) den.push_back(testutil::random_rational());
    num.back() = num.back() == 0 ? Rational(1) : num.back();
    den[0] = den[0] == 0 ? Rational(1) : den[0];
    den.back() = den.back() == 0 ? Rational(3) : den.back();
    RationalFunction f{QPoly(num), QPoly(den)};
    auto coeffs = laurent_expand(f, 0, 24);
    LaurentSeries s{0, {}};
    for (auto& c : coeffs) s.coeffs.emplace_back(c);
    RationalFunction g = laurent_to_rational_auto(s, 9);
    CHECK(g == f);
    CHECK(laurent_expand(g, 0, 24) == coeffs);
  }
}

TEST_CASE("matrix helpers") {
  CMatrix m(2, 2, {BigComplex(2), BigComplex(1), BigComplex(1), BigComplex(2)});
  auto ev = eigenvalues(m);
  Real tol = pow2(-200);
  bool a = close(ev[0], BigComplex(1), tol) && close(ev[1], BigComplex(3), tol);
  bool b = close(ev[1], BigComplex(1), tol) && close(ev[0], BigComplex(3), tol);
  CHECK((a || b));
  CHECK(close(m.det(), BigComplex(3), tol));
  CHECK(max_abs_diff(m * m.inverse(), CMatrix::identity(2)) < tol);
  CMatrix d = CMatrix::diagonal({BigComplex(1), BigComplex(0)});
  CMatrix e = mat_exp(d);
  CHECK(close(e(0, 0), exp(BigComplex(1)), tol));
  CHECK(close(e(1, 1), BigComplex(1), tol));
  CHECK(numerical_rank(d, pow2(-128)) == 1);
}

TEST_CASE("precision propagates as the minimum") {
  BigComplex a(1);
  BigComplex b;
  {
    PrecisionScope low(100);
    b = BigComplex(Real(1) / 3);
  }
  BigComplex c = a + b;
  CHECK(c.precision() == b.precision());
  CHECK(c.precision() < a.precision());
}
