#include <boost/math/special_functions/gamma.hpp>

#include "doctest.h"
#include "pviforge/errors.hpp"
#include "pviforge/jimbo.hpp"
#include "pviforge/numerics/special.hpp"
#include "test_util.hpp"

using namespace pviforge;
using testutil::close;

namespace {

BigComplex two_cos_pi(const BigComplex& x) { return BigComplex(2) * cos(BigComplex(real_pi()) * x); }

TraceData2 klein_branch(int j) {
  BigComplex c(2 * boost::multiprecision::cos(2 * real_pi() / 7));
  BigComplex c2(2 * boost::multiprecision::cos(4 * real_pi() / 7));
  return {c, c, c, BigComplex((j >> 2) & 1), BigComplex((j >> 1) & 1), BigComplex(j & 1), c2};
}

const Theta kKleinTheta{Rational(2, 7), Rational(2, 7), Rational(2, 7), Rational(4, 7)};

BigComplex random_theta() {
  // real parts away from integers, modest imaginary parts
  return {testutil::random_real(0.05, 0.95) + Real(testutil::uniform_int(-1, 1)), testutil::random_real(-0.3, 0.3)};
}

BigComplex random_sigma() { return {testutil::random_real(0.05, 0.95), testutil::random_real(-0.3, 0.3)}; }

JimboInput random_input() {
  JimboInput in;
  in.theta0 = random_theta();
  in.thetat = random_theta();
  in.theta1 = random_theta();
  in.thetainf = random_theta();
  in.sigma = random_sigma();
  in.sigma01 = random_sigma();
  in.sigma1t = random_sigma();
  return in;
}

}  // namespace

TEST_CASE("sigma from trace") {
  Real tol = pow2(-200);
  CHECK(close(sigma_from_trace(BigComplex(0)), BigComplex(Rational(1, 2)), tol));
  CHECK(close(sigma_from_trace(BigComplex(1)), BigComplex(Rational(1, 3)), tol));
  CHECK(close(sigma_from_trace(two_cos_pi(BigComplex(Rational(4, 7)))), BigComplex(Rational(4, 7)), tol));
  CHECK_THROWS_AS(sigma_from_trace(BigComplex(-2)), DomainError);
  CHECK_THROWS_AS(sigma_from_trace(BigComplex(-5)), DomainError);
  CHECK_THROWS_AS(sigma_from_trace(BigComplex(2)), ZeroSigmaError);
  CHECK(sigma_candidates(BigComplex(3)).size() == 2);
  CHECK(sigma_candidates(BigComplex(1)).size() == 1);
  for (int k = 0; k < 500; ++k) {
    BigComplex tr = testutil::random_complex(4.0);
    BigComplex s = sigma_from_trace(tr);
    CHECK(close(two_cos_pi(s), tr, pow2(-180)));
    CHECK(s.re >= 0);
    CHECK(s.re < 1);
  }
}

TEST_CASE("validity conditions") {
  JimboInput klein0 = make_jimbo_input(kKleinTheta, klein_branch(0));
  REQUIRE(klein0.sigma_exact.has_value());
  CHECK(*klein0.sigma_exact == Rational(1, 2));
  CHECK(check_conditions(klein0).ok());
  JimboInput b = klein0;
  b.theta_exact = std::array<Rational, 4>{1, Rational(2, 7), Rational(2, 7), Rational(4, 7)};
  b.theta0 = BigComplex(1);
  ConditionReport rb = check_conditions(b);
  CHECK_FALSE(rb.theta_nonintegral);
  CHECK_FALSE(rb.ok());
  JimboInput d = klein0;
  d.theta_exact = std::array<Rational, 4>{Rational(3, 4), Rational(3, 4), Rational(2, 7), Rational(4, 7)};
  ConditionReport rd = check_conditions(d);
  CHECK(rd.theta_nonintegral);
  CHECK_FALSE(rd.no_even_integer);
  // the same failure found numerically
  JimboInput dn = d;
  dn.theta_exact.reset();
  dn.sigma_exact.reset();
  dn.theta0 = BigComplex(Rational(3, 4));
  dn.thetat = BigComplex(Rational(3, 4));
  CHECK_FALSE(check_conditions(dn).no_even_integer);
  CHECK_THROWS_AS(leading_term(d), ValidityError);
}

TEST_CASE("half-angle lemma identities") {
  Real tol = pow2(-200);
  BigComplex i = BigComplex::i_unit();
  BigComplex pi(real_pi());
  for (int k = 0; k < 500; ++k) {
    JimboInput in = random_input();
    auto h = jimbo_half_angles(in);
    const BigComplex &al = h[0], &be = h[1], &ga = h[2], &de = h[3];
    BigComplex si = sin(pi * in.thetainf), ss = sin(pi * in.sigma);
    BigComplex ci = cos(pi * in.thetainf), c1 = cos(pi * in.theta1);
    BigComplex ei = expipi(in.thetainf), eps = expipi(in.sigma);
    BigComplex a = ga * de - al * be;
    BigComplex b = ga * de / ei - al * be * ei;
    BigComplex c = ga * de * ei - al * be / ei;
    CHECK(testutil::rel_close(a, -si * ss, tol));
    CHECK(testutil::rel_close(b, i * si * (eps * ci - c1), tol));
    CHECK(testutil::rel_close(c, i * si * (c1 - ci / eps), tol));
  }
}

TEST_CASE("s round trip through the explicit parameterization") {
  for (int k = 0; k < 500; ++k) {
    JimboInput in = random_input();
    BigComplex s0 = testutil::random_complex(2.0);
    if (abs(s0) < Real(0.1)) s0 = BigComplex(1);
    auto M = jimbo_matrices(in, s0);
    Real tol = pow2(-160);
    for (int j = 0; j < 4; ++j) CHECK(close(M[j].det(), BigComplex(1), tol));
    CHECK(close(M[0].trace(), two_cos_pi(in.theta0), tol));
    CHECK(close(M[1].trace(), two_cos_pi(in.thetat), tol));
    CHECK(close(M[2].trace(), two_cos_pi(in.theta1), tol));
    CHECK(close(M[3](0, 0), expipi(in.thetainf), tol));
    CHECK(close(M[3](0, 1), BigComplex(0), tol));
    CHECK(close(M[3](1, 0), BigComplex(0), tol));
    CHECK(close((M[0] * M[1]).trace(), two_cos_pi(in.sigma), tol));
    // sigma_01 and sigma_1t read off the matrices, then s recovered from the traces alone
    in.sigma01 = acos((M[0] * M[2]).trace() / BigComplex(2)) / BigComplex(real_pi());
    in.sigma1t = acos((M[2] * M[1]).trace() / BigComplex(2)) / BigComplex(real_pi());
    CHECK(testutil::rel_close(jimbo_s(in), s0, pow2(-150)));
    auto W = jimbo_matrices(in, jimbo_s(in));
    CHECK(close((W[0] * W[2]).trace(), (M[0] * M[2]).trace(), pow2(-140)));
    CHECK(close((W[2] * W[1]).trace(), (M[2] * M[1]).trace(), pow2(-140)));
  }
}

TEST_CASE("s is not symmetric in sigma_01 and sigma_1t") {
  JimboInput in = random_input();
  JimboInput sw = in;
  std::swap(sw.sigma01, sw.sigma1t);
  CHECK(abs(jimbo_s(in) - jimbo_s(sw)) > pow2(-20));
}

TEST_CASE("gamma ratio") {
  JimboInput in;
  in.theta0 = in.thetat = in.theta1 = in.thetainf = BigComplex(0);
  in.sigma = BigComplex(Rational(1, 2));
  Real g = boost::math::tgamma(Real(1) / 2), g3 = boost::math::tgamma(Real(3) / 2);
  Real gh_p = boost::math::tgamma(Real(5) / 4), gh_m = boost::math::tgamma(Real(3) / 4);
  Real expect = g * g * gh_p * gh_p * gh_p * gh_p / (g3 * g3 * gh_m * gh_m * gh_m * gh_m);
  CHECK(close(jimbo_c_gamma(in), BigComplex(expect), pow2(-200)));
  for (int k = 0; k < 500; ++k) {
    JimboInput r = random_input();
    JimboInput m = r;
    m.sigma = -r.sigma;
    CHECK(close(jimbo_c_gamma(r) * jimbo_c_gamma(m), BigComplex(1), pow2(-150)));
  }
  JimboInput pole = in;
  pole.theta0 = BigComplex(2);
  pole.thetat = BigComplex(Rational(-7, 2));
  pole.sigma = BigComplex(Rational(-1, 2));
  CHECK_THROWS_AS(jimbo_c_gamma(pole), PoleError);
}

TEST_CASE("klein leading terms") {
  std::array<BranchLeadingTerm, 7> L;
  for (int j = 0; j < 7; ++j) L[j] = leading_term(make_jimbo_input(kKleinTheta, klein_branch(j)));
  Real tol = pow2(-150);
  REQUIRE(L[0].prefactor_exact.has_value());
  CHECK(*L[0].prefactor_exact == Rational(57, 28));
  CHECK(*L[0].exponent_exact == Rational(1, 2));
  CHECK(close(pow(L[0].coefficient, 4), BigComplex(Rational(-7, 81)), tol));
  CHECK(close(BigComplex(arg(L[0].coefficient)), BigComplex(real_pi() / 4), tol));
  Real c0 = boost::multiprecision::pow(Real(7), Real(1) / 4) / (3 * boost::multiprecision::sqrt(Real(2)));
  CHECK(close(L[0].coefficient, BigComplex(c0, c0), tol));
  REQUIRE(L[6].prefactor_exact.has_value());
  CHECK(*L[6].prefactor_exact == Rational(475, 308));
  CHECK(*L[6].exponent_exact == Rational(2, 3));
  CHECK(close(L[6].coefficient, BigComplex(-5 / boost::multiprecision::cbrt(Real(14))), tol));
  CHECK(close(pow(L[6].coefficient, 3), BigComplex(Rational(-125, 14)), tol));
  BigComplex i = BigComplex::i_unit();
  CHECK(close(L[1].coefficient, -i * L[0].coefficient, tol));
  CHECK(close(L[2].coefficient, i * L[0].coefficient, tol));
  CHECK(close(L[3].coefficient, -L[0].coefficient, tol));
  CHECK(close(L[4].coefficient, BigComplex::root_of_unity(-1, 3) * L[6].coefficient, tol));
  CHECK(close(L[5].coefficient, BigComplex::root_of_unity(1, 3) * L[6].coefficient, tol));
  for (int j = 0; j < 7; ++j) CHECK(L[j].conditions.ok());
}

TEST_CASE("prefactor in exact arithmetic") {
  JimboInput in = make_jimbo_input(kKleinTheta, klein_branch(0));
  BranchLeadingTerm t = leading_term(in);
  CHECK(t.prefactor_exact == Rational(57, 28));
}
