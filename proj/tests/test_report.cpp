#include <fstream>

#include "doctest.h"
#include "pviforge/jimbo.hpp"
#include "pviforge/reflection_catalog.hpp"
#include "pviforge/report.hpp"
#include "test_util.hpp"

using namespace pviforge;

namespace {

const std::string kData = PVIFORGE_TEST_DATA;

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "report_test_" + name;
  std::ofstream(path) << text;
  return path;
}

int exit_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return exit_code_for(e);
  }
  return 0;
}

}  // namespace

TEST_CASE("orbit report for klein") {
  RunConfig cfg;
  Json j = orbit_report({"klein", "", std::nullopt}, OrbitActionKind::P3, cfg);
  CHECK(j["size"] == 7);
  CHECK(j["genus"] == 0);
  CHECK(j["group_order"] == 2520);
  CHECK(j["beta1_squared"]["cycle_type"] == std::vector<int>{2, 2, 3});
  CHECK(j["beta2_squared"]["cycle_type"] == std::vector<int>{2, 2, 3});
  std::set<std::string> words;
  for (const auto& e : j["elements"]) words.insert(e["binary"].get<std::string>());
  CHECK(words == std::set<std::string>{"000", "001", "010", "011", "100", "101", "110"});
  Json b3 = orbit_report({"klein", "", std::nullopt}, OrbitActionKind::B3, cfg);
  CHECK(b3["size"] == 7);
  CHECK(b3.contains("beta1"));
}

TEST_CASE("orbit report is deterministic") {
  RunConfig cfg;
  std::string a = render(orbit_report({"klein", "", std::nullopt}, OrbitActionKind::P3, cfg), "json");
  std::string b = render(orbit_report({"klein", "", std::nullopt}, OrbitActionKind::P3, cfg), "json");
  CHECK(a == b);
  CHECK(render(Json{{"b", 1}, {"a", Json{{"d", "x"}, {"c", Json::array({1, 2})}}}}, "text") == "a.c = [1,2]\na.d = x\nb = 1\n");
}

TEST_CASE("commuting triple file has a one-point orbit") {
  RunConfig cfg;
  Json j = orbit_report({"", kData + "/commuting_triple.json", std::nullopt}, OrbitActionKind::P3, cfg);
  CHECK(j["size"] == 1);
  CHECK(j["group_order"] == 1);
}

TEST_CASE("3x3 triple files go through phi and recover theta") {
  PseudoReflectionTriple T = klein_generators();
  Json m = Json::array();
  for (const auto& r : T.r) m.push_back(to_json(r, 80));
  std::string path = write_temp("klein3.json", Json{{"matrices", m}}.dump());
  RunConfig cfg;
  ResolvedInput in = resolve_input({"", path, std::nullopt}, cfg);
  REQUIRE(in.theta);
  CHECK((*in.theta)[0] == Rational(2, 7));
  CHECK((*in.theta)[3] == Rational(4, 7));
  Json j = orbit_report({"", path, std::nullopt}, OrbitActionKind::P3, cfg);
  CHECK(j["size"] == 7);
}

TEST_CASE("error mapping and stage tags") {
  RunConfig cfg;
  cfg.max_orbit = 3;
  CHECK(exit_code_of([&] { orbit_report({"klein", "", std::nullopt}, OrbitActionKind::P3, cfg); }) == 2);
  try {
    orbit_report({"klein", "", std::nullopt}, OrbitActionKind::P3, cfg);
  } catch (const StageError& e) {
    CHECK(e.stage() == "orbit");
    CHECK(e.error_kind() == "OrbitOverflow");
  }
  RunConfig ok;
  std::string bad = write_temp("bad.json", "{\"matrices\": [1");
  CHECK(exit_code_of([&] { orbit_report({"", bad, std::nullopt}, OrbitActionKind::P3, ok); }) == 3);
  CHECK(exit_code_of([&] { orbit_report({"e8", "", std::nullopt}, OrbitActionKind::P3, ok); }) == 3);
  CHECK(exit_code_of([&] { orbit_report({"", "", std::nullopt}, OrbitActionKind::P3, ok); }) == 3);
  ReconstructOptions rec;
  rec.s = 0;
  rec.skip_monodromy = true;
  CHECK(exit_code_of([&] { reconstruct_report(rec, ok); }) == 4);
  rec.s = 2;
  try {
    reconstruct_report(rec, ok);
    FAIL("expected a singular point");
  } catch (const StageError& e) {
    CHECK(e.stage() == "point");
    CHECK(e.error_kind() == "SingularPointError");
  }
  CHECK(exit_code_of([] { throw ResonanceError("x"); }) == 5);
}

TEST_CASE("perturbed leading coefficient fails at the symmetric functions stage") {
  Theta theta{Rational(2, 7), Rational(2, 7), Rational(2, 7), Rational(4, 7)};
  Orbit<TraceData2> o = enumerate_orbit(phi(reflection_data(klein_generators())), BraidAction::P3);
  PviParams params = pvi_params_from_theta(theta);
  std::vector<PuiseuxSeries> branches;
  for (std::size_t i = 0; i < o.elements.size(); ++i) {
    BranchLeadingTerm lead = leading_term(make_jimbo_input(theta, o.elements[i]));
    if (i == 0) lead.coefficient *= BigComplex(Rational(101, 100));
    branches.push_back(extend_branch(lead, params, 8));
  }
  try {
    run_stage("symmetric", [&] { return symmetric_laurent(branches); });
    FAIL("expected FractionalResidueError");
  } catch (const StageError& e) {
    CHECK(e.stage() == "symmetric");
    CHECK(e.error_kind() == "FractionalResidueError");
    CHECK(e.exit_code() == 5);
  }
}

TEST_CASE("reconstruct report at s = 5/4") {
  RunConfig cfg;
  ReconstructOptions rec;
  rec.skip_monodromy = true;
  Json j = reconstruct_report(rec, cfg);
  CHECK(j["t"] == "121/125");
  CHECK(j["y"] == "11/9");
  CHECK(j["shift"] == "3/14");
  CHECK(j["b_traces"]["t12"] == "3/224");
  CHECK(j["b_traces"]["t23"] == "5/176");
  CHECK(j["b_traces"]["t13"] == "249/2464");
  CHECK(j["b_traces"]["t321"] == "21/1408");
  CHECK(j["system"]["B1"][0] == Json::array({"1/2", "3/224", "21/1408"}));
  CHECK(j["system"]["B3"][2] == Json::array({"332/49", "1", "1/2"}));
  CHECK(j["y_from_B"] == "11/9");
  CHECK_FALSE(j.contains("monodromy"));
  // the same system from the parameterization file
  rec.param_file = kData + "/klein_param.json";
  rec.theta = theta_from_strings({"2/7", "2/7", "2/7", "4/7"});
  CHECK(reconstruct_report(rec, cfg)["system"] == j["system"]);
  rec.theta.reset();
  CHECK(exit_code_of([&] { reconstruct_report(rec, cfg); }) == 3);
}

TEST_CASE("json parsing helpers") {
  CHECK(rational_from_json(Json("6/8")) == Rational(3, 4));
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("x")), ParseError);
  BigComplex z = complex_from_json(Json{{"re", "1/4"}, {"im", -2}});
  CHECK(z == BigComplex(Rational(1, 4), Rational(-2)));
  CHECK_THROWS_AS(matrix_from_json(Json::array({Json::array({1, 2}), Json::array({3})})), ParseError);
  RationalFunction f = rational_function_from_json(Json{{"num", {"1", "2"}}, {"den", {"3"}}});
  CHECK(f.eval(Rational(1)) == 1);
  CHECK_THROWS_AS(rational_function_from_json(Json{{"num", {"1"}}, {"den", {"0"}}}), ParseError);
  CHECK_THROWS_AS(theta_from_strings({"1", "2"}), ParseError);
  CHECK(to_json(Rational(-3, 6)) == "-1/2");
  RunConfig cfg;
  CHECK_THROWS_AS(render(Json(1), "xml"), ParseError);
}
