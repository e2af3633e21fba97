// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "pviforge/report.hpp"

using namespace pviforge;

namespace {

int emit(const Json& j, const RunConfig& cfg) {
  std::string text = render(j, cfg.format);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw ParseError("cannot write " + cfg.out);
    f << text;
  }
  return 0;
}

void print_error(const std::exception& e) {
  Json j;
  const auto* s = dynamic_cast<const StageError*>(&e);
  j["error"] = error_kind_of(e);
  j["stage"] = s ? s->stage() : std::string("input");
  j["message"] = e.what();
  j["exit_code"] = exit_code_for(e);
  std::cerr << j.dump() << "\n";
}

Rational parse_q(const std::string& s) { return rational_from_json(Json(s)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic Painleve VI solutions from finite monodromy: orbits, curves and Fuchsian systems"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "pviforge.toml", "key = value configuration file", false);

  RunConfig cfg;
  app.add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(64u, 1u << 20));
  app.add_option("--order", cfg.order, "series truncation order in t")->check(CLI::Range(4, 100000));
  app.add_option("--tol", cfg.tol, "orbit dedup tolerance (0: half precision)")->check(CLI::NonNegativeNumber);
  app.add_option("--max-orbit", cfg.max_orbit, "orbit size limit");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", cfg.out, "output file (default: stdout)");
  app.add_option("--seed", cfg.seed, "seed recorded in reports for randomized checks");
  app.add_option("--digits", cfg.digits, "significant digits of floating values")->check(CLI::Range(5, 400));

  TripleSource src;
  std::vector<std::string> theta;
  std::string action = "p3";
  auto* orbit = app.add_subcommand("orbit", "braid orbit of a monodromy triple");
  orbit->add_option("--group", src.group, "catalog group (klein)");
  orbit->add_option("--triple", src.triple_file, "JSON file with three 2x2 or 3x3 matrices");
  orbit->add_option("--action", action, "p3 (pure braids) or b3")->check(CLI::IsMember({"p3", "b3"}));

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "solution curve from the orbit");
  solve->add_option("--group", src.group, "catalog group (klein)");
  solve->add_option("--triple", src.triple_file, "JSON file with three 2x2 or 3x3 matrices and optional theta");
  solve->add_option("--theta", theta, "theta_1 theta_2 theta_3 theta_4 as rationals")->expected(4);
  solve->add_option("--verify", solve_opts.verify_file, "JSON parameterization {y, t} to verify exactly");

  ReconstructOptions rec;
  std::string s_value = "5/4", shift_value;
  auto* reconstruct = app.add_subcommand("reconstruct", "rank three Fuchsian system at a curve point");
  reconstruct->add_option("--group", rec.group, "catalog group (klein)");
  reconstruct->add_option("--param", rec.param_file, "JSON parameterization {y, t}");
  reconstruct->add_option("--theta", theta, "theta_1 theta_2 theta_3 theta_4 as rationals")->expected(4);
  reconstruct->add_option("--s", s_value, "parameter value");
  reconstruct->add_option("--shift", shift_value, "scalar shift of the residues (default 1/2 - theta_1)");
  reconstruct->add_flag("--skip-monodromy", rec.skip_monodromy, "system only");
  reconstruct->add_option("--pure-braid", rec.pure_braid, "loop system word, e.g. 2 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (!theta.empty()) src.theta = rec.theta = theta_from_strings(theta);
    if (*orbit) return emit(orbit_report(src, action == "p3" ? OrbitActionKind::P3 : OrbitActionKind::B3, cfg), cfg);
    if (*solve) return emit(solve_report(src, solve_opts, cfg), cfg);
    rec.s = parse_q(s_value);
    if (!shift_value.empty()) rec.shift = parse_q(shift_value);
    return emit(reconstruct_report(rec, cfg), cfg);
  } catch (const std::exception& e) {
    print_error(e);
    return exit_code_for(e);
  }
}
