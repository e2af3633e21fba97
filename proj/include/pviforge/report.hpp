// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pviforge/char_variety.hpp"
#include "pviforge/errors.hpp"
#include "pviforge/fuchsian.hpp"
#include "pviforge/series_curve.hpp"

namespace pviforge {

using Json = nlohmann::json;

struct RunConfig {
  unsigned precision = 256;
  int order = 30;
  double tol = 0;  // orbit dedup tolerance; 0 selects half precision
  std::size_t max_orbit = 10000;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 20260514ULL;
  int digits = 40;  // significant digits of floating values in reports
};

// A failure tagged with the pipeline stage it occurred in.
class StageError : public Error {
 public:
  StageError(std::string stage, std::string kind, const std::string& what, int exit_code);
  const std::string& stage() const { return stage_; }
  const std::string& error_kind() const { return error_kind_; }
  int exit_code() const { return exit_code_; }

 private:
  std::string stage_;
  std::string error_kind_;
  int exit_code_;
};

// 2 on OrbitOverflow, 3 on parse failures, 4 on singular points, 5 otherwise.
int exit_code_for(const std::exception& e);
std::string error_kind_of(const std::exception& e);

// Runs f and rethrows any failure as a StageError tagged with stage.
template <class F>
auto run_stage(const std::string& stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, error_kind_of(e), e.what(), exit_code_for(e));
  }
}

Json to_json(const Rational& q);
Json to_json(const BigComplex& z, int digits);
Json to_json(const QMatrix& m);
Json to_json(const CMatrix& m, int digits);
Json to_json(const TraceData2& d, int digits);
Json to_json(const ReflectionData3& d, int digits);
Json to_json(const QPoly& p);
Json to_json(const RationalFunction& f);
Json to_json(const IntegerCurve& c);

Rational rational_from_json(const Json& j);
BigComplex complex_from_json(const Json& j);
CMatrix matrix_from_json(const Json& j);
RationalFunction rational_function_from_json(const Json& j);
RationalParameterization parameterization_from_json(const Json& j);
Theta theta_from_strings(const std::vector<std::string>& s);

// Input of the orbit and solve commands: a catalog group or a triple file.
struct TripleSource {
  std::string group;        // "klein" or empty
  std::string triple_file;  // JSON with "matrices" (three 2x2 or 3x3) and optional "theta"
  std::optional<Theta> theta;
};

struct ResolvedInput {
  std::string label;
  TraceData2 traces;
  std::optional<ReflectionData3> reflection;
  std::optional<Theta> theta;
};

ResolvedInput resolve_input(const TripleSource& src, const RunConfig& cfg);

// lambda_i from t_i = exp(i pi lambda_i) and mu_i from n_i, recognized as rationals, then theta.
std::optional<Theta> theta_from_reflection_data(const ReflectionData3& d);

enum class OrbitActionKind { P3, B3 };

Json orbit_report(const TripleSource& src, OrbitActionKind action, const RunConfig& cfg);

struct SolveOptions {
  std::string verify_file;  // JSON parameterization to check exactly
};
Json solve_report(const TripleSource& src, const SolveOptions& opts, const RunConfig& cfg);

struct ReconstructOptions {
  std::string group = "klein";
  std::string param_file;   // JSON parameterization (overrides the catalog one)
  std::optional<Theta> theta;
  Rational s = Rational(5, 4);
  std::optional<Rational> shift;  // default: 1/2 - theta_1
  bool skip_monodromy = false;
  std::vector<int> pure_braid{2, 1};
};
Json reconstruct_report(const ReconstructOptions& opts, const RunConfig& cfg);

// Deterministic serialization: sorted keys, two-space indentation for json, "path = value" lines for text.
std::string render(const Json& j, const std::string& format);

}  // namespace pviforge
