// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pviforge/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pviforge/jimbo.hpp"
#include "pviforge/numerics/special.hpp"
#include "pviforge/perm.hpp"
#include "pviforge/reflection_catalog.hpp"

namespace pviforge {

StageError::StageError(std::string stage, std::string kind, const std::string& what, int exit_code)
    : Error("StageError", stage + ": " + what),
      stage_(std::move(stage)),
      error_kind_(std::move(kind)),
      exit_code_(exit_code) {}

int exit_code_for(const std::exception& e) {
  if (const auto* s = dynamic_cast<const StageError*>(&e)) return s->exit_code();
  if (dynamic_cast<const OrbitOverflow*>(&e)) return 2;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const Json::exception*>(&e)) return 3;
  if (dynamic_cast<const SingularPointError*>(&e)) return 4;
  return 5;
}

std::string error_kind_of(const std::exception& e) {
  if (const auto* s = dynamic_cast<const StageError*>(&e)) return s->error_kind();
  if (const auto* p = dynamic_cast<const Error*>(&e)) return p->kind();
  if (dynamic_cast<const Json::exception*>(&e)) return "ParseError";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "InvalidArgument";
  if (dynamic_cast<const std::domain_error*>(&e)) return "DomainError";
  return "Error";
}

namespace {

std::string real_str(const Real& x, int digits) {
  // values below the noise floor of the working precision print as 0
  if (abs(x) < pow2(-static_cast<long>(working_precision()) * 3 / 4)) return "0";
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json perm_json(const Perm& p) {
  Json j;
  j["images"] = p;
  j["cycles"] = cycle_string(p);
  j["cycle_type"] = nontrivial_cycle_type(p);
  return j;
}

Rational parse_rational(const std::string& s) {
  try {
    Rational q(s, 10);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw ParseError("not a rational number: " + s);
  }
}

}  // namespace

Json to_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Json to_json(const BigComplex& z, int digits) {
  return Json{{"re", real_str(z.re, digits)}, {"im", real_str(z.im, digits)}};
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const CMatrix& m, int digits) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j), digits));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const TraceData2& d, int digits) {
  return Json{{"m1", to_json(d.m1, digits)},   {"m2", to_json(d.m2, digits)},   {"m3", to_json(d.m3, digits)},
              {"m12", to_json(d.m12, digits)}, {"m23", to_json(d.m23, digits)}, {"m13", to_json(d.m13, digits)},
              {"m321", to_json(d.m321, digits)}};
}

Json to_json(const ReflectionData3& d, int digits) {
  return Json{{"t1", to_json(d.t1, digits)},   {"t2", to_json(d.t2, digits)},   {"t3", to_json(d.t3, digits)},
              {"n1", to_json(d.n1, digits)},   {"n2", to_json(d.n2, digits)},   {"n3", to_json(d.n3, digits)},
              {"t12", to_json(d.t12, digits)}, {"t23", to_json(d.t23, digits)}, {"t13", to_json(d.t13, digits)}};
}

Json to_json(const QPoly& p) {
  Json j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(to_json(c));
  return j;
}

Json to_json(const RationalFunction& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const IntegerCurve& c) {
  Json rows = Json::array();
  for (const auto& row : c.coeffs) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(r);
  }
  return Json{{"coeffs_y_then_t", rows},
              {"degree_y", c.degree_y()},
              {"degree_t", c.degree_t()},
              {"normalization", to_json(c.normalization)},
              {"polynomial", c.str()}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected an exact rational (integer or \"p/q\" string), got " + j.dump());
}

BigComplex complex_from_json(const Json& j) {
  if (j.is_object()) {
    auto part = [&](const char* key) -> Real {
      if (!j.contains(key)) return Real(0);
      const Json& v = j.at(key);
      if (v.is_number()) return Real(v.get<double>());
      if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.find('/') != std::string::npos) return to_real(parse_rational(s));
        try {
          return Real(s);
        } catch (const std::exception&) {
          throw ParseError("not a number: " + s);
        }
      }
      throw ParseError("bad number " + v.dump());
    };
    return {part("re"), part("im")};
  }
  if (j.is_number_integer()) return BigComplex(j.get<long>());
  if (j.is_number()) return BigComplex(Real(j.get<double>()));
  if (j.is_string()) return complex_from_json(Json{{"re", j}});
  throw ParseError("bad complex number " + j.dump());
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  std::size_t n = j.size();
  std::size_t m = j.at(0).size();
  CMatrix out(n, m);
  for (std::size_t a = 0; a < n; ++a) {
    if (!j.at(a).is_array() || j.at(a).size() != m) throw ParseError("matrix rows must have equal length");
    for (std::size_t b = 0; b < m; ++b) out(a, b) = complex_from_json(j.at(a).at(b));
  }
  return out;
}

RationalFunction rational_function_from_json(const Json& j) {
  auto poly = [](const Json& a) {
    if (!a.is_array()) throw ParseError("polynomial must be an array of coefficients, low degree first");
    std::vector<Rational> c;
    for (const auto& v : a) c.push_back(rational_from_json(v));
    return QPoly(c);
  };
  if (!j.is_object() || !j.contains("num")) throw ParseError("rational function needs \"num\" (and optional \"den\")");
  QPoly den = j.contains("den") ? poly(j.at("den")) : QPoly(Rational(1));
  if (den.is_zero_poly()) throw ParseError("zero denominator");
  return RationalFunction(poly(j.at("num")), den);
}

RationalParameterization parameterization_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("y") || !j.contains("t")) throw ParseError("parameterization needs \"y\" and \"t\"");
  return {rational_function_from_json(j.at("y")), rational_function_from_json(j.at("t"))};
}

Theta theta_from_strings(const std::vector<std::string>& s) {
  if (s.size() != 4) throw ParseError("theta needs four rationals");
  return {parse_rational(s[0]), parse_rational(s[1]), parse_rational(s[2]), parse_rational(s[3])};
}

std::optional<Theta> theta_from_reflection_data(const ReflectionData3& d) {
  auto exponent = [](const BigComplex& z) -> std::optional<Rational> {
    Real a = arg(z) / real_pi();
    if (a < 0) a += 2;
    auto q = recognize_power_rational(BigComplex(a), 1, 1000);
    if (!q) return std::nullopt;
    Rational v = *q;
    if (v >= 2) v -= 2;
    return v;
  };
  std::array<Rational, 3> lambda, mu;
  const BigComplex* t[3] = {&d.t1, &d.t2, &d.t3};
  const BigComplex* n[3] = {&d.n1, &d.n2, &d.n3};
  for (int i = 0; i < 3; ++i) {
    auto l = exponent(*t[i]);
    auto m = exponent(*n[i]);
    if (!l || !m) return std::nullopt;
    lambda[i] = *l;
    mu[i] = *m;
  }
  try {
    return theta_from_lambda_mu(lambda, mu);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

ResolvedInput resolve_input(const TripleSource& src, const RunConfig&) {
  ResolvedInput in;
  if (!src.group.empty() && !src.triple_file.empty()) throw ParseError("give either a group or a triple file");
  if (src.group == "klein") {
    in.label = "klein";
    in.reflection = reflection_data(klein_generators());
    in.traces = phi(*in.reflection);
    in.theta = theta_from_reflection_data(*in.reflection);
  } else if (!src.group.empty()) {
    throw ParseError("unknown group: " + src.group + " (known: klein)");
  } else if (!src.triple_file.empty()) {
    Json j = parse_file(src.triple_file);
    if (!j.contains("matrices") || !j.at("matrices").is_array() || j.at("matrices").size() != 3)
      throw ParseError(src.triple_file + ": expected \"matrices\" with three square matrices");
    std::array<CMatrix, 3> m;
    for (int i = 0; i < 3; ++i) m[i] = matrix_from_json(j.at("matrices").at(i));
    std::size_t dim = m[0].rows();
    for (const auto& x : m)
      if (x.rows() != dim || x.cols() != dim) throw ParseError("matrices must be square of one size");
    in.label = src.triple_file;
    if (dim == 2) {
      in.traces = traces_from_triple({m[0], m[1], m[2]});
    } else if (dim == 3) {
      PseudoReflectionTriple T;
      T.r = m;
      in.reflection = reflection_data(T);
      in.traces = phi(*in.reflection);
      in.theta = theta_from_reflection_data(*in.reflection);
    } else {
      throw ParseError("only 2x2 and 3x3 triples are supported");
    }
    if (j.contains("theta")) {
      std::vector<std::string> s;
      for (const auto& v : j.at("theta")) s.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      in.theta = theta_from_strings(s);
    }
  } else {
    throw ParseError("no input: give --group or --triple");
  }
  if (src.theta) in.theta = src.theta;
  return in;
}

Json orbit_report(const TripleSource& src, OrbitActionKind action, const RunConfig& cfg) {
  PrecisionScope prec(cfg.precision);
  ResolvedInput in = run_stage("input", [&] { return resolve_input(src, cfg); });
  BraidAction act = action == OrbitActionKind::P3 ? BraidAction::P3 : BraidAction::B3;
  Orbit<TraceData2> o =
      run_stage("orbit", [&] { return enumerate_orbit(in.traces, act, Real(cfg.tol), cfg.max_orbit); });
  Json j;
  j["command"] = "orbit";
  j["input"] = in.label;
  j["action"] = action == OrbitActionKind::P3 ? "p3" : "b3";
  j["precision"] = cfg.precision;
  j["size"] = o.elements.size();
  j["base_point"] = o.base_point;
  if (in.reflection) j["reflection_data"] = to_json(*in.reflection, cfg.digits);
  Json elems = Json::array();
  Real tol = half_precision_tol();
  for (std::size_t i = 0; i < o.elements.size(); ++i) {
    const TraceData2& e = o.elements[i];
    Json row = to_json(e, cfg.digits);
    row["index"] = i;
    // (m12, m23, m13) as a binary word when all three are 0 or 1
    std::string word;
    for (const BigComplex* z : {&e.m12, &e.m23, &e.m13}) {
      if (abs(*z) < tol) word += '0';
      else if (abs(*z - BigComplex(1)) < tol) word += '1';
    }
    if (word.size() == 3) row["binary"] = word;
    elems.push_back(row);
  }
  j["elements"] = elems;
  j["beta1_squared"] = perm_json(o.perm_b1sq);
  j["beta2_squared"] = perm_json(o.perm_b2sq);
  if (act == BraidAction::B3) {
    j["beta1"] = perm_json(o.perm_b1);
    j["beta2"] = perm_json(o.perm_b2);
  }
  GenusResult g = run_stage("genus", [&] { return genus_from_permutations(o.perm_b1sq, o.perm_b2sq); });
  j["genus"] = g.genus;
  j["group_order"] = g.group_order;
  j["infinity"] = perm_json(g.p_inf);
  return j;
}

Json solve_report(const TripleSource& src, const SolveOptions& opts, const RunConfig& cfg) {
  PrecisionScope prec(cfg.precision);
  ResolvedInput in = run_stage("input", [&] { return resolve_input(src, cfg); });
  if (!in.theta) throw StageError("input", "ParseError", "theta unknown: supply \"theta\" in the triple file or --theta", 3);
  const Theta& theta = *in.theta;
  Orbit<TraceData2> o = run_stage(
      "orbit", [&] { return enumerate_orbit(in.traces, BraidAction::P3, Real(cfg.tol), cfg.max_orbit); });
  PviParams params = pvi_params_from_theta(theta);
  Json j;
  j["command"] = "solve";
  j["input"] = in.label;
  j["precision"] = cfg.precision;
  j["order"] = cfg.order;
  Json th = Json::array(), pv = Json::array();
  for (const auto& q : theta) th.push_back(to_json(q));
  for (const auto& q : params) pv.push_back(to_json(q));
  j["theta"] = th;
  j["pvi_params"] = pv;
  j["orbit_size"] = o.elements.size();

  std::vector<BranchLeadingTerm> leads;
  std::vector<PuiseuxSeries> branches;
  Json br = Json::array();
  for (std::size_t i = 0; i < o.elements.size(); ++i) {
    BranchLeadingTerm lead = run_stage("validity", [&] { return leading_term(make_jimbo_input(theta, o.elements[i])); });
    PuiseuxSeries s = run_stage("series", [&] { return extend_branch(lead, params, cfg.order); });
    Json b;
    b["index"] = i;
    b["coefficient"] = to_json(lead.coefficient, cfg.digits);
    b["exponent"] = to_json(lead.exponent, cfg.digits);
    if (lead.exponent_exact) b["exponent_exact"] = to_json(*lead.exponent_exact);
    b["prefactor"] = to_json(lead.prefactor, cfg.digits);
    if (lead.prefactor_exact) b["prefactor_exact"] = to_json(*lead.prefactor_exact);
    b["s"] = to_json(lead.s, cfg.digits);
    b["conditions_ok"] = lead.conditions.ok();
    b["ramification"] = s.ramification;
    b["valuation"] = s.valuation;
    b["terms"] = s.coeffs.size();
    Json first = Json::array();
    for (std::size_t k = 0; k < std::min<std::size_t>(6, s.coeffs.size()); ++k)
      first.push_back(to_json(s.coeffs[k], cfg.digits));
    b["leading_coefficients"] = first;
    br.push_back(b);
    leads.push_back(lead);
    branches.push_back(s);
  }
  j["branches"] = br;
  auto laurent = run_stage("symmetric", [&] { return symmetric_laurent(branches); });
  std::vector<RationalFunction> symfns;
  Json sf = Json::array();
  for (const auto& ls : laurent) {
    RationalFunction f = run_stage("rationalization", [&] {
      return laurent_to_rational_auto(ls, static_cast<int>(ls.coeffs.size()) - 3);
    });
    sf.push_back(to_json(f));
    symfns.push_back(f);
  }
  j["symmetric_functions"] = sf;
  IntegerCurve curve = run_stage("curve", [&] { return assemble_curve(symfns); });
  j["curve"] = to_json(curve);
  j["curve"]["matches_klein_up_to_sign"] = curve.equal_up_to_sign(klein_curve());

  if (!opts.verify_file.empty()) {
    RationalParameterization p = run_stage("verify", [&] { return parameterization_from_json(parse_file(opts.verify_file)); });
    ParamResidual r = run_stage("verify", [&] { return verify_parameterization(p, params); });
    Json v;
    v["file"] = opts.verify_file;
    v["singular"] = r.singular;
    v["residual_identically_zero"] = r.zero();
    if (!r.singular) v["residual"] = to_json(r.residual);
    v["on_curve"] = run_stage("verify", [&] { return curve_on_curve_check(curve, p); });
    j["verify"] = v;
  }
  return j;
}

Json reconstruct_report(const ReconstructOptions& opts, const RunConfig& cfg) {
  PrecisionScope prec(cfg.precision);
  RationalParameterization p;
  Theta theta;
  if (!opts.param_file.empty()) {
    p = run_stage("input", [&] { return parameterization_from_json(parse_file(opts.param_file)); });
    if (!opts.theta) throw StageError("input", "ParseError", "--theta is required with --param", 3);
    theta = *opts.theta;
  } else if (opts.group == "klein") {
    p = klein_parameterization();
    theta = run_stage("input", [&] {
      auto t = theta_from_reflection_data(reflection_data(klein_generators()));
      if (!t) throw DegenerateError("klein exponents not recognized");
      return *t;
    });
    if (opts.theta) theta = *opts.theta;
  } else {
    throw StageError("input", "ParseError", "unknown group: " + opts.group + " (known: klein)", 3);
  }
  Rational shift = opts.shift ? *opts.shift : Rational(Rational(1, 2) - theta[0]);
  ParamPoint pt = run_stage("point", [&] { return param_point(p, opts.s); });
  Rational x = run_stage("point", [&] { return x_from_y(pt.y, pt.yprime, pt.t, theta); });
  JMSystem<Rational> jm = run_stage("jimbo-miwa", [&] { return jm_from_xy(x, pt.y, pt.t, theta); });
  FuchsianSystem3<Rational> sys = run_stage("assemble", [&] { return fuchsian_from_jm(jm, shift); });
  BTraces<Rational> bt = traces_of(sys.B);

  Json j;
  j["command"] = "reconstruct";
  j["precision"] = cfg.precision;
  j["s"] = to_json(opts.s);
  j["t"] = to_json(pt.t);
  j["y"] = to_json(pt.y);
  j["yprime"] = to_json(pt.yprime);
  j["x"] = to_json(x);
  j["shift"] = to_json(shift);
  Json th = Json::array();
  for (const auto& q : theta) th.push_back(to_json(q));
  j["theta"] = th;
  j["b_traces"] = Json{{"t12", to_json(bt.t12)}, {"t23", to_json(bt.t23)}, {"t13", to_json(bt.t13)},
                       {"t321", to_json(bt.t321)}};
  Json sysj;
  sysj["B1"] = to_json(sys.B[0]);
  sysj["B2"] = to_json(sys.B[1]);
  sysj["B3"] = to_json(sys.B[2]);
  sysj["poles"] = Json::array({"0", to_json(sys.t), "1"});
  Json lam = Json::array();
  for (const auto& q : sys.lambda) lam.push_back(to_json(q));
  sysj["lambda"] = lam;
  if (sys.mu) {
    Json mu = Json::array();
    for (const auto& q : *sys.mu) mu.push_back(to_json(q));
    sysj["mu"] = mu;
  }
  j["system"] = sysj;
  j["y_from_B"] = to_json(run_stage("y-recovery", [&] { return y_from_B(sys); }));

  if (!opts.skip_monodromy) {
    MonodromyLoopOptions mo;
    mo.pure_braid = opts.pure_braid;
    MonodromyReport r = run_stage("monodromy", [&] { return numeric_monodromy(to_complex(sys), mo); });
    int d = std::min(cfg.digits, 20);
    Json m;
    Json tr = Json::array(), det = Json::array(), ev = Json::array();
    for (int i = 0; i < 3; ++i) {
      tr.push_back(to_json(r.trace[i], d));
      det.push_back(to_json(r.det[i], d));
    }
    for (const auto& e : r.product_eigenvalues) {
      Json ej = to_json(e, d);
      // exponent k with e = exp(2 pi i k / 14) when recognizable
      Real a = arg(e) / (2 * real_pi());
      if (a < 0) a += 1;
      auto k = recognize_power_rational(BigComplex(a), 1, 1000, pow2(-30));
      if (k) ej["turns"] = to_json(*k);
      ev.push_back(ej);
    }
    Json pb = Json::array();
    for (int g : opts.pure_braid) pb.push_back(g);
    m["pure_braid"] = pb;
    m["trace"] = tr;
    m["det"] = det;
    m["t12"] = to_json(r.t12, d);
    m["t23"] = to_json(r.t23, d);
    m["t13"] = to_json(r.t13, d);
    m["product_eigenvalues"] = ev;
    std::ostringstream res;
    res << std::setprecision(6) << std::scientific << r.infinity_residual;
    m["infinity_residual"] = res.str();
    m["steps"] = r.steps;
    m["r1"] = to_json(r.r[0], d);
    m["r2"] = to_json(r.r[1], d);
    m["r3"] = to_json(r.r[2], d);
    j["monodromy"] = m;
  }
  return j;
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array()) {
    bool scalar = true;
    for (const auto& v : j) scalar = scalar && v.is_primitive();
    if (scalar) {
      os << path << " = " << j.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    }
  } else {
    os << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render(const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  if (format == "text") {
    std::ostringstream os;
    flatten(j, "", os);
    return os.str();
  }
  throw ParseError("unknown format: " + format + " (json or text)");
}

}  // namespace pviforge
