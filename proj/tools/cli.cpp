#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>

#include "io.hpp"
#include "nevpick/divisor.hpp"
#include "nevpick/error.hpp"
#include "nevpick/kernels.hpp"
#include "nevpick/lft.hpp"
#include "nevpick/omega.hpp"
#include "nevpick/theta.hpp"

namespace nevpick::cli {

namespace {

using io::Json;
using io::to_json;

struct Options {
  std::string problem;
  std::optional<int> kappa;
  std::string param_e;
  std::string param_s;
  std::string param_b;
  std::string f;
  std::optional<double> radius;
  int points = 128;
  std::string grid_file;
  double tol_eig = 1e-9;
  double tol_zero = 1e-9;
  double tol_verify = 1e-9;
  bool text = false;
};

struct Outcome {
  Json report;
  int code = Pass;
};

InterpProblem load_problem(const Options& o) {
  InterpProblem p = io::problem_from_json(io::read_json_file(o.problem));
  if (o.kappa) p.kappa = *o.kappa;
  p.validate();
  return p;
}

PickOptions pick_options(const Options& o) {
  PickOptions po;
  po.eig_rel_tol = o.tol_eig;
  return po;
}

ParamPair load_param(const Options& o) {
  if (!o.param_e.empty()) {
    if (!o.param_s.empty() || !o.param_b.empty())
      throw Error(ErrorCode::InvalidInput, "give either --param-e or --param-s/--param-b, not both");
    return ParamPair::from_e(io::parse_function_spec(o.param_e));
  }
  if (o.param_s.empty()) throw Error(ErrorCode::InvalidInput, "a parameter is required (--param-e or --param-s)");
  ParamPair p{io::parse_function_spec(o.param_s), o.param_b.empty() ? Blaschke() : io::parse_blaschke_spec(o.param_b)};
  p.validate();
  return p;
}

RatFun load_f(const Options& o) {
  if (o.f.empty()) throw Error(ErrorCode::InvalidInput, "--f is required");
  return io::parse_function_spec(o.f);
}

Json inertia_json(const Inertia& in) {
  Json j;
  j["n_plus"] = in.n_plus;
  j["n_minus"] = in.n_minus;
  j["n_zero"] = in.n_zero;
  return j;
}

Json blaschke_json(const Blaschke& b) {
  Json j;
  j["zeros"] = to_json(b.zeros());
  j["factor"] = to_json(b.unimodular_factor());
  j["degree"] = b.degree();
  return j;
}

Json param_json(const ParamPair& p) {
  Json j;
  j["S"] = to_json(p.S);
  j["B"] = blaschke_json(p.B);
  j["E"] = to_json(p.as_e());
  return j;
}

Json theta_json(const Theta& th) {
  Json entries = Json::array();
  for (int i = 0; i < 2; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 2; ++j) row.push_back(to_json(th.rational(i, j)));
    entries.push_back(row);
  }
  Json j;
  j["entries"] = entries;
  j["det"] = to_json(th.det_closed_form);
  return j;
}

Json selfcheck_json(const ThetaCheckReport& r) {
  Json j;
  j["pass"] = r.pass();
  j["details"] = r.failures;
  j["structured_vs_rational"] = r.structured_vs_rational;
  j["det_gap"] = r.det_gap;
  j["j_unitarity"] = r.j_unitarity;
  j["kernel_identity"] = r.kernel_identity;
  j["zeros_theta11"] = r.zeros_theta11;
  j["zeros_theta22"] = r.zeros_theta22;
  j["sq_plus"] = r.sq_plus;
  j["sq_minus"] = r.sq_minus;
  j["min_second_row"] = r.min_second_row;
  j["node_residue"] = r.node_residue;
  return j;
}

Json verdict_json(const Verdict& v) {
  Json details = Json::array();
  for (const auto& r : v.residuals) {
    Json d;
    d["node"] = r.node;
    d["order"] = r.order;
    d["value"] = to_json(r.value);
    d["target"] = to_json(r.target);
    d["residual"] = r.residual;
    details.push_back(d);
  }
  Json j;
  j["pass"] = v.pass;
  j["details"] = details;
  j["index"] = v.index ? Json(*v.index) : Json(nullptr);
  j["boundary_sup"] = v.boundary_sup;
  if (!v.class_error.empty()) j["class_error"] = v.class_error;
  j["analytic_at_nodes"] = v.analytic_at_nodes;
  j["poles_at_nodes"] = v.poles_at_nodes;
  j["max_residual"] = v.max_residual;
  return j;
}

Json admissibility_json(const AdmissibilityReport& a) {
  Json nodes = Json::array();
  for (const auto& n : a.nodes) {
    Json d;
    d["node"] = n.node;
    d["v"] = to_json(n.v_value);
    d["v_vanishes"] = n.v_vanishes;
    d["theta21"] = to_json(n.theta21);
    d["theta22"] = to_json(n.theta22);
    d["e_pole_order"] = n.e_pole_order;
    d["pole_clause"] = n.pole_clause;
    d["higher_order_pole"] = n.higher_order_pole;
    nodes.push_back(d);
  }
  Json j;
  j["pass"] = a.admissible;
  j["details"] = nodes;
  return j;
}

Json estimate_json(const NegSquaresEstimate& e) {
  Json j;
  j["count"] = e.count;
  j["threshold"] = e.threshold;
  j["grid"] = to_json(e.grid);
  j["eigenvalues"] = to_json(e.eigenvalues);
  return j;
}

Outcome run_analyze(const Options& o) {
  const InterpProblem p = load_problem(o);
  const PickSystem ps = analyze_pick(p, pick_options(o));
  Json j;
  j["command"] = "analyze";
  j["size"] = p.total_size();
  j["kappa"] = p.kappa;
  j["pick_matrix"] = to_json(ps.P.matrix());
  j["eigenvalues"] = to_json(hermitian_eigenvalues(ps.P));
  j["inertia"] = inertia_json(ps.inertia);
  j["invertible"] = ps.invertible();
  if (ps.P_inv) j["pick_inverse"] = to_json(*ps.P_inv);
  j["min_kappa"] = ps.min_kappa();
  j["solvable"] = ps.invertible() && p.kappa >= ps.min_kappa();
  j["stein_residual"] = ps.stein_residual;
  j["series_gap"] = ps.series_gap;
  return {j, Pass};
}

Outcome run_theta(const Options& o) {
  const InterpProblem p = load_problem(o);
  const Theta th = build_theta(pick_system(p, pick_options(o)));
  const ThetaCheckReport rep = theta_selfcheck_report(th);
  Json j;
  j["command"] = "theta";
  j["inertia"] = inertia_json(th.pick_inertia);
  j["theta"] = theta_json(th);
  j["selfcheck"] = selfcheck_json(rep);
  return {j, rep.pass() ? Pass : InternalError};
}

Outcome run_solve(const Options& o) {
  InterpProblem p = load_problem(o);
  const PickSystem ps = pick_system(p, pick_options(o));
  const Theta th = build_theta(ps);
  const ParamPair param = load_param(o);
  const int natural = ps.min_kappa() + param.B.degree();
  if (!o.kappa) p.kappa = natural;
  const AdmissibilityReport adm = admissible(th, param, p, o.tol_zero);
  const LftResult lft = lft_apply(th, param);
  const Verdict v = verify_solution(p, lft.f, o.tol_verify);
  Json j;
  j["command"] = "solve";
  j["kappa"] = p.kappa;
  j["parameter_kappa"] = natural;
  j["parameter"] = param_json(param);
  j["admissible"] = admissibility_json(adm);
  j["f"] = to_json(lft.f);
  j["verdict"] = verdict_json(v);
  return {j, v.pass ? Pass : VerdictFail};
}

Outcome run_verify(const Options& o) {
  const InterpProblem p = load_problem(o);
  const RatFun f = load_f(o);
  const Verdict v = verify_solution(p, f, o.tol_verify);
  Json j = verdict_json(v);
  j = Json{{"command", "verify"}, {"kappa", p.kappa}, {"pass", j["pass"]}, {"details", j["details"]}, {"verdict", j}};
  j["verdict"].erase("pass");
  j["verdict"].erase("details");
  if (v.analytic_at_nodes) {
    Json sp;
    try {
      const PickSystem ps = analyze_pick(p, pick_options(o));
      ContourSpec c = default_pick_contour(f, p, o.points);
      if (o.radius) c.radius = *o.radius;
      const HermitianMatrix S = schwarz_pick_matrix(f, p, c);
      sp["radius"] = c.radius;
      sp["points"] = c.points;
      sp["matrix"] = to_json(S.matrix());
      sp["gap_to_pick"] = (S.matrix() - ps.P.matrix()).norm();
      sp["moments"] = io::vector_to_json(moment_vector(f, p));
    } catch (const Error& e) {
      if (is_internal(e.code())) throw;
      sp["error"] = e.what();
    }
    j["schwarz_pick"] = sp;
  }
  return {j, v.pass ? Pass : VerdictFail};
}

Outcome run_invert(const Options& o) {
  const InterpProblem p = load_problem(o);
  const Theta th = build_theta(pick_system(p, pick_options(o)));
  const RatFun f = load_f(o);
  const RatFun E = lft_invert(th, f);
  Json j;
  j["command"] = "invert";
  j["E"] = to_json(E);
  try {
    const KreinLanger kl = class_index(E);
    j["E_index"] = kl.index;
    j["E_boundary_sup"] = kl.boundary_sup;
  } catch (const Error& e) {
    if (is_internal(e.code())) throw;
    j["E_class_error"] = e.what();
  }
  return {j, Pass};
}

Outcome run_classify(const Options& o) {
  const InterpProblem p = load_problem(o);
  const Theta th = build_theta(pick_system(p, pick_options(o)));
  const ParamPair param = load_param(o);
  ClassifyOptions co;
  co.zero_tol = o.tol_zero;
  co.verify_tol = o.tol_verify;
  const ClassifyReport r = classify_parameter(th, param, p, co);
  Json retained = Json::array();
  for (const auto& rc : r.retained_conditions) retained.push_back(Json{{"node", rc.node}, {"orders", rc.orders}});
  Json j;
  j["command"] = "classify";
  j["parameter"] = param_json(param);
  j["m"] = r.m;
  j["I_plus"] = r.I_plus;
  j["I_minus"] = r.I_minus;
  j["I_zero"] = r.I_zero;
  j["gamma_m"] = r.gamma_m;
  j["kappa_tilde"] = r.kappa_tilde;
  j["sq_minus"] = th.pick_inertia.n_minus;
  j["predicted_index"] = r.predicted_index;
  j["realized_index"] = r.realized_index;
  j["retained_conditions"] = retained;
  j["retained_residual"] = r.retained_residual;
  j["pole_orders"] = r.pole_orders;
  j["f"] = to_json(r.f);
  j["borderline"] = r.borderline;
  j["higher_order_pole"] = r.higher_order_pole;
  return {j, Pass};
}

Outcome run_decompose(const Options& o) {
  const InterpProblem p = load_problem(o);
  const RatFun f = load_f(o);
  const DivisorRemainder dr = divisor_remainder(p, f);
  Json poles = Json::array();
  for (const auto& [node, order] : dr.h_poles_at_nodes) poles.push_back(Json{{"node", node}, {"order", order}});
  Json j;
  j["command"] = "decompose";
  j["phi"] = to_json(dr.phi);
  j["theta"] = blaschke_json(dr.theta);
  j["h"] = to_json(dr.h);
  j["h_disk_poles"] = dr.h_disk_poles;
  j["h_boundary_sup"] = dr.h_boundary_sup;
  j["h_poles_at_nodes"] = poles;
  j["reconstruction_gap"] = dr.reconstruction_gap;
  return {j, Pass};
}

Outcome run_omega(const Options& o) {
  const InterpProblem p = load_problem(o);
  const RatFun f = load_f(o);
  OmegaOptions oo;
  oo.eig_tol = o.tol_eig;
  if (!o.grid_file.empty()) oo.grid = io::complex_list_from_json(io::read_json_file(o.grid_file));
  const OmegaReport r = omega_check(p, p.kappa, f, oo);
  auto clause = [](const OmegaClause& c) { return Json{{"holds", c.holds}, {"note", c.note}}; };
  Json j;
  j["command"] = "omega";
  j["kappa"] = r.kappa;
  j["sq_minus"] = r.sq_minus;
  j["pass"] = r.member();
  j["agree"] = r.agree();
  j["details"] = Json::array({clause(r.divisor), clause(r.kernel), clause(r.parameter)});
  j["f_boundary_sup"] = r.f_boundary_sup;
  j["h_disk_poles"] = r.h_disk_poles ? Json(*r.h_disk_poles) : Json(nullptr);
  if (r.kernel_estimate) j["kernel"] = estimate_json(*r.kernel_estimate);
  if (r.e) j["E"] = to_json(*r.e);
  j["E_index"] = r.e_index ? Json(*r.e_index) : Json(nullptr);
  return {j, !r.agree() ? InternalError : (r.member() ? Pass : VerdictFail)};
}

// Golden checks on the two-node problem f(0) = 1, f(1/2) = 1/2.
Outcome run_selftest() {
  Json checks = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok, double metric) {
    checks.push_back(Json{{"check", name}, {"pass", ok}, {"metric", metric}});
    all = all && ok;
  };
  auto guarded = [&](const std::string& name, const std::function<std::pair<bool, double>()>& fn) {
    try {
      const auto [ok, metric] = fn();
      record(name, ok, metric);
    } catch (const std::exception& e) {
      checks.push_back(Json{{"check", name}, {"pass", false}, {"error", e.what()}});
      all = false;
    }
  };

  InterpProblem p;
  p.nodes = {{0.0, {1.0}}, {0.5, {0.5}}};
  p.kappa = 1;

  guarded("system matrices", [&] {
    const SystemMatrices s = build_system(p);
    CMatrix T(2, 2);
    T << 0.0, 0.0, 0.0, 0.5;
    const double gap = (s.T - T).norm() + (s.E - CVector::Ones(2)).norm() +
                       std::abs(s.C(0) - 1.0) + std::abs(s.C(1) - 0.5);
    return std::pair{gap == 0.0, gap};
  });
  guarded("pick matrix", [&] {
    CMatrix P(2, 2);
    P << 0.0, 0.5, 0.5, 1.0;
    const double gap = (stein_solve(build_system(p)).matrix() - P).norm();
    return std::pair{gap <= 1e-12, gap};
  });
  guarded("pick inertia and eigenvalues", [&] {
    const PickSystem ps = pick_system(p);
    const Eigen::VectorXd ev = hermitian_eigenvalues(ps.P);
    const double gap = std::abs(ev(0) - (1.0 - std::sqrt(2.0)) / 2.0) + std::abs(ev(1) - (1.0 + std::sqrt(2.0)) / 2.0);
    return std::pair{ps.inertia == Inertia{1, 1, 0} && ps.min_kappa() == 1 && gap <= 1e-12, gap};
  });
  guarded("pick inverse", [&] {
    CMatrix Pi(2, 2);
    Pi << -4.0, 2.0, 2.0, 0.0;
    const double gap = (*pick_system(p).P_inv - Pi).norm();
    return std::pair{gap <= 1e-12, gap};
  });
  const Theta th = build_theta(pick_system(p));
  guarded("theta entries", [&] {
    // Over the monic denominator z - 2: numerators 2 - 3z, 2z^2 - 2z, 2 - 2z, 2z^2 - 3z.
    const std::array<std::vector<cplx>, 4> nums{std::vector<cplx>{2.0, -3.0}, {0.0, -2.0, 2.0}, {2.0, -2.0},
                                                 {0.0, -3.0, 2.0}};
    double gap = 0.0;
    for (std::size_t e = 0; e < 4; ++e) {
      gap = std::max(gap, relative_coeff_distance(th.rational.entries[e].num(), Poly(nums[e])));
      gap = std::max(gap, relative_coeff_distance(th.rational.entries[e].den(), Poly{-2.0, 1.0}));
    }
    return std::pair{gap <= 1e-12, gap};
  });
  guarded("theta at the origin", [&] {
    Eigen::Matrix2cd M;
    M << -1.0, 0.0, -1.0, 0.0;
    const double gap = (th.rational.eval(0.0) - M).norm();
    return std::pair{gap <= 1e-12, gap};
  });
  guarded("theta self-check", [&] {
    const ThetaCheckReport r = theta_selfcheck_report(th);
    return std::pair{r.pass(), r.j_unitarity};
  });
  guarded("constant parameter 1/2 admissible", [&] {
    const AdmissibilityReport a = admissible(th, ParamPair::from_e(RatFun(0.5)), p);
    return std::pair{a.admissible, std::abs(a.nodes[0].v_value)};
  });
  guarded("pole parameter 1/(4z) admissible by the pole clause", [&] {
    InterpProblem p2 = p;
    p2.kappa = 2;
    const ParamPair e = ParamPair::from_e(RatFun(0.25) / RatFun::identity());
    const AdmissibilityReport a = admissible(th, e, p2);
    // The quoted value -2 is the bracketed entry 2(z - 1) before the factor 1/(2 - z).
    const Eigen::Matrix2cd M = th.eval(0.0);
    const bool clause = a.nodes[0].pole_clause && std::abs(M(1, 1)) <= 1e-12 && std::abs(2.0 * M(1, 0) + 2.0) <= 1e-12;
    return std::pair{a.admissible && clause, std::abs(M(1, 1))};
  });
  guarded("solutions interpolate", [&] {
    const RatFun f1 = lft_apply(th, ParamPair::from_e(RatFun(0.5))).f;
    const RatFun f2 = lft_apply(th, ParamPair::from_e(RatFun(0.25) / RatFun::identity())).f;
    InterpProblem p2 = p;
    p2.kappa = 2;
    const Verdict v1 = verify_solution(p, f1, 1e-10);
    const Verdict v2 = verify_solution(p2, f2, 1e-10);
    return std::pair{v1.pass && v2.pass, std::max(v1.max_residual, v2.max_residual)};
  });

  Json j;
  j["command"] = "selftest";
  j["pass"] = all;
  j["details"] = checks;
  return {j, all ? Pass : InternalError};
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-point interpolation in generalized Schur classes", "nevpick"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  bool json = false;
  app.add_flag("--json", json, "JSON report (default)");
  app.add_flag("--text", o.text, "one 'path: value' line per report field");

  auto problem = [&](CLI::App* c) {
    c->add_option("--problem", o.problem, "problem JSON file")->required()->check(CLI::ExistingFile);
    c->add_option("--kappa", o.kappa, "class index kappa (overrides the problem file)")->check(CLI::NonNegativeNumber);
    c->add_option("--tol-eig", o.tol_eig, "relative eigenvalue threshold for inertia and kernel counts")
        ->capture_default_str();
  };
  auto param = [&](CLI::App* c) {
    c->add_option("--param-e", o.param_e, "parameter E (const:<re>[,<im>] | identity | ratio:<num>:<den> | "
                                          "blaschke:<zeros> | json:<file>)");
    c->add_option("--param-s", o.param_s, "Schur parameter S");
    c->add_option("--param-b", o.param_b, "Blaschke parameter B (default 1)");
    c->add_option("--tol-zero", o.tol_zero, "relative zero test at the nodes")->capture_default_str();
    c->add_option("--tol-verify", o.tol_verify, "interpolation residual tolerance")->capture_default_str();
  };
  auto function = [&](CLI::App* c) { c->add_option("--f", o.f, "function, same spec language as --param-e")->required(); };

  auto* analyze = app.add_subcommand("analyze", "Pick matrix, inertia and minimal kappa");
  problem(analyze);
  auto* theta = app.add_subcommand("theta", "rational coefficient matrix and its self-check");
  problem(theta);
  auto* solve = app.add_subcommand("solve", "solution generated by a parameter");
  problem(solve);
  param(solve);
  auto* verify = app.add_subcommand("verify", "check a candidate solution");
  problem(verify);
  function(verify);
  verify->add_option("--tol-verify", o.tol_verify, "interpolation residual tolerance")->capture_default_str();
  verify->add_option("--radius", o.radius, "contour radius for the Schwarz-Pick matrix (default: automatic)");
  verify->add_option("--points", o.points, "quadrature points per contour")->capture_default_str()->check(
      CLI::Range(4, 1 << 16));
  auto* invert = app.add_subcommand("invert", "parameter E of a function");
  problem(invert);
  function(invert);
  auto* classify = app.add_subcommand("classify", "zero multiplicities and class of the generated function");
  problem(classify);
  param(classify);
  auto* decompose = app.add_subcommand("decompose", "divisor-remainder form f = phi + theta h");
  problem(decompose);
  function(decompose);
  auto* omega = app.add_subcommand("omega", "three-way membership test");
  problem(omega);
  function(omega);
  omega->add_option("--grid-file", o.grid_file, "JSON list of [re, im] kernel grid points")->check(CLI::ExistingFile);
  auto* selftest = app.add_subcommand("selftest", "golden checks on the two-node example");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? Pass : InputError;
  }

  try {
    Outcome r;
    if (*analyze) r = run_analyze(o);
    else if (*theta) r = run_theta(o);
    else if (*solve) r = run_solve(o);
    else if (*verify) r = run_verify(o);
    else if (*invert) r = run_invert(o);
    else if (*classify) r = run_classify(o);
    else if (*decompose) r = run_decompose(o);
    else if (*omega) r = run_omega(o);
    else if (*selftest) r = run_selftest();
    out << (o.text ? io::dump_text(r.report) : io::dump(r.report));
    return r.code;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return is_internal(e.code()) ? InternalError : InputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return InternalError;
  }
}

}  // namespace nevpick::cli
