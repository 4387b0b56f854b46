#include "nevpick/lft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "nevpick/error.hpp"

namespace nevpick {

namespace {

std::vector<cplx> known_common_points(const Theta& theta) {
  std::vector<cplx> pts = theta.sys.nodes;
  const std::vector<cplx> refl = theta.reflected_nodes();
  pts.insert(pts.end(), refl.begin(), refl.end());
  return pts;
}

bool negligible(const Poly& p, double scale) { return p.is_zero() || p.max_abs_coeff() <= 1e-12 * scale; }

RatFun tidy(const RatFun& f) {
  if (f.is_zero()) return f;
  const Poly n = f.num().trimmed(1e-13);
  const Poly d = f.den().trimmed(1e-13);
  return RatFun::from_coprime(n, d);
}

}  // namespace

ParamPair ParamPair::from_e(const RatFun& E) {
  const KreinLanger kl = class_index(E);
  return {kl.s, kl.b};
}

RatFun ParamPair::as_e() const { return S / B.to_ratfun(); }

void ParamPair::validate(double tol) const {
  if (poles_in_disk(S) != 0) throw Error(ErrorCode::InvalidInput, "S has poles in the disk");
  if (boundary_sup(S) > 1.0 + tol) throw Error(ErrorCode::InvalidInput, "S is not contractive on the circle");
  for (const cplx a : B.zeros())
    if (std::abs(S(a)) <= tol) throw Error(ErrorCode::InvalidInput, "S and B share a zero");
}

LftResult lft_apply(const Theta& theta, const ParamPair& param) {
  const RatFun b = param.B.to_ratfun();
  const Poly& Sn = param.S.num();
  const Poly& Sd = param.S.den();
  const Poly& Bn = b.num();
  const Poly& Bd = b.den();
  const Poly sb = Sn * Bd;
  const Poly bs = Bn * Sd;
  const Poly den = theta.common_den * Sd * Bd;
  LftResult out;
  out.U = {theta.numerator(0, 0) * sb + theta.numerator(0, 1) * bs, den};
  const Poly v1 = theta.numerator(1, 0) * sb;
  const Poly v2 = theta.numerator(1, 1) * bs;
  out.V = {v1 + v2, den};
  const double scale = (v1.is_zero() ? 0.0 : v1.max_abs_coeff()) + (v2.is_zero() ? 0.0 : v2.max_abs_coeff());
  if (negligible(out.V.num, scale))
    throw Error(ErrorCode::DegenerateDenominator, "Theta21 S + Theta22 B vanishes identically");
  if (out.U.num.is_zero()) {
    out.f = RatFun();
    return out;
  }
  const std::vector<cplx> pts = known_common_points(theta);
  const PolyQuotient q = cancel_common_roots_at({out.U.num, out.V.num}, pts, 1e-9, &out.cancelled_at_known_points);
  out.f = RatFun::reduce(q, &out.reduce_info);
  return out;
}

RatFun lft_invert(const Theta& theta, const RatFun& f) {
  const Poly& fn = f.num();
  const Poly& fd = f.den();
  const Poly d1 = fd * theta.numerator(0, 0);
  const Poly d2 = fn * theta.numerator(1, 0);
  const Poly Ed = d1 - d2;
  const double scale = (d1.is_zero() ? 0.0 : d1.max_abs_coeff()) + (d2.is_zero() ? 0.0 : d2.max_abs_coeff());
  if (negligible(Ed, scale))
    throw Error(ErrorCode::IdenticallyZeroDenominator, "Theta11 - f Theta21 vanishes identically");
  const Poly n1 = fn * theta.numerator(1, 1);
  const Poly n2 = fd * theta.numerator(0, 1);
  Poly En = n1 - n2;
  const double nscale = (n1.is_zero() ? 0.0 : n1.max_abs_coeff()) + (n2.is_zero() ? 0.0 : n2.max_abs_coeff());
  RatFun E;
  if (!negligible(En, nscale)) {
    const PolyQuotient q = cancel_common_roots_at({En, Ed}, known_common_points(theta));
    E = tidy(RatFun::reduce(q));
  }

  for (int k = 0; k < 16; ++k) {
    const cplx z = std::polar(0.5, 2.0 * std::numbers::pi * (k + 0.5) / 16.0);
    if (vanishes_at(E.den(), z, 1e-8) || vanishes_at(fd, z, 1e-8)) continue;
    const Eigen::Matrix2cd M = theta.eval(z);
    const cplx e = E(z);
    const cplx bottom = M(1, 0) * e + M(1, 1);
    if (std::abs(bottom) <= 1e-8 * (std::abs(M(1, 0) * e) + std::abs(M(1, 1)))) continue;
    const cplx back = (M(0, 0) * e + M(0, 1)) / bottom;
    const cplx fz = f(z);
    if (std::abs(back - fz) > 1e-9 * (1.0 + std::abs(fz)))
      throw Error(ErrorCode::ValidationMismatch, "inverse parameter does not reproduce f");
  }
  return E;
}

AdmissibilityReport admissible(const Theta& theta, const ParamPair& param, const InterpProblem& problem,
                               double zero_tol) {
  AdmissibilityReport rep;
  for (std::size_t i = 0; i < problem.nodes.size(); ++i) {
    const cplx z = problem.nodes[i].z;
    const Eigen::Matrix2cd M = theta.eval(z);
    NodeAdmissibility na;
    na.node = i;
    na.theta21 = M(1, 0);
    na.theta22 = M(1, 1);
    const cplx s = param.S(z);
    const cplx b = param.B(z);
    na.v_value = M(1, 0) * s + M(1, 1) * b;
    na.v_vanishes = std::abs(na.v_value) <= zero_tol * (1.0 + std::abs(M(1, 0) * s) + std::abs(M(1, 1) * b));
    for (const cplx a : param.B.zeros())
      if (std::abs(a - z) <= 1e-8 * (1.0 + std::abs(z))) ++na.e_pole_order;
    if (na.e_pole_order > 0) {
      const bool t21 = std::abs(na.theta21) > zero_tol;
      const bool t22 = std::abs(na.theta22) <= zero_tol * (1.0 + std::abs(na.theta21));
      na.pole_clause = t21 && t22;
      na.higher_order_pole = na.e_pole_order > 1 && problem.nodes[i].multiplicity() > 1;
    }
    if (na.v_vanishes) rep.admissible = false;
    rep.nodes.push_back(na);
  }
  return rep;
}

Verdict verify_solution(const InterpProblem& problem, const RatFun& f, double tol) {
  Verdict v;
  try {
    const KreinLanger kl = class_index(f);
    v.index = kl.index;
    v.boundary_sup = kl.boundary_sup;
  } catch (const Error& e) {
    v.class_error = e.what();
  }
  for (std::size_t i = 0; i < problem.nodes.size(); ++i) {
    const NodeData& node = problem.nodes[i];
    if (f.has_pole_at(node.z)) {
      v.analytic_at_nodes = false;
      v.poles_at_nodes.push_back(i);
      continue;
    }
    const Jet jet = ratfun_jet(f, node.z, node.multiplicity());
    for (int j = 0; j < node.multiplicity(); ++j) {
      ConditionResidual r;
      r.node = i;
      r.order = j;
      r.value = jet.coeffs[static_cast<std::size_t>(j)];
      r.target = node.values[static_cast<std::size_t>(j)];
      r.residual = std::abs(r.value - r.target);
      v.max_residual = std::max(v.max_residual, r.residual);
      v.residuals.push_back(r);
    }
  }
  v.pass = v.index && *v.index == problem.kappa && v.analytic_at_nodes && v.max_residual <= tol;
  return v;
}

ClassifyReport classify_parameter(const Theta& theta, const ParamPair& param, const InterpProblem& problem,
                                  const ClassifyOptions& opts) {
  const LftResult lft = lft_apply(theta, param);
  ClassifyReport rep;
  rep.f = lft.f;
  rep.borderline = lft.reduce_info.borderline;
  rep.kappa_tilde = param.B.degree();

  const int vdeg = lft.V.num.degree();
  for (std::size_t i = 0; i < problem.nodes.size(); ++i) {
    const NodeData& node = problem.nodes[i];
    const int ni = node.multiplicity();
    int mi = -1;
    for (const int len : {ni + 3, vdeg + 1}) {
      const Jet jet = taylor_jet(lft.V, node.z, std::max(len, 1));
      double big = 0.0;
      for (const cplx c : jet.coeffs) big = std::max(big, std::abs(c));
      const double thr = opts.zero_tol * (1.0 + big);
      for (std::size_t j = 0; j < jet.coeffs.size(); ++j)
        if (std::abs(jet.coeffs[j]) > thr) {
          mi = static_cast<int>(j);
          break;
        }
      if (mi >= 0) break;
    }
    if (mi < 0) throw Error(ErrorCode::DegenerateDenominator, "V vanishes to every computed order");
    rep.m.push_back(mi);
    rep.gamma_m += std::min(mi, ni);
    if (ni > mi) rep.I_plus.push_back(i);
    else if (ni < mi) rep.I_minus.push_back(i);
    else rep.I_zero.push_back(i);
    int pole_order = 0;
    for (const cplx a : param.B.zeros())
      if (std::abs(a - node.z) <= 1e-8 * (1.0 + std::abs(node.z))) ++pole_order;
    if (pole_order > 1 && ni > 1) rep.higher_order_pole = true;
  }
  rep.predicted_index = rep.kappa_tilde + theta.pick_inertia.n_minus - rep.gamma_m;

  for (const std::size_t i : rep.I_plus) {
    const NodeData& node = problem.nodes[i];
    RetainedCondition rc{i, {}};
    const int keep = node.multiplicity() - rep.m[i];
    for (int j = 0; j < keep; ++j) rc.orders.push_back(j);
    if (rep.f.has_pole_at(node.z))
      throw Error(ErrorCode::ValidationMismatch, "realized function has a pole at node " + std::to_string(i));
    const Jet jet = ratfun_jet(rep.f, node.z, keep);
    for (int j = 0; j < keep; ++j)
      rep.retained_residual = std::max(
          rep.retained_residual,
          std::abs(jet.coeffs[static_cast<std::size_t>(j)] - node.values[static_cast<std::size_t>(j)]));
    rep.retained_conditions.push_back(std::move(rc));
  }
  if (rep.retained_residual > opts.verify_tol)
    throw Error(ErrorCode::ValidationMismatch, "retained conditions fail by " + std::to_string(rep.retained_residual));

  for (const std::size_t i : rep.I_minus) {
    const NodeData& node = problem.nodes[i];
    const int order = zero_order_at(rep.f.den(), node.z, opts.zero_tol);
    rep.pole_orders.push_back(order);
    if (order != rep.m[i] - node.multiplicity())
      throw Error(ErrorCode::ValidationMismatch, "pole order at node " + std::to_string(i) + " is " +
                                                     std::to_string(order) + ", expected " +
                                                     std::to_string(rep.m[i] - node.multiplicity()));
  }

  try {
    rep.realized_index = class_index(rep.f).index;
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationMismatch, std::string("realized function is not generalized Schur: ") + e.what());
  }
  if (rep.realized_index != rep.predicted_index)
    throw Error(ErrorCode::ValidationMismatch, "realized index " + std::to_string(rep.realized_index) +
                                                   " differs from predicted " + std::to_string(rep.predicted_index));
  return rep;
}

}  // namespace nevpick
