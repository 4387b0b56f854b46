#include "nevpick/pick.hpp"

#include <Eigen/LU>
#include <string>

#include "nevpick/error.hpp"

namespace nevpick {

PickSystem analyze_pick(const InterpProblem& problem, const PickOptions& opts) {
  PickSystem ps;
  ps.sys = build_system(problem);
  double asym = 0.0;
  ps.P = stein_solve(ps.sys, &asym);
  const CMatrix& P = ps.P.matrix();
  const CMatrix& T = ps.sys.T;
  const CMatrix rhs = ps.sys.E * ps.sys.E.adjoint() - ps.sys.C * ps.sys.C.adjoint();
  ps.stein_residual = (P - T * P * T.adjoint() - rhs).norm();
  if (ps.stein_residual > 1e-10 * (1.0 + P.norm()) || asym > 1e-10 * (1.0 + P.norm()))
    throw Error(ErrorCode::SelfCheckFailed, "Stein residual " + std::to_string(ps.stein_residual));
  ps.series_gap = (P - stein_series(ps.sys, opts.series_tol).matrix()).norm();
  if (ps.series_gap > 1e-8)
    throw Error(ErrorCode::SelfCheckFailed, "direct and series Pick matrices differ by " + std::to_string(ps.series_gap));
  ps.inertia = inertia(ps.P, opts.eig_rel_tol * ps.P.norm());
  if (ps.inertia.n_zero == 0) {
    const Eigen::FullPivLU<CMatrix> lu(P);
    CMatrix inv = lu.inverse();
    const double gap = (inv * P - CMatrix::Identity(P.rows(), P.cols())).norm();
    if (gap > 1e-8) throw Error(ErrorCode::SelfCheckFailed, "Pick inverse residual " + std::to_string(gap));
    ps.P_inv = std::move(inv);
  }
  return ps;
}

PickSystem pick_system(const InterpProblem& problem, const PickOptions& opts) {
  PickSystem ps = analyze_pick(problem, opts);
  if (!ps.invertible())
    throw Error(ErrorCode::SingularPick,
                "Pick matrix has " + std::to_string(ps.inertia.n_zero) + " numerically zero eigenvalue(s)");
  return ps;
}

}  // namespace nevpick
