#include "nevpick/kernels.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <string>

#include "nevpick/error.hpp"

namespace nevpick {

namespace {

/// (xi I - T)^{-1} E
CVector cauchy_column(const SystemMatrices& sys, cplx xi) {
  const Eigen::Index n = sys.size();
  const CMatrix A = xi * CMatrix::Identity(n, n) - sys.T;
  return Eigen::PartialPivLU<CMatrix>(A).solve(sys.E);
}

}  // namespace

CVector moment_vector(const RatFun& f, const InterpProblem& problem) {
  problem.validate();
  CVector m(problem.total_size());
  Eigen::Index off = 0;
  for (std::size_t i = 0; i < problem.nodes.size(); ++i) {
    const NodeData& node = problem.nodes[i];
    if (f.has_pole_at(node.z)) throw Error(ErrorCode::PoleAtNode, "f has a pole at node " + std::to_string(i));
    const Jet jet = ratfun_jet(f, node.z, node.multiplicity());
    for (const cplx c : jet.coeffs) m(off++) = c;
  }
  return m;
}

CVector moment_vector_quadrature(const RatFun& f, const InterpProblem& problem, const ContourSpec& contour) {
  const SystemMatrices sys = build_system(problem);
  for (std::size_t i = 0; i < problem.nodes.size(); ++i)
    if (f.has_pole_at(problem.nodes[i].z))
      throw Error(ErrorCode::PoleAtNode, "f has a pole at node " + std::to_string(i));
  const std::vector<cplx> nodes = problem.node_points();
  const std::vector<QuadNode> quad = cycle_quadrature(analytic_cycle(f, nodes, contour));
  CVector m = CVector::Zero(sys.size());
  for (const QuadNode& q : quad) m += q.weight * f(q.point) * cauchy_column(sys, q.point);
  return m;
}

ContourSpec default_pick_contour(const RatFun& f, const InterpProblem& problem, int points) {
  const double inner = std::max(problem.max_node_modulus(), 0.05);
  std::vector<double> moduli{inner, 1.0};
  if (f.den().degree() >= 1)
    for (const Root& r : f.poles()) {
      const double m = std::abs(r.value);
      if (m > inner && m < 1.0) moduli.push_back(m);
    }
  std::sort(moduli.begin(), moduli.end());
  double lo = inner, hi = 1.0, best = 0.0;
  for (std::size_t i = 0; i + 1 < moduli.size(); ++i) {
    const double ratio = moduli[i + 1] / moduli[i];
    if (ratio > best) {
      best = ratio;
      lo = moduli[i];
      hi = moduli[i + 1];
    }
  }
  return {0.0, std::sqrt(lo * hi), points};
}

HermitianMatrix schwarz_pick_matrix(const RatFun& f, const InterpProblem& problem, const ContourSpec& contour) {
  const SystemMatrices sys = build_system(problem);
  const std::vector<cplx> nodes = problem.node_points();
  const std::vector<QuadNode> quad = cycle_quadrature(analytic_cycle(f, nodes, contour));
  const auto nq = static_cast<Eigen::Index>(quad.size());
  CMatrix V(sys.size(), nq);
  std::vector<cplx> fv(quad.size());
  for (Eigen::Index a = 0; a < nq; ++a) {
    const QuadNode& q = quad[static_cast<std::size_t>(a)];
    V.col(a) = q.weight * cauchy_column(sys, q.point);
    fv[static_cast<std::size_t>(a)] = f(q.point);
  }
  CMatrix K(nq, nq);
  for (Eigen::Index a = 0; a < nq; ++a)
    for (Eigen::Index b = 0; b < nq; ++b) {
      const auto ia = static_cast<std::size_t>(a);
      const auto ib = static_cast<std::size_t>(b);
      K(a, b) = (1.0 - fv[ia] * std::conj(fv[ib])) / (1.0 - quad[ia].point * std::conj(quad[ib].point));
    }
  return HermitianMatrix::symmetrize(V * K * V.adjoint());
}

NegSquaresEstimate big_kernel_negsquares(const PickSystem& ps, const RatFun& f, std::span<const cplx> grid,
                                         double tol) {
  check_grid(grid);
  const SystemMatrices& sys = ps.sys;
  const Eigen::Index n = sys.size();
  const auto g = static_cast<Eigen::Index>(grid.size());
  std::vector<cplx> fv(grid.size());
  for (std::size_t q = 0; q < grid.size(); ++q) {
    if (f.has_pole_at(grid[q])) throw Error(ErrorCode::PoleOnGrid, "grid point is a pole of f");
    fv[q] = f(grid[q]);
  }
  CMatrix M(n + g, n + g);
  M.topLeftCorner(n, n) = ps.P.matrix();
  const CMatrix I = CMatrix::Identity(n, n);
  for (Eigen::Index q = 0; q < g; ++q) {
    const auto iq = static_cast<std::size_t>(q);
    const CVector rhs = sys.E - sys.C * std::conj(fv[iq]);
    const CVector col = Eigen::PartialPivLU<CMatrix>(I - std::conj(grid[iq]) * sys.T).solve(rhs);
    M.block(0, n + q, n, 1) = col;
    M.block(n + q, 0, 1, n) = col.adjoint();
    for (Eigen::Index p = 0; p < g; ++p) {
      const auto ip = static_cast<std::size_t>(p);
      M(n + p, n + q) = (1.0 - fv[ip] * std::conj(fv[iq])) / (1.0 - grid[ip] * std::conj(grid[iq]));
    }
  }
  const HermitianMatrix H = HermitianMatrix::symmetrize(M);
  NegSquaresEstimate est;
  est.threshold = tol * H.norm();
  est.eigenvalues = hermitian_eigenvalues(H);
  for (const double ev : est.eigenvalues)
    if (ev < -est.threshold) ++est.count;
  est.grid.assign(grid.begin(), grid.end());
  return est;
}

}  // namespace nevpick
