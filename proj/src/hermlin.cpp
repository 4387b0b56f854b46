#include "nevpick/hermlin.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <limits>
#include <numeric>
#include <string>

#include "nevpick/error.hpp"

namespace nevpick {

Eigen::Index SystemMatrices::block_offset(std::size_t i) const noexcept {
  Eigen::Index off = 0;
  for (std::size_t k = 0; k < i; ++k) off += block_sizes[k];
  return off;
}

HermitianMatrix::HermitianMatrix(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotHermitian, "matrix is not square");
  const double asym = (m - m.adjoint()).norm();
  if (asym > tol * std::max(1.0, m.norm()))
    throw Error(ErrorCode::NotHermitian, "asymmetry " + std::to_string(asym) + " exceeds tolerance");
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::symmetrize(const CMatrix& m) {
  HermitianMatrix h;
  h.m_ = 0.5 * (m + m.adjoint());
  return h;
}

SystemMatrices build_system(const InterpProblem& problem) {
  problem.validate();
  const Eigen::Index n = problem.total_size();
  SystemMatrices sys;
  sys.T = CMatrix::Zero(n, n);
  sys.E = CVector::Zero(n);
  sys.C = CVector::Zero(n);
  Eigen::Index off = 0;
  for (const auto& node : problem.nodes) {
    const Eigen::Index ni = node.multiplicity();
    for (Eigen::Index r = 0; r < ni; ++r) {
      sys.T(off + r, off + r) = node.z;
      if (r + 1 < ni) sys.T(off + r + 1, off + r) = 1.0;
      sys.C(off + r) = node.values[static_cast<std::size_t>(r)];
    }
    sys.E(off) = 1.0;
    sys.nodes.push_back(node.z);
    sys.block_sizes.push_back(static_cast<int>(ni));
    off += ni;
  }
  return sys;
}

CMatrix stein_solve_general(const CMatrix& A, const CMatrix& Q) {
  const Eigen::Index n = A.rows();
  // Column-major vec(A X A*) = (conj(A) kron A) vec(X).
  CMatrix K = CMatrix::Identity(n * n, n * n);
  const CMatrix Ac = A.conjugate();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (Ac(i, j) == cplx{}) continue;
      K.block(i * n, j * n, n, n) -= Ac(i, j) * A;
    }
  Eigen::PartialPivLU<CMatrix> lu(K);
  const double rcond = lu.rcond();
  if (!(rcond > 1e3 * std::numeric_limits<double>::epsilon()))
    throw Error(ErrorCode::SingularSystem, "Stein operator is numerically singular");
  const CVector q = Eigen::Map<const CVector>(Q.data(), n * n);
  const CVector x = lu.solve(q);
  return Eigen::Map<const CMatrix>(x.data(), n, n);
}

HermitianMatrix stein_solve(const SystemMatrices& sys, double* asymmetry) {
  const CMatrix rhs = sys.E * sys.E.adjoint() - sys.C * sys.C.adjoint();
  const CMatrix P = stein_solve_general(sys.T, rhs);
  if (asymmetry) *asymmetry = (P - P.adjoint()).norm();
  return HermitianMatrix::symmetrize(P);
}

HermitianMatrix stein_series(const SystemMatrices& sys, double tol) {
  CMatrix term = sys.E * sys.E.adjoint() - sys.C * sys.C.adjoint();
  CMatrix sum = term;
  const CMatrix Tadj = sys.T.adjoint();
  double last = term.norm();
  int stalled = 0;
  constexpr int kMaxTerms = 1'000'000;
  for (int j = 1; j < kMaxTerms && last >= tol; ++j) {
    term = sys.T * term * Tadj;
    sum += term;
    const double nrm = term.norm();
    stalled = nrm < last ? 0 : stalled + 1;
    if (stalled >= 50) throw Error(ErrorCode::NoConvergence, "Stein series terms stopped decreasing");
    last = nrm;
  }
  if (last >= tol) throw Error(ErrorCode::NoConvergence, "Stein series exceeded its term budget");
  return HermitianMatrix::symmetrize(sum);
}

double default_eig_tol(const HermitianMatrix& h) { return 1e-9 * h.norm(); }

Eigen::VectorXd hermitian_eigenvalues(const HermitianMatrix& h) {
  if (h.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver failed");
  return es.eigenvalues();
}

Inertia inertia(const HermitianMatrix& h, std::optional<double> tol) {
  const double t = tol.value_or(default_eig_tol(h));
  Inertia in;
  for (const double ev : hermitian_eigenvalues(h)) {
    if (ev > t) ++in.n_plus;
    else if (ev < -t) ++in.n_minus;
    else ++in.n_zero;
  }
  return in;
}

Inertia inertia(const CMatrix& h, std::optional<double> tol) { return inertia(HermitianMatrix(h), tol); }

}  // namespace nevpick
