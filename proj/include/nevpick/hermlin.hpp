#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "nevpick/problem.hpp"

namespace nevpick {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Block-Jordan data of an interpolation problem: T is block diagonal with
/// lower-bidiagonal Jordan blocks (z_i on the diagonal, 1 on the
/// subdiagonal), E stacks unit first-row vectors and C stacks the target
/// Taylor coefficients. With this orientation (xi - T)^{-1} E carries the
/// Cauchy kernels 1/(xi - z_i)^{j+1} in block order, so the moments of f
/// are its Taylor coefficients.
struct SystemMatrices {
  CMatrix T;
  CVector E;
  CVector C;
  std::vector<cplx> nodes;
  std::vector<int> block_sizes;

  Eigen::Index size() const noexcept { return T.rows(); }
  /// Row offset of block i.
  Eigen::Index block_offset(std::size_t i) const noexcept;
};

/// Hermitian matrix. Construction from a general matrix checks Hermitian
/// symmetry and stores the symmetrized part.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  /// Throws NotHermitian if ||M - M*|| > tol * max(1, ||M||_F).
  explicit HermitianMatrix(const CMatrix& m, double tol = 1e-12);
  /// (M + M*) / 2, no check.
  static HermitianMatrix symmetrize(const CMatrix& m);

  const CMatrix& matrix() const noexcept { return m_; }
  Eigen::Index size() const noexcept { return m_.rows(); }
  double norm() const { return m_.norm(); }

 private:
  CMatrix m_;
};

struct Inertia {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

SystemMatrices build_system(const InterpProblem& problem);

/// Solves X - A X A* = Q by vectorization and LU with partial pivoting.
/// Throws SingularSystem when I - conj(A) (x) A is numerically singular.
CMatrix stein_solve_general(const CMatrix& A, const CMatrix& Q);

/// Pick matrix: unique solution of P - T P T* = E E* - C C*. The optional
/// asymmetry output receives ||P - P*||_F before symmetrization.
HermitianMatrix stein_solve(const SystemMatrices& sys, double* asymmetry = nullptr);

/// Partial sums of sum_j T^j (E E* - C C*) T*^j, stopped once the Frobenius
/// norm of a term falls below tol. Throws NoConvergence when the term norms
/// fail to decrease for 50 consecutive terms.
HermitianMatrix stein_series(const SystemMatrices& sys, double tol = 1e-14);

/// Default eigenvalue threshold 1e-9 * ||H||_F.
double default_eig_tol(const HermitianMatrix& h);

/// Ascending eigenvalues.
Eigen::VectorXd hermitian_eigenvalues(const HermitianMatrix& h);

/// Counts eigenvalues above tol, below -tol and in between.
Inertia inertia(const HermitianMatrix& h, std::optional<double> tol = std::nullopt);
Inertia inertia(const CMatrix& h, std::optional<double> tol = std::nullopt);

}  // namespace nevpick
