#pragma once

#include <Eigen/Core>
#include <array>
#include <string>
#include <vector>

#include "nevpick/pick.hpp"
#include "nevpick/ratmat.hpp"

namespace nevpick {

/// Signature matrix diag(1, -1).
Eigen::Matrix2cd signature_j();

/// Coefficient matrix
///   Theta(z) = I + (z - 1) [E*; C*] (I - z T*)^{-1} P^{-1} (I - T)^{-1} [E, -C],
/// kept in structured form and as four rational entries over the common
/// denominator d(z) = prod (1 - z conj(z_i))^{n_i}.
struct Theta {
  SystemMatrices sys;
  CMatrix P_inv;
  Inertia pick_inertia;
  /// P^{-1} (I - T)^{-1} [E, -C]
  CMatrix W;
  /// Unreduced entry numerators over common_den, row-major.
  std::array<Poly, 4> numerators;
  Poly common_den;
  RatMat2 rational;
  /// prod ((z - z_i)(1 - conj z_i) / ((1 - z conj z_i)(1 - z_i)))^{n_i}
  RatFun det_closed_form;

  /// Structured evaluation by a linear solve at z.
  Eigen::Matrix2cd eval(cplx z) const;
  const Poly& numerator(int i, int j) const { return numerators[static_cast<std::size_t>(2 * i + j)]; }
  /// Reflections 1/conj(z_i) of the nonzero nodes: the only possible poles.
  std::vector<cplx> reflected_nodes() const;
};

/// Throws SingularPick when the Pick matrix is not invertible.
Theta build_theta(const PickSystem& ps);

RatFun theta_det_closed_form(const SystemMatrices& sys);

struct ThetaCheckReport {
  double structured_vs_rational = 0.0;
  double det_gap = 0.0;
  /// max ||Theta(t)* J Theta(t) - J||_F / max(1, ||Theta(t)||_F^2) over |t| = 1
  double j_unitarity = 0.0;
  /// max ||lhs - rhs||_F / (1 + ||rhs||_F) of the reproducing kernel identity
  double kernel_identity = 0.0;
  int zeros_theta11 = -1;
  int zeros_theta22 = -1;
  int sq_plus = 0;
  int sq_minus = 0;
  /// min |Theta21| + |Theta22| over the nodes and a sunflower grid of the disk
  double min_second_row = 0.0;
  /// Largest principal-part coefficient of (zI - T)^{-1}[E, -C] Theta(z) at the nodes.
  double node_residue = 0.0;
  std::vector<std::string> failures;

  bool pass() const noexcept { return failures.empty(); }
};

struct ThetaCheckOptions {
  int boundary_samples = 64;
  int kernel_pairs = 16;
  int disk_grid = 100;
  int eval_samples = 32;
  int det_samples = 16;
  double unitarity_tol = 1e-9;
  double kernel_tol = 1e-8;
  double row_tol = 1e-6;
  double residue_tol = 1e-8;
  double agreement_tol = 1e-9;
};

ThetaCheckReport theta_selfcheck_report(const Theta& theta, const ThetaCheckOptions& opts = {});
/// Throws SelfCheckFailed naming the first failing clause.
ThetaCheckReport theta_selfcheck(const Theta& theta, const ThetaCheckOptions& opts = {});

}  // namespace nevpick
