#pragma once

#include <optional>

#include "nevpick/hermlin.hpp"
#include "nevpick/problem.hpp"

namespace nevpick {

struct PickSystem {
  SystemMatrices sys;
  HermitianMatrix P;
  Inertia inertia;
  /// Present iff inertia.n_zero == 0.
  std::optional<CMatrix> P_inv;
  /// ||P - T P T* - (E E* - C C*)||_F.
  double stein_residual = 0.0;
  /// ||P - series||_F against the truncated series.
  double series_gap = 0.0;

  bool invertible() const noexcept { return P_inv.has_value(); }
  int min_kappa() const noexcept { return inertia.n_minus; }
};

struct PickOptions {
  /// Eigenvalues within eig_rel_tol * ||P||_F of zero count as zero.
  double eig_rel_tol = 1e-9;
  double series_tol = 1e-14;
};

/// Builds and solves the system without refusing a singular Pick matrix.
/// Throws SelfCheckFailed when the direct and series solutions disagree.
PickSystem analyze_pick(const InterpProblem& problem, const PickOptions& opts = {});

/// As analyze_pick, but throws SingularPick when P has a numerically zero eigenvalue.
PickSystem pick_system(const InterpProblem& problem, const PickOptions& opts = {});

}  // namespace nevpick
