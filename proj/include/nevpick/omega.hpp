#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nevpick/divisor.hpp"
#include "nevpick/kernels.hpp"
#include "nevpick/problem.hpp"

namespace nevpick {

struct OmegaClause {
  bool holds = false;
  std::string note;
};

struct OmegaReport {
  int kappa = 0;
  int sq_minus = 0;
  /// |f| <= 1 on the circle and (f - phi) / theta has at most kappa poles.
  OmegaClause divisor;
  std::optional<int> h_disk_poles;
  double f_boundary_sup = 0.0;
  /// The bordered kernel has at most kappa negative squares on the grid.
  OmegaClause kernel;
  std::optional<NegSquaresEstimate> kernel_estimate;
  /// The inverse parameter E is contractive on the circle with at most
  /// kappa - sq_-(P) poles.
  OmegaClause parameter;
  std::optional<RatFun> e;
  std::optional<int> e_index;

  bool agree() const noexcept { return divisor.holds == kernel.holds && kernel.holds == parameter.holds; }
  bool member() const noexcept { return agree() && divisor.holds; }
};

struct OmegaOptions {
  /// Empty: default_kernel_grid(f).
  std::vector<cplx> grid;
  double eig_tol = 1e-9;
  double contractive_tol = 1e-9;
};

/// Three independent membership tests for the set of functions phi + theta H^infty_kappa
/// that are bounded by one on the circle. Throws SingularPick, or InvalidInput when
/// kappa < sq_-(P).
OmegaReport omega_check(const InterpProblem& problem, int kappa, const RatFun& f, const OmegaOptions& opts = {});

}  // namespace nevpick
