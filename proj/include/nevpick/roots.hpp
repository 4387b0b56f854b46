#pragma once

#include <vector>

#include "nevpick/poly.hpp"

namespace nevpick {

struct Root {
  cplx value;
  int multiplicity = 1;
};

struct RootOptions {
  int max_iterations = 200;
  /// Roots closer than cluster_radius * (1 + |root|) are merged into one
  /// multiple root, started at the cluster mean and polished by Newton steps
  /// on the matching derivative.
  double cluster_radius = 1e-6;
};

/// All roots of p repeated according to multiplicity, unclustered.
/// Aberth–Ehrlich simultaneous iteration; falls back to the eigenvalues of the
/// companion matrix when the iteration budget is exhausted.
/// Throws ZeroPolynomial for p == 0 and NoConvergence if both routes fail.
std::vector<cplx> poly_roots_flat(const Poly& p, const RootOptions& opts = {});

/// Roots of p clustered into distinct values with multiplicities.
std::vector<Root> poly_roots(const Poly& p, const RootOptions& opts = {});

/// Groups a flat root list into clusters (mean position, count).
std::vector<Root> cluster_roots(const std::vector<cplx>& roots, double cluster_radius);

}  // namespace nevpick
