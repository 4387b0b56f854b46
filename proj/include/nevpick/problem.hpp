#pragma once

#include <vector>

#include "nevpick/poly.hpp"

namespace nevpick {

/// One interpolation node: f^{(j)}(z)/j! = values[j] for j < values.size().
struct NodeData {
  cplx z;
  std::vector<cplx> values;

  int multiplicity() const noexcept { return static_cast<int>(values.size()); }
};

/// Data of the interpolation problem in the class S_kappa.
struct InterpProblem {
  std::vector<NodeData> nodes;
  int kappa = 0;

  /// |n| = sum of multiplicities.
  int total_size() const noexcept;
  std::vector<cplx> node_points() const;
  /// Node points repeated by multiplicity.
  std::vector<cplx> node_points_with_multiplicity() const;
  double max_node_modulus() const noexcept;

  /// Throws NodeOutsideDisk, DuplicateNode or ValueCountMismatch.
  void validate() const;
};

}  // namespace nevpick
