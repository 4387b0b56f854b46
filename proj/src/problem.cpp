#include "nevpick/problem.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nevpick/error.hpp"

namespace nevpick {

int InterpProblem::total_size() const noexcept {
  int n = 0;
  for (const auto& node : nodes) n += node.multiplicity();
  return n;
}

std::vector<cplx> InterpProblem::node_points() const {
  std::vector<cplx> z;
  z.reserve(nodes.size());
  for (const auto& node : nodes) z.push_back(node.z);
  return z;
}

std::vector<cplx> InterpProblem::node_points_with_multiplicity() const {
  std::vector<cplx> z;
  for (const auto& node : nodes) z.insert(z.end(), node.values.size(), node.z);
  return z;
}

double InterpProblem::max_node_modulus() const noexcept {
  double m = 0.0;
  for (const auto& node : nodes) m = std::max(m, std::abs(node.z));
  return m;
}

void InterpProblem::validate() const {
  if (nodes.empty()) throw Error(ErrorCode::ValueCountMismatch, "problem has no nodes");
  if (kappa < 0) throw Error(ErrorCode::InvalidInput, "kappa must be nonnegative");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (!(std::abs(node.z) < 1.0))
      throw Error(ErrorCode::NodeOutsideDisk, "node " + std::to_string(i) + " is not inside the unit disk");
    if (node.values.empty())
      throw Error(ErrorCode::ValueCountMismatch, "node " + std::to_string(i) + " carries no values");
    for (std::size_t j = 0; j < i; ++j)
      if (nodes[j].z == node.z)
        throw Error(ErrorCode::DuplicateNode,
                    "nodes " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
}

}  // namespace nevpick
