#pragma once

#include <utility>
#include <vector>

#include "nevpick/problem.hpp"
#include "nevpick/schurclass.hpp"

namespace nevpick {

/// Minimal-degree polynomial with phi^{(j)}(z_i) / j! = f_{i,j}, by Newton
/// divided differences over the nodes repeated by multiplicity.
Poly hermite_phi(const InterpProblem& problem);

/// prod ((z - z_i) / (1 - z conj z_i))^{n_i}
Blaschke theta_blaschke(const InterpProblem& problem);

struct DivisorRemainder {
  Poly phi;
  Blaschke theta;
  /// (f - phi) / theta, reduced.
  RatFun h;
  int h_disk_poles = 0;
  double h_boundary_sup = 0.0;
  /// (node index, pole order) for every node at which h has a pole.
  std::vector<std::pair<std::size_t, int>> h_poles_at_nodes;
  /// Relative coefficient residual of (phi + theta h - f) cleared of denominators.
  double reconstruction_gap = 0.0;
};

/// f = phi + theta h. Throws PoleOnBoundary when f has a pole on the circle
/// and NotInHInfinity when h does.
DivisorRemainder divisor_remainder(const InterpProblem& problem, const RatFun& f);

}  // namespace nevpick
