#pragma once

#include <Eigen/Core>
#include <functional>
#include <span>
#include <vector>

#include "nevpick/ratfun.hpp"

namespace nevpick {

/// Finite Blaschke product u * prod (z - a) / (1 - z conj(a)).
class Blaschke {
 public:
  /// b == 1
  Blaschke() = default;
  /// Throws ZeroOutsideDisk or NonUnimodularFactor.
  explicit Blaschke(std::vector<cplx> zeros, cplx unimodular_factor = 1.0);

  const std::vector<cplx>& zeros() const noexcept { return zeros_; }
  cplx unimodular_factor() const noexcept { return factor_; }
  int degree() const noexcept { return static_cast<int>(zeros_.size()); }

  cplx operator()(cplx z) const;
  RatFun to_ratfun() const;

 private:
  std::vector<cplx> zeros_;
  cplx factor_ = 1.0;
};

inline Blaschke blaschke_from_zeros(std::vector<cplx> zeros, cplx unimodular_factor = 1.0) {
  return Blaschke(std::move(zeros), unimodular_factor);
}

/// Recognizes a rational function as a finite Blaschke product: all zeros in
/// the disk, denominator equal to the reflected numerator. Throws InvalidInput
/// otherwise.
Blaschke blaschke_from_ratfun(const RatFun& f, double tol = 1e-8);

/// Krein–Langer factorization f = s / b.
struct KreinLanger {
  RatFun s;
  Blaschke b;
  int index = 0;
  double boundary_sup = 0.0;
};

struct BoundaryOptions {
  int grid_points = 512;
  /// Poles and zeros within this distance of the unit circle count as lying on it.
  double circle_tol = 1e-8;
};

/// sup over |t| = 1 of |f(t)|: coarse grid then golden-section refinement
/// around the largest local maxima. Throws PoleOnBoundary.
double boundary_sup(const RatFun& f, const BoundaryOptions& opts = {});

/// Number of poles of f in the open unit disk (with multiplicity).
int poles_in_disk(const RatFun& f, const BoundaryOptions& opts = {});

/// Throws PoleOnBoundary or NotContractive (sup |f| > 1 + tol on the circle).
KreinLanger class_index(const RatFun& f, double tol = 1e-9, const BoundaryOptions& opts = {});

/// Number of zeros of g in the open unit disk. Throws ZeroFunction or ZeroOnBoundary.
int zeros_in_disk(const RatFun& g, const BoundaryOptions& opts = {});

/// Circle for contour quadrature; `points` trapezoid nodes.
struct ContourSpec {
  cplx center = 0.0;
  double radius = 0.9;
  int points = 256;

  /// Throws InvalidInput unless 0 < radius and |center| + radius < 1.
  void validate() const;
};

/// (1/2 pi i) * integral of g'/g over the circle (trapezoid rule, fixed order).
cplx winding_integral(const RatFun& g, const ContourSpec& contour);

/// Rounded winding integral = zeros minus poles inside the circle.
/// Throws SingularOnContour or QuadratureInconclusive (discrepancy > 0.2).
int winding_count(const RatFun& g, const ContourSpec& contour);

/// One positively (+1) or negatively (-1) oriented circle of a cycle.
struct Circle {
  cplx center;
  double radius;
  int orientation;
  int points;
};

/// Quadrature node for integral g(xi) dxi / (2 pi i) ~ sum weight * g(point).
struct QuadNode {
  cplx point;
  cplx weight;
};

/// Cycle whose interior contains every point of `enclose` and no pole of f:
/// the circle of `contour` with a negatively oriented hole around each pole of
/// f it would otherwise enclose. Throws NodesNotEnclosed or ContourThroughPole.
std::vector<Circle> analytic_cycle(const RatFun& f, std::span<const cplx> enclose, const ContourSpec& contour);

std::vector<QuadNode> cycle_quadrature(const std::vector<Circle>& cycle);

using SampledFunction = std::function<cplx(cplx)>;

/// Negative-eigenvalue count of the Gram matrix of K_f on a finite grid.
/// A lower bound for sq_-(K_f); the grid is echoed for provenance.
struct NegSquaresEstimate {
  int count = 0;
  double threshold = 0.0;
  std::vector<cplx> grid;
  Eigen::VectorXd eigenvalues;
};

NegSquaresEstimate kernel_negsquares(const RatFun& f, std::span<const cplx> grid, double tol = 1e-9);
/// Black-box variant; PoleOnGrid is raised for non-finite samples.
NegSquaresEstimate kernel_negsquares(const SampledFunction& f, std::span<const cplx> grid, double tol = 1e-9);

/// Two rings (radii 0.3 and 0.7, 12 points each) rotated away from the poles of f.
std::vector<cplx> default_kernel_grid(const RatFun& f);

/// Throws DegenerateGrid on duplicate points.
void check_grid(std::span<const cplx> grid);

}  // namespace nevpick
