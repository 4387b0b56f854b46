#pragma once

#include <span>

#include "nevpick/hermlin.hpp"
#include "nevpick/pick.hpp"
#include "nevpick/problem.hpp"
#include "nevpick/schurclass.hpp"

namespace nevpick {

/// Stacked Taylor jets of f at the nodes. Throws PoleAtNode.
CVector moment_vector(const RatFun& f, const InterpProblem& problem);

/// The same vector as the contour integral of (xi - T)^{-1} E f(xi) dxi / (2 pi i)
/// over the analytic cycle built from `contour`.
CVector moment_vector_quadrature(const RatFun& f, const InterpProblem& problem, const ContourSpec& contour);

/// Circle about 0 whose radius is the geometric midpoint of the widest ratio
/// gap among the largest node modulus, the pole moduli beyond it and 1.
/// Poles left inside are cut out by the holes of analytic_cycle.
ContourSpec default_pick_contour(const RatFun& f, const InterpProblem& problem, int points = 128);

/// Double contour quadrature of the kernel section
///   sum_a sum_b w_a conj(w_b) (xi_a - T)^{-1} E K_f(xi_a, xi_b) E* (conj(xi_b) - T*)^{-1},
/// symmetrized. Poles of f inside the circle are excluded by small holes.
HermitianMatrix schwarz_pick_matrix(const RatFun& f, const InterpProblem& problem, const ContourSpec& contour);

/// Negative eigenvalues of the Pick matrix bordered by the columns
/// (I - conj(zeta) T)^{-1} (E - C conj f(zeta)) and the Gram matrix of K_f on the grid.
NegSquaresEstimate big_kernel_negsquares(const PickSystem& ps, const RatFun& f, std::span<const cplx> grid,
                                         double tol = 1e-9);

}  // namespace nevpick
