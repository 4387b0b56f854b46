#include "nevpick/omega.hpp"

#include <string>

#include "nevpick/error.hpp"
#include "nevpick/lft.hpp"
#include "nevpick/theta.hpp"

namespace nevpick {

OmegaReport omega_check(const InterpProblem& problem, int kappa, const RatFun& f, const OmegaOptions& opts) {
  const PickSystem ps = pick_system(problem);
  OmegaReport rep;
  rep.kappa = kappa;
  rep.sq_minus = ps.inertia.n_minus;
  if (kappa < rep.sq_minus)
    throw Error(ErrorCode::InvalidInput, "kappa " + std::to_string(kappa) + " is below sq-(P) = " +
                                             std::to_string(rep.sq_minus));

  try {
    rep.f_boundary_sup = boundary_sup(f);
    const DivisorRemainder dr = divisor_remainder(problem, f);
    rep.h_disk_poles = dr.h_disk_poles;
    const bool bounded = rep.f_boundary_sup <= 1.0 + opts.contractive_tol;
    rep.divisor.holds = bounded && dr.h_disk_poles <= kappa;
    if (!bounded) rep.divisor.note = "sup |f| on the circle exceeds 1";
    else if (!rep.divisor.holds) rep.divisor.note = "h has more than kappa poles";
  } catch (const Error& e) {
    if (is_internal(e.code())) throw;
    rep.divisor.note = e.what();
  }

  try {
    const std::vector<cplx> grid = opts.grid.empty() ? default_kernel_grid(f) : opts.grid;
    rep.kernel_estimate = big_kernel_negsquares(ps, f, grid, opts.eig_tol);
    rep.kernel.holds = rep.kernel_estimate->count <= kappa;
    if (!rep.kernel.holds) rep.kernel.note = "kernel has more than kappa negative squares";
  } catch (const Error& e) {
    if (is_internal(e.code())) throw;
    rep.kernel.note = e.what();
  }

  try {
    const Theta theta = build_theta(ps);
    rep.e = lft_invert(theta, f);
    const KreinLanger kl = class_index(*rep.e, opts.contractive_tol);
    rep.e_index = kl.index;
    rep.parameter.holds = kl.index <= kappa - rep.sq_minus;
    if (!rep.parameter.holds) rep.parameter.note = "parameter has more than kappa - sq-(P) poles";
  } catch (const Error& e) {
    if (is_internal(e.code())) throw;
    rep.parameter.note = e.what();
  }
  return rep;
}

}  // namespace nevpick
