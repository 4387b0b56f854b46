#include "nevpick/divisor.hpp"

#include <algorithm>

#include "nevpick/error.hpp"

namespace nevpick {

Poly hermite_phi(const InterpProblem& problem) {
  problem.validate();
  std::vector<cplx> x;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < problem.nodes.size(); ++i)
    for (int j = 0; j < problem.nodes[i].multiplicity(); ++j) {
      x.push_back(problem.nodes[i].z);
      owner.push_back(i);
    }
  const std::size_t n = x.size();
  // column holds f[x_a, ..., x_{a+len}] for the current len.
  std::vector<cplx> column(n);
  for (std::size_t a = 0; a < n; ++a) column[a] = problem.nodes[owner[a]].values[0];
  std::vector<cplx> newton{column[0]};
  for (std::size_t len = 1; len < n; ++len) {
    for (std::size_t a = 0; a + len < n; ++a) {
      const std::size_t b = a + len;
      if (owner[a] == owner[b])
        column[a] = problem.nodes[owner[a]].values[len];
      else
        column[a] = (column[a + 1] - column[a]) / (x[b] - x[a]);
    }
    newton.push_back(column[0]);
  }
  Poly phi = Poly::constant(newton.back());
  for (std::size_t k = n - 1; k-- > 0;) phi = phi * Poly::linear_factor(x[k]) + Poly::constant(newton[k]);
  return phi;
}

Blaschke theta_blaschke(const InterpProblem& problem) {
  problem.validate();
  return Blaschke(problem.node_points_with_multiplicity());
}

DivisorRemainder divisor_remainder(const InterpProblem& problem, const RatFun& f) {
  DivisorRemainder dr;
  poles_in_disk(f);
  dr.phi = hermite_phi(problem);
  dr.theta = theta_blaschke(problem);
  const RatFun th = dr.theta.to_ratfun();
  const Poly top = f.num() - dr.phi * f.den();
  const double scale = f.num().max_abs_coeff() + (dr.phi.is_zero() ? 0.0 : (dr.phi * f.den()).max_abs_coeff());
  if (!top.is_zero() && top.max_abs_coeff() > 1e-13 * scale) {
    // Only the nodes and their reflections can carry structural common roots;
    // a generic reduce would also merge genuine near pole-zero pairs of h.
    std::vector<cplx> pts = problem.node_points();
    for (const cplx z : problem.node_points())
      if (z != cplx{}) pts.push_back(1.0 / std::conj(z));
    const PolyQuotient q = cancel_common_roots_at({top * th.den(), f.den() * th.num()}, pts);
    dr.h = RatFun::from_coprime(q.num, q.den);
  }
  try {
    dr.h_disk_poles = poles_in_disk(dr.h);
    dr.h_boundary_sup = boundary_sup(dr.h);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PoleOnBoundary) throw Error(ErrorCode::NotInHInfinity, "h has a pole on the circle");
    throw;
  }
  for (std::size_t i = 0; i < problem.nodes.size(); ++i)
    if (dr.h.has_pole_at(problem.nodes[i].z))
      dr.h_poles_at_nodes.emplace_back(i, zero_order_at(dr.h.den(), problem.nodes[i].z));

  // (phi * th_d * h_d + th_n * h_n) * f_d - f_n * th_d * h_d
  const Poly common = th.den() * dr.h.den();
  const Poly lhs = (dr.phi * common + th.num() * dr.h.num()) * f.den();
  const Poly rhs = f.num() * common;
  const double sc = std::max(lhs.max_abs_coeff(), rhs.max_abs_coeff());
  dr.reconstruction_gap = sc == 0.0 ? 0.0 : (lhs - rhs).max_abs_coeff() / sc;
  return dr;
}

}  // namespace nevpick
