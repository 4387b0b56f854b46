#include "nevpick/theta.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "nevpick/error.hpp"
#include "nevpick/schurclass.hpp"

namespace nevpick {

namespace {

Poly pow_poly(const Poly& p, int k) {
  Poly r = Poly::constant(1.0);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

/// Zeroes coefficients at rounding level relative to `scale`.
Poly chop(const Poly& p, double scale) {
  std::vector<cplx> c = p.coeffs();
  const double thr = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  for (cplx& x : c)
    if (std::abs(x) <= thr) x = 0.0;
  return Poly(std::move(c));
}

CMatrix stacked_g(const SystemMatrices& sys) {
  CMatrix G(sys.size(), 2);
  G.col(0) = sys.E;
  G.col(1) = sys.C;
  return G;
}

CMatrix stacked_gj(const SystemMatrices& sys) {
  CMatrix G(sys.size(), 2);
  G.col(0) = sys.E;
  G.col(1) = -sys.C;
  return G;
}

cplx random_disk_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

}  // namespace

Eigen::Matrix2cd signature_j() {
  Eigen::Matrix2cd J = Eigen::Matrix2cd::Identity();
  J(1, 1) = -1.0;
  return J;
}

std::vector<cplx> Theta::reflected_nodes() const {
  std::vector<cplx> r;
  for (const cplx z : sys.nodes)
    if (z != cplx{}) r.push_back(1.0 / std::conj(z));
  return r;
}

Eigen::Matrix2cd Theta::eval(cplx z) const {
  const Eigen::Index n = sys.size();
  const CMatrix A = CMatrix::Identity(n, n) - z * sys.T.adjoint();
  const CMatrix X = Eigen::PartialPivLU<CMatrix>(A).solve(W);
  return Eigen::Matrix2cd::Identity() + (z - 1.0) * stacked_g(sys).adjoint() * X;
}

RatFun theta_det_closed_form(const SystemMatrices& sys) {
  Poly num = Poly::constant(1.0);
  Poly den = Poly::constant(1.0);
  for (std::size_t i = 0; i < sys.nodes.size(); ++i) {
    const cplx z = sys.nodes[i];
    const Poly top = Poly::linear_factor(z) * (1.0 - std::conj(z));
    const Poly bottom = Poly{1.0, -std::conj(z)} * (1.0 - z);
    num = num * pow_poly(top, sys.block_sizes[i]);
    den = den * pow_poly(bottom, sys.block_sizes[i]);
  }
  return RatFun::from_coprime(num, den);
}

Theta build_theta(const PickSystem& ps) {
  if (!ps.invertible()) throw Error(ErrorCode::SingularPick, "Pick matrix is singular");
  Theta th;
  th.sys = ps.sys;
  th.P_inv = *ps.P_inv;
  th.pick_inertia = ps.inertia;
  const SystemMatrices& sys = th.sys;
  const Eigen::Index n = sys.size();
  const CMatrix IT = CMatrix::Identity(n, n) - sys.T;
  th.W = th.P_inv * Eigen::PartialPivLU<CMatrix>(IT).solve(stacked_gj(sys));
  const CMatrix G = stacked_g(sys);

  const std::size_t k = sys.nodes.size();
  std::vector<Poly> a(k);
  Poly d = Poly::constant(1.0);
  for (std::size_t i = 0; i < k; ++i) {
    a[i] = Poly{1.0, -std::conj(sys.nodes[i])};
    d = d * pow_poly(a[i], sys.block_sizes[i]);
  }
  th.common_den = d;

  // Block i of (I - z T*)^{-1} has entry z^q / a_i^{q+1} at (r, r + q).
  std::array<Poly, 4> acc;
  for (std::size_t i = 0; i < k; ++i) {
    const int ni = sys.block_sizes[i];
    const Eigen::Index off = sys.block_offset(i);
    Poly others = Poly::constant(1.0);
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) others = others * pow_poly(a[j], sys.block_sizes[j]);
    for (int q = 0; q < ni; ++q) {
      const Poly base = Poly::monomial(q) * pow_poly(a[i], ni - 1 - q) * others;
      for (int ra = 0; ra < 2; ++ra)
        for (int cb = 0; cb < 2; ++cb) {
          cplx s{};
          for (int r = 0; r + q < ni; ++r) s += std::conj(G(off + r, ra)) * th.W(off + r + q, cb);
          if (s != cplx{}) acc[static_cast<std::size_t>(2 * ra + cb)] = acc[static_cast<std::size_t>(2 * ra + cb)] + base * s;
        }
    }
  }
  const Poly zm1{-1.0, 1.0};
  const std::vector<cplx> refl = th.reflected_nodes();
  for (int e = 0; e < 4; ++e) {
    Poly p = zm1 * acc[static_cast<std::size_t>(e)];
    if (e == 0 || e == 3) p = p + d;
    p = chop(p, std::max(p.max_abs_coeff(), d.max_abs_coeff()));
    th.numerators[static_cast<std::size_t>(e)] = p;
    if (p.is_zero()) {
      th.rational.entries[static_cast<std::size_t>(e)] = RatFun();
      continue;
    }
    const PolyQuotient q = cancel_common_roots_at({p, d}, refl);
    th.rational.entries[static_cast<std::size_t>(e)] = RatFun::from_coprime(q.num, q.den);
  }
  th.det_closed_form = theta_det_closed_form(sys);
  return th;
}

ThetaCheckReport theta_selfcheck_report(const Theta& th, const ThetaCheckOptions& opts) {
  ThetaCheckReport rep;
  const Eigen::Matrix2cd J = signature_j();
  const SystemMatrices& sys = th.sys;
  const Eigen::Index n = sys.size();
  std::mt19937_64 rng(0x7e7a5eedULL);

  for (int s = 0; s < opts.eval_samples; ++s) {
    const cplx z = random_disk_point(rng, 0.95);
    const Eigen::Matrix2cd A = th.eval(z);
    const Eigen::Matrix2cd B = th.rational.eval(z);
    rep.structured_vs_rational = std::max(rep.structured_vs_rational, (A - B).norm() / (1.0 + A.norm()));
  }
  if (rep.structured_vs_rational > opts.agreement_tol) rep.failures.emplace_back("structured and rational forms disagree");

  for (int s = 0; s < opts.det_samples; ++s) {
    const cplx z = random_disk_point(rng, 0.95);
    const cplx dr = th.rational.eval(z).determinant();
    const cplx dc = th.det_closed_form(z);
    rep.det_gap = std::max(rep.det_gap, std::abs(dr - dc) / (1.0 + std::abs(dc)));
  }
  if (rep.det_gap > opts.agreement_tol) rep.failures.emplace_back("determinant differs from the closed form");

  for (int s = 0; s < opts.boundary_samples; ++s) {
    const cplx t = std::polar(1.0, 2.0 * std::numbers::pi * (s + 0.5) / opts.boundary_samples);
    const Eigen::Matrix2cd M = th.eval(t);
    const double res = (M.adjoint() * J * M - J).norm() / std::max(1.0, M.squaredNorm());
    rep.j_unitarity = std::max(rep.j_unitarity, res);
  }
  if (rep.j_unitarity > opts.unitarity_tol) rep.failures.emplace_back("J-unitarity on the circle");

  const CMatrix G = stacked_g(sys);
  const CMatrix I = CMatrix::Identity(n, n);
  for (int s = 0; s < opts.kernel_pairs; ++s) {
    const cplx z = random_disk_point(rng, 0.95);
    const cplx w = random_disk_point(rng, 0.95);
    const Eigen::Matrix2cd lhs = (J - th.eval(z) * J * th.eval(w).adjoint()) / (1.0 - z * std::conj(w));
    const CMatrix left = Eigen::PartialPivLU<CMatrix>((I - z * sys.T.adjoint()).adjoint())
                             .solve(G)
                             .adjoint();
    const CMatrix right = Eigen::PartialPivLU<CMatrix>(I - std::conj(w) * sys.T).solve(G);
    const CMatrix rhs = left * th.P_inv * right;
    rep.kernel_identity = std::max(rep.kernel_identity, (lhs - rhs).norm() / (1.0 + rhs.norm()));
  }
  if (rep.kernel_identity > opts.kernel_tol) rep.failures.emplace_back("reproducing kernel identity");

  rep.sq_plus = th.pick_inertia.n_plus;
  rep.sq_minus = th.pick_inertia.n_minus;
  try {
    rep.zeros_theta11 = th.rational(0, 0).is_zero() ? -1 : zeros_in_disk(th.rational(0, 0));
    rep.zeros_theta22 = th.rational(1, 1).is_zero() ? -1 : zeros_in_disk(th.rational(1, 1));
  } catch (const Error&) {
    // leaves -1, reported below
  }
  if (rep.zeros_theta11 != rep.sq_plus) rep.failures.emplace_back("zeros of Theta11 differ from sq+(P)");
  if (rep.zeros_theta22 != rep.sq_minus) rep.failures.emplace_back("zeros of Theta22 differ from sq-(P)");

  std::vector<cplx> pts = sys.nodes;
  const int fill = std::max(0, opts.disk_grid - static_cast<int>(pts.size()));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int j = 0; j < fill; ++j) pts.push_back(std::polar(0.98 * std::sqrt((j + 0.5) / fill), golden * j));
  rep.min_second_row = std::numeric_limits<double>::infinity();
  for (const cplx z : pts) {
    const Eigen::Matrix2cd M = th.eval(z);
    rep.min_second_row = std::min(rep.min_second_row, std::abs(M(1, 0)) + std::abs(M(1, 1)));
  }
  if (!(rep.min_second_row > opts.row_tol)) rep.failures.emplace_back("second row of Theta vanishes");

  const CMatrix GJ = stacked_gj(sys);
  for (std::size_t i = 0; i < sys.nodes.size(); ++i) {
    const int ni = sys.block_sizes[i];
    const Eigen::Index off = sys.block_offset(i);
    std::vector<Eigen::Matrix2cd> jet(static_cast<std::size_t>(ni));
    double jet_scale = 0.0;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        const Jet jt = ratfun_jet(th.rational(r, c), sys.nodes[i], ni);
        for (int m = 0; m < ni; ++m) jet[static_cast<std::size_t>(m)](r, c) = jt.coeffs[static_cast<std::size_t>(m)];
      }
    for (const auto& Jm : jet) jet_scale = std::max(jet_scale, Jm.norm());
    const CMatrix Gi = GJ.middleRows(off, ni);
    CMatrix L = CMatrix::Zero(ni, ni);
    for (int r = 1; r < ni; ++r) L(r, r - 1) = 1.0;
    std::vector<CMatrix> Lpow{CMatrix::Identity(ni, ni)};
    for (int l = 1; l < ni; ++l) Lpow.push_back(L * Lpow.back());
    for (int p = 1; p <= ni; ++p) {
      CMatrix R = CMatrix::Zero(ni, 2);
      for (int l = p - 1; l < ni; ++l) R += Lpow[static_cast<std::size_t>(l)] * Gi * jet[static_cast<std::size_t>(l - p + 1)];
      rep.node_residue = std::max(rep.node_residue, R.norm() / (1.0 + Gi.norm() * jet_scale));
    }
  }
  if (rep.node_residue > opts.residue_tol) rep.failures.emplace_back("principal parts at the nodes do not vanish");
  return rep;
}

ThetaCheckReport theta_selfcheck(const Theta& theta, const ThetaCheckOptions& opts) {
  ThetaCheckReport rep = theta_selfcheck_report(theta, opts);
  if (!rep.pass()) throw Error(ErrorCode::SelfCheckFailed, rep.failures.front());
  return rep;
}

}  // namespace nevpick
