#pragma once

// Shared generators and independent oracles for the test binaries.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "nevpick/lft.hpp"
#include "nevpick/pick.hpp"
#include "nevpick/schurclass.hpp"
#include "nevpick/theta.hpp"

namespace fixtures {

using nevpick::cplx;
using nevpick::InterpProblem;
using nevpick::NodeData;
using nevpick::Poly;
using nevpick::RatFun;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  /// Uniform in the disk of the given radius.
  cplx disk(double radius) {
    return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * std::numbers::pi));
  }
  cplx annulus(double r0, double r1) { return std::polar(uniform(r0, r1), uniform(0.0, 2.0 * std::numbers::pi)); }

 private:
  std::mt19937_64 g_;
};

inline InterpProblem example16(int kappa = 1) {
  InterpProblem p;
  p.nodes = {{0.0, {1.0}}, {0.5, {0.5}}};
  p.kappa = kappa;
  return p;
}

inline RatFun z() { return RatFun::identity(); }

/// (z - a) / (1 - conj(a) z)
inline RatFun mobius_factor(cplx a) { return RatFun::reduce(Poly{-a, 1.0}, Poly{1.0, -std::conj(a)}); }

/// (g + u) / (1 + conj(g) u)
inline RatFun disk_automorphism(cplx g, const RatFun& u) { return (RatFun(g) + u) / (RatFun(1.0) + RatFun(std::conj(g)) * u); }

/// Pick matrix computed from the kernel (1 - a(x) conj b(y)) / (1 - (z_i + x) conj(z_j + y))
/// expanded as a truncated bivariate power series; block (i, j) collects the
/// coefficients of x^p conj(y)^q.
inline Eigen::MatrixXcd pick_oracle(const InterpProblem& p) {
  const int n = p.total_size();
  Eigen::MatrixXcd P(n, n);
  int ro = 0;
  for (const NodeData& a : p.nodes) {
    int co = 0;
    const int na = a.multiplicity();
    for (const NodeData& b : p.nodes) {
      const int nb = b.multiplicity();
      // D = d00 - cb x - za y - x y with cb = conj(z_b), za = z_a.
      const cplx d00 = 1.0 - a.z * std::conj(b.z);
      std::vector<std::vector<cplx>> inv(static_cast<std::size_t>(na), std::vector<cplx>(static_cast<std::size_t>(nb)));
      for (int r = 0; r < na; ++r)
        for (int s = 0; s < nb; ++s) {
          // D * inv = 1 coefficientwise.
          cplx acc = (r == 0 && s == 0) ? 1.0 : 0.0;
          if (r > 0) acc += std::conj(b.z) * inv[r - 1][s];
          if (s > 0) acc += a.z * inv[r][s - 1];
          if (r > 0 && s > 0) acc += inv[r - 1][s - 1];
          inv[r][s] = acc / d00;
        }
      for (int r = 0; r < na; ++r)
        for (int s = 0; s < nb; ++s) {
          cplx v{};
          for (int r2 = 0; r2 <= r; ++r2)
            for (int s2 = 0; s2 <= s; ++s2) {
              const cplx num = (r2 == 0 && s2 == 0 ? 1.0 : 0.0) - a.values[r2] * std::conj(b.values[s2]);
              v += num * inv[r - r2][s - s2];
            }
          P(ro + r, co + s) = v;
        }
      co += nb;
    }
    ro += na;
  }
  return P;
}

/// Taylor coefficients by the Cauchy integral on a circle of radius h about z0.
inline std::vector<cplx> cauchy_jet(const std::function<cplx(cplx)>& f, cplx z0, int m, double h, int points = 64) {
  std::vector<cplx> c(static_cast<std::size_t>(m));
  for (int k = 0; k < points; ++k) {
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi * k / points);
    const cplx v = f(z0 + h * w);
    for (int j = 0; j < m; ++j) c[static_cast<std::size_t>(j)] += v * std::pow(h * w, -j) / static_cast<double>(points);
  }
  return c;
}

/// Random problem with k <= max_nodes, n_i <= max_mult, |z_i| <= max_mod,
/// nodes at least 0.2 apart, and a well-conditioned invertible Pick matrix.
inline InterpProblem random_problem(Rng& rng, int max_nodes = 3, int max_mult = 2, double max_mod = 0.7) {
  for (;;) {
    InterpProblem p;
    const int k = rng.integer(1, max_nodes);
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      const cplx zi = rng.disk(max_mod);
      for (const auto& nd : p.nodes)
        if (std::abs(nd.z - zi) < 0.2) ok = false;
      NodeData nd{zi, {}};
      const int ni = rng.integer(1, max_mult);
      nd.values.push_back(rng.disk(1.3));
      for (int j = 1; j < ni; ++j) nd.values.push_back(rng.disk(1.0));
      p.nodes.push_back(nd);
    }
    if (!ok) continue;
    const Eigen::MatrixXcd P = pick_oracle(p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(P);
    const double small = es.eigenvalues().cwiseAbs().minCoeff();
    if (small < 1e-3 * P.norm() || small < 1e-3) continue;
    return p;
  }
}

/// Rational Schur function with sup norm below one: a constant or a disk
/// automorphism applied to t times a Blaschke factor.
inline RatFun random_schur(Rng& rng) {
  if (rng.integer(0, 2) == 0) return RatFun(rng.disk(0.9));
  const cplx w = rng.disk(0.8);
  const cplx t = rng.disk(0.9);
  const cplx a = rng.disk(0.8);
  return disk_automorphism(w, RatFun(t) * mobius_factor(a));
}

inline nevpick::Blaschke random_blaschke(Rng& rng, int degree, const std::vector<cplx>& avoid) {
  std::vector<cplx> zeros;
  while (static_cast<int>(zeros.size()) < degree) {
    const cplx a = rng.disk(0.8);
    bool ok = true;
    for (const cplx b : avoid)
      if (std::abs(a - b) < 0.1) ok = false;
    for (const cplx b : zeros)
      if (std::abs(a - b) < 0.1) ok = false;
    if (ok) zeros.push_back(a);
  }
  return nevpick::Blaschke(zeros);
}

struct SolvedFixture {
  InterpProblem problem;
  nevpick::PickSystem pick;
  nevpick::Theta theta;
  nevpick::ParamPair param;
  nevpick::LftResult lft;
};

/// Random problem with a random admissible parameter whose V has no zeros
/// within 0.01 of the unit circle; problem.kappa = sq-(P) + deg B.
inline SolvedFixture random_solved(Rng& rng) {
  for (;;) {
    InterpProblem p = random_problem(rng);
    nevpick::PickSystem ps = nevpick::pick_system(p);
    nevpick::Theta th = nevpick::build_theta(ps);
    const int deg = rng.integer(0, 2);
    std::vector<cplx> avoid = p.node_points();
    nevpick::ParamPair param{random_schur(rng), random_blaschke(rng, deg, avoid)};
    bool coprime = true;
    for (const cplx a : param.B.zeros())
      if (std::abs(param.S(a)) < 1e-3) coprime = false;
    if (!coprime) continue;
    bool margin = true;
    for (const cplx zi : p.node_points()) {
      const Eigen::Matrix2cd M = th.eval(zi);
      const cplx v = M(1, 0) * param.S(zi) + M(1, 1) * param.B(zi);
      if (std::abs(v) < 1e-3 * (1.0 + std::abs(M(1, 0)) + std::abs(M(1, 1)))) margin = false;
    }
    if (!margin) continue;
    nevpick::LftResult lft = nevpick::lft_apply(th, param);
    bool away = true;
    for (const auto& r : nevpick::poly_roots(lft.V.num))
      if (std::abs(std::abs(r.value) - 1.0) < 0.01) away = false;
    if (!away) continue;
    p.kappa = ps.inertia.n_minus + param.B.degree();
    return {p, ps, th, param, lft};
  }
}

struct DegenerateFixture {
  InterpProblem problem;
  nevpick::Theta theta;
  nevpick::ParamPair param;
  std::size_t node = 0;
  int target_m = 0;
};

/// Schur function with prescribed values g[0], ..., g[m-1] (m <= 2) of its
/// Taylor jet at z0, by one or two Schur-algorithm steps with a constant tail
/// of modulus below one. Empty when the jet is not attainable with margin.
inline std::optional<RatFun> schur_with_jet(Rng& rng, cplx z0, const std::vector<cplx>& g) {
  const RatFun beta = mobius_factor(z0);
  const cplx g0 = g[0];
  if (std::abs(g0) > 0.95) return std::nullopt;
  const cplx tail = rng.disk(0.5);
  if (g.size() == 1) return disk_automorphism(g0, RatFun(tail) * beta);
  const cplx v = g[1] * (1.0 - std::norm(z0)) / (1.0 - std::norm(g0));
  if (std::abs(v) > 0.95) return std::nullopt;
  const RatFun s1 = disk_automorphism(v, RatFun(tail) * beta);
  return disk_automorphism(g0, beta * s1);
}

/// Parameter for which V = Theta21 S + Theta22 B vanishes to order
/// target_m (1 or 2) at one node.
inline DegenerateFixture random_degenerate(Rng& rng, int target_m, bool want_excess) {
  for (;;) {
    InterpProblem p = random_problem(rng);
    const std::size_t i = static_cast<std::size_t>(rng.integer(0, static_cast<int>(p.nodes.size()) - 1));
    if (want_excess && p.nodes[i].multiplicity() >= target_m) continue;
    const nevpick::Theta th = nevpick::build_theta(nevpick::pick_system(p));
    const cplx zi = p.nodes[i].z;
    if (std::abs(th.eval(zi)(1, 0)) < 1e-3) continue;
    // -Theta22 / Theta21 from the numerators over the shared denominator
    const Poly w_num = -th.numerator(1, 1);
    const Poly w_den = th.numerator(1, 0);
    for (int attempt = 0; attempt < 2; ++attempt) {
      nevpick::Blaschke B;
      if (attempt == 1) {
        const cplx a = zi + rng.annulus(0.05, 0.25);
        if (std::abs(a) >= 0.9) continue;
        bool clear = true;
        for (const auto& nd : p.nodes)
          if (std::abs(nd.z - a) < 0.05) clear = false;
        if (!clear) continue;
        B = nevpick::Blaschke({a});
      }
      const RatFun b = B.to_ratfun();
      const nevpick::Jet jet = nevpick::taylor_jet(w_num * b.num(), w_den * b.den(), zi, target_m);
      const auto S = schur_with_jet(rng, zi, jet.coeffs);
      if (!S) continue;
      bool coprime = true;
      for (const cplx a : B.zeros())
        if (std::abs((*S)(a)) < 1e-3) coprime = false;
      if (!coprime) continue;
      return {p, th, {*S, B}, i, target_m};
    }
  }
}

inline Eigen::MatrixXcd to_matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  Eigen::MatrixXcd m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const cplx v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace fixtures
