#include "nevpick/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "nevpick/error.hpp"

namespace nevpick {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Starting points on circles whose radii come from the upper convex hull of
// (k, log|a_k|), so roots of very different magnitude start near their scale.
std::vector<cplx> initial_guesses(const std::vector<cplx>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<int> hull;
  std::vector<double> lg(a.size());
  for (int k = 0; k <= n; ++k) {
    const double m = std::abs(a[static_cast<std::size_t>(k)]);
    lg[static_cast<std::size_t>(k)] = m > 0.0 ? std::log(m) : -std::numeric_limits<double>::infinity();
  }
  for (int k = 0; k <= n; ++k) {
    if (std::isinf(lg[static_cast<std::size_t>(k)])) continue;
    while (hull.size() >= 2) {
      const int i = hull[hull.size() - 2];
      const int j = hull.back();
      const double cross = (j - i) * (lg[static_cast<std::size_t>(k)] - lg[static_cast<std::size_t>(i)]) -
                           (k - i) * (lg[static_cast<std::size_t>(j)] - lg[static_cast<std::size_t>(i)]);
      if (cross >= 0.0) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }
  std::vector<cplx> z;
  z.reserve(static_cast<std::size_t>(n));
  constexpr double kOffset = 0.7;
  for (std::size_t h = 1; h < hull.size(); ++h) {
    const int k0 = hull[h - 1];
    const int k1 = hull[h];
    const int m = k1 - k0;
    const double radius = std::exp((lg[static_cast<std::size_t>(k0)] - lg[static_cast<std::size_t>(k1)]) / m);
    for (int j = 0; j < m; ++j) {
      const double ang = 2.0 * std::numbers::pi * (j + 0.25 * static_cast<double>(h)) / m + kOffset;
      z.push_back(std::polar(radius, ang));
    }
  }
  return z;
}

struct Eval {
  cplx p;
  cplx dp;
  double bound;  // sum |a_k| |z|^k, the rounding scale of p(z)
};

Eval horner(const std::vector<cplx>& a, cplx z) {
  cplx p = a.back();
  cplx dp{};
  double bound = std::abs(a.back());
  const double az = std::abs(z);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    bound = bound * az + std::abs(a[k]);
  }
  return {p, dp, bound};
}

bool aberth(const std::vector<cplx>& a, std::vector<cplx>& z, int max_iterations) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  for (int it = 0; it < max_iterations; ++it) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Eval e = horner(a, z[i]);
      if (std::abs(e.p) <= 4.0 * kEps * e.bound) {
        done[i] = true;
        continue;
      }
      all = false;
      const cplx ratio = e.p / e.dp;
      cplx s{};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      const cplx w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[i] -= w;
      if (std::abs(w) <= kEps * std::abs(z[i])) done[i] = true;
    }
    if (all) return true;
  }
  return std::all_of(done.begin(), done.end(), [](bool b) { return b; });
}

std::vector<cplx> companion_roots(const std::vector<cplx>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -a[static_cast<std::size_t>(i)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "companion eigensolver failed");
  std::vector<cplx> z(es.eigenvalues().data(), es.eigenvalues().data() + n);
  for (auto& r : z) {
    for (int step = 0; step < 5; ++step) {
      const Eval e = horner(a, r);
      if (std::abs(e.p) <= 4.0 * kEps * e.bound || e.dp == cplx{}) break;
      const cplx next = r - e.p / e.dp;
      if (std::abs(horner(a, next).p) >= std::abs(e.p)) break;
      r = next;
    }
  }
  return z;
}

}  // namespace

std::vector<cplx> poly_roots_flat(const Poly& p, const RootOptions& opts) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const auto& c = p.coeffs();
  std::size_t zeros = 0;
  while (c[zeros] == cplx{}) ++zeros;
  std::vector<cplx> out(zeros, cplx{});
  std::vector<cplx> a(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
  const int n = static_cast<int>(a.size()) - 1;
  if (n == 0) return out;
  const cplx lead = a.back();
  for (auto& x : a) x /= lead;
  if (n == 1) {
    out.push_back(-a[0]);
    return out;
  }
  std::vector<cplx> z = initial_guesses(a);
  if (!aberth(a, z, opts.max_iterations)) z = companion_roots(a);
  for (const cplx r : z)
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
      throw Error(ErrorCode::NoConvergence, "root finder produced a non-finite root");
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

std::vector<Root> cluster_roots(const std::vector<cplx>& roots, double cluster_radius) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = 1.0 + std::max(std::abs(roots[i]), std::abs(roots[j]));
      if (std::abs(roots[i] - roots[j]) <= cluster_radius * scale) parent[find(i)] = find(j);
    }
  std::vector<Root> out;
  std::vector<std::size_t> slot(n, n);
  std::vector<cplx> sums;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.push_back({cplx{}, 0});
      sums.emplace_back();
    }
    sums[slot[r]] += roots[i];
    out[slot[r]].multiplicity += 1;
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k].value = sums[k] / static_cast<double>(out[k].multiplicity);
  return out;
}

std::vector<Root> poly_roots(const Poly& p, const RootOptions& opts) {
  std::vector<Root> roots = cluster_roots(poly_roots_flat(p, opts), opts.cluster_radius);
  // A root of multiplicity k is a simple root of p^{(k-1)}; Newton there
  // recovers the digits lost to the cluster spread.
  for (Root& r : roots) {
    Poly q = p;
    for (int c = 1; c < r.multiplicity; ++c) q = q.derivative();
    const Poly dq = q.derivative();
    const double reach = 10.0 * opts.cluster_radius * (1.0 + std::abs(r.value));
    cplx x = r.value;
    double best = std::abs(q(x));
    for (int it = 0; it < 8 && best > 0.0; ++it) {
      const cplx slope = dq(x);
      if (slope == cplx{}) break;
      const cplx next = x - q(x) / slope;
      const double val = std::abs(q(next));
      if (!(val < best) || std::abs(next - r.value) > reach) break;
      x = next;
      best = val;
    }
    r.value = x;
  }
  return roots;
}

}  // namespace nevpick
