#include "nevpick/schurclass.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nevpick/error.hpp"
#include "nevpick/hermlin.hpp"

namespace nevpick {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool on_circle(cplx r, double tol) { return std::abs(std::abs(r) - 1.0) <= tol; }

double abs_on_circle(const RatFun& f, double angle) { return std::abs(f(std::polar(1.0, angle))); }

double golden_max(const RatFun& f, double lo, double hi) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = abs_on_circle(f, c);
  double fd = abs_on_circle(f, d);
  for (int it = 0; it < 60; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = abs_on_circle(f, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = abs_on_circle(f, d);
    }
  }
  return std::max(fc, fd);
}

}  // namespace

Blaschke::Blaschke(std::vector<cplx> zeros, cplx unimodular_factor)
    : zeros_(std::move(zeros)), factor_(unimodular_factor) {
  for (const cplx a : zeros_)
    if (!(std::abs(a) < 1.0)) throw Error(ErrorCode::ZeroOutsideDisk, "Blaschke zero outside the open disk");
  if (std::abs(std::abs(factor_) - 1.0) > 1e-12)
    throw Error(ErrorCode::NonUnimodularFactor, "Blaschke factor must have modulus one");
}

cplx Blaschke::operator()(cplx z) const {
  cplx v = factor_;
  for (const cplx a : zeros_) v *= (z - a) / (1.0 - z * std::conj(a));
  return v;
}

RatFun Blaschke::to_ratfun() const {
  Poly num = Poly::constant(factor_);
  Poly den = Poly::constant(1.0);
  for (const cplx a : zeros_) {
    num = num * Poly::linear_factor(a);
    den = den * Poly{1.0, -std::conj(a)};
  }
  return RatFun::from_coprime(num, den);
}

Blaschke blaschke_from_ratfun(const RatFun& f, double tol) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "zero function is not a Blaschke product");
  std::vector<cplx> zeros;
  if (f.num().degree() > 0)
    for (const Root& r : f.zeros()) {
      if (!(std::abs(r.value) < 1.0)) throw Error(ErrorCode::InvalidInput, "Blaschke zero outside the open disk");
      zeros.insert(zeros.end(), static_cast<std::size_t>(r.multiplicity), r.value);
    }
  Blaschke unit(zeros);
  const cplx u = f(1.0) / unit(1.0);
  if (std::abs(std::abs(u) - 1.0) > tol) throw Error(ErrorCode::InvalidInput, "function is not unimodular on the circle");
  Blaschke b(zeros, u / std::abs(u));
  for (int k = 0; k < 16; ++k) {
    const cplx z = std::polar(0.37 + 0.04 * k, 0.9 * k);
    if (std::abs(f(z) - b(z)) > tol * (1.0 + std::abs(b(z))))
      throw Error(ErrorCode::InvalidInput, "function is not a finite Blaschke product");
  }
  return b;
}

int poles_in_disk(const RatFun& f, const BoundaryOptions& opts) {
  if (f.den().degree() < 1) return 0;
  int count = 0;
  for (const Root& r : f.poles()) {
    if (on_circle(r.value, opts.circle_tol)) throw Error(ErrorCode::PoleOnBoundary, "pole on the unit circle");
    if (std::abs(r.value) < 1.0) count += r.multiplicity;
  }
  return count;
}

double boundary_sup(const RatFun& f, const BoundaryOptions& opts) {
  if (f.den().degree() >= 1)
    for (const Root& r : f.poles())
      if (on_circle(r.value, opts.circle_tol)) throw Error(ErrorCode::PoleOnBoundary, "pole on the unit circle");
  const int n = opts.grid_points;
  const double h = kTwoPi / n;
  std::vector<double> vals(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) vals[static_cast<std::size_t>(k)] = abs_on_circle(f, h * k);
  double best = *std::max_element(vals.begin(), vals.end());
  // Refine the largest few discrete local maxima.
  std::vector<int> peaks;
  for (int k = 0; k < n; ++k) {
    const double v = vals[static_cast<std::size_t>(k)];
    if (v >= vals[static_cast<std::size_t>((k + n - 1) % n)] && v >= vals[static_cast<std::size_t>((k + 1) % n)])
      peaks.push_back(k);
  }
  std::sort(peaks.begin(), peaks.end(),
            [&](int a, int b) { return vals[static_cast<std::size_t>(a)] > vals[static_cast<std::size_t>(b)]; });
  if (peaks.size() > 4) peaks.resize(4);
  for (const int k : peaks) best = std::max(best, golden_max(f, h * (k - 1), h * (k + 1)));
  return best;
}

KreinLanger class_index(const RatFun& f, double tol, const BoundaryOptions& opts) {
  const double sup = boundary_sup(f, opts);
  if (sup > 1.0 + tol)
    throw Error(ErrorCode::NotContractive, "boundary supremum " + std::to_string(sup) + " exceeds 1");
  std::vector<cplx> inside;
  Poly outer_den = f.den();
  if (f.den().degree() >= 1)
    for (const Root& r : f.poles())
      if (std::abs(r.value) < 1.0)
        for (int c = 0; c < r.multiplicity; ++c) {
          inside.push_back(r.value);
          outer_den = deflate(outer_den, r.value).first;
        }
  // s = f * b = num / (outer_den * prod (1 - z conj a)); reflected points of
  // the b-zeros may coincide with zeros of num.
  Poly reflected = Poly::constant(1.0);
  std::vector<cplx> reflections;
  for (const cplx a : inside) {
    reflected = reflected * Poly{1.0, -std::conj(a)};
    if (a != cplx{}) reflections.push_back(1.0 / std::conj(a));
  }
  PolyQuotient sq{f.num(), outer_den * reflected};
  sq = cancel_common_roots_at(sq, reflections);
  KreinLanger kl;
  kl.s = RatFun::from_coprime(sq.num, sq.den);
  kl.b = Blaschke(inside);
  kl.index = static_cast<int>(inside.size());
  kl.boundary_sup = sup;
  return kl;
}

int zeros_in_disk(const RatFun& g, const BoundaryOptions& opts) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroFunction, "zero count of the zero function");
  if (g.num().degree() < 1) return 0;
  int count = 0;
  for (const Root& r : g.zeros()) {
    if (on_circle(r.value, opts.circle_tol)) throw Error(ErrorCode::ZeroOnBoundary, "zero on the unit circle");
    if (std::abs(r.value) < 1.0) count += r.multiplicity;
  }
  return count;
}

void ContourSpec::validate() const {
  if (!(radius > 0.0) || !(std::abs(center) + radius < 1.0))
    throw Error(ErrorCode::InvalidInput, "contour must lie inside the unit disk");
  if (points < 4) throw Error(ErrorCode::InvalidInput, "contour needs at least 4 points");
}

cplx winding_integral(const RatFun& g, const ContourSpec& contour) {
  contour.validate();
  if (g.is_zero()) throw Error(ErrorCode::SingularOnContour, "zero function");
  const Poly dn = g.num().derivative();
  const Poly dd = g.den().derivative();
  cplx sum{};
  for (int k = 0; k < contour.points; ++k) {
    const cplx w = std::polar(contour.radius, kTwoPi * k / contour.points);
    const cplx xi = contour.center + w;
    if (vanishes_at(g.num(), xi) || vanishes_at(g.den(), xi))
      throw Error(ErrorCode::SingularOnContour, "zero or pole on the contour");
    sum += (dn(xi) / g.num()(xi) - dd(xi) / g.den()(xi)) * w;
  }
  return sum / static_cast<double>(contour.points);
}

int winding_count(const RatFun& g, const ContourSpec& contour) {
  const cplx v = winding_integral(g, contour);
  const double rounded = std::round(v.real());
  if (std::abs(v - rounded) > 0.2)
    throw Error(ErrorCode::QuadratureInconclusive, "winding integral " + std::to_string(v.real()) + " not near an integer");
  return static_cast<int>(rounded);
}

std::vector<Circle> analytic_cycle(const RatFun& f, std::span<const cplx> enclose, const ContourSpec& contour) {
  contour.validate();
  for (const cplx z : enclose)
    if (!(std::abs(z - contour.center) < contour.radius))
      throw Error(ErrorCode::NodesNotEnclosed, "contour does not enclose every node");
  std::vector<Circle> cycle{{contour.center, contour.radius, +1, contour.points}};
  if (f.den().degree() < 1) return cycle;
  const std::vector<Root> poles = f.poles();
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const cplx p = poles[i].value;
    const double d = std::abs(p - contour.center);
    if (std::abs(d - contour.radius) <= 1e-8 * (1.0 + contour.radius))
      throw Error(ErrorCode::ContourThroughPole, "pole on the contour");
    if (d > contour.radius) continue;
    double gap = contour.radius - d;
    for (const cplx z : enclose) gap = std::min(gap, std::abs(p - z));
    for (std::size_t j = 0; j < poles.size(); ++j)
      if (j != i) gap = std::min(gap, std::abs(p - poles[j].value));
    const double rho = 0.4 * gap;
    if (rho < 1e-6) throw Error(ErrorCode::ContourThroughPole, "pole too close to a node or the contour");
    cycle.push_back({p, rho, -1, contour.points});
  }
  return cycle;
}

std::vector<QuadNode> cycle_quadrature(const std::vector<Circle>& cycle) {
  std::vector<QuadNode> nodes;
  for (const Circle& c : cycle)
    for (int k = 0; k < c.points; ++k) {
      const cplx w = std::polar(c.radius, kTwoPi * k / c.points);
      nodes.push_back({c.center + w, static_cast<double>(c.orientation) * w / static_cast<double>(c.points)});
    }
  return nodes;
}

void check_grid(std::span<const cplx> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(std::abs(grid[i]) < 1.0)) throw Error(ErrorCode::DegenerateGrid, "grid point outside the open disk");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(grid[i] - grid[j]) <= 1e-12) throw Error(ErrorCode::DegenerateGrid, "duplicate grid points");
  }
}

NegSquaresEstimate kernel_negsquares(const SampledFunction& f, std::span<const cplx> grid, double tol) {
  check_grid(grid);
  const auto n = static_cast<Eigen::Index>(grid.size());
  std::vector<cplx> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = f(grid[i]);
    if (!std::isfinite(vals[i].real()) || !std::isfinite(vals[i].imag()))
      throw Error(ErrorCode::PoleOnGrid, "function is singular at a grid point");
  }
  CMatrix G(n, n);
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = 0; q < n; ++q) {
      const auto sp = static_cast<std::size_t>(p);
      const auto sq = static_cast<std::size_t>(q);
      G(p, q) = (1.0 - vals[sp] * std::conj(vals[sq])) / (1.0 - grid[sp] * std::conj(grid[sq]));
    }
  const HermitianMatrix H = HermitianMatrix::symmetrize(G);
  NegSquaresEstimate est;
  est.threshold = tol * H.norm();
  est.eigenvalues = hermitian_eigenvalues(H);
  for (const double ev : est.eigenvalues)
    if (ev < -est.threshold) ++est.count;
  est.grid.assign(grid.begin(), grid.end());
  return est;
}

NegSquaresEstimate kernel_negsquares(const RatFun& f, std::span<const cplx> grid, double tol) {
  for (const cplx z : grid)
    if (f.has_pole_at(z)) throw Error(ErrorCode::PoleOnGrid, "grid point is a pole");
  return kernel_negsquares(SampledFunction([&f](cplx z) { return f(z); }), grid, tol);
}

std::vector<cplx> default_kernel_grid(const RatFun& f) {
  constexpr int kPerRing = 12;
  constexpr std::array<double, 2> kRadii{0.3, 0.7};
  std::vector<Root> poles;
  if (f.den().degree() >= 1) poles = f.poles();
  auto build = [&](double offset) {
    std::vector<cplx> g;
    for (const double r : kRadii)
      for (int k = 0; k < kPerRing; ++k) g.push_back(std::polar(r, offset + kTwoPi * k / kPerRing));
    return g;
  };
  auto clearance = [&](const std::vector<cplx>& g) {
    double m = std::numeric_limits<double>::infinity();
    for (const cplx z : g)
      for (const Root& p : poles) m = std::min(m, std::abs(z - p.value));
    return m;
  };
  constexpr int kTries = 16;
  double best_offset = 0.0;
  double best_clear = -1.0;
  for (int t = 0; t < kTries; ++t) {
    const double offset = (kTwoPi / kPerRing) * t / kTries;
    const double c = clearance(build(offset));
    if (c > 0.05) return build(offset);
    if (c > best_clear) {
      best_clear = c;
      best_offset = offset;
    }
  }
  return build(best_offset);
}

}  // namespace nevpick
