#include "nevpick/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nevpick {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Leading coefficients below this multiple of eps times the operand scale are
// treated as cancellation noise after addition/subtraction.
constexpr double kCancelTrim = 32.0 * kEps;

Poly add_scaled(const Poly& a, const Poly& b, double sign) {
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<cplx> out(std::max(ac.size(), bc.size()));
  for (std::size_t k = 0; k < ac.size(); ++k) out[k] += ac[k];
  for (std::size_t k = 0; k < bc.size(); ++k) out[k] += sign * bc[k];
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  while (!out.empty() && std::abs(out.back()) <= kCancelTrim * scale) out.pop_back();
  return Poly(std::move(out));
}

}  // namespace

Poly::Poly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { trim_exact(); }

Poly::Poly(std::initializer_list<cplx> coeffs) : coeffs_(coeffs) { trim_exact(); }

Poly Poly::constant(cplx c) { return Poly(std::vector<cplx>{c}); }

Poly Poly::monomial(int degree, cplx c) {
  std::vector<cplx> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear_factor(cplx root) { return Poly{-root, 1.0}; }

Poly Poly::from_roots(std::span<const cplx> roots, cplx leading) {
  std::vector<cplx> c{leading};
  for (const cplx r : roots) {
    std::vector<cplx> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return Poly(std::move(c));
}

void Poly::trim_exact() {
  while (!coeffs_.empty() && coeffs_.back() == cplx{}) coeffs_.pop_back();
}

cplx Poly::coeff(int k) const noexcept {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

double Poly::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const cplx c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

cplx Poly::operator()(cplx z) const noexcept {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Poly(std::move(d));
}

Poly Poly::taylor_shift(cplx center) const {
  // Repeated synthetic division by (z - center).
  std::vector<cplx> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k > i; --k) c[k - 1] += center * c[k];
  }
  return Poly(std::move(c));
}

Poly Poly::trimmed(double rel_tol) const {
  const double scale = max_abs_coeff();
  std::vector<cplx> c = coeffs_;
  while (!c.empty() && std::abs(c.back()) <= rel_tol * scale) c.pop_back();
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator*=(cplx c) {
  if (c == cplx{}) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly& Poly::operator/=(cplx c) {
  for (auto& x : coeffs_) x /= c;
  trim_exact();
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) { return add_scaled(a, b, 1.0); }

Poly operator-(const Poly& a, const Poly& b) { return add_scaled(a, b, -1.0); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<cplx> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i)
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  return Poly(std::move(out));
}

std::pair<Poly, cplx> deflate(const Poly& p, cplx root) {
  const int n = p.degree();
  if (n < 1) return {Poly{}, p.coeff(0)};
  const auto& c = p.coeffs();
  std::vector<cplx> q(static_cast<std::size_t>(n));
  if (std::abs(root) <= 1.0) {
    cplx acc = c[static_cast<std::size_t>(n)];
    for (int k = n - 1; k >= 0; --k) {
      q[static_cast<std::size_t>(k)] = acc;
      acc = acc * root + c[static_cast<std::size_t>(k)];
    }
    return {Poly(std::move(q)), acc};
  }
  // Backward: solve c_0 = -root q_0, c_k = q_{k-1} - root q_k from the bottom.
  const cplx inv = 1.0 / root;
  cplx prev = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx qk = (prev - c[static_cast<std::size_t>(k)]) * inv;
    q[static_cast<std::size_t>(k)] = qk;
    prev = qk;
  }
  return {Poly(std::move(q)), p(root)};
}

double relative_coeff_distance(const Poly& a, const Poly& b) {
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  if (scale == 0.0) return 0.0;
  double m = 0.0;
  const int n = std::max(a.degree(), b.degree());
  for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
  return m / scale;
}

}  // namespace nevpick
