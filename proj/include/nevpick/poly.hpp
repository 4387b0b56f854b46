#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace nevpick {

using cplx = std::complex<double>;

/// Dense univariate polynomial with complex coefficients in ascending degree
/// order. The representation is kept trimmed: the leading coefficient is
/// nonzero unless the polynomial is identically zero (empty coefficient list).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<cplx> coeffs);
  Poly(std::initializer_list<cplx> coeffs);

  static Poly constant(cplx c);
  static Poly monomial(int degree, cplx c = 1.0);
  /// z - root
  static Poly linear_factor(cplx root);
  static Poly from_roots(std::span<const cplx> roots, cplx leading = 1.0);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  cplx coeff(int k) const noexcept;
  cplx leading() const noexcept { return coeffs_.empty() ? cplx{} : coeffs_.back(); }
  double max_abs_coeff() const noexcept;

  cplx operator()(cplx z) const noexcept;
  Poly derivative() const;
  /// Coefficients of w -> p(center + w).
  Poly taylor_shift(cplx center) const;
  /// Drops leading coefficients whose magnitude is at most rel_tol times the
  /// largest coefficient magnitude.
  Poly trimmed(double rel_tol) const;

  Poly operator-() const;
  Poly& operator*=(cplx c);
  Poly& operator/=(cplx c);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, cplx c) { Poly r = a; r *= c; return r; }
  friend Poly operator*(cplx c, const Poly& a) { return a * c; }
  friend Poly operator/(const Poly& a, cplx c) { Poly r = a; r /= c; return r; }

 private:
  void trim_exact();
  std::vector<cplx> coeffs_;
};

/// Synthetic division p(z) = (z - root) q(z) + r. Uses forward Horner for
/// |root| <= 1 and backward division otherwise, which keeps the deflation
/// stable in both regimes. Returns {q, r}.
std::pair<Poly, cplx> deflate(const Poly& p, cplx root);

/// Max-norm of the coefficient difference relative to the larger of the two
/// coefficient scales (0 when both are zero).
double relative_coeff_distance(const Poly& a, const Poly& b);

}  // namespace nevpick
