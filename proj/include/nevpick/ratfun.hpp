#pragma once

#include <span>
#include <vector>

#include "nevpick/poly.hpp"
#include "nevpick/roots.hpp"

namespace nevpick {

/// Taylor jet: coeffs[j] = f^{(j)}(center) / j!.
struct Jet {
  cplx center;
  std::vector<cplx> coeffs;
};

/// Numerator/denominator pair kept exactly as constructed (no cancellation).
struct PolyQuotient {
  Poly num;
  Poly den;

  cplx operator()(cplx z) const { return num(z) / den(z); }
};

struct ReduceOptions {
  /// Two roots are common when closer than common_root_tol * (1 + max(|a|, |b|)).
  double common_root_tol = 1e-8;
  RootOptions roots;
};

struct ReduceInfo {
  int cancelled = 0;
  /// A cancel/keep decision was taken within a factor 10 of the threshold.
  bool borderline = false;
};

/// Coprime rational function with a monic denominator.
class RatFun {
 public:
  /// The zero function 0/1.
  RatFun();
  /// Constant function (implicit: a scalar is a rational function).
  RatFun(cplx c);  // NOLINT(google-explicit-constructor)

  /// Cancels common roots and normalizes. Throws ZeroDenominator.
  static RatFun reduce(const Poly& num, const Poly& den, ReduceInfo* info = nullptr,
                       const ReduceOptions& opts = {});
  static RatFun reduce(const PolyQuotient& q, ReduceInfo* info = nullptr, const ReduceOptions& opts = {}) {
    return reduce(q.num, q.den, info, opts);
  }
  /// Normalization only; the caller guarantees coprimality.
  static RatFun from_coprime(const Poly& num, const Poly& den);
  static RatFun polynomial(const Poly& p) { return from_coprime(p, Poly::constant(1.0)); }
  static RatFun identity() { return polynomial(Poly{0.0, 1.0}); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  /// Throws PoleAtPoint when the denominator vanishes at z.
  cplx operator()(cplx z) const;
  bool has_pole_at(cplx z) const;

  std::vector<Root> zeros(const RootOptions& opts = {}) const;
  std::vector<Root> poles(const RootOptions& opts = {}) const;

  PolyQuotient quotient() const { return {num_, den_}; }

 private:
  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

RatFun ratfun_arith(const RatFun& a, const RatFun& b, ArithOp op);

inline RatFun operator+(const RatFun& a, const RatFun& b) { return ratfun_arith(a, b, ArithOp::Add); }
inline RatFun operator-(const RatFun& a, const RatFun& b) { return ratfun_arith(a, b, ArithOp::Sub); }
inline RatFun operator*(const RatFun& a, const RatFun& b) { return ratfun_arith(a, b, ArithOp::Mul); }
inline RatFun operator/(const RatFun& a, const RatFun& b) { return ratfun_arith(a, b, ArithOp::Div); }

/// True when |p(z)| is at rounding level relative to sum |p_k| |z|^k.
bool vanishes_at(const Poly& p, cplx z, double rel_tol = 1e-12);

/// Taylor jet of num/den at z0 by power-series division of the shifted
/// polynomials. Throws PoleAtCenter when den(z0) vanishes.
Jet taylor_jet(const Poly& num, const Poly& den, cplx z0, int m);
inline Jet taylor_jet(const PolyQuotient& q, cplx z0, int m) { return taylor_jet(q.num, q.den, z0, m); }
Jet ratfun_jet(const RatFun& f, cplx z0, int m);

/// Order of vanishing of p at z, with a coefficient of the shifted
/// polynomial counted as zero when |c| <= zero_tol * max |c_k|.
int zero_order_at(const Poly& p, cplx z, double zero_tol = 1e-9);

/// Deflates num and den simultaneously by (z - r) for each point r as long as
/// both vanish there (judged by zero_order_at). Used where common roots are
/// known in advance so they need not be found by root matching.
PolyQuotient cancel_common_roots_at(PolyQuotient q, std::span<const cplx> points, double zero_tol = 1e-9,
                                    int* cancelled = nullptr);

}  // namespace nevpick
