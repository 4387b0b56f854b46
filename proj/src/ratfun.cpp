#include "nevpick/ratfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nevpick/error.hpp"

namespace nevpick {

namespace {

RatFun normalized(const Poly& num, const Poly& den) {
  const cplx lead = den.leading();
  return RatFun::from_coprime(num / lead, den / lead);
}

}  // namespace

RatFun::RatFun() : num_(), den_(Poly::constant(1.0)) {}

RatFun::RatFun(cplx c) : num_(Poly::constant(c)), den_(Poly::constant(1.0)) {}

RatFun RatFun::from_coprime(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is identically zero");
  if (num.is_zero()) return RatFun();
  const cplx lead = den.leading();
  RatFun f;
  f.num_ = num / lead;
  f.den_ = den / lead;
  return f;
}

RatFun RatFun::reduce(const Poly& num, const Poly& den, ReduceInfo* info, const ReduceOptions& opts) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is identically zero");
  ReduceInfo local;
  ReduceInfo& out = info ? *info : local;
  out = {};
  if (num.is_zero()) return RatFun();
  if (num.degree() == 0 || den.degree() == 0) return normalized(num, den);

  std::vector<Root> nr = poly_roots(num, opts.roots);
  std::vector<Root> dr = poly_roots(den, opts.roots);

  Poly n = num;
  Poly d = den;
  for (auto& droot : dr) {
    std::size_t best = nr.size();
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < nr.size(); ++j) {
      if (nr[j].multiplicity == 0) continue;
      const double tol = opts.common_root_tol * (1.0 + std::max(std::abs(droot.value), std::abs(nr[j].value)));
      const double ratio = std::abs(droot.value - nr[j].value) / tol;
      if (ratio < best_ratio) {
        best_ratio = ratio;
        best = j;
      }
    }
    if (best == nr.size()) continue;
    if (best_ratio < 1.0) {
      if (best_ratio > 0.1) out.borderline = true;
      const int k = std::min(droot.multiplicity, nr[best].multiplicity);
      for (int c = 0; c < k; ++c) {
        n = deflate(n, nr[best].value).first;
        d = deflate(d, droot.value).first;
      }
      nr[best].multiplicity -= k;
      droot.multiplicity -= k;
      out.cancelled += k;
    } else if (best_ratio < 10.0) {
      out.borderline = true;
    }
  }
  return normalized(n, d);
}

bool vanishes_at(const Poly& p, cplx z, double rel_tol) {
  if (p.is_zero()) return true;
  double bound = 0.0;
  const double az = std::abs(z);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) bound = bound * az + std::abs(*it);
  return std::abs(p(z)) <= rel_tol * bound;
}

cplx RatFun::operator()(cplx z) const {
  if (vanishes_at(den_, z)) throw Error(ErrorCode::PoleAtPoint, "evaluation at a pole");
  return num_(z) / den_(z);
}

bool RatFun::has_pole_at(cplx z) const { return vanishes_at(den_, z); }

std::vector<Root> RatFun::zeros(const RootOptions& opts) const {
  if (num_.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zeros of the zero function");
  return poly_roots(num_, opts);
}

std::vector<Root> RatFun::poles(const RootOptions& opts) const { return poly_roots(den_, opts); }

RatFun ratfun_arith(const RatFun& a, const RatFun& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
    case ArithOp::Sub: {
      const double sign = op == ArithOp::Add ? 1.0 : -1.0;
      if (a.den().coeffs() == b.den().coeffs()) return RatFun::reduce(a.num() + sign * b.num(), a.den());
      return RatFun::reduce(a.num() * b.den() + sign * (b.num() * a.den()), a.den() * b.den());
    }
    case ArithOp::Mul:
      return RatFun::reduce(a.num() * b.num(), a.den() * b.den());
    case ArithOp::Div:
      if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by the zero function");
      return RatFun::reduce(a.num() * b.den(), a.den() * b.num());
  }
  return {};
}

Jet taylor_jet(const Poly& num, const Poly& den, cplx z0, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "jet length must be positive");
  if (den.is_zero() || vanishes_at(den, z0)) throw Error(ErrorCode::PoleAtCenter, "jet centre is a pole");
  const Poly a = num.taylor_shift(z0);
  const Poly b = den.taylor_shift(z0);
  Jet jet{z0, std::vector<cplx>(static_cast<std::size_t>(m))};
  const cplx b0 = b.coeff(0);
  for (int j = 0; j < m; ++j) {
    cplx acc = a.coeff(j);
    for (int i = 1; i <= std::min(j, b.degree()); ++i) acc -= b.coeff(i) * jet.coeffs[static_cast<std::size_t>(j - i)];
    jet.coeffs[static_cast<std::size_t>(j)] = acc / b0;
  }
  return jet;
}

Jet ratfun_jet(const RatFun& f, cplx z0, int m) { return taylor_jet(f.num(), f.den(), z0, m); }

int zero_order_at(const Poly& p, cplx z, double zero_tol) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "order of vanishing of the zero polynomial");
  // Outside the disk the shift is taken on the reversed polynomial at 1/z,
  // where it is well conditioned. The vanishing order is the same.
  const bool outside = std::abs(z) > 1.0;
  const Poly s = outside ? Poly(std::vector<cplx>(p.coeffs().rbegin(), p.coeffs().rend())).taylor_shift(1.0 / z)
                         : p.taylor_shift(z);
  const double thr = zero_tol * s.max_abs_coeff();
  int k = 0;
  while (std::abs(s.coeff(k)) <= thr) ++k;
  return k;
}

PolyQuotient cancel_common_roots_at(PolyQuotient q, std::span<const cplx> points, double zero_tol, int* cancelled) {
  int count = 0;
  for (const cplx r : points) {
    if (q.num.is_zero()) break;
    const int k = std::min(zero_order_at(q.num, r, zero_tol), zero_order_at(q.den, r, zero_tol));
    for (int c = 0; c < k; ++c) {
      q.num = deflate(q.num, r).first;
      q.den = deflate(q.den, r).first;
    }
    count += k;
  }
  if (cancelled) *cancelled = count;
  return q;
}

}  // namespace nevpick
