#pragma once

#include <Eigen/Core>
#include <array>

#include "nevpick/ratfun.hpp"

namespace nevpick {

/// 2x2 matrix of rational functions, row-major.
struct RatMat2 {
  std::array<RatFun, 4> entries{RatFun(1.0), RatFun(), RatFun(), RatFun(1.0)};

  static RatMat2 identity() { return {}; }

  const RatFun& operator()(int i, int j) const { return entries[static_cast<std::size_t>(2 * i + j)]; }
  RatFun& operator()(int i, int j) { return entries[static_cast<std::size_t>(2 * i + j)]; }

  /// Entrywise evaluation; throws PoleAtPoint if any entry has a pole at z.
  Eigen::Matrix2cd eval(cplx z) const;
  RatFun det() const;
};

inline Eigen::Matrix2cd ratmat_eval(const RatMat2& m, cplx z) { return m.eval(z); }

}  // namespace nevpick
