#include "nevpick/ratmat.hpp"

namespace nevpick {

Eigen::Matrix2cd RatMat2::eval(cplx z) const {
  Eigen::Matrix2cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = (*this)(i, j)(z);
  return out;
}

RatFun RatMat2::det() const { return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0); }

}  // namespace nevpick
