#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nevpick {

enum class ErrorCode {
  // ratfun
  ZeroPolynomial,
  NoConvergence,
  ZeroDenominator,
  PoleAtCenter,
  PoleAtPoint,
  // hermlin
  NodeOutsideDisk,
  DuplicateNode,
  ValueCountMismatch,
  SingularSystem,
  NotHermitian,
  // schurclass
  ZeroOutsideDisk,
  NonUnimodularFactor,
  PoleOnBoundary,
  NotContractive,
  ZeroOnBoundary,
  ZeroFunction,
  QuadratureInconclusive,
  SingularOnContour,
  PoleOnGrid,
  DegenerateGrid,
  // interp
  SingularPick,
  PoleAtNode,
  ContourThroughPole,
  NodesNotEnclosed,
  SelfCheckFailed,
  DegenerateDenominator,
  IdenticallyZeroDenominator,
  ValidationMismatch,
  NotInHInfinity,
  // io / cli
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// True for errors that indicate a construction bug rather than bad input.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nevpick
