#include "nevpick/error.hpp"

namespace nevpick {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::PoleAtCenter: return "PoleAtCenter";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::NodeOutsideDisk: return "NodeOutsideDisk";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::ValueCountMismatch: return "ValueCountMismatch";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::ZeroOutsideDisk: return "ZeroOutsideDisk";
    case ErrorCode::NonUnimodularFactor: return "NonUnimodularFactor";
    case ErrorCode::PoleOnBoundary: return "PoleOnBoundary";
    case ErrorCode::NotContractive: return "NotContractive";
    case ErrorCode::ZeroOnBoundary: return "ZeroOnBoundary";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::QuadratureInconclusive: return "QuadratureInconclusive";
    case ErrorCode::SingularOnContour: return "SingularOnContour";
    case ErrorCode::PoleOnGrid: return "PoleOnGrid";
    case ErrorCode::DegenerateGrid: return "DegenerateGrid";
    case ErrorCode::SingularPick: return "SingularPick";
    case ErrorCode::PoleAtNode: return "PoleAtNode";
    case ErrorCode::ContourThroughPole: return "ContourThroughPole";
    case ErrorCode::NodesNotEnclosed: return "NodesNotEnclosed";
    case ErrorCode::SelfCheckFailed: return "SelfCheckFailed";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::IdenticallyZeroDenominator: return "IdenticallyZeroDenominator";
    case ErrorCode::ValidationMismatch: return "ValidationMismatch";
    case ErrorCode::NotInHInfinity: return "NotInHInfinity";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfCheckFailed:
    case ErrorCode::ValidationMismatch:
    case ErrorCode::DegenerateDenominator:
    case ErrorCode::SingularSystem:
    case ErrorCode::NoConvergence:
      return true;
    default:
      return false;
  }
}

}  // namespace nevpick
