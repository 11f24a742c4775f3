#include "mfp/error.hpp"

namespace mfp {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::VariableSetMismatch: return "VariableSetMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::DimensionUnknown: return "DimensionUnknown";
    case ErrorKind::PointNotOnVariety: return "PointNotOnVariety";
    case ErrorKind::OriginNotOnVariety: return "OriginNotOnVariety";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::IrrationalSingularFiberPoint: return "IrrationalSingularFiberPoint";
    case ErrorKind::NotACurve: return "NotACurve";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotSingularFamily: return "NotSingularFamily";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ZeroPolynomialLine: return "ZeroPolynomialLine";
  }
  return "Unknown";
}

}  // namespace mfp
