#include "fropt/error.hpp"

namespace fropt {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::GridTooNarrow: return "GridTooNarrow";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NearSingularOrder: return "NearSingularOrder";
    case ErrorCode::AliasedInput: return "AliasedInput";
    case ErrorCode::SingularTime: return "SingularTime";
    case ErrorCode::OutOfBranch: return "OutOfBranch";
    case ErrorCode::NoRealSolution: return "NoRealSolution";
    case ErrorCode::NonpositiveOrder: return "NonpositiveOrder";
    case ErrorCode::NonpositiveDistance: return "NonpositiveDistance";
    case ErrorCode::KrTooSmall: return "KrTooSmall";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::TooCloseToSingularity: return "TooCloseToSingularity";
    case ErrorCode::OutOfWindow: return "OutOfWindow";
    case ErrorCode::DegenerateModel: return "DegenerateModel";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace fropt
