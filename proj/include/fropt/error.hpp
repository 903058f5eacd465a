#pragma once

#include <stdexcept>
#include <string>

namespace fropt {

enum class ErrorCode {
  InvalidSpec,
  GridTooNarrow,
  OutOfRange,
  NearSingularOrder,
  AliasedInput,
  SingularTime,
  OutOfBranch,
  NoRealSolution,
  NonpositiveOrder,
  NonpositiveDistance,
  KrTooSmall,
  GridMismatch,
  CoincidentPoints,
  QuadratureNotConverged,
  TooCloseToSingularity,
  OutOfWindow,
  DegenerateModel,
  SchemaError,
};

const char* error_code_name(ErrorCode code);

// Numerical-contract violations map to CLI exit code 1, config/schema problems to 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fropt
