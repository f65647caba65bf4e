#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypdeg {

enum class ErrorCode {
  NotDivisible,
  NotHomogeneous,
  BadReduction,
  DegreeTooLarge,
  InfeasibleH,
  DTooSmall,
  RegionViolated,
  WindowTooSmall,
  NotASolution,
  SingularInput,
  NotCoprime,
  CornerMismatch,
  EvenDegreeInput,
  DegreeDropAnomaly,
  BudgetExhausted,
  DegenerateH,
  SquareLeadingCoeff,
  TargetUnreachable,
  BoundsTooLarge,
  ParseError,
  ConfigError,
  PreconditionFailed,
};

std::string_view error_code_name(ErrorCode code);

/// Single exception type for the library; the code identifies which contract failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace hypdeg
