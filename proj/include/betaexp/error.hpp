#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace betaexp {

// Failure categories shared by every module. The CLI maps them onto exit codes.
enum class Errc {
  ParseError,
  InvalidArgument,
  NoRootInInterval,
  RootOutsideUnitRange,
  MixedBase,
  DivisionByZero,
  OutOfDomain,
  Undecided,
  UndeterminedWithinHorizon,
  ValueExceedsOne,
  HorizonExhausted,
  NotAdmissible,
  OccurrenceNotFound,
  BudgetExhausted,
  BackendUnsupported,
  LengthCapExceeded,
  NotFinitary,
  NodeBudgetExceeded,
  QuasiGreedyUnavailable,
  PrecisionCapExceeded,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace betaexp
