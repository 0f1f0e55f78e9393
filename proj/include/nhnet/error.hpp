#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nhnet {

enum class ErrorKind {
  InvalidInput,
  DimensionMismatch,
  SingularMatrix,
  ConvergenceFailure,
  SpectraOverlap,
  DegenerateLeadingCoefficient,
  StepTooLarge,
  ResonantEnergy,
  SingularAuxiliary,
  NoSynthesisNeeded,
  NonDissipativeAuxiliary,
  DegenerateBond,
  SingularScatteringSystem,
  DomainError,
  ZeroVector,
  NoBracket,
  InvalidConfig,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the CLI exit codes)
/// can distinguish bad input from numerical breakdown.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nhnet
