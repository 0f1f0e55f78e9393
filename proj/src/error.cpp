#include "nhnet/error.hpp"

namespace nhnet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::SpectraOverlap: return "SpectraOverlap";
    case ErrorKind::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::ResonantEnergy: return "ResonantEnergy";
    case ErrorKind::SingularAuxiliary: return "SingularAuxiliary";
    case ErrorKind::NoSynthesisNeeded: return "NoSynthesisNeeded";
    case ErrorKind::NonDissipativeAuxiliary: return "NonDissipativeAuxiliary";
    case ErrorKind::DegenerateBond: return "DegenerateBond";
    case ErrorKind::SingularScatteringSystem: return "SingularScatteringSystem";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NoBracket: return "NoBracket";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace nhnet
