#include "betaexp/error.hpp"

namespace betaexp {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NoRootInInterval: return "NoRootInInterval";
    case Errc::RootOutsideUnitRange: return "RootOutsideUnitRange";
    case Errc::MixedBase: return "MixedBase";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::Undecided: return "Undecided";
    case Errc::UndeterminedWithinHorizon: return "UndeterminedWithinHorizon";
    case Errc::ValueExceedsOne: return "ValueExceedsOne";
    case Errc::HorizonExhausted: return "HorizonExhausted";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::OccurrenceNotFound: return "OccurrenceNotFound";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::BackendUnsupported: return "BackendUnsupported";
    case Errc::LengthCapExceeded: return "LengthCapExceeded";
    case Errc::NotFinitary: return "NotFinitary";
    case Errc::NodeBudgetExceeded: return "NodeBudgetExceeded";
    case Errc::QuasiGreedyUnavailable: return "QuasiGreedyUnavailable";
    case Errc::PrecisionCapExceeded: return "PrecisionCapExceeded";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace betaexp
