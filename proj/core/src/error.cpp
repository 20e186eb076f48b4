#include "augpath/error.hpp"

namespace augpath {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSimple: return "NonSimple";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidMatching: return "InvalidMatching";
    case ErrorCode::NotAugmenting: return "NotAugmenting";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorCode::AsymmetricGenerators: return "AsymmetricGenerators";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotBestCut: return "NotBestCut";
    case ErrorCode::SeedMatched: return "SeedMatched";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::NotTough: return "NotTough";
    case ErrorCode::NeverTough: return "NeverTough";
    case ErrorCode::HypothesisUnchecked: return "HypothesisUnchecked";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace augpath
