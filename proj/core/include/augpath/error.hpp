#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace augpath {

enum class ErrorCode {
  NonSimple,
  NotRegular,
  IndexOutOfRange,
  InvalidMatching,
  NotAugmenting,
  ParseError,
  InvalidParams,
  RejectionBudgetExceeded,
  AsymmetricGenerators,
  InfeasibleParams,
  TooLarge,
  NotConnected,
  NoConvergence,
  NotBestCut,
  SeedMatched,
  BudgetExceeded,
  InsufficientData,
  NotTough,
  NeverTough,
  HypothesisUnchecked,
  BadInput,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace augpath
