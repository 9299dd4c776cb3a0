#include "monodec/error.hpp"

namespace monodec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::PartialTransitionFunction: return "PartialTransitionFunction";
    case ErrorKind::UnknownState: return "UnknownState";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::MonoidTooLarge: return "MonoidTooLarge";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::InvalidPeriod: return "InvalidPeriod";
    case ErrorKind::ScopeError: return "ScopeError";
    case ErrorKind::BlockLengthError: return "BlockLengthError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalNoPositiveCycle: return "InternalNoPositiveCycle";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
  }
  return "Error";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> offset) {
  std::string out(to_string(kind));
  if (offset) out += " at offset " + std::to_string(*offset);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(decorate(kind, message, offset)),
      kind_(kind),
      offset_(offset) {}

}  // namespace monodec
