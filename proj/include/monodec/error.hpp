#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monodec {

enum class ErrorKind {
  SyntaxError,
  AlphabetMismatch,
  FormatError,
  PartialTransitionFunction,
  UnknownState,
  UnknownSymbol,
  MonoidTooLarge,
  TooLarge,
  NotAnIdeal,
  NotAnAction,
  NotDistributive,
  InvalidPeriod,
  ScopeError,
  BlockLengthError,
  BudgetExceeded,
  InvalidArgument,
  // Internal: a construction failed its own check.
  InternalNoPositiveCycle,
  VerificationFailure,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` tells callers how to react.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }

  /// Byte offset into the source text, set for syntax errors.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

  /// True for failures that would contradict a proved property.
  bool is_internal() const noexcept {
    return kind_ == ErrorKind::InternalNoPositiveCycle ||
           kind_ == ErrorKind::VerificationFailure;
  }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> offset_;
};

}  // namespace monodec
