#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace naples {

enum class ErrorCode {
  InvalidPreference,
  ParseError,
  InvalidArgument,
  ShiftOutOfRange,
  EmptyIndexSet,
  IndexOutOfRange,
  NotZeroExcess,
  LengthMismatch,
  NotNonincreasing,
  TooShort,
  NotComplete,
  NotMaximalInterval,
  PreconditionFailed,
  SizeLimitExceeded,
  UnknownProperty,
};

std::string_view to_string(ErrorCode code);

/// Thrown when an operation's precondition or input validation fails.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown when a checked mathematical postcondition does not hold. Seeing one
/// of these means either a library bug or a counterexample to a theorem the
/// library relies on; it is never a user input problem.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] void throw_invariant(const char* expr, const char* file, int line,
                                  const std::string& message);

}  // namespace detail

}  // namespace naples

#define NAPLES_ENSURE(cond, message)                                        \
  do {                                                                      \
    if (!(cond)) {                                                          \
      ::naples::detail::throw_invariant(#cond, __FILE__, __LINE__, message); \
    }                                                                       \
  } while (false)
