#include "naples/error.hpp"

#include <sstream>

namespace naples {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPreference: return "InvalidPreference";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorCode::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotZeroExcess: return "NotZeroExcess";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotNonincreasing: return "NotNonincreasing";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NotMaximalInterval: return "NotMaximalInterval";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
  }
  return "Unknown";
}

namespace detail {

void throw_invariant(const char* expr, const char* file, int line,
                     const std::string& message) {
  std::ostringstream os;
  os << file << ":" << line << ": invariant `" << expr << "` violated";
  if (!message.empty()) os << ": " << message;
  throw InvariantViolation(os.str());
}

}  // namespace detail

}  // namespace naples
