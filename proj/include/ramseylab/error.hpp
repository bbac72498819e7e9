#pragma once

#include <stdexcept>
#include <string>

namespace ramseylab {

// Stable error codes surfaced through the CLI and asserted in tests.
enum class ErrorCode {
  OddDimension,
  KOutOfRange,
  ParseError,
  SizeLimit,
  NotFound,
  PreconditionFailed,
  ParameterError,
  NotFree,
  NoMatchingRow,
  IncompatibleOverlap,
  UnknownVertex,
  UnknownLine,
  InfeasiblePattern,
  PartialColoring,
  DomainError,
  IoError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ParameterError: return "ParameterError";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::NoMatchingRow: return "NoMatchingRow";
    case ErrorCode::IncompatibleOverlap: return "IncompatibleOverlap";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownLine: return "UnknownLine";
    case ErrorCode::InfeasiblePattern: return "InfeasiblePattern";
    case ErrorCode::PartialColoring: return "PartialColoring";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace ramseylab
