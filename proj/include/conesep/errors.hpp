#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conesep {

enum class ErrorCode {
  DimensionMismatch,
  DegenerateInput,
  ParseError,
  ZeroFunctional,
  NotSymmetric,
  OriginNotInterior,
  NotSolid,
  EmptyFamily,
  BadOrder,
  DimensionTooLarge,
  UnboundedPolyhedron,
  NotNormlike,
  NontrivialityViolated,
  UnsupportedOverlap,
  NoPositiveInfimum,
  BadEpsilon,
  NotPointed,
  InvalidArgument,
  HypothesisFailed,
  RejectionLimit,
  InternalError,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroFunctional: return "ZeroFunctional";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NotSolid: return "NotSolid";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::UnboundedPolyhedron: return "UnboundedPolyhedron";
    case ErrorCode::NotNormlike: return "NotNormlike";
    case ErrorCode::NontrivialityViolated: return "NontrivialityViolated";
    case ErrorCode::UnsupportedOverlap: return "UnsupportedOverlap";
    case ErrorCode::NoPositiveInfimum: return "NoPositiveInfimum";
    case ErrorCode::BadEpsilon: return "BadEpsilon";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::RejectionLimit: return "RejectionLimit";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace conesep
