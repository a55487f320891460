#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liegiambelli {

enum class ErrorCode {
  FieldMismatch,
  NotInvertible,
  UnsupportedField,
  BadConstantTerm,
  WeightMismatch,
  ShapeError,
  NonIntegralCoefficient,
  BadRank,
  DomainError,
  InternalError,
  TooLarge,
  InvalidGrowthVector,
  PreconditionError,
  UnsupportedParameter,
  ParseError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// All computational failures raised by the library carry one of the codes
// above; the CLI maps them to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace liegiambelli
