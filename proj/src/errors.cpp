#include "liegiambelli/errors.hpp"

namespace liegiambelli {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidGrowthVector: return "InvalidGrowthVector";
    case ErrorCode::PreconditionError: return "PreconditionError";
    case ErrorCode::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace liegiambelli
