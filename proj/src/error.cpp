#include "sgforge/error.hpp"

namespace sgforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BaseNotInSemigroup: return "BaseNotInSemigroup";
    case ErrorCode::InSemigroup: return "InSemigroup";
    case ErrorCode::NotInSemigroup: return "NotInSemigroup";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::SweepCapExceeded: return "SweepCapExceeded";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InternalContradiction: return "InternalContradiction";
    case ErrorCode::NonIntegralParameter: return "NonIntegralParameter";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::Uncertified: return "Uncertified";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
  }
  return "Unknown";
}

}  // namespace sgforge
