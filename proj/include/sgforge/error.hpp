#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgforge {

enum class ErrorCode {
  EmptyInput,
  GcdNotOne,
  InvalidGenerator,
  Overflow,
  BaseNotInSemigroup,
  InSemigroup,
  NotInSemigroup,
  DimensionMismatch,
  ShapeMismatch,
  ParseError,
  CapExceeded,
  SweepCapExceeded,
  HypothesisViolated,
  InternalContradiction,
  NonIntegralParameter,
  CertificationFailed,
  Uncertified,
  PreconditionFailed,
  ValidationFailed,
};

std::string_view to_string(ErrorCode code);

// Falsifying instances of the structure theorems: never expected to fire.
constexpr bool is_falsifying(ErrorCode code) {
  return code == ErrorCode::InternalContradiction || code == ErrorCode::NonIntegralParameter ||
         code == ErrorCode::CertificationFailed;
}

// All library failures surface as this exception; `code()` identifies the
// failure kind so callers (CLI, search harness) can classify it.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_falsifying() const noexcept { return sgforge::is_falsifying(code_); }

private:
  ErrorCode code_;
};

}  // namespace sgforge
