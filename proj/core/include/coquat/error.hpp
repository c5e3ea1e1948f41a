#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coquat {

enum class ErrorCode {
  NonFinite,
  InvalidArgument,
  LightlikeNormalization,
  LightlikeInverse,
  LightlikeNoPolarForm,
  NullVectorPart,
  InvalidAxis,
  InvalidPolarForm,
  NotALeftRepresentation,
  NegativePowerOfLightlike,
  OverflowedToInfinity,
  NonUnitAxis,
  SeriesDidNotConverge,
  // Raised by the expression evaluator only.
  ArityMismatch,
  TypeMismatch,
  NonIntegerExponent,
  NotPure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every library failure is reported as an Error carrying a stable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coquat
