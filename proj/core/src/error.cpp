#include "coquat/error.hpp"

namespace coquat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LightlikeNormalization: return "LightlikeNormalization";
    case ErrorCode::LightlikeInverse: return "LightlikeInverse";
    case ErrorCode::LightlikeNoPolarForm: return "LightlikeNoPolarForm";
    case ErrorCode::NullVectorPart: return "NullVectorPart";
    case ErrorCode::InvalidAxis: return "InvalidAxis";
    case ErrorCode::InvalidPolarForm: return "InvalidPolarForm";
    case ErrorCode::NotALeftRepresentation: return "NotALeftRepresentation";
    case ErrorCode::NegativePowerOfLightlike: return "NegativePowerOfLightlike";
    case ErrorCode::OverflowedToInfinity: return "OverflowedToInfinity";
    case ErrorCode::NonUnitAxis: return "NonUnitAxis";
    case ErrorCode::SeriesDidNotConverge: return "SeriesDidNotConverge";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorCode::NotPure: return "NotPure";
  }
  return "Unknown";
}

}  // namespace coquat
