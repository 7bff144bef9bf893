#include "monoclose/errors.hpp"

namespace monoclose {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::InvalidSemigroup: return "INVALID_SEMIGROUP";
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::Uncertified: return "UNCERTIFIED";
    case ErrorCode::NotMPrimary: return "NOT_M_PRIMARY";
    case ErrorCode::RingMismatch: return "RING_MISMATCH";
    case ErrorCode::NotStabilized: return "NOT_STABILIZED";
    case ErrorCode::NonIntegralCoefficient: return "NON_INTEGRAL_COEFFICIENT";
    case ErrorCode::UnsupportedRing: return "UNSUPPORTED_RING";
    case ErrorCode::GenerationExhausted: return "GENERATION_EXHAUSTED";
    case ErrorCode::Overflow: return "OVERFLOW";
  }
  return "UNKNOWN";
}

}  // namespace monoclose
