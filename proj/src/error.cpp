#include "error.hpp"

namespace shom {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::NonCommutative: return "NonCommutative";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::NotPrimeChar: return "NotPrimeChar";
    case ErrorCode::BackendUnsupported: return "BackendUnsupported";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::InvalidModule: return "InvalidModule";
    case ErrorCode::NotRLinear: return "NotRLinear";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::NotSIso: return "NotSIso";
    case ErrorCode::NotSExact: return "NotSExact";
    case ErrorCode::MiddleNotCertified: return "MiddleNotCertified";
    case ErrorCode::DividesS: return "DividesS";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

}  // namespace shom
