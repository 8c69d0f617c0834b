#include "workbench/error.hpp"

namespace workbench {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::PrimeNotInverted: return "PrimeNotInverted";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::DescentFailure: return "DescentFailure";
    case ErrorCode::InsufficientInversion: return "InsufficientInversion";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::FreeModuleUnsupported: return "FreeModuleUnsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

NonAssociativeError::NonAssociativeError(int a_, int b_, int c_)
    : Error(ErrorCode::NonAssociative,
            "(" + std::to_string(a_) + "*" + std::to_string(b_) + ")*" + std::to_string(c_) +
                " != " + std::to_string(a_) + "*(" + std::to_string(b_) + "*" +
                std::to_string(c_) + ")"),
      a(a_), b(b_), c(c_) {}

}  // namespace workbench
