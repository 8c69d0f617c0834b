#pragma once

#include <stdexcept>
#include <string>

namespace workbench {

enum class ErrorCode {
  InvalidInput,
  NonAssociative,
  NoIdentity,
  NoInverse,
  UnsupportedSize,
  NotADivisor,
  ModulusMismatch,
  PrimeNotInverted,
  NotAUnit,
  DescentFailure,
  InsufficientInversion,
  RingMismatch,
  FamilyMismatch,
  FreeModuleUnsupported,
  ParseError,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by group_from_table; carries the first failing triple in
/// lexicographic order, so (a*b)*c != a*(b*c).
class NonAssociativeError : public Error {
 public:
  NonAssociativeError(int a, int b, int c);
  int a, b, c;
};

}  // namespace workbench
