#pragma once

#include <stdexcept>
#include <string>

namespace shom {

enum class ErrorCode {
  InvalidInput,
  NonAssociative,
  NonCommutative,
  BadUnit,
  NotPrimeChar,
  BackendUnsupported,
  NotPrime,
  RingMismatch,
  InvalidModule,
  NotRLinear,
  NotComposable,
  NotSIso,
  NotSExact,
  MiddleNotCertified,
  DividesS,
  UnsupportedPair,
  UnknownTheorem,
  InternalInvariantViolation,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace shom
