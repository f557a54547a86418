#ifndef HKLAB_ERRORS_HPP
#define HKLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hklab {

// Failure kinds surfaced by the library.  The CLI maps these to process
// exit codes: input problems exit 2, resource/overflow problems exit 3.
enum class ErrorCode {
  DivisionByZero,
  CharMismatch,
  ArityMismatch,
  OrderMismatch,
  NotDivisible,
  ExponentOverflow,
  InfiniteLength,
  UnitIdeal,
  NotFrobeniusPower,
  NotPrimary,
  ZeroDimensionalRing,
  InsufficientSamples,
  BadDims,
  NotLocalInput,
  NonPrimeModulus,
  ParseError,
  UnknownName,
  BadInput,
  ResourceLimit,
};

const char* error_code_name(ErrorCode code);

// True for codes that signal an exhausted machine limit rather than a
// malformed request.
bool is_resource_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hklab

#endif
