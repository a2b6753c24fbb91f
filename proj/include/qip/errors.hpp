#pragma once

#include <stdexcept>
#include <string>

namespace qip {

enum class ErrorCode {
  InvalidModel,     // B or C singular, or dimension mismatch
  DegenerateModel,  // X_B or X_C not positive definite
  NotAnInclusion,   // split decomposition fails the rank condition
  NoWitness,        // Cx = 0 but y != Ax
  InfeasiblePoint,  // data point incompatible with any cone
  InfeasibleStart,  // no strictly feasible starting point of the canned pattern
  Unscalable,       // uncertainty scaling has no finite feasible value
  NotHurwitz,       // state matrix has an eigenvalue with nonnegative real part
  InvalidArgument,
  ParseError,
  SchemaError,
};

const char* to_string(ErrorCode code) noexcept;

/// All library failures are reported through this exception type; the code
/// distinguishes contract violations from data-dependent conditions.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qip
