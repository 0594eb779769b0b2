#pragma once

#include <stdexcept>
#include <string>

namespace mfk {

// Every failure the engine can signal, tagged so callers (CLI, C API) can map
// it to an exit status without string matching.
enum class ErrorKind {
  RingMismatch,       // operands live over different rings
  ArityMismatch,      // variable counts don't line up
  ShapeMismatch,      // matrix dimensions inconsistent
  CurvatureMismatch,  // p1*p0 or p0*p1 differs from W*id
  NotClosed,          // map is not a cocycle where one is required
  NotACover,          // 1 is not in the ideal of the cover
  IncompatibleRestrictions,
  CompositionNonzero, // d_out * d_in != 0 in homology input
  LiftFailed,         // lift had no solution where one was required
  PresentationMismatch, // supplied presentations describe different modules
  ConstantTerm,       // potential has nonzero constant term
  VariableCollision,  // tensor factors share a variable name
  BudgetExceeded,     // Groebner pair budget exhausted
  ParseError,         // polynomial literal malformed
  SchemaError,        // problem file violates the schema
  Unsupported,        // request outside the engine's contract
};

class MfError : public std::runtime_error {
public:
  MfError(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

// Exit-status classes shared by the CLI and the C API.
//   0 ok, 1 mathematical failure, 2 input error, 3 budget abort.
inline int error_exit_code(ErrorKind k) {
  switch (k) {
  case ErrorKind::BudgetExceeded:
    return 3;
  case ErrorKind::ParseError:
  case ErrorKind::SchemaError:
  case ErrorKind::RingMismatch:
  case ErrorKind::ArityMismatch:
  case ErrorKind::ShapeMismatch:
  case ErrorKind::VariableCollision:
  case ErrorKind::PresentationMismatch:
  case ErrorKind::Unsupported:
    return 2;
  default:
    return 1;
  }
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string &msg) {
  throw MfError(kind, msg);
}

} // namespace mfk
