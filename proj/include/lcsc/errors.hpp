#pragma once

#include <stdexcept>
#include <string>

namespace lcsc {

// Error codes used across the library. Every thrown lcsc::Error carries one of
// these plus a human-readable message that names the witness objects.
enum class Errc {
  DuplicateId,
  MissingComposite,
  AxiomViolation,
  NotFunctorial,
  VertexNotUnit,
  BudgetedUnsupported,
  EmptyFamily,
  FNotAtVertex,
  NotAutomorphism,
  NotAction,
  NotFree,
  NotACategory,
  NotInvariant,
  NotAFunctor,
  NotAnAction,
  NotConnected,
  NotGroupoid,
  NotConnectedBase,
  Degenerate,
  ZeroColumn,
  ShapeMismatch,
  BatteryTooLarge,
  SearchBudgetExceeded,
  VerificationFailed,
  ParseError,
  ValidationError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace lcsc
