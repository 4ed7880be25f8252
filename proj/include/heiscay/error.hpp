#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heiscay {

enum class ErrorCode {
  NonPrimeK,
  VacuousM,
  BadK,
  ParamMismatch,
  BudgetExceeded,
  HasBPart,
  DegenerateGenerators,
  NotClosed,
  LoopGenerated,
  InvalidArc,
  InvalidPerm,
  SizeMismatch,
  NotAutomorphism,
  NotTransitive,
  CapExceeded,
  ParseError,
  CertificationFailed,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported through this type; `code()` identifies
/// the failure class so callers (tests, CLI) can dispatch without parsing
/// the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace heiscay
