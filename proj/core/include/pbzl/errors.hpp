#ifndef PBZL_ERRORS_HPP
#define PBZL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pbzl {

/// Machine-readable failure categories. Every engine error carries one of
/// these plus a human-readable message with the first witness in
/// lexicographic element order.
enum class ErrorCode {
  SizeLimit,
  NotAPartialOrder,
  NotALattice,
  InvolutionViolation,
  BZAxiomViolation,
  MissingTilde,
  UnboundVariable,
  SyntaxError,
  UnknownName,
  UnknownIdentity,
  NotALatticeIdeal,
  NotAPIdeal,
  PreconditionPKA,
  PreconditionPBZStar,
  PreconditionSDM,
  PreconditionAOL2,
  PreconditionCommute,
  CharacterizationMismatch,
  NotBoolean,
  IsoCheckFailed,
  AmbiguousCompletion,
  BadInput,
};

const char* to_string(ErrorCode code);

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pbzl

#endif
