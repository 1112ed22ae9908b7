#pragma once

#include <stdexcept>
#include <string>

namespace minfam {

enum class ErrorCode {
  IncompatibleBases,
  ConversionUndefined,
  Overflow,
  RankTooLarge,
  NotAPermutation,
  NotAnInvolution,
  NotAnIsometry,
  CanonicalNotFixed,
  InvalidRoot,
  RootsNotSigmaClosed,
  InconsistentRoots,
  DecompositionDiverged,
  HNotInvariant,
  HNotPositive,
  HNotNef,
  RealStructureViolated,
  ChainDiverged,
  OracleOutOfRange,
  NotMinimalRuledPair,
  NoCoveringFamily,
  NotRRational,
  LevelMismatch,
  InvalidAlpha,
  Syntax,
  InvalidField,
  Io,
};

// Stable machine-readable name, e.g. "E_NOT_AN_INVOLUTION".
const char* error_code_name(ErrorCode code);

// True for codes that describe a bad descriptor rather than a failed
// classification of a well-formed one.
bool is_descriptor_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace minfam
