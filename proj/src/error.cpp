#include "minfam/error.hpp"

namespace minfam {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncompatibleBases: return "E_INCOMPATIBLE_BASES";
    case ErrorCode::ConversionUndefined: return "E_CONVERSION_UNDEFINED";
    case ErrorCode::Overflow: return "E_OVERFLOW";
    case ErrorCode::RankTooLarge: return "E_RANK_TOO_LARGE";
    case ErrorCode::NotAPermutation: return "E_NOT_A_PERMUTATION";
    case ErrorCode::NotAnInvolution: return "E_NOT_AN_INVOLUTION";
    case ErrorCode::NotAnIsometry: return "E_NOT_AN_ISOMETRY";
    case ErrorCode::CanonicalNotFixed: return "E_CANONICAL_NOT_FIXED";
    case ErrorCode::InvalidRoot: return "E_INVALID_ROOT";
    case ErrorCode::RootsNotSigmaClosed: return "E_ROOTS_NOT_SIGMA_CLOSED";
    case ErrorCode::InconsistentRoots: return "E_INCONSISTENT_ROOTS";
    case ErrorCode::DecompositionDiverged: return "E_DECOMPOSITION_DIVERGED";
    case ErrorCode::HNotInvariant: return "E_H_NOT_INVARIANT";
    case ErrorCode::HNotPositive: return "E_H_NOT_POSITIVE";
    case ErrorCode::HNotNef: return "E_H_NOT_NEF";
    case ErrorCode::RealStructureViolated: return "E_REAL_STRUCTURE_VIOLATED";
    case ErrorCode::ChainDiverged: return "E_CHAIN_DIVERGED";
    case ErrorCode::OracleOutOfRange: return "E_ORACLE_OUT_OF_RANGE";
    case ErrorCode::NotMinimalRuledPair: return "E_NOT_MINIMAL_RULED_PAIR";
    case ErrorCode::NoCoveringFamily: return "E_NO_COVERING_FAMILY";
    case ErrorCode::NotRRational: return "E_NOT_R_RATIONAL";
    case ErrorCode::LevelMismatch: return "E_LEVEL_MISMATCH";
    case ErrorCode::InvalidAlpha: return "E_INVALID_ALPHA";
    case ErrorCode::Syntax: return "E_SYNTAX";
    case ErrorCode::InvalidField: return "E_INVALID_FIELD";
    case ErrorCode::Io: return "E_IO";
  }
  return "E_UNKNOWN";
}

bool is_descriptor_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncompatibleBases:
    case ErrorCode::NotAPermutation:
    case ErrorCode::NotAnInvolution:
    case ErrorCode::NotAnIsometry:
    case ErrorCode::CanonicalNotFixed:
    case ErrorCode::InvalidRoot:
    case ErrorCode::RootsNotSigmaClosed:
    case ErrorCode::InconsistentRoots:
    case ErrorCode::HNotInvariant:
    case ErrorCode::HNotPositive:
    case ErrorCode::HNotNef:
    case ErrorCode::RankTooLarge:
    case ErrorCode::Syntax:
    case ErrorCode::InvalidField:
    case ErrorCode::Io:
      return true;
    default:
      return false;
  }
}

}  // namespace minfam
