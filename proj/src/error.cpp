#include "sigatoms/error.hpp"

namespace sigatoms {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "zero_denominator";
    case ErrorKind::SpaceMismatch: return "space_mismatch";
    case ErrorKind::InvalidSpace: return "invalid_space";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::GuardExceeded: return "guard_exceeded";
    case ErrorKind::NotMeasurable: return "not_measurable";
    case ErrorKind::Inconsistent: return "inconsistent";
    case ErrorKind::Underdetermined: return "underdetermined";
    case ErrorKind::NegativeAtomMass: return "negative_atom_mass";
    case ErrorKind::InvalidPmf: return "invalid_pmf";
    case ErrorKind::UnsupportedDistribution: return "unsupported_distribution";
    case ErrorKind::IndexerInconsistent: return "indexer_inconsistent";
    case ErrorKind::FiniteAtomTail: return "finite_atom_tail";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace sigatoms
