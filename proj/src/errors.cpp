#include "monoalg/errors.hpp"

namespace monoalg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InfiniteQuotient: return "InfiniteQuotient";
    case ErrorKind::NotInLattice: return "NotInLattice";
    case ErrorKind::AmbiguousSolution: return "AmbiguousSolution";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::ZeroGenerator: return "ZeroGenerator";
    case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OutsideSpan: return "OutsideSpan";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NonMinimalGenerators: return "NonMinimalGenerators";
    case ErrorKind::InvalidCharacteristic: return "InvalidCharacteristic";
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::RaggedRows: return "RaggedRows";
    case ErrorKind::NonInteger: return "NonInteger";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_precondition(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSimplicial:
    case ErrorKind::NotHomogeneous:
    case ErrorKind::NonMinimalGenerators:
      return true;
    default:
      return false;
  }
}

}  // namespace monoalg
