#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monoalg {

enum class ErrorKind {
  // lattice-core
  InfiniteQuotient,
  NotInLattice,
  AmbiguousSolution,
  // semigroup
  EmptyInput,
  NegativeEntry,
  ZeroGenerator,
  DuplicateGenerator,
  DimensionMismatch,
  OutsideSpan,
  Overflow,
  // preconditions
  NotSimplicial,
  NotHomogeneous,
  NonMinimalGenerators,
  InvalidCharacteristic,
  // input
  Syntax,
  RaggedRows,
  NonInteger,
  Usage,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// True for the error classes the CLI reports as precondition violations
/// (exit code 2) rather than usage or parse errors (exit code 1).
bool is_precondition(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace monoalg
