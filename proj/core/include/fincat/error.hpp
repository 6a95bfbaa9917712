#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fincat {

enum class ErrorKind {
  IndexOutOfRange,
  InvalidCategory,
  MalformedInput,
  InvalidFunctor,
  InvalidNatTrans,
  BoundaryMismatch,
  BudgetExceeded,
  NotInvertible,
  MalformedDiagram,
  NotACone,
  NotACocone,
  TrianglesFailed,
  NotUniversal,
  NonFunctorial,
  NotMonotone,
  NotAdjoint,
  NotALattice,
  TypeMismatch,
  ModulusMismatch,
  DimensionMismatch,
  InvalidGroup,
  NotABimonoid,
  ParseError,
  SchemaMismatch,
  ValidationFailed,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (and the CLI
// exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fincat
