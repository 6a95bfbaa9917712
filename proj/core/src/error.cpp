#include "fincat/error.hpp"

#include <fmt/format.h>

#include "fincat/validation.hpp"

namespace fincat {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidCategory: return "InvalidCategory";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::InvalidFunctor: return "InvalidFunctor";
    case ErrorKind::InvalidNatTrans: return "InvalidNatTrans";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::MalformedDiagram: return "MalformedDiagram";
    case ErrorKind::NotACone: return "NotACone";
    case ErrorKind::NotACocone: return "NotACocone";
    case ErrorKind::TrianglesFailed: return "TrianglesFailed";
    case ErrorKind::NotUniversal: return "NotUniversal";
    case ErrorKind::NonFunctorial: return "NonFunctorial";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NotAdjoint: return "NotAdjoint";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::NotABimonoid: return "NotABimonoid";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "ok";
  std::string out = fmt::format("{} violation(s)", violations.size());
  std::size_t shown = 0;
  for (const auto& v : violations) {
    if (shown++ == 8) {
      out += "; ...";
      break;
    }
    out += fmt::format("; {}({})", v.law, fmt::join(v.witness, ","));
    if (!v.message.empty()) out += " " + v.message;
  }
  return out;
}

}  // namespace fincat
