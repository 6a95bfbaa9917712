#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fincat/adjunction.hpp"
#include "fincat/algebraic.hpp"
#include "fincat/hopf.hpp"
#include "fincat/limits.hpp"
#include "fincat/monad.hpp"
#include "fincat/yoneda.hpp"

// Bundle text format. One bundle per file:
//
//   fincat <kind>
//   <key> <value tokens...>
//   ...
//
// '#' starts a comment. A key whose value is another bundle takes either
// `file <relative path>` or an inline block `{ ... }` closed by a line
// holding only `}`. Categories may also be given as `preset <name> <args>`.
// See docs/format.md for the grammar of every kind.

namespace fincat {

enum class BundleKind {
  Category,
  Functor,
  NatTrans,
  Diagram,
  Adjunction,
  Galois,
  Algebra,
  Group,
  Monad,
  SetFunctor,
};

std::string_view to_string(BundleKind kind) noexcept;
std::optional<BundleKind> bundle_kind_from_string(std::string_view s);

/// A category together with the preset it came from, if any.
struct CategoryPayload {
  CategoryRef category;
  std::optional<std::string> preset;  // e.g. "chain 3"
};

/// Structure maps over GF(p); absent maps are simply not part of the bundle.
struct AlgebraPayload {
  std::uint64_t modulus = 2;
  std::size_t dim = 0;
  std::optional<ModMatrix> mult, unit, comult, counit, antipode;

  bool has_algebra() const { return mult && unit; }
  bool has_coalgebra() const { return comult && counit; }
  AlgebraData algebra() const;
  CoalgebraData coalgebra() const;
  BimonoidData bimonoid() const;
  HopfData hopf() const;
};

using BundlePayload = std::variant<CategoryPayload, FinFunctor, NatTrans, Diagram, AdjunctionData,
                                   GaloisConnection, AlgebraPayload, FinGroup, MonadData,
                                   SetValuedFunctor>;

struct Bundle {
  BundleKind kind = BundleKind::Category;
  BundlePayload payload;
  std::string source_path;
};

/// Category presets: terminal, chain n, discrete n, cyclic-monoid n,
/// finset-skeleton n, poset-square, parallel-pair, span, iso-pair.
CategoryPayload category_preset(const std::string& descriptor);

/// Throws ParseError (with line:col), SchemaMismatch (wrong or unexpected
/// kind), ValidationFailed (payload fails its module validator) or IoError.
/// With `validate` false only structural checks run.
Bundle parse_bundle(const std::filesystem::path& path, bool validate = true);
Bundle parse_bundle_text(std::string_view text, const std::filesystem::path& base_dir = ".",
                         bool validate = true, std::string source_path = "<text>");
/// Like parse_bundle but requires a kind.
Bundle parse_bundle_as(const std::filesystem::path& path, BundleKind kind, bool validate = true);

/// Self-contained text: every nested bundle is written inline.
std::string write_bundle(const Bundle& b);
Bundle make_bundle(BundlePayload payload);

/// Structural validation used by the parser; throws ValidationFailed.
void validate_payload(const Bundle& b);

struct Fixture {
  std::string name;  // file name inside the corpus directory
  Bundle bundle;
};

/// The canonical fixture set, in a fixed order.
std::vector<Fixture> corpus_fixtures();
/// Writes corpus_fixtures() into dir; returns the written paths. Throws IoError.
std::vector<std::filesystem::path> emit_corpus(const std::filesystem::path& dir);

/// FNV-1a 64-bit, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);
std::string read_file(const std::filesystem::path& path);

}  // namespace fincat
