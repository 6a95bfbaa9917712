#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <ranges>
#include <string>
#include <tuple>
#include <vector>

#include "fincat/validation.hpp"

namespace fincat {

struct ObjId {
  std::size_t value = 0;
  friend constexpr auto operator<=>(ObjId, ObjId) = default;
};

struct MorId {
  std::size_t value = 0;
  friend constexpr auto operator<=>(MorId, MorId) = default;
};

/// Exhaustive checks refuse categories with more morphisms than this.
inline constexpr std::size_t kDefaultMorphismBudget = 512;

struct MorphismData {
  std::string label;
  ObjId dom;
  ObjId cod;

  bool operator==(const MorphismData&) const = default;
};

/// A finite category given by explicit tables.
///
/// Morphisms are indexed globally; hom-sets are derived views. Composition is
/// a dense |K1| x |K1| table indexed (g, f) holding g∘f or "undefined". The
/// constructor only checks that every table entry refers to an existing
/// object or morphism; the category axioms are checked by
/// validate_category().
class FinCategory {
 public:
  FinCategory() = default;
  FinCategory(std::vector<std::string> object_labels,
              std::vector<MorphismData> morphisms, std::vector<MorId> identity_of,
              std::vector<std::optional<MorId>> compose_table);

  std::size_t object_count() const noexcept { return object_labels_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }

  auto objects() const {
    return std::views::iota(std::size_t{0}, object_count()) |
           std::views::transform([](std::size_t i) { return ObjId{i}; });
  }
  auto morphisms() const {
    return std::views::iota(std::size_t{0}, morphism_count()) |
           std::views::transform([](std::size_t i) { return MorId{i}; });
  }

  const std::string& object_label(ObjId x) const;
  const std::string& morphism_label(MorId f) const;
  const MorphismData& morphism(MorId f) const;
  ObjId dom(MorId f) const { return morphism(f).dom; }
  ObjId cod(MorId f) const { return morphism(f).cod; }
  MorId identity(ObjId x) const;

  /// Raw table lookup of g∘f; empty when the table has no entry.
  std::optional<MorId> compose(MorId g, MorId f) const;
  /// g∘f, throwing BoundaryMismatch when the pair is not composable or the
  /// table has no entry.
  MorId then_compose(MorId g, MorId f) const;

  std::optional<ObjId> find_object(const std::string& label) const;
  std::optional<MorId> find_morphism(const std::string& label) const;

  const std::vector<std::string>& object_labels() const noexcept { return object_labels_; }
  const std::vector<MorphismData>& morphism_table() const noexcept { return morphisms_; }
  const std::vector<MorId>& identity_table() const noexcept { return identity_of_; }
  const std::vector<std::optional<MorId>>& compose_table() const noexcept {
    return compose_;
  }

  bool operator==(const FinCategory&) const = default;

 private:
  std::vector<std::string> object_labels_;
  std::vector<MorphismData> morphisms_;
  std::vector<MorId> identity_of_;
  std::vector<std::optional<MorId>> compose_;
};

using CategoryRef = std::shared_ptr<const FinCategory>;

inline CategoryRef share(FinCategory c) {
  return std::make_shared<const FinCategory>(std::move(c));
}

/// True when both refer to table-identical categories.
bool same_category(const CategoryRef& a, const CategoryRef& b);

/// Incremental construction by label. Identity compositions (1∘f, f∘1) are
/// filled in by build() wherever no entry was given.
class CategoryBuilder {
 public:
  ObjId add_object(std::string label);
  MorId add_morphism(std::string label, ObjId dom, ObjId cod);
  /// Adds a morphism X->X and registers it as the identity of X.
  MorId add_identity(ObjId x, std::string label = {});
  void set_identity(ObjId x, MorId id);
  void set_compose(MorId g, MorId f, MorId result);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }

  /// Throws MalformedInput if an object has no identity.
  FinCategory build(bool fill_identity_laws = true) const;

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismData> morphisms_;
  std::vector<std::optional<MorId>> identities_;
  std::vector<std::tuple<MorId, MorId, MorId>> compositions_;
};

ValidationReport validate_category(const FinCategory& c);

/// Throws InvalidCategory (with the report summary) unless c is valid, and
/// BudgetExceeded if c has more morphisms than `morphism_budget`.
void require_valid(const FinCategory& c,
                   std::size_t morphism_budget = kDefaultMorphismBudget);

FinCategory opposite(const FinCategory& c);

std::vector<MorId> hom_set(const FinCategory& c, ObjId x, ObjId y);

struct MorphismClass {
  bool is_mono = false;
  bool is_epi = false;
  bool is_iso = false;
  std::optional<MorId> inverse;

  bool operator==(const MorphismClass&) const = default;
};

MorphismClass classify_morphism(const FinCategory& c, MorId f,
                                std::size_t morphism_budget = kDefaultMorphismBudget);

/// All isomorphisms X -> Y.
std::vector<MorId> isomorphisms(const FinCategory& c, ObjId x, ObjId y);
bool is_isomorphic(const FinCategory& c, ObjId x, ObjId y);

struct ExtremalObjects {
  std::vector<ObjId> initial;
  std::vector<ObjId> terminal;
  std::vector<ObjId> zero;
  /// Every pair inside each list is joined by exactly one morphism each way,
  /// and that morphism is an isomorphism.
  bool uniquely_isomorphic = true;
};

ExtremalObjects find_extremal_objects(const FinCategory& c,
                                      std::size_t morphism_budget = kDefaultMorphismBudget);

}  // namespace fincat

template <>
struct std::hash<fincat::ObjId> {
  std::size_t operator()(fincat::ObjId x) const noexcept { return x.value; }
};
template <>
struct std::hash<fincat::MorId> {
  std::size_t operator()(fincat::MorId f) const noexcept { return f.value; }
};
