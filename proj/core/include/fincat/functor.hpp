#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/validation.hpp"

namespace fincat {

/// Default cap on typed candidate functors explored by enumerate_functors.
inline constexpr std::size_t kDefaultFunctorBudget = 20'000;

/// A functor between finite categories, stored as object and morphism
/// tables. Contravariant functors are functors out of opposite(C).
class FinFunctor {
 public:
  FinFunctor() = default;
  /// Throws IndexOutOfRange if a table has the wrong length or refers to a
  /// nonexistent target object/morphism.
  FinFunctor(CategoryRef source, CategoryRef target, std::vector<ObjId> obj_map,
             std::vector<MorId> mor_map);

  const CategoryRef& source() const noexcept { return source_; }
  const CategoryRef& target() const noexcept { return target_; }
  ObjId operator()(ObjId x) const { return obj_map_.at(x.value); }
  MorId operator()(MorId f) const { return mor_map_.at(f.value); }
  const std::vector<ObjId>& object_map() const noexcept { return obj_map_; }
  const std::vector<MorId>& morphism_map() const noexcept { return mor_map_; }

  /// Same tables between table-identical categories.
  bool operator==(const FinFunctor& other) const;

 private:
  CategoryRef source_;
  CategoryRef target_;
  std::vector<ObjId> obj_map_;
  std::vector<MorId> mor_map_;
};

ValidationReport validate_functor(const FinFunctor& f);
void require_valid(const FinFunctor& f);

struct FunctorTraits {
  bool faithful = false;
  bool full = false;
};

/// Throws InvalidFunctor if f fails validation.
FunctorTraits functor_traits(const FinFunctor& f);

FinFunctor identity_functor(const CategoryRef& c);
/// g∘f; throws BoundaryMismatch unless f.target matches g.source.
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);
/// Δ_x: every object to x, every morphism to 1_x.
FinFunctor constant_functor(const CategoryRef& source, const CategoryRef& target, ObjId x);

/// A family of components indexed by source objects. Only typing is checked
/// at construction; naturality is checked by validate_nat_trans.
class NatTrans {
 public:
  NatTrans() = default;
  /// Throws BoundaryMismatch unless from/to share source and target, and
  /// IndexOutOfRange on a malformed component table.
  NatTrans(FinFunctor from, FinFunctor to, std::vector<MorId> components);

  const FinFunctor& from() const noexcept { return from_; }
  const FinFunctor& to() const noexcept { return to_; }
  const CategoryRef& source() const noexcept { return from_.source(); }
  const CategoryRef& target() const noexcept { return from_.target(); }
  MorId operator[](ObjId x) const { return components_.at(x.value); }
  const std::vector<MorId>& components() const noexcept { return components_; }

  bool operator==(const NatTrans& other) const = default;

 private:
  FinFunctor from_;
  FinFunctor to_;
  std::vector<MorId> components_;
};

/// Typing (component X in hom(FX, GX)) and every naturality square.
ValidationReport validate_nat_trans(const NatTrans& t);
void require_valid(const NatTrans& t);

NatTrans identity_nat(const FinFunctor& f);

/// ν∘μ with μ: F⇒G and ν: G⇒H, components ν_X∘μ_X.
NatTrans vertical_compose(const NatTrans& nu, const NatTrans& mu);

/// β∗α for α: F⇒G (K->L) and β: H⇒J (L->M); component J(α_X)∘β_{FX}.
NatTrans horizontal_compose(const NatTrans& beta, const NatTrans& alpha);
/// The same composite through β_{GX}∘H(α_X); agrees with horizontal_compose
/// whenever β is natural.
NatTrans horizontal_compose_alt(const NatTrans& beta, const NatTrans& alpha);

/// 1_H ∗ α, components H(α_X).
NatTrans whisker_left(const FinFunctor& h, const NatTrans& alpha);
/// β ∗ 1_F, components β_{FX}.
NatTrans whisker_right(const NatTrans& beta, const FinFunctor& f);

/// (δ∘γ)∗(β∘α) == (δ∗β)∘(γ∗α) for α: F⇒G, β: G⇒H between K and L and
/// γ: J⇒J', δ: J'⇒J'' between L and M. Throws InvalidNatTrans if any input
/// is not natural, BoundaryMismatch if they do not paste.
bool check_interchange(const NatTrans& delta, const NatTrans& gamma, const NatTrans& beta,
                       const NatTrans& alpha);

/// Sum over object maps of the product of target hom-set sizes; the number
/// of typed candidates enumerate_functors would inspect.
std::size_t functor_candidate_bound(const FinCategory& source, const FinCategory& target,
                                    std::size_t cap);

/// All functors source -> target in lexicographic (object map, morphism map)
/// order. Throws BudgetExceeded when the candidate bound exceeds `budget`.
std::vector<FinFunctor> enumerate_functors(const CategoryRef& source,
                                           const CategoryRef& target,
                                           std::size_t budget = kDefaultFunctorBudget);

/// All natural transformations F ⇒ G, lexicographic over components.
std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& from, const FinFunctor& to,
                                          std::size_t budget = kDefaultFunctorBudget);

struct FunctorCategory {
  CategoryRef category;
  std::vector<FinFunctor> functors;        // object i
  std::vector<NatTrans> transformations;   // morphism i

  std::optional<MorId> find(const NatTrans& t) const;
};

/// Objects are all functors K -> L, morphisms all natural transformations,
/// composition is vertical composition.
FunctorCategory functor_category(const CategoryRef& k, const CategoryRef& l,
                                 std::size_t budget = kDefaultFunctorBudget);

/// F: K->L, G: L->K with alpha: G∘F ⇒ 1_K and omega: F∘G ⇒ 1_L.
struct EquivalenceData {
  FinFunctor f;
  FinFunctor g;
  NatTrans alpha;
  NatTrans omega;
};

/// Components of t with their inverses; throws NotInvertible naming the
/// first object whose component has no inverse.
NatTrans inverse_nat(const NatTrans& t);

ValidationReport validate_equivalence(const EquivalenceData& e);
bool check_equivalence(const EquivalenceData& e);
EquivalenceData identity_equivalence(const CategoryRef& c);
/// E2∘E1 for E1 between K, L and E2 between L, M. Units are pasted by
/// whiskering: alpha = alpha1 ∘ (G1 ∗ alpha2 ∗ F1).
EquivalenceData compose_equivalences(const EquivalenceData& e1, const EquivalenceData& e2);

}  // namespace fincat
