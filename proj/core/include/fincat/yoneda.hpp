#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/finset.hpp"
#include "fincat/skeleton.hpp"
#include "fincat/validation.hpp"

namespace fincat {

inline constexpr std::size_t kDefaultYonedaBudget = 1U << 22;

/// F: C -> FinSet (covariant) or C^op -> FinSet (contravariant). Values are
/// canonical sets given by size.
struct SetValuedFunctor {
  CategoryRef source;
  Variance variance = Variance::Covariant;
  std::vector<std::size_t> obj_val;
  std::vector<FinFunction> mor_val;

  std::size_t operator()(ObjId x) const { return obj_val.at(x.value); }
  const FinFunction& operator()(MorId f) const { return mor_val.at(f.value); }
  bool operator==(const SetValuedFunctor& o) const;
};

ValidationReport validate_set_functor(const SetValuedFunctor& f);
/// Throws InvalidFunctor with the report summary.
void require_valid(const SetValuedFunctor& f);

/// Hom(A,-) when covariant, Hom(-,A) when contravariant. The value at X
/// indexes hom_set(C, A, X) (resp. hom_set(C, X, A)) in ascending order.
SetValuedFunctor hom_functor(const CategoryRef& c, ObjId a, Variance variance);
SetValuedFunctor constant_set_functor(const CategoryRef& c, std::size_t size, Variance variance);
/// Power-set functor on a FinSet skeleton (preimage when contravariant).
SetValuedFunctor powerset_functor(const FinSetSkeleton& s, Variance variance);

struct ElementsCategory {
  FinCategory category;
  std::vector<std::pair<ObjId, std::size_t>> element;  // object i is (C, c)
  std::vector<MorId> underlying;                       // morphism i lies over this
};

/// Objects (C, c ∈ F(C)) ordered by (C, c). A morphism (B,b) -> (C,c) is
/// f: B -> C with F(f)(b) = c (covariant) or F(f)(c) = b (contravariant).
ElementsCategory category_of_elements(const SetValuedFunctor& f);

struct RepresentationWitness {
  ObjId object;
  std::size_t universal_element = 0;
  /// chi[X]: hom(A, X) -> F(X) (covariant) or hom(X, A) -> F(X), f ↦ F(f)(a).
  std::vector<FinFunction> chi;
  /// Every other (B, b) that also represents F.
  std::vector<std::pair<ObjId, std::size_t>> alternatives;
  /// Each alternative is tied to the witness by exactly one morphism
  /// carrying a to b, and that morphism is an isomorphism.
  bool alternatives_isomorphic = true;
};

/// First (A, a) in (object, element) order whose χ is bijective everywhere.
std::optional<RepresentationWitness> find_representation(const SetValuedFunctor& f);

/// A family of component functions from G to F, indexed by source objects.
using SetNatTrans = std::vector<FinFunction>;

bool is_natural(const SetValuedFunctor& from, const SetValuedFunctor& to, const SetNatTrans& t);

/// Every natural family from -> to, lexicographic over component tables.
/// Backtracks one element at a time, checking each naturality square as soon
/// as both of its entries are set. Throws BudgetExceeded when more than
/// `budget` single-element assignments are tried.
std::vector<SetNatTrans> enumerate_set_nat(const SetValuedFunctor& from,
                                           const SetValuedFunctor& to,
                                           std::size_t budget = kDefaultYonedaBudget);

struct YonedaResult {
  ObjId object;
  std::vector<SetNatTrans> transformations;
  std::size_t value_size = 0;            // |F(A)|
  std::vector<std::size_t> theta;        // nat index -> element of F(A)
  std::vector<std::size_t> theta_inv;    // element -> nat index
  bool mutually_inverse = false;
  bool theta_inv_natural = false;
  /// Checked only on request; every morphism at A.
  std::optional<bool> natural_in_object;

  bool ok() const {
    return mutually_inverse && theta_inv_natural && natural_in_object.value_or(true);
  }
};

/// θ(α) = α_A(1_A), θ̄(a) = F(-)(a), compared against the exhaustive
/// enumeration of Nat(Hom(A,-), F) (or Nat(Hom(-,A), F)).
YonedaResult yoneda_bijection(const SetValuedFunctor& f, ObjId a, bool check_naturality = true,
                              std::size_t budget = kDefaultYonedaBudget);

struct EmbeddingPair {
  ObjId a;
  ObjId b;
  std::size_t hom_size = 0;
  std::size_t nat_count = 0;
  bool bijective = false;
};

struct EmbeddingReport {
  bool injective_on_objects = false;
  std::vector<EmbeddingPair> pairs;

  bool ok() const;
};

/// A ↦ Hom(-,A); checks f ↦ Hom(-,f) is a bijection onto every Nat set.
EmbeddingReport yoneda_embedding(const CategoryRef& c, std::size_t budget = kDefaultYonedaBudget);

}  // namespace fincat
