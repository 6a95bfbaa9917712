#pragma once

// Brute-force reference computations. They read raw tables only and share no
// code with the library routines they are compared against.

#include <cstddef>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/finset.hpp"
#include "fincat/functor.hpp"
#include "fincat/limits.hpp"
#include "fincat/yoneda.hpp"

namespace fincat::suite::oracle {

/// Identities are endomorphisms, g∘f is defined exactly on composable pairs
/// with the right type, both unit laws, and associativity over every triple.
bool category_axioms_hold(const FinCategory& c);

struct FunctionKind {
  bool injective = false;
  bool surjective = false;
};
FunctionKind function_kind(const FinFunction& f);

/// Number of tuples (x_v) with e(x_src) = x_tgt for every edge.
std::size_t limit_size(const Diagram& d);

/// Partition of the disjoint union of the carriers generated by x ~ e(x).
/// Returns a class representative per element (smallest member).
std::vector<std::size_t> colimit_partition(const Diagram& d);

/// |{(x, y) : f(x) = g(y)}|.
std::size_t pullback_size(const FinFunction& f, const FinFunction& g);

/// (β∗α)_X = J(α_X)∘β_{FX} for α: F⇒G on K->L and β: H⇒J on L->M,
/// computed with direct table lookups.
std::vector<MorId> horizontal_components(const NatTrans& beta, const NatTrans& alpha);
/// ν_X∘μ_X.
std::vector<MorId> vertical_components(const NatTrans& nu, const NatTrans& mu);

/// Identity and composition preservation of a set-valued functor.
bool set_functor_laws_hold(const SetValuedFunctor& f);

}  // namespace fincat::suite::oracle
