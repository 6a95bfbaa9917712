#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fincat/algebraic.hpp"
#include "fincat/functor.hpp"
#include "fincat/standard.hpp"

namespace fincat {

/// F: L -> K left adjoint to H: K -> L, with η: 1_L ⇒ HF and ε: FH ⇒ 1_K.
struct AdjunctionData {
  FinFunctor f;
  FinFunctor h;
  NatTrans unit;
  NatTrans counit;
};

struct TriangleReport {
  /// Objects X of L where (εF ∘ Fη)_X is not 1_{FX}.
  std::vector<ObjId> left_failures;
  /// Objects Y of K where (Hε ∘ ηH)_Y is not 1_{HY}.
  std::vector<ObjId> right_failures;
  /// Morphisms whose naturality square fails for η (in L) or ε (in K).
  std::vector<MorId> unit_naturality_failures;
  std::vector<MorId> counit_naturality_failures;

  bool ok() const noexcept {
    return left_failures.empty() && right_failures.empty() &&
           unit_naturality_failures.empty() && counit_naturality_failures.empty();
  }
  explicit operator bool() const noexcept { return ok(); }
};

/// Throws BoundaryMismatch unless functors and transformations fit together.
void require_well_typed(const AdjunctionData& a);

/// Both triangle composites via whiskering and vertical composition,
/// compared componentwise with identities; also reports non-natural
/// components of η and ε.
TriangleReport check_triangles(const AdjunctionData& a);

struct HomBijection {
  ObjId x;  // object of L
  ObjId y;  // object of K
  std::vector<MorId> left_homs;    // Hom_K(FX, Y)
  std::vector<MorId> right_homs;   // Hom_L(X, HY)
  std::vector<std::size_t> theta;      // index into right_homs
  std::vector<std::size_t> theta_inv;  // index into left_homs
};

/// θ(f) = Hf∘η_X and θ̄(g) = ε_Y∘Fg. Throws TrianglesFailed unless
/// check_triangles passes.
HomBijection hom_bijection(const AdjunctionData& a, ObjId x, ObjId y);

struct BijectionReport {
  /// (X, Y) pairs where θ and θ̄ are not mutually inverse.
  std::vector<std::pair<ObjId, ObjId>> inverse_failures;
  /// (f: X'->X in L, g: Y->Y' in K) pairs with a failing naturality square.
  std::vector<std::pair<MorId, MorId>> naturality_failures;

  bool ok() const noexcept { return inverse_failures.empty() && naturality_failures.empty(); }
  explicit operator bool() const noexcept { return ok(); }
};

/// The hom-set view of an adjunction, computed from the formulas alone
/// (no precondition on triangles).
BijectionReport verify_hom_bijection(const AdjunctionData& a);

AdjunctionData identity_adjunction(const CategoryRef& c);

/// (F2∘F1, H1∘H2) with η = (H1η2F1)∘η1 and ε = ε2∘(F2ε1H2).
AdjunctionData compose_adjunctions(const AdjunctionData& first, const AdjunctionData& second);

/// Extends an objectwise choice Y ↦ (HY, ε_Y: F(HY) -> Y) to an adjunction.
/// Each pair must be terminal in the category of elements of Hom_K(F-, Y).
/// Throws NotUniversal naming the failing Y.
AdjunctionData build_right_adjoint(const FinFunctor& f,
                                   const std::vector<std::pair<ObjId, MorId>>& objectwise);

// --- Galois connections --------------------------------------------------------

/// g: P -> Q left adjoint to f: Q -> P: g(x) <= y iff x <= f(y).
struct GaloisConnection {
  Preorder p;
  Preorder q;
  std::vector<std::size_t> f;  // Q -> P
  std::vector<std::size_t> g;  // P -> Q
};

/// Throws NotMonotone if f or g fails to be monotone, MalformedInput on a
/// bad table.
void require_monotone(const GaloisConnection& gc);
/// First (x, y) violating g(x) <= y iff x <= f(y).
std::optional<std::pair<std::size_t, std::size_t>> galois_counterexample(const GaloisConnection& gc);
bool check_galois(const GaloisConnection& gc);
/// Preorder categories with F = g, H = f and the unique unit/counit arrows.
/// Throws NotAdjoint with a counterexample pair.
AdjunctionData galois_to_adjunction(const GaloisConnection& gc);

GaloisConnection identity_galois(const Preorder& p);
/// g: inclusion of the chain {0,1} into {0,1,2}; f(y) = min(y, 1).
GaloisConnection chain_inclusion_galois();
/// P = subsets of {0..n-1} under inclusion, Q = subgroups of Sym(n) under
/// reverse inclusion, g = pointwise stabilizer, f = fixed points.
GaloisConnection subgroup_fixed_point_galois(std::size_t n);
/// Subgroups of a group as element bitmasks, ascending.
std::vector<std::uint64_t> subgroups(const FinGroup& g);

/// Meet of i and j if one exists (some greatest lower bound).
std::optional<std::size_t> meet(const Preorder& p, std::size_t i, std::size_t j);
std::optional<std::size_t> top(const Preorder& p);
/// Throws NotALattice unless every pair has a meet and a top exists.
void require_meet_lattice(const Preorder& p);
/// f: Q -> P sends meets to meets and top to top (up to equivalence).
bool preserves_meets(const Preorder& q, const Preorder& p, const std::vector<std::size_t>& f);
bool check_right_adjoint_preserves_meets(const GaloisConnection& gc);

// --- free monoid -------------------------------------------------------------------

struct FreeMonoidReport {
  std::size_t words = 0;          // words of length <= N
  std::size_t pairs = 0;          // ordered pairs with |u|+|v| <= N
  bool empty_word_to_unit = false;
  bool agrees_on_letters = false;
  bool multiplicative = false;
  bool induction_witness = false;  // f̄(a·w) = f(a)·f̄(w) for every in-bound word
  std::size_t homomorphisms = 0;  // maps satisfying every in-bound law and η
  std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;

  bool ok() const noexcept {
    return empty_word_to_unit && agrees_on_letters && multiplicative && induction_witness &&
           homomorphisms == 1;
  }
};

/// Words over {0..n-1} in shortlex order.
std::vector<std::vector<std::size_t>> words_up_to(std::size_t alphabet, std::size_t bound);
/// f̄ on a word by folding.
std::size_t fold_word(const FiniteMonoid& m, const std::vector<std::size_t>& f,
                      const std::vector<std::size_t>& word);
/// Bounded universal property of the free monoid on `alphabet` letters.
FreeMonoidReport verify_free_monoid_adjunction(std::size_t alphabet, const FiniteMonoid& m,
                                               const std::vector<std::size_t>& f,
                                               std::size_t bound);

}  // namespace fincat
