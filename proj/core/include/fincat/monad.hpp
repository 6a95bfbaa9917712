#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fincat/adjunction.hpp"
#include "fincat/concrete.hpp"
#include "fincat/functor.hpp"

namespace fincat {

// --- table-level -------------------------------------------------------------

/// T: K -> K with μ: TT ⇒ T and η: 1 ⇒ T.
struct MonadData {
  FinFunctor t;
  NatTrans mult;
  NatTrans unit;
};

/// T with δ: T ⇒ TT and ε: T ⇒ 1.
struct ComonadData {
  FinFunctor t;
  NatTrans comult;
  NatTrans counit;
};

struct MonadReport {
  std::vector<ObjId> associativity_failures;
  std::vector<ObjId> left_unit_failures;   // μ∘ηT != 1 (comonad: εT∘δ)
  std::vector<ObjId> right_unit_failures;  // μ∘Tη != 1 (comonad: Tε∘δ)
  bool natural = true;                     // μ and η (δ and ε) pass validation

  bool ok() const noexcept {
    return associativity_failures.empty() && left_unit_failures.empty() &&
           right_unit_failures.empty() && natural;
  }
  explicit operator bool() const noexcept { return ok(); }
};

/// Throws BoundaryMismatch on ill-typed data.
MonadReport check_monad(const MonadData& m);
MonadReport check_comonad(const ComonadData& c);

MonadData identity_monad(const CategoryRef& c);

/// (HF, HεF, η). Throws TrianglesFailed unless check_triangles passes.
MonadData monad_from_adjunction(const AdjunctionData& a);
/// (FH, FηH, ε).
ComonadData comonad_from_adjunction(const AdjunctionData& a);

// --- concrete ------------------------------------------------------------------

struct SetMonad {
  SetEndofunctor t;
  SetNat mult;  // TTn -> Tn
  SetNat unit;  // n -> Tn
};

struct SetComonad {
  SetEndofunctor t;
  SetNat comult;  // Tn -> TTn
  SetNat counit;  // Tn -> n
};

struct SetMonadReport {
  std::vector<std::size_t> associativity_failures;  // sizes
  std::vector<std::size_t> left_unit_failures;
  std::vector<std::size_t> right_unit_failures;
  std::optional<FinFunction> mult_naturality_failure;
  std::optional<FinFunction> unit_naturality_failure;

  bool ok() const noexcept {
    return associativity_failures.empty() && left_unit_failures.empty() &&
           right_unit_failures.empty() && !mult_naturality_failure && !unit_naturality_failure;
  }
};

/// Laws on every size <= bound, naturality on sizes <= naturality_bound.
SetMonadReport check_set_monad(const SetMonad& m, std::size_t bound, std::size_t naturality_bound);
SetMonadReport check_set_comonad(const SetComonad& c, std::size_t bound,
                                 std::size_t naturality_bound);

/// (HF, HεF, η) and (FH, FηH, ε) on the skeleton.
SetMonad monad_from_adjunction(const SetAdjunction& a);
SetComonad comonad_from_adjunction(const SetAdjunction& a);

/// (P, ⋃, {-}) with subsets as bitmasks.
SetMonad powerset_monad(std::size_t max_bits = 24);

/// Sampled associativity of the power-set monad on an n-element set, where
/// TTT(n) is too large to tabulate: each sample is a uniformly random
/// element of P(P(P(n))), drawn from mt19937_64(seed) as raw 64-bit words.
struct SampledMonadReport {
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::optional<std::vector<std::uint64_t>> first_failure;

  bool ok() const noexcept { return failures == 0; }
};

SampledMonadReport sample_powerset_associativity(std::size_t n, std::size_t samples,
                                                 std::uint64_t seed);

}  // namespace fincat
