#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fincat/finset.hpp"
#include "fincat/limits.hpp"

// Functors on the FinSet skeleton given by computable maps rather than
// tables. Used where no finite full subcategory is closed under the functors
// involved (X×(-) and (-)^X), so laws are checked on every size up to a bound.

namespace fincat {

inline constexpr std::size_t kDefaultConcreteBudget = 1U << 23;

struct SetEndofunctor {
  std::string name;
  std::function<std::size_t(std::size_t)> on_objects;
  std::function<FinFunction(const FinFunction&)> on_morphisms;

  std::size_t operator()(std::size_t n) const { return on_objects(n); }
  FinFunction operator()(const FinFunction& f) const { return on_morphisms(f); }
};

/// Component at each size.
using SetNat = std::function<FinFunction(std::size_t)>;

SetEndofunctor identity_endofunctor();
/// g∘f.
SetEndofunctor compose(const SetEndofunctor& g, const SetEndofunctor& f);
SetEndofunctor product_functor(std::size_t x);
SetEndofunctor exponential_functor(std::size_t x, std::size_t budget = kDefaultConcreteBudget);
SetEndofunctor covariant_powerset_functor(std::size_t max_bits = 24);

/// Preserves identities and composition on every function between sizes
/// <= bound. Returns the first failing (g, f) pair, or f alone as (f, f).
std::optional<std::pair<FinFunction, FinFunction>> check_endofunctor(const SetEndofunctor& t,
                                                                     std::size_t bound);

/// t(m)∘alpha(a) == alpha(b)∘s(m) for every m: a -> b with a, b <= bound.
/// Returns the failing m.
std::optional<FinFunction> check_set_naturality(const SetEndofunctor& s, const SetEndofunctor& t,
                                                const SetNat& alpha, std::size_t bound);

struct SetAdjunction {
  SetEndofunctor f;
  SetEndofunctor h;
  SetNat unit;    // n -> HFn
  SetNat counit;  // FHn -> n
};

/// X×(-) ⊣ (-)^X with η_Y = curry(1_{X×Y}) and ε_Z = ev.
SetAdjunction currying_adjunction(std::size_t x, std::size_t budget = kDefaultConcreteBudget);
SetAdjunction identity_set_adjunction();

struct SetTriangleReport {
  std::vector<std::size_t> left_failures;   // sizes n with ε_{Fn}∘F(η_n) != 1
  std::vector<std::size_t> right_failures;  // sizes n with H(ε_n)∘η_{Hn} != 1
  std::optional<FinFunction> unit_naturality_failure;
  std::optional<FinFunction> counit_naturality_failure;

  bool ok() const noexcept {
    return left_failures.empty() && right_failures.empty() && !unit_naturality_failure &&
           !counit_naturality_failure;
  }
};

/// Triangles on sizes <= bound, naturality squares on sizes <= naturality_bound.
SetTriangleReport check_set_triangles(const SetAdjunction& a, std::size_t bound,
                                      std::size_t naturality_bound);

struct SetBijectionReport {
  std::size_t pairs_checked = 0;
  std::vector<std::pair<std::size_t, std::size_t>> inverse_failures;  // (X, Y)
  /// (f: X'->X, g: Y->Y') with θ(g∘m∘Ff) != Hg∘θ(m)∘f for some m.
  std::vector<std::pair<FinFunction, FinFunction>> naturality_failures;

  bool ok() const noexcept { return inverse_failures.empty() && naturality_failures.empty(); }
};

/// θ(m) = H(m)∘η_X and θ̄(g) = ε_Y∘F(g) over sizes X, Y <= bound.
SetBijectionReport verify_set_hom_bijection(const SetAdjunction& a, std::size_t bound,
                                            std::size_t naturality_bound,
                                            std::size_t budget = kDefaultConcreteBudget);

/// θ_{X,Y}(m) for m: F(X) -> Y.
FinFunction set_theta(const SetAdjunction& a, std::size_t x, const FinFunction& m);
FinFunction set_theta_inv(const SetAdjunction& a, std::size_t y, const FinFunction& g);

/// Right adjoint of f reconstructed on sizes <= bound from objectwise
/// universal arrows ε_Y: F(HY) -> Y. Universality is checked against every
/// X <= x_bound; H on morphisms and the unit come from unique factorization.
struct BoundedRightAdjoint {
  std::size_t bound = 0;
  std::vector<std::size_t> h_obj;            // HY
  std::vector<FinFunction> counit;           // ε_Y
  std::map<FinFunction, FinFunction> h_mor;  // g ↦ Hg for g between sizes <= bound
  std::map<std::size_t, FinFunction> unit;   // η_X for every X with F(X) <= bound
};

/// Throws NotUniversal naming the failing Y, BudgetExceeded when a search
/// space exceeds `budget`.
BoundedRightAdjoint build_right_adjoint(const SetEndofunctor& f,
                                        const std::vector<std::pair<std::size_t, FinFunction>>& objectwise,
                                        std::size_t x_bound,
                                        std::size_t budget = kDefaultConcreteBudget);

/// Hom-cardinality form of lim ⊣ Δ on one diagram: for each apex size
/// A <= apex_bound, cones from A and functions A -> lim correspond through
/// the mediator.
struct DeltaInstanceReport {
  std::vector<std::size_t> apex_sizes;
  std::vector<std::size_t> hom_counts;   // |Hom(A, lim)| or |Hom(colim, A)|
  std::vector<std::size_t> cone_counts;  // cones (cocones) with apex A
  bool bijective = true;
};

DeltaInstanceReport limit_delta_instance(const Diagram& d, std::size_t apex_bound,
                                         std::size_t budget = 1U << 20);
DeltaInstanceReport colimit_delta_instance(const Diagram& d, std::size_t apex_bound,
                                           std::size_t budget = 1U << 20);

}  // namespace fincat
