#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "fincat/error.hpp"
#include "fincat/finset.hpp"
#include "fincat/functor.hpp"

namespace fincat {

/// A monoidal structure on a concrete category whose objects and morphisms
/// are values. assoc(a,b,c): (a⊗b)⊗c -> a⊗(b⊗c), lunit(a): I⊗a -> a,
/// runit(a): a⊗I -> a.
template <class Obj, class Mor>
struct MonoidalStructure {
  std::string name;
  std::function<Obj(const Obj&, const Obj&)> tensor_obj;
  std::function<Mor(const Mor&, const Mor&)> tensor_mor;
  Obj unit{};
  std::function<Mor(const Obj&, const Obj&, const Obj&)> assoc;
  std::function<Mor(const Obj&)> lunit;
  std::function<Mor(const Obj&)> runit;
  /// Optional symmetry γ(a,b): a⊗b -> b⊗a.
  std::function<Mor(const Obj&, const Obj&)> braiding;

  std::function<Mor(const Mor&, const Mor&)> compose;  // g∘f
  std::function<Mor(const Obj&)> identity;
  std::function<Obj(const Mor&)> dom;
  std::function<Obj(const Mor&)> cod;
  std::function<bool(const Mor&)> is_iso;
};

struct CoherenceReport {
  std::size_t pentagon_instances = 0;
  std::size_t triangle_instances = 0;
  std::size_t iso_instances = 0;
  std::vector<std::vector<std::size_t>> pentagon_failures;  // indices into the object list
  std::vector<std::vector<std::size_t>> triangle_failures;
  std::vector<std::vector<std::size_t>> iso_failures;       // structure maps that are not isos

  bool ok() const noexcept {
    return pentagon_failures.empty() && triangle_failures.empty() && iso_failures.empty();
  }
};

/// Pentagon over every 4-tuple, triangle over every pair, and invertibility
/// of α, λ, ρ, all drawn from `objects`. Throws BudgetExceeded when the
/// number of 4-tuples exceeds `budget`.
template <class Obj, class Mor>
CoherenceReport check_coherence_instances(const MonoidalStructure<Obj, Mor>& s,
                                          const std::vector<Obj>& objects,
                                          std::size_t budget = 1U << 16) {
  const std::size_t n = objects.size();
  if (n != 0 && n * n > budget / (n * n))
    throw Error(ErrorKind::BudgetExceeded,
                fmt::format("{} objects give more than {} pentagon instances", n, budget));
  CoherenceReport r;
  auto t = s.tensor_obj;
  auto tm = s.tensor_mor;
  auto c = s.compose;
  for (std::size_t i = 0; i < n; ++i) {
    const Obj& a = objects[i];
    ++r.iso_instances;
    if (!s.is_iso(s.lunit(a)) || !s.is_iso(s.runit(a))) r.iso_failures.push_back({i});
    for (std::size_t j = 0; j < n; ++j) {
      const Obj& b = objects[j];
      ++r.triangle_instances;
      // (1⊗λ)∘α_{a,I,b} = ρ⊗1
      Mor lhs = c(tm(s.identity(a), s.lunit(b)), s.assoc(a, s.unit, b));
      Mor rhs = tm(s.runit(a), s.identity(b));
      if (!(lhs == rhs)) r.triangle_failures.push_back({i, j});
      for (std::size_t k = 0; k < n; ++k) {
        const Obj& cc = objects[k];
        if (!s.is_iso(s.assoc(a, b, cc))) r.iso_failures.push_back({i, j, k});
        for (std::size_t l = 0; l < n; ++l) {
          const Obj& d = objects[l];
          ++r.pentagon_instances;
          Mor top = c(s.assoc(a, b, t(cc, d)), s.assoc(t(a, b), cc, d));
          Mor bottom = c(tm(s.identity(a), s.assoc(b, cc, d)),
                         c(s.assoc(a, t(b, cc), d), tm(s.assoc(a, b, cc), s.identity(d))));
          if (!(top == bottom)) r.pentagon_failures.push_back({i, j, k, l});
        }
      }
    }
  }
  return r;
}

/// (f⊗g)∘(f'⊗g') == (f∘f')⊗(g∘g').
template <class Obj, class Mor>
bool check_tensor_interchange(const MonoidalStructure<Obj, Mor>& s, const Mor& f, const Mor& g,
                              const Mor& f2, const Mor& g2) {
  return s.compose(s.tensor_mor(f, g), s.tensor_mor(f2, g2)) ==
         s.tensor_mor(s.compose(f, f2), s.compose(g, g2));
}

/// γ(b,a)∘γ(a,b) == 1.
template <class Obj, class Mor>
bool check_symmetry(const MonoidalStructure<Obj, Mor>& s, const Obj& a, const Obj& b) {
  if (!s.braiding) return false;
  return s.compose(s.braiding(b, a), s.braiding(a, b)) == s.identity(s.tensor_obj(a, b));
}

template <class Obj, class Mor>
struct MonoidObject {
  Obj carrier{};
  Mor mult;  // M⊗M -> M
  Mor unit;  // I -> M
};

template <class Obj, class Mor>
struct ComonoidObject {
  Obj carrier{};
  Mor comult;  // C -> C⊗C
  Mor counit;  // C -> I
};

namespace detail {

template <class Obj, class Mor>
void require_typed(const MonoidalStructure<Obj, Mor>& s, const Mor& m, const Obj& dom,
                   const Obj& cod, const char* edge) {
  if (!(s.dom(m) == dom) || !(s.cod(m) == cod))
    throw Error(ErrorKind::TypeMismatch, fmt::format("{} has the wrong endpoints", edge));
}

}  // namespace detail

/// Associativity μ∘(μ⊗1) = μ∘(1⊗μ)∘α and units μ∘(η⊗1) = λ, μ∘(1⊗η) = ρ.
/// Throws TypeMismatch naming the failing edge.
template <class Obj, class Mor>
bool check_monoid_object(const MonoidalStructure<Obj, Mor>& s, const MonoidObject<Obj, Mor>& m) {
  const Obj& x = m.carrier;
  detail::require_typed(s, m.mult, s.tensor_obj(x, x), x, "mult");
  detail::require_typed(s, m.unit, s.unit, x, "unit");
  auto c = s.compose;
  auto id = s.identity(x);
  bool assoc = c(m.mult, s.tensor_mor(m.mult, id)) ==
               c(m.mult, c(s.tensor_mor(id, m.mult), s.assoc(x, x, x)));
  bool left = c(m.mult, s.tensor_mor(m.unit, id)) == s.lunit(x);
  bool right = c(m.mult, s.tensor_mor(id, m.unit)) == s.runit(x);
  return assoc && left && right;
}

/// α∘(δ⊗1)∘δ = (1⊗δ)∘δ, λ∘(ε⊗1)∘δ = 1 = ρ∘(1⊗ε)∘δ.
template <class Obj, class Mor>
bool check_comonoid_object(const MonoidalStructure<Obj, Mor>& s,
                           const ComonoidObject<Obj, Mor>& m) {
  const Obj& x = m.carrier;
  detail::require_typed(s, m.comult, x, s.tensor_obj(x, x), "comult");
  detail::require_typed(s, m.counit, x, s.unit, "counit");
  auto c = s.compose;
  auto id = s.identity(x);
  bool coassoc = c(s.assoc(x, x, x), c(s.tensor_mor(m.comult, id), m.comult)) ==
                 c(s.tensor_mor(id, m.comult), m.comult);
  bool left = c(s.lunit(x), c(s.tensor_mor(m.counit, id), m.comult)) == id;
  bool right = c(s.runit(x), c(s.tensor_mor(id, m.counit), m.comult)) == id;
  return coassoc && left && right;
}

/// f∗g = μ∘(f⊗g)∘δ for f, g: C -> M. Throws TypeMismatch.
template <class Obj, class Mor>
Mor convolution(const MonoidalStructure<Obj, Mor>& s, const ComonoidObject<Obj, Mor>& c,
                const MonoidObject<Obj, Mor>& m, const Mor& f, const Mor& g) {
  detail::require_typed(s, f, c.carrier, m.carrier, "f");
  detail::require_typed(s, g, c.carrier, m.carrier, "g");
  return s.compose(m.mult, s.compose(s.tensor_mor(f, g), c.comult));
}

/// η∘ε, the unit for convolution.
template <class Obj, class Mor>
Mor convolution_unit(const MonoidalStructure<Obj, Mor>& s, const ComonoidObject<Obj, Mor>& c,
                     const MonoidObject<Obj, Mor>& m) {
  return s.compose(m.unit, c.counit);
}

// --- instances -------------------------------------------------------------------

using SetMonoidal = MonoidalStructure<std::size_t, FinFunction>;
using SetMonoid = MonoidObject<std::size_t, FinFunction>;
using SetComonoid = ComonoidObject<std::size_t, FinFunction>;

/// (FinSet, ×, 1) with swap as symmetry.
SetMonoidal cartesian_structure();
/// (FinSet, ⊔, ∅) with swap as symmetry.
SetMonoidal cocartesian_structure();

/// Endofunctors of a finite category under composition, F⊗G = F∘G; strict.
using EndoMonoidal = MonoidalStructure<FinFunctor, NatTrans>;
EndoMonoidal endofunctor_structure(const CategoryRef& c);

/// (Z/n, +, 0) as a monoid object in (FinSet, ×, 1).
SetMonoid cyclic_monoid_object(std::size_t n);
/// δ(a) = (a, a), ε = !.
SetComonoid diagonal_comonoid(std::size_t n);

}  // namespace fincat
