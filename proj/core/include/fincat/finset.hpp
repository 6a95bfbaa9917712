#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace fincat {

/// Canonical finite set {0..size-1}; labels are optional and cosmetic.
struct FinSetObj {
  std::size_t size = 0;
  std::vector<std::string> labels;

  bool operator==(const FinSetObj&) const = default;
};

/// Throws MalformedInput if labels are present with the wrong length or
/// repeat.
void validate_finset(const FinSetObj& s);

/// A total function between canonical finite sets.
class FinFunction {
 public:
  FinFunction() = default;
  /// Throws IndexOutOfRange unless table has `dom` entries, each < `cod`.
  FinFunction(std::size_t dom, std::size_t cod, std::vector<std::size_t> table);

  std::size_t dom() const noexcept { return dom_; }
  std::size_t cod() const noexcept { return cod_; }
  std::size_t operator()(std::size_t x) const { return table_[x]; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  bool operator==(const FinFunction&) const = default;
  auto operator<=>(const FinFunction&) const = default;

 private:
  std::size_t dom_ = 0;
  std::size_t cod_ = 0;
  std::vector<std::size_t> table_;
};

FinFunction identity_function(std::size_t n);
FinFunction constant_function(std::size_t dom, std::size_t cod, std::size_t value);
/// The unique function out of the empty set.
FinFunction empty_function(std::size_t cod);
/// g∘f; throws BoundaryMismatch if cod f != dom g.
FinFunction compose(const FinFunction& g, const FinFunction& f);

struct FunctionClass {
  bool injective = false;
  bool surjective = false;
  bool bijective = false;

  bool operator==(const FunctionClass&) const = default;
};

FunctionClass classify_function(const FinFunction& f);

/// Inverse of a bijection; throws NotInvertible otherwise.
FinFunction inverse_function(const FinFunction& f);

/// Calls visit(f) for every function dom -> cod in lexicographic table order
/// (first entry most significant).
template <class Visit>
void for_each_function(std::size_t dom, std::size_t cod, Visit&& visit) {
  if (dom > 0 && cod == 0) return;
  std::vector<std::size_t> table(dom, 0);
  while (true) {
    visit(FinFunction(dom, cod, table));
    std::size_t i = dom;
    while (i > 0) {
      --i;
      if (++table[i] < cod) break;
      table[i] = 0;
      if (i == 0) return;
    }
    if (dom == 0) return;
  }
}

/// cod^dom, throwing BudgetExceeded above `budget`.
std::size_t power_size(std::size_t base, std::size_t exponent, std::size_t budget);

// --- products and coproducts -------------------------------------------------
// Pairs (x, y) of X×Y live at x·|Y| + y; X⊔Y puts X first, then Y.

inline std::size_t pair_index(std::size_t x, std::size_t y, std::size_t ny) {
  return x * ny + y;
}

std::pair<FinFunction, FinFunction> product_projections(std::size_t nx, std::size_t ny);
std::pair<FinFunction, FinFunction> coproduct_injections(std::size_t nx, std::size_t ny);
/// f×g: A×B -> C×D.
FinFunction product_map(const FinFunction& f, const FinFunction& g);
/// f⊔g: A⊔B -> C⊔D.
FinFunction coproduct_map(const FinFunction& f, const FinFunction& g);
/// <f, g>: A -> C×D.
FinFunction pairing(const FinFunction& f, const FinFunction& g);
/// [f, g]: A⊔B -> C.
FinFunction copairing(const FinFunction& f, const FinFunction& g);
/// X×Y -> Y×X.
FinFunction product_swap(std::size_t nx, std::size_t ny);
/// X⊔Y -> Y⊔X.
FinFunction coproduct_swap(std::size_t nx, std::size_t ny);
/// (X×Y)×Z -> X×(Y×Z); both sides share the same flattened index, so this is
/// the identity table, kept as a named map for coherence checks.
FinFunction product_associator(std::size_t nx, std::size_t ny, std::size_t nz);
FinFunction coproduct_associator(std::size_t nx, std::size_t ny, std::size_t nz);

// --- exponentials ------------------------------------------------------------
// Z^X is the set of tables X -> Z in lexicographic order, first entry most
// significant.

std::size_t exponential_size(std::size_t nx, std::size_t nz, std::size_t budget);
std::size_t encode_table(const std::vector<std::size_t>& table, std::size_t nz);
std::vector<std::size_t> decode_table(std::size_t code, std::size_t nx, std::size_t nz);

/// f: X×Y -> Z to Y -> Z^X, y ↦ f(-, y).
FinFunction curry(const FinFunction& f, std::size_t nx, std::size_t ny, std::size_t budget);
/// g: Y -> Z^X to X×Y -> Z.
FinFunction uncurry(const FinFunction& g, std::size_t nx, std::size_t nz, std::size_t budget);
/// ev: X×Z^X -> Z, (x, h) ↦ h(x).
FinFunction evaluation(std::size_t nx, std::size_t nz, std::size_t budget);
/// h^X: Z^X -> W^X, postcomposition.
FinFunction exponential_map(const FinFunction& h, std::size_t nx, std::size_t budget);

// --- power sets --------------------------------------------------------------
// Subsets of {0..n-1} are bitmasks; P(n) has 2^n elements.

enum class Variance { Covariant, Contravariant };

/// Contravariant: preimage P(cod) -> P(dom). Covariant: image P(dom) -> P(cod).
/// Throws BudgetExceeded when a carrier would exceed 2^`max_bits` elements.
FinFunction powerset(Variance variance, const FinFunction& f, std::size_t max_bits = 24);
/// η: n -> P(n), x ↦ {x}.
FinFunction singleton(std::size_t n);
/// μ: P(P(n)) -> P(n), union of a family.
FinFunction powerset_union(std::size_t n, std::size_t max_bits = 24);

}  // namespace fincat
