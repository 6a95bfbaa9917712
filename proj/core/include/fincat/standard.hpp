#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fincat/algebraic.hpp"
#include "fincat/category.hpp"

namespace fincat {

/// A preorder stored as a boolean relation matrix; antisymmetry is not
/// required.
struct Preorder {
  std::size_t size = 0;
  std::vector<bool> leq;  // row-major, leq[i * size + j] <=> i <= j

  bool operator()(std::size_t i, std::size_t j) const { return leq[i * size + j]; }
  bool operator==(const Preorder&) const = default;
};

/// Reflexive-transitive closure of `pairs` (i <= j) on {0..n-1}.
Preorder preorder_closure(std::size_t n,
                          const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
/// The chain 0 <= 1 <= ... <= n-1.
Preorder chain_order(std::size_t n);
/// Throws MalformedInput unless reflexive and transitive.
void validate_preorder(const Preorder& p);
/// Reverse every comparison.
Preorder opposite_order(const Preorder& p);

struct PreorderCategory {
  FinCategory category;
  /// arrow[i * n + j] is the unique morphism i -> j when i <= j.
  std::vector<std::optional<MorId>> arrow;

  MorId at(std::size_t i, std::size_t j) const;
};

/// Morphisms are the pairs i <= j in row-major order.
PreorderCategory preorder_category(const Preorder& p);

FinCategory terminal_category();
FinCategory discrete_category(std::size_t n);
FinCategory chain_category(std::size_t n);
/// Two objects with f: X->Y, g: Y->X, g∘f = 1, f∘g = 1.
FinCategory iso_pair_category();
/// Two objects with two parallel arrows X ⇉ Y.
FinCategory parallel_pair_category();
/// Objects L <- A -> R.
FinCategory span_category();

/// One object; morphisms are monoid elements, g∘f = g·f. Throws
/// MalformedInput if the table is not a monoid.
FinCategory monoid_category(const FiniteMonoid& m);

/// Objects (c, d) at index c·|D0| + d, morphisms (f, g) at f·|D1| + g.
FinCategory product_category(const FinCategory& c, const FinCategory& d);

struct SliceCategory {
  FinCategory category;
  std::vector<MorId> object_arrow;     // arrow of C underlying each object
  std::vector<MorId> morphism_arrow;   // arrow of C underlying each morphism
};

/// Arrows into `base` and commuting triangles between them.
SliceCategory slice_category(const FinCategory& c, ObjId base);

struct Subcategory {
  FinCategory category;
  std::vector<ObjId> object_embedding;
  std::vector<MorId> morphism_embedding;
};

/// Full subcategory on the listed objects (in the given order).
Subcategory full_subcategory(const FinCategory& c, const std::vector<ObjId>& objects);

}  // namespace fincat
