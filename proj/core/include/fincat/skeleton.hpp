#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/finset.hpp"

namespace fincat {

/// Full subcategory of FinSet on the canonical sets of sizes 0..n, with every
/// function table as a morphism. Morphisms are ordered by (dom, cod, table).
struct FinSetSkeleton {
  CategoryRef category;
  std::vector<FinFunction> functions;  // indexed by MorId

  std::size_t max_size() const noexcept { return category->object_count() - 1; }
  ObjId object(std::size_t size) const;
  std::size_t size_of(ObjId x) const { return x.value; }
  const FinFunction& function(MorId f) const { return functions.at(f.value); }
  /// Throws IndexOutOfRange if f does not live in the skeleton.
  MorId morphism(const FinFunction& f) const;

  std::vector<std::size_t> first_of;  // first morphism index of each (dom, cod) block
};

FinSetSkeleton finset_skeleton(std::size_t n);

}  // namespace fincat
