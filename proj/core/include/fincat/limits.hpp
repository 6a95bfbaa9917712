#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fincat/finset.hpp"

namespace fincat {

/// Cap on the size of the tuple space scanned when computing a limit.
inline constexpr std::size_t kDefaultLimitBudget = 1U << 20;

struct DiagramEdge {
  std::string label;
  std::size_t src = 0;
  std::size_t tgt = 0;
  FinFunction fun;

  bool operator==(const DiagramEdge&) const = default;
};

/// A graph-shaped diagram of finite sets.
struct Diagram {
  std::vector<FinSetObj> vertices;
  std::vector<std::string> vertex_labels;  // optional
  std::vector<DiagramEdge> edges;

  std::size_t carrier(std::size_t v) const { return vertices.at(v).size; }
  bool operator==(const Diagram&) const = default;
};

/// Throws MalformedDiagram on a dangling edge endpoint or a function whose
/// domain/codomain disagrees with its endpoints.
void validate_diagram(const Diagram& d);

/// Apex plus one leg per vertex, apex -> D(v).
struct Cone {
  std::size_t apex = 0;
  std::vector<FinFunction> legs;

  bool operator==(const Cone&) const = default;
};

/// Apex plus one leg per vertex, D(v) -> apex.
struct Cocone {
  std::size_t apex = 0;
  std::vector<FinFunction> legs;

  bool operator==(const Cocone&) const = default;
};

bool is_cone(const Diagram& d, const Cone& c);
bool is_cocone(const Diagram& d, const Cocone& c);

struct Limit {
  Diagram diagram;
  Cone cone;
  /// Apex elements as tuples, one entry per vertex, lexicographic.
  std::vector<std::vector<std::size_t>> tuples;

  /// The unique function other.apex -> cone.apex commuting with the legs.
  /// Throws NotACone if `other` is not a cone over the diagram.
  FinFunction mediate(const Cone& other) const;
};

struct Colimit {
  Diagram diagram;
  Cocone cocone;
  /// Class of every element of the vertex-major disjoint union.
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> offsets;  // start of each vertex in the disjoint union

  /// Throws NotACocone if `other` is not a cocone over the diagram.
  FinFunction mediate(const Cocone& other) const;
};

Limit limit(const Diagram& d, std::size_t budget = kDefaultLimitBudget);
Colimit colimit(const Diagram& d);

struct UniversalOptions {
  /// Competing apexes range over sizes 0..min(candidate + slack, apex_cap).
  std::size_t slack = 1;
  std::size_t apex_cap = 2;
  /// Upper bound on leg-table assignments examined.
  std::size_t work_budget = 5'000'000;
};

struct UniversalResult {
  bool universal = false;
  std::size_t cones_examined = 0;
  std::size_t max_apex = 0;
  /// Apex size of the first competing (co)cone without a unique mediator,
  /// and the number of mediators it had.
  std::size_t failing_apex = 0;
  std::size_t mediator_count = 0;

  explicit operator bool() const noexcept { return universal; }
};

/// Exhaustive universality check: every cone over `d` with a small apex must
/// factor through `c` in exactly one way. Throws NotACone if `c` is not a
/// cone, BudgetExceeded when the enumeration exceeds the work budget.
UniversalResult check_universal(const Diagram& d, const Cone& c, const UniversalOptions& opt = {});
UniversalResult check_universal(const Diagram& d, const Cocone& c,
                                const UniversalOptions& opt = {});

// Shape presets.
Diagram empty_diagram();
Diagram product_diagram(std::size_t nx, std::size_t ny);
Diagram coproduct_diagram(std::size_t nx, std::size_t ny);
/// X ⇉ Y with the two given functions.
Diagram parallel_diagram(const FinFunction& f, const FinFunction& g);
/// X -f-> Z <-g- Y.
Diagram cospan_diagram(const FinFunction& f, const FinFunction& g);
/// X <-f- Z -g-> Y.
Diagram span_diagram(const FinFunction& f, const FinFunction& g);

inline Limit equalizer(const FinFunction& f, const FinFunction& g) {
  return limit(parallel_diagram(f, g));
}
inline Limit pullback(const FinFunction& f, const FinFunction& g) {
  return limit(cospan_diagram(f, g));
}
inline Colimit coequalizer(const FinFunction& f, const FinFunction& g) {
  return colimit(parallel_diagram(f, g));
}
inline Colimit pushout(const FinFunction& f, const FinFunction& g) {
  return colimit(span_diagram(f, g));
}

}  // namespace fincat
