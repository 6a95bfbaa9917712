#include "fincat/limits.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "fincat/error.hpp"
#include "fincat/union_find.hpp"

namespace fincat {

void validate_diagram(const Diagram& d) {
  const std::size_t n = d.vertices.size();
  if (!d.vertex_labels.empty() && d.vertex_labels.size() != n)
    throw Error(ErrorKind::MalformedDiagram, "vertex label count differs from vertex count");
  for (const auto& v : d.vertices) validate_finset(v);
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const auto& e = d.edges[i];
    if (e.src >= n || e.tgt >= n)
      throw Error(ErrorKind::MalformedDiagram, fmt::format("edge {} has a dangling endpoint", i));
    if (e.fun.dom() != d.carrier(e.src) || e.fun.cod() != d.carrier(e.tgt))
      throw Error(ErrorKind::MalformedDiagram,
                  fmt::format("edge {} is a {}->{} function between carriers {} and {}", i,
                              e.fun.dom(), e.fun.cod(), d.carrier(e.src), d.carrier(e.tgt)));
  }
}

bool is_cone(const Diagram& d, const Cone& c) {
  if (c.legs.size() != d.vertices.size()) return false;
  for (std::size_t v = 0; v < c.legs.size(); ++v)
    if (c.legs[v].dom() != c.apex || c.legs[v].cod() != d.carrier(v)) return false;
  for (const auto& e : d.edges)
    for (std::size_t a = 0; a < c.apex; ++a)
      if (e.fun(c.legs[e.src](a)) != c.legs[e.tgt](a)) return false;
  return true;
}

bool is_cocone(const Diagram& d, const Cocone& c) {
  if (c.legs.size() != d.vertices.size()) return false;
  for (std::size_t v = 0; v < c.legs.size(); ++v)
    if (c.legs[v].cod() != c.apex || c.legs[v].dom() != d.carrier(v)) return false;
  for (const auto& e : d.edges)
    for (std::size_t x = 0; x < d.carrier(e.src); ++x)
      if (c.legs[e.tgt](e.fun(x)) != c.legs[e.src](x)) return false;
  return true;
}

Limit limit(const Diagram& d, std::size_t budget) {
  validate_diagram(d);
  const std::size_t n = d.vertices.size();
  std::size_t space = 1;
  for (const auto& v : d.vertices) {
    if (v.size != 0 && space > budget / v.size)
      throw Error(ErrorKind::BudgetExceeded,
                  fmt::format("tuple space exceeds budget {}", budget));
    space *= v.size;
  }

  Limit out;
  out.diagram = d;
  std::vector<std::size_t> t(n, 0);
  if (space > 0) {
    for (std::size_t code = 0; code < space; ++code) {
      std::size_t rest = code;
      for (std::size_t v = n; v > 0; --v) {
        t[v - 1] = rest % d.carrier(v - 1);
        rest /= d.carrier(v - 1);
      }
      bool ok = std::all_of(d.edges.begin(), d.edges.end(),
                            [&](const DiagramEdge& e) { return e.fun(t[e.src]) == t[e.tgt]; });
      if (ok) out.tuples.push_back(t);
    }
  }
  out.cone.apex = out.tuples.size();
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> leg(out.tuples.size());
    for (std::size_t a = 0; a < out.tuples.size(); ++a) leg[a] = out.tuples[a][v];
    out.cone.legs.emplace_back(out.cone.apex, d.carrier(v), std::move(leg));
  }
  return out;
}

FinFunction Limit::mediate(const Cone& other) const {
  if (!is_cone(diagram, other)) throw Error(ErrorKind::NotACone, "legs do not commute");
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t a = 0; a < tuples.size(); ++a) index.emplace(tuples[a], a);
  std::vector<std::size_t> table(other.apex);
  std::vector<std::size_t> t(other.legs.size());
  for (std::size_t a = 0; a < other.apex; ++a) {
    for (std::size_t v = 0; v < t.size(); ++v) t[v] = other.legs[v](a);
    table[a] = index.at(t);
  }
  return FinFunction(other.apex, cone.apex, std::move(table));
}

Colimit colimit(const Diagram& d) {
  validate_diagram(d);
  Colimit out;
  out.diagram = d;
  std::size_t total = 0;
  for (const auto& v : d.vertices) {
    out.offsets.push_back(total);
    total += v.size;
  }
  UnionFind uf(total);
  for (const auto& e : d.edges)
    for (std::size_t x = 0; x < e.fun.dom(); ++x)
      uf.unite(out.offsets[e.src] + x, out.offsets[e.tgt] + e.fun(x));
  out.class_of = uf.canonical_classes();
  out.cocone.apex =
      out.class_of.empty() ? 0 : *std::max_element(out.class_of.begin(), out.class_of.end()) + 1;
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    std::vector<std::size_t> leg(d.carrier(v));
    for (std::size_t x = 0; x < leg.size(); ++x) leg[x] = out.class_of[out.offsets[v] + x];
    out.cocone.legs.emplace_back(d.carrier(v), out.cocone.apex, std::move(leg));
  }
  return out;
}

FinFunction Colimit::mediate(const Cocone& other) const {
  if (!is_cocone(diagram, other)) throw Error(ErrorKind::NotACocone, "legs do not commute");
  std::vector<std::size_t> table(cocone.apex);
  // every class has a least representative, reached first in vertex-major order
  std::vector<bool> seen(cocone.apex, false);
  for (std::size_t v = 0; v < diagram.vertices.size(); ++v)
    for (std::size_t x = 0; x < diagram.carrier(v); ++x) {
      std::size_t c = class_of[offsets[v] + x];
      if (!seen[c]) {
        seen[c] = true;
        table[c] = other.legs[v](x);
      }
    }
  return FinFunction(cocone.apex, other.apex, std::move(table));
}

// --- universality oracle -------------------------------------------------------

namespace {

// Odometer over a vector of digits with per-digit radix; false once wrapped.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t i = digits.size(); i > 0; --i) {
    if (++digits[i - 1] < radix[i - 1]) return true;
    digits[i - 1] = 0;
  }
  return false;
}

std::size_t apex_bound(std::size_t candidate, const UniversalOptions& opt) {
  return std::min(candidate + opt.slack, opt.apex_cap);
}

void charge(std::size_t& work, std::size_t amount, const UniversalOptions& opt) {
  work += amount;
  if (work > opt.work_budget)
    throw Error(ErrorKind::BudgetExceeded,
                fmt::format("universality check exceeded {} leg assignments", opt.work_budget));
}

}  // namespace

UniversalResult check_universal(const Diagram& d, const Cone& c, const UniversalOptions& opt) {
  validate_diagram(d);
  if (!is_cone(d, c)) throw Error(ErrorKind::NotACone, "candidate legs do not commute");
  const std::size_t n = d.vertices.size();
  UniversalResult r;
  r.max_apex = apex_bound(c.apex, opt);
  r.universal = true;
  std::size_t work = 0;
  for (std::size_t s = 0; s <= r.max_apex; ++s) {
    // digit (a, v) is leg_v(a)
    std::vector<std::size_t> radix;
    bool empty_space = false;
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t v = 0; v < n; ++v) {
        radix.push_back(d.carrier(v));
        if (d.carrier(v) == 0) empty_space = true;
      }
    if (empty_space) continue;
    std::vector<std::size_t> digits(radix.size(), 0);
    do {
      charge(work, 1, opt);
      auto leg = [&](std::size_t a, std::size_t v) { return digits[a * n + v]; };
      bool commutes = true;
      for (const auto& e : d.edges)
        for (std::size_t a = 0; a < s && commutes; ++a)
          if (e.fun(leg(a, e.src)) != leg(a, e.tgt)) commutes = false;
      if (!commutes) continue;
      ++r.cones_examined;
      // mediators factor pointwise: each apex element independently picks a
      // candidate element with matching leg values
      std::size_t count = 1;
      for (std::size_t a = 0; a < s; ++a) {
        std::size_t matches = 0;
        for (std::size_t x = 0; x < c.apex; ++x) {
          bool m = true;
          for (std::size_t v = 0; v < n && m; ++v) m = c.legs[v](x) == leg(a, v);
          matches += m ? 1 : 0;
        }
        count *= matches;
        if (count == 0) break;
      }
      if (count != 1) {
        r.universal = false;
        r.failing_apex = s;
        r.mediator_count = count;
        return r;
      }
    } while (advance(digits, radix));
  }
  return r;
}

UniversalResult check_universal(const Diagram& d, const Cocone& c, const UniversalOptions& opt) {
  validate_diagram(d);
  if (!is_cocone(d, c)) throw Error(ErrorKind::NotACocone, "candidate legs do not commute");
  const std::size_t n = d.vertices.size();
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    offsets.push_back(total);
    total += d.carrier(v);
  }
  UniversalResult r;
  r.max_apex = apex_bound(c.apex, opt);
  r.universal = true;
  std::size_t work = 0;
  for (std::size_t s = 0; s <= r.max_apex; ++s) {
    if (s == 0 && total > 0) continue;  // no functions into the empty set
    // digit (offset_v + x) is leg_v(x)
    std::vector<std::size_t> radix(total, s);
    std::vector<std::size_t> digits(total, 0);
    do {
      charge(work, 1, opt);
      bool commutes = true;
      for (std::size_t i = 0; i < d.edges.size() && commutes; ++i) {
        const auto& e = d.edges[i];
        for (std::size_t x = 0; x < e.fun.dom() && commutes; ++x)
          if (digits[offsets[e.tgt] + e.fun(x)] != digits[offsets[e.src] + x]) commutes = false;
      }
      if (!commutes) continue;
      ++r.cones_examined;
      // per candidate element: the set of values consistent with every leg
      std::size_t count = 1;
      std::vector<std::size_t> forced(c.apex, s);  // s = unconstrained
      std::vector<bool> clash(c.apex, false);
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t x = 0; x < d.carrier(v); ++x) {
          std::size_t y = c.legs[v](x);
          std::size_t want = digits[offsets[v] + x];
          if (forced[y] == s) forced[y] = want;
          else if (forced[y] != want) clash[y] = true;
        }
      for (std::size_t y = 0; y < c.apex && count > 0; ++y)
        count *= clash[y] ? 0 : (forced[y] == s ? s : 1);
      if (count != 1) {
        r.universal = false;
        r.failing_apex = s;
        r.mediator_count = count;
        return r;
      }
    } while (advance(digits, radix));
  }
  return r;
}

// --- presets -------------------------------------------------------------------

Diagram empty_diagram() { return {}; }

Diagram product_diagram(std::size_t nx, std::size_t ny) {
  Diagram d;
  d.vertices = {FinSetObj{nx, {}}, FinSetObj{ny, {}}};
  d.vertex_labels = {"X", "Y"};
  return d;
}

Diagram coproduct_diagram(std::size_t nx, std::size_t ny) { return product_diagram(nx, ny); }

Diagram parallel_diagram(const FinFunction& f, const FinFunction& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw Error(ErrorKind::MalformedDiagram, "parallel pair with different endpoints");
  Diagram d;
  d.vertices = {FinSetObj{f.dom(), {}}, FinSetObj{f.cod(), {}}};
  d.vertex_labels = {"X", "Y"};
  d.edges = {{"f", 0, 1, f}, {"g", 0, 1, g}};
  validate_diagram(d);
  return d;
}

Diagram cospan_diagram(const FinFunction& f, const FinFunction& g) {
  if (f.cod() != g.cod()) throw Error(ErrorKind::MalformedDiagram, "cospan legs differ in codomain");
  Diagram d;
  d.vertices = {FinSetObj{f.dom(), {}}, FinSetObj{g.dom(), {}}, FinSetObj{f.cod(), {}}};
  d.vertex_labels = {"X", "Y", "Z"};
  d.edges = {{"f", 0, 2, f}, {"g", 1, 2, g}};
  return d;
}

Diagram span_diagram(const FinFunction& f, const FinFunction& g) {
  if (f.dom() != g.dom()) throw Error(ErrorKind::MalformedDiagram, "span legs differ in domain");
  Diagram d;
  d.vertices = {FinSetObj{f.cod(), {}}, FinSetObj{g.cod(), {}}, FinSetObj{f.dom(), {}}};
  d.vertex_labels = {"X", "Y", "Z"};
  d.edges = {{"f", 2, 0, f}, {"g", 2, 1, g}};
  return d;
}

}  // namespace fincat
