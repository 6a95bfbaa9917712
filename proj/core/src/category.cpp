#include "fincat/category.hpp"

#include <fmt/format.h>

#include "fincat/error.hpp"

namespace fincat {

FinCategory::FinCategory(std::vector<std::string> object_labels,
                         std::vector<MorphismData> morphisms,
                         std::vector<MorId> identity_of,
                         std::vector<std::optional<MorId>> compose_table)
    : object_labels_(std::move(object_labels)),
      morphisms_(std::move(morphisms)),
      identity_of_(std::move(identity_of)),
      compose_(std::move(compose_table)) {
  const std::size_t n0 = object_labels_.size();
  const std::size_t n1 = morphisms_.size();
  for (std::size_t i = 0; i < n1; ++i) {
    const auto& m = morphisms_[i];
    if (m.dom.value >= n0 || m.cod.value >= n0)
      throw Error(ErrorKind::IndexOutOfRange,
                  fmt::format("morphism {} ('{}') refers to object {}->{} of {}", i,
                              m.label, m.dom.value, m.cod.value, n0));
  }
  if (identity_of_.size() != n0)
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("identity table has {} entries for {} objects",
                            identity_of_.size(), n0));
  for (std::size_t x = 0; x < n0; ++x)
    if (identity_of_[x].value >= n1)
      throw Error(ErrorKind::IndexOutOfRange,
                  fmt::format("identity of object {} is morphism {} of {}", x,
                              identity_of_[x].value, n1));
  if (compose_.size() != n1 * n1)
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("composition table has {} entries, expected {}",
                            compose_.size(), n1 * n1));
  for (std::size_t k = 0; k < compose_.size(); ++k)
    if (compose_[k] && compose_[k]->value >= n1)
      throw Error(ErrorKind::IndexOutOfRange,
                  fmt::format("composition ({}, {}) yields morphism {} of {}", k / n1,
                              k % n1, compose_[k]->value, n1));
}

const std::string& FinCategory::object_label(ObjId x) const {
  if (x.value >= object_labels_.size())
    throw Error(ErrorKind::IndexOutOfRange, fmt::format("object {}", x.value));
  return object_labels_[x.value];
}

const MorphismData& FinCategory::morphism(MorId f) const {
  if (f.value >= morphisms_.size())
    throw Error(ErrorKind::IndexOutOfRange, fmt::format("morphism {}", f.value));
  return morphisms_[f.value];
}

const std::string& FinCategory::morphism_label(MorId f) const { return morphism(f).label; }

MorId FinCategory::identity(ObjId x) const {
  if (x.value >= identity_of_.size())
    throw Error(ErrorKind::IndexOutOfRange, fmt::format("object {}", x.value));
  return identity_of_[x.value];
}

std::optional<MorId> FinCategory::compose(MorId g, MorId f) const {
  const std::size_t n1 = morphisms_.size();
  if (g.value >= n1 || f.value >= n1)
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("compose({}, {}) with {} morphisms", g.value, f.value, n1));
  return compose_[g.value * n1 + f.value];
}

MorId FinCategory::then_compose(MorId g, MorId f) const {
  if (cod(f) != dom(g))
    throw Error(ErrorKind::BoundaryMismatch,
                fmt::format("'{}' o '{}' is not composable", morphism_label(g),
                            morphism_label(f)));
  auto h = compose(g, f);
  if (!h)
    throw Error(ErrorKind::BoundaryMismatch,
                fmt::format("'{}' o '{}' missing from the composition table",
                            morphism_label(g), morphism_label(f)));
  return *h;
}

std::optional<ObjId> FinCategory::find_object(const std::string& label) const {
  for (std::size_t i = 0; i < object_labels_.size(); ++i)
    if (object_labels_[i] == label) return ObjId{i};
  return std::nullopt;
}

std::optional<MorId> FinCategory::find_morphism(const std::string& label) const {
  for (std::size_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].label == label) return MorId{i};
  return std::nullopt;
}

bool same_category(const CategoryRef& a, const CategoryRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// --- builder ---------------------------------------------------------------

ObjId CategoryBuilder::add_object(std::string label) {
  objects_.push_back(std::move(label));
  identities_.emplace_back();
  return ObjId{objects_.size() - 1};
}

MorId CategoryBuilder::add_morphism(std::string label, ObjId dom, ObjId cod) {
  if (dom.value >= objects_.size() || cod.value >= objects_.size())
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("morphism '{}' between unknown objects", label));
  morphisms_.push_back({std::move(label), dom, cod});
  return MorId{morphisms_.size() - 1};
}

MorId CategoryBuilder::add_identity(ObjId x, std::string label) {
  if (x.value >= objects_.size())
    throw Error(ErrorKind::IndexOutOfRange, fmt::format("object {}", x.value));
  if (label.empty()) label = "1_" + objects_[x.value];
  MorId id = add_morphism(std::move(label), x, x);
  identities_[x.value] = id;
  return id;
}

void CategoryBuilder::set_identity(ObjId x, MorId id) {
  if (x.value >= objects_.size() || id.value >= morphisms_.size())
    throw Error(ErrorKind::IndexOutOfRange, "identity assignment");
  identities_[x.value] = id;
}

void CategoryBuilder::set_compose(MorId g, MorId f, MorId result) {
  const std::size_t n = morphisms_.size();
  if (g.value >= n || f.value >= n || result.value >= n)
    throw Error(ErrorKind::IndexOutOfRange, "composition triple");
  compositions_.emplace_back(g, f, result);
}

FinCategory CategoryBuilder::build(bool fill_identity_laws) const {
  const std::size_t n1 = morphisms_.size();
  std::vector<MorId> ids;
  ids.reserve(objects_.size());
  for (std::size_t x = 0; x < objects_.size(); ++x) {
    if (!identities_[x])
      throw Error(ErrorKind::MalformedInput,
                  fmt::format("object '{}' has no identity", objects_[x]));
    ids.push_back(*identities_[x]);
  }
  std::vector<std::optional<MorId>> table(n1 * n1);
  for (const auto& [g, f, h] : compositions_) table[g.value * n1 + f.value] = h;
  if (fill_identity_laws) {
    for (std::size_t f = 0; f < n1; ++f) {
      const auto& m = morphisms_[f];
      auto& left = table[ids[m.cod.value].value * n1 + f];
      if (!left) left = MorId{f};
      auto& right = table[f * n1 + ids[m.dom.value].value];
      if (!right) right = MorId{f};
    }
  }
  return FinCategory(objects_, morphisms_, std::move(ids), std::move(table));
}

// --- validation ------------------------------------------------------------

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport report;
  const std::size_t n1 = c.morphism_count();

  for (ObjId x : c.objects()) {
    MorId id = c.identity(x);
    if (c.dom(id) != x || c.cod(id) != x)
      report.add("identity-typing", {x.value, id.value},
                 fmt::format("identity of '{}' is not an endomorphism of it",
                             c.object_label(x)));
  }

  for (MorId g : c.morphisms()) {
    for (MorId f : c.morphisms()) {
      const bool composable = c.cod(f) == c.dom(g);
      auto h = c.compose(g, f);
      if (composable && !h) {
        report.add("compose-undefined", {g.value, f.value});
      } else if (!composable && h) {
        report.add("compose-not-composable", {g.value, f.value});
      } else if (h && (c.dom(*h) != c.dom(f) || c.cod(*h) != c.cod(g))) {
        report.add("compose-typing", {g.value, f.value, h->value});
      }
    }
  }

  for (MorId f : c.morphisms()) {
    MorId id_cod = c.identity(c.cod(f));
    MorId id_dom = c.identity(c.dom(f));
    auto left = c.compose(id_cod, f);
    if (left != f) report.add("left-unit", {f.value, id_cod.value});
    auto right = c.compose(f, id_dom);
    if (right != f) report.add("right-unit", {f.value, id_dom.value});
  }

  for (std::size_t f = 0; f < n1; ++f) {
    for (std::size_t g = 0; g < n1; ++g) {
      if (c.cod(MorId{f}) != c.dom(MorId{g})) continue;
      auto gf = c.compose(MorId{g}, MorId{f});
      for (std::size_t h = 0; h < n1; ++h) {
        if (c.cod(MorId{g}) != c.dom(MorId{h})) continue;
        auto hg = c.compose(MorId{h}, MorId{g});
        if (!gf || !hg) continue;
        auto lhs = c.compose(MorId{h}, *gf);
        auto rhs = c.compose(*hg, MorId{f});
        if (!lhs || !rhs) continue;  // reported as a typing defect above
        if (*lhs != *rhs) report.add("associativity", {h, g, f});
      }
    }
  }
  return report;
}

void require_valid(const FinCategory& c, std::size_t morphism_budget) {
  if (c.morphism_count() > morphism_budget)
    throw Error(ErrorKind::BudgetExceeded,
                fmt::format("category has {} morphisms, budget is {}",
                            c.morphism_count(), morphism_budget));
  auto report = validate_category(c);
  if (!report.ok()) throw Error(ErrorKind::InvalidCategory, report.summary());
}

FinCategory opposite(const FinCategory& c) {
  require_valid(c, std::numeric_limits<std::size_t>::max());
  const std::size_t n1 = c.morphism_count();
  std::vector<MorphismData> morphisms;
  morphisms.reserve(n1);
  for (const auto& m : c.morphism_table()) morphisms.push_back({m.label, m.cod, m.dom});
  std::vector<std::optional<MorId>> table(n1 * n1);
  for (std::size_t g = 0; g < n1; ++g)
    for (std::size_t f = 0; f < n1; ++f)
      table[g * n1 + f] = c.compose_table()[f * n1 + g];
  return FinCategory(c.object_labels(), std::move(morphisms), c.identity_table(),
                     std::move(table));
}

std::vector<MorId> hom_set(const FinCategory& c, ObjId x, ObjId y) {
  if (x.value >= c.object_count() || y.value >= c.object_count())
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("hom({}, {}) with {} objects", x.value, y.value,
                            c.object_count()));
  std::vector<MorId> out;
  for (MorId f : c.morphisms())
    if (c.dom(f) == x && c.cod(f) == y) out.push_back(f);
  return out;
}

namespace {

bool is_left_cancellable(const FinCategory& c, MorId f) {
  // f∘g = f∘h  =>  g = h  for all parallel g, h into dom f.
  for (MorId g : c.morphisms()) {
    if (c.cod(g) != c.dom(f)) continue;
    MorId fg = *c.compose(f, g);
    for (MorId h : c.morphisms()) {
      if (h == g || c.cod(h) != c.dom(f) || c.dom(h) != c.dom(g)) continue;
      if (*c.compose(f, h) == fg) return false;
    }
  }
  return true;
}

bool is_right_cancellable(const FinCategory& c, MorId f) {
  for (MorId g : c.morphisms()) {
    if (c.dom(g) != c.cod(f)) continue;
    MorId gf = *c.compose(g, f);
    for (MorId h : c.morphisms()) {
      if (h == g || c.dom(h) != c.cod(f) || c.cod(h) != c.cod(g)) continue;
      if (*c.compose(h, f) == gf) return false;
    }
  }
  return true;
}

std::optional<MorId> find_inverse(const FinCategory& c, MorId f) {
  for (MorId g : hom_set(c, c.cod(f), c.dom(f))) {
    if (*c.compose(g, f) == c.identity(c.dom(f)) &&
        *c.compose(f, g) == c.identity(c.cod(f)))
      return g;
  }
  return std::nullopt;
}

}  // namespace

MorphismClass classify_morphism(const FinCategory& c, MorId f,
                                std::size_t morphism_budget) {
  require_valid(c, morphism_budget);
  if (f.value >= c.morphism_count())
    throw Error(ErrorKind::IndexOutOfRange, fmt::format("morphism {}", f.value));
  MorphismClass out;
  out.is_mono = is_left_cancellable(c, f);
  out.is_epi = is_right_cancellable(c, f);
  out.inverse = find_inverse(c, f);
  out.is_iso = out.inverse.has_value();
  return out;
}

std::vector<MorId> isomorphisms(const FinCategory& c, ObjId x, ObjId y) {
  std::vector<MorId> out;
  for (MorId f : hom_set(c, x, y))
    if (find_inverse(c, f)) out.push_back(f);
  return out;
}

bool is_isomorphic(const FinCategory& c, ObjId x, ObjId y) {
  return !isomorphisms(c, x, y).empty();
}

ExtremalObjects find_extremal_objects(const FinCategory& c, std::size_t morphism_budget) {
  require_valid(c, morphism_budget);
  const std::size_t n0 = c.object_count();
  std::vector<std::size_t> hom_count(n0 * n0, 0);
  for (MorId f : c.morphisms()) ++hom_count[c.dom(f).value * n0 + c.cod(f).value];

  ExtremalObjects out;
  for (ObjId o : c.objects()) {
    bool initial = true;
    bool terminal = true;
    for (std::size_t x = 0; x < n0; ++x) {
      initial = initial && hom_count[o.value * n0 + x] == 1;
      terminal = terminal && hom_count[x * n0 + o.value] == 1;
    }
    if (initial) out.initial.push_back(o);
    if (terminal) out.terminal.push_back(o);
    if (initial && terminal) out.zero.push_back(o);
  }

  auto check = [&](const std::vector<ObjId>& list) {
    for (ObjId a : list)
      for (ObjId b : list) {
        auto isos = isomorphisms(c, a, b);
        if (isos.size() != 1 || hom_set(c, a, b).size() != 1) return false;
      }
    return true;
  };
  out.uniquely_isomorphic = check(out.initial) && check(out.terminal) && check(out.zero);
  return out;
}

}  // namespace fincat
