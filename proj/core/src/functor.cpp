#include "fincat/functor.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include <fmt/format.h>

#include "fincat/error.hpp"

namespace fincat {

FinFunctor::FinFunctor(CategoryRef source, CategoryRef target, std::vector<ObjId> obj_map,
                       std::vector<MorId> mor_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      obj_map_(std::move(obj_map)),
      mor_map_(std::move(mor_map)) {
  if (!source_ || !target_) throw Error(ErrorKind::InvalidFunctor, "missing category");
  if (obj_map_.size() != source_->object_count() ||
      mor_map_.size() != source_->morphism_count())
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("functor tables have {}/{} entries for {}/{} source cells",
                            obj_map_.size(), mor_map_.size(), source_->object_count(),
                            source_->morphism_count()));
  for (ObjId x : obj_map_)
    if (x.value >= target_->object_count())
      throw Error(ErrorKind::IndexOutOfRange, fmt::format("target object {}", x.value));
  for (MorId f : mor_map_)
    if (f.value >= target_->morphism_count())
      throw Error(ErrorKind::IndexOutOfRange, fmt::format("target morphism {}", f.value));
}

bool FinFunctor::operator==(const FinFunctor& other) const {
  return obj_map_ == other.obj_map_ && mor_map_ == other.mor_map_ &&
         same_category(source_, other.source_) && same_category(target_, other.target_);
}

ValidationReport validate_functor(const FinFunctor& fun) {
  ValidationReport report;
  const FinCategory& k = *fun.source();
  const FinCategory& l = *fun.target();
  for (MorId f : k.morphisms()) {
    MorId ff = fun(f);
    if (l.dom(ff) != fun(k.dom(f))) report.add("preserves-dom", {f.value});
    if (l.cod(ff) != fun(k.cod(f))) report.add("preserves-cod", {f.value});
  }
  for (ObjId x : k.objects())
    if (fun(k.identity(x)) != l.identity(fun(x))) report.add("preserves-identity", {x.value});
  for (MorId g : k.morphisms())
    for (MorId f : k.morphisms()) {
      if (k.cod(f) != k.dom(g)) continue;
      auto gf = k.compose(g, f);
      if (!gf) continue;
      auto image = l.compose(fun(g), fun(f));
      if (l.cod(fun(f)) != l.dom(fun(g)) || !image || *image != fun(*gf))
        report.add("preserves-composition", {g.value, f.value});
    }
  return report;
}

void require_valid(const FinFunctor& f) {
  auto report = validate_functor(f);
  if (!report.ok()) throw Error(ErrorKind::InvalidFunctor, report.summary());
}

FunctorTraits functor_traits(const FinFunctor& fun) {
  require_valid(fun);
  const FinCategory& k = *fun.source();
  const FinCategory& l = *fun.target();
  FunctorTraits t{true, true};
  for (ObjId x : k.objects())
    for (ObjId y : k.objects()) {
      std::vector<bool> hit(l.morphism_count(), false);
      for (MorId f : hom_set(k, x, y)) {
        if (hit[fun(f).value]) t.faithful = false;
        hit[fun(f).value] = true;
      }
      for (MorId g : hom_set(l, fun(x), fun(y)))
        if (!hit[g.value]) t.full = false;
    }
  return t;
}

FinFunctor identity_functor(const CategoryRef& c) {
  std::vector<ObjId> objs;
  for (ObjId x : c->objects()) objs.push_back(x);
  std::vector<MorId> mors;
  for (MorId f : c->morphisms()) mors.push_back(f);
  return FinFunctor(c, c, std::move(objs), std::move(mors));
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  if (!same_category(f.target(), g.source()))
    throw Error(ErrorKind::BoundaryMismatch, "functor composite: target/source differ");
  std::vector<ObjId> objs;
  for (ObjId x : f.object_map()) objs.push_back(g(x));
  std::vector<MorId> mors;
  for (MorId m : f.morphism_map()) mors.push_back(g(m));
  return FinFunctor(f.source(), g.target(), std::move(objs), std::move(mors));
}

FinFunctor constant_functor(const CategoryRef& source, const CategoryRef& target, ObjId x) {
  std::vector<ObjId> objs(source->object_count(), x);
  std::vector<MorId> mors(source->morphism_count(), target->identity(x));
  return FinFunctor(source, target, std::move(objs), std::move(mors));
}

// --- natural transformations ----------------------------------------------

NatTrans::NatTrans(FinFunctor from, FinFunctor to, std::vector<MorId> components)
    : from_(std::move(from)), to_(std::move(to)), components_(std::move(components)) {
  if (!same_category(from_.source(), to_.source()) ||
      !same_category(from_.target(), to_.target()))
    throw Error(ErrorKind::BoundaryMismatch,
                "natural transformation between functors with different boundaries");
  if (components_.size() != from_.source()->object_count())
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("{} components for {} objects", components_.size(),
                            from_.source()->object_count()));
  for (MorId m : components_)
    if (m.value >= from_.target()->morphism_count())
      throw Error(ErrorKind::IndexOutOfRange, fmt::format("component morphism {}", m.value));
}

ValidationReport validate_nat_trans(const NatTrans& t) {
  ValidationReport report;
  const FinCategory& k = *t.source();
  const FinCategory& l = *t.target();
  const auto& F = t.from();
  const auto& G = t.to();
  bool typed = true;
  for (ObjId x : k.objects()) {
    MorId c = t[x];
    if (l.dom(c) != F(x) || l.cod(c) != G(x)) {
      report.add("component-typing", {x.value, c.value});
      typed = false;
    }
  }
  if (!typed) return report;
  for (MorId f : k.morphisms()) {
    ObjId a = k.dom(f), b = k.cod(f);
    auto lhs = l.compose(G(f), t[a]);
    auto rhs = l.compose(t[b], F(f));
    if (!lhs || !rhs || *lhs != *rhs) report.add("naturality", {f.value});
  }
  return report;
}

void require_valid(const NatTrans& t) {
  auto report = validate_nat_trans(t);
  if (!report.ok()) throw Error(ErrorKind::InvalidNatTrans, report.summary());
}

NatTrans identity_nat(const FinFunctor& f) {
  std::vector<MorId> comps;
  for (ObjId x : f.source()->objects()) comps.push_back(f.target()->identity(f(x)));
  return NatTrans(f, f, std::move(comps));
}

NatTrans vertical_compose(const NatTrans& nu, const NatTrans& mu) {
  if (!(mu.to() == nu.from()))
    throw Error(ErrorKind::BoundaryMismatch, "vertical composite: middle functors differ");
  const FinCategory& l = *mu.target();
  std::vector<MorId> comps;
  for (ObjId x : mu.source()->objects()) comps.push_back(l.then_compose(nu[x], mu[x]));
  return NatTrans(mu.from(), nu.to(), std::move(comps));
}

namespace {

void require_pasting(const NatTrans& beta, const NatTrans& alpha) {
  if (!same_category(alpha.target(), beta.source()))
    throw Error(ErrorKind::BoundaryMismatch, "horizontal composite: middle categories differ");
}

}  // namespace

NatTrans horizontal_compose(const NatTrans& beta, const NatTrans& alpha) {
  require_pasting(beta, alpha);
  const FinCategory& m = *beta.target();
  const auto& F = alpha.from();
  const auto& J = beta.to();
  std::vector<MorId> comps;
  for (ObjId x : alpha.source()->objects())
    comps.push_back(m.then_compose(J(alpha[x]), beta[F(x)]));
  return NatTrans(compose(beta.from(), alpha.from()), compose(beta.to(), alpha.to()),
                  std::move(comps));
}

NatTrans horizontal_compose_alt(const NatTrans& beta, const NatTrans& alpha) {
  require_pasting(beta, alpha);
  const FinCategory& m = *beta.target();
  const auto& G = alpha.to();
  const auto& H = beta.from();
  std::vector<MorId> comps;
  for (ObjId x : alpha.source()->objects())
    comps.push_back(m.then_compose(beta[G(x)], H(alpha[x])));
  return NatTrans(compose(beta.from(), alpha.from()), compose(beta.to(), alpha.to()),
                  std::move(comps));
}

NatTrans whisker_left(const FinFunctor& h, const NatTrans& alpha) {
  if (!same_category(alpha.target(), h.source()))
    throw Error(ErrorKind::BoundaryMismatch, "left whiskering: categories differ");
  std::vector<MorId> comps;
  for (MorId c : alpha.components()) comps.push_back(h(c));
  return NatTrans(compose(h, alpha.from()), compose(h, alpha.to()), std::move(comps));
}

NatTrans whisker_right(const NatTrans& beta, const FinFunctor& f) {
  if (!same_category(f.target(), beta.source()))
    throw Error(ErrorKind::BoundaryMismatch, "right whiskering: categories differ");
  std::vector<MorId> comps;
  for (ObjId x : f.source()->objects()) comps.push_back(beta[f(x)]);
  return NatTrans(compose(beta.from(), f), compose(beta.to(), f), std::move(comps));
}

bool check_interchange(const NatTrans& delta, const NatTrans& gamma, const NatTrans& beta,
                       const NatTrans& alpha) {
  for (const NatTrans* t : {&delta, &gamma, &beta, &alpha}) require_valid(*t);
  auto lhs = horizontal_compose(vertical_compose(delta, gamma), vertical_compose(beta, alpha));
  auto rhs = vertical_compose(horizontal_compose(delta, beta), horizontal_compose(gamma, alpha));
  return lhs.components() == rhs.components() && lhs.from() == rhs.from() &&
         lhs.to() == rhs.to();
}

// --- enumeration -----------------------------------------------------------

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b, std::size_t cap) {
  if (a == 0 || b == 0) return 0;
  if (a > cap / b) return cap + 1;
  return std::min(a * b, cap + 1);
}

std::vector<std::size_t> hom_sizes(const FinCategory& l) {
  const std::size_t n0 = l.object_count();
  std::vector<std::size_t> sizes(n0 * n0, 0);
  for (MorId f : l.morphisms()) ++sizes[l.dom(f).value * n0 + l.cod(f).value];
  return sizes;
}

// Calls visit(obj_map) for every object map in lexicographic order.
template <class Visit>
void for_each_object_map(std::size_t n_src, std::size_t n_tgt, Visit&& visit) {
  std::vector<ObjId> map(n_src, ObjId{0});
  if (n_src > 0 && n_tgt == 0) return;
  while (true) {
    visit(map);
    std::size_t i = n_src;
    while (i > 0) {
      --i;
      if (++map[i].value < n_tgt) break;
      map[i].value = 0;
      if (i == 0) return;
    }
    if (n_src == 0) return;
  }
}

}  // namespace

std::size_t functor_candidate_bound(const FinCategory& k, const FinCategory& l,
                                    std::size_t cap) {
  std::size_t maps = 1;
  for (std::size_t i = 0; i < k.object_count(); ++i)
    maps = saturating_mul(maps, l.object_count(), cap);
  if (k.object_count() > 0 && l.object_count() == 0) return 0;
  // The object-map loop alone must stay small for the bound to be computed.
  if (maps > cap) return cap + 1;
  const auto sizes = hom_sizes(l);
  const std::size_t n0 = l.object_count();
  std::size_t total = 0;
  for_each_object_map(k.object_count(), n0, [&](const std::vector<ObjId>& om) {
    std::size_t count = 1;
    for (MorId f : k.morphisms()) {
      if (f == k.identity(k.dom(f))) continue;
      count = saturating_mul(count, sizes[om[k.dom(f).value].value * n0 + om[k.cod(f).value].value], cap);
    }
    total = std::min(total + count, cap + 1);
  });
  return total;
}

std::vector<FinFunctor> enumerate_functors(const CategoryRef& source, const CategoryRef& target,
                                           std::size_t budget) {
  const FinCategory& k = *source;
  const FinCategory& l = *target;
  require_valid(k);
  require_valid(l);
  const std::size_t report_cap = std::max<std::size_t>(budget, 10'000'000);
  const std::size_t bound = functor_candidate_bound(k, l, report_cap);
  if (bound > budget)
    throw Error(ErrorKind::BudgetExceeded,
                fmt::format("functor candidate bound {}{} exceeds budget {}",
                            bound > report_cap ? ">" : "", std::min(bound, report_cap), budget));

  std::vector<MorId> free;  // non-identity morphisms, assigned in order
  std::vector<bool> is_identity(k.morphism_count(), false);
  for (ObjId x : k.objects()) is_identity[k.identity(x).value] = true;
  for (MorId f : k.morphisms())
    if (!is_identity[f.value]) free.push_back(f);
  std::vector<std::size_t> position(k.morphism_count(), 0);  // 0 = identity (always set)
  for (std::size_t i = 0; i < free.size(); ++i) position[free[i].value] = i + 1;

  // Composition constraints become checkable once their last member is set.
  std::vector<std::vector<std::tuple<MorId, MorId, MorId>>> checks(free.size() + 1);
  for (MorId g : k.morphisms())
    for (MorId f : k.morphisms()) {
      if (k.cod(f) != k.dom(g)) continue;
      MorId h = *k.compose(g, f);
      std::size_t last = std::max({position[g.value], position[f.value], position[h.value]});
      checks[last].emplace_back(g, f, h);
    }

  std::vector<FinFunctor> out;
  const std::size_t n0 = l.object_count();
  std::vector<std::vector<MorId>> homs(n0 * n0);
  for (MorId f : l.morphisms()) homs[l.dom(f).value * n0 + l.cod(f).value].push_back(f);

  for_each_object_map(k.object_count(), n0, [&](const std::vector<ObjId>& om) {
    std::vector<MorId> mm(k.morphism_count());
    for (ObjId x : k.objects()) mm[k.identity(x).value] = l.identity(om[x.value]);
    auto consistent = [&](std::size_t level) {
      for (const auto& [g, f, h] : checks[level]) {
        auto gf = l.compose(mm[g.value], mm[f.value]);
        if (!gf || *gf != mm[h.value]) return false;
      }
      return true;
    };
    if (!consistent(0)) return;
    auto recurse = [&](auto&& self, std::size_t i) -> void {
      if (i == free.size()) {
        out.emplace_back(source, target, om, mm);
        return;
      }
      MorId f = free[i];
      const auto& choices = homs[om[k.dom(f).value].value * n0 + om[k.cod(f).value].value];
      for (MorId c : choices) {
        mm[f.value] = c;
        if (consistent(i + 1)) self(self, i + 1);
      }
    };
    recurse(recurse, 0);
  });
  return out;
}

std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& from, const FinFunctor& to,
                                          std::size_t budget) {
  if (!same_category(from.source(), to.source()) || !same_category(from.target(), to.target()))
    throw Error(ErrorKind::BoundaryMismatch, "functors have different boundaries");
  const FinCategory& k = *from.source();
  const FinCategory& l = *from.target();
  std::vector<std::vector<MorId>> choices;
  std::size_t bound = 1;
  for (ObjId x : k.objects()) {
    choices.push_back(hom_set(l, from(x), to(x)));
    bound = saturating_mul(bound, choices.back().size(), budget);
  }
  if (bound > budget)
    throw Error(ErrorKind::BudgetExceeded,
                fmt::format("natural transformation candidates exceed budget {}", budget));

  // naturality squares checkable once both endpoints are assigned
  std::vector<std::vector<MorId>> checks(k.object_count());
  for (MorId f : k.morphisms())
    checks[std::max(k.dom(f).value, k.cod(f).value)].push_back(f);

  std::vector<NatTrans> out;
  std::vector<MorId> comps(k.object_count());
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == k.object_count()) {
      out.emplace_back(from, to, comps);
      return;
    }
    for (MorId c : choices[i]) {
      comps[i] = c;
      bool ok = true;
      for (MorId f : checks[i]) {
        auto lhs = l.compose(to(f), comps[k.dom(f).value]);
        auto rhs = l.compose(comps[k.cod(f).value], from(f));
        if (!lhs || !rhs || *lhs != *rhs) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

std::optional<MorId> FunctorCategory::find(const NatTrans& t) const {
  for (std::size_t i = 0; i < transformations.size(); ++i)
    if (transformations[i] == t) return MorId{i};
  return std::nullopt;
}

FunctorCategory functor_category(const CategoryRef& k, const CategoryRef& l,
                                 std::size_t budget) {
  FunctorCategory out;
  out.functors = enumerate_functors(k, l, budget);
  const std::size_t n = out.functors.size();

  CategoryBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_object(fmt::format("F{}", i));
  using Key = std::tuple<std::size_t, std::size_t, std::vector<MorId>>;
  std::map<Key, MorId> index;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k_ = 0;
      for (auto& t : enumerate_nat_trans(out.functors[i], out.functors[j], budget)) {
        MorId m = b.add_morphism(fmt::format("F{}=>F{}#{}", i, j, k_++), ObjId{i}, ObjId{j});
        index.emplace(Key{i, j, t.components()}, m);
        ends.emplace_back(i, j);
        if (i == j && t == identity_nat(out.functors[i])) b.set_identity(ObjId{i}, m);
        out.transformations.push_back(std::move(t));
      }
    }
  const std::size_t m1 = out.transformations.size();
  for (std::size_t g = 0; g < m1; ++g)
    for (std::size_t f = 0; f < m1; ++f) {
      if (ends[f].second != ends[g].first) continue;
      auto composite = vertical_compose(out.transformations[g], out.transformations[f]);
      auto it = index.find(Key{ends[f].first, ends[g].second, composite.components()});
      if (it == index.end())
        throw Error(ErrorKind::InvalidNatTrans, "vertical composite missing from enumeration");
      b.set_compose(MorId{g}, MorId{f}, it->second);
    }
  out.category = share(b.build(false));
  return out;
}

// --- equivalences ------------------------------------------------------------

NatTrans inverse_nat(const NatTrans& t) {
  const FinCategory& l = *t.target();
  std::vector<MorId> comps;
  for (ObjId x : t.source()->objects()) {
    MorId c = t[x];
    std::optional<MorId> inv;
    for (MorId g : hom_set(l, l.cod(c), l.dom(c)))
      if (*l.compose(g, c) == l.identity(l.dom(c)) && *l.compose(c, g) == l.identity(l.cod(c))) {
        inv = g;
        break;
      }
    if (!inv)
      throw Error(ErrorKind::NotInvertible,
                  fmt::format("component at object '{}' ({}) is not invertible",
                              t.source()->object_label(x), l.morphism_label(c)));
    comps.push_back(*inv);
  }
  return NatTrans(t.to(), t.from(), std::move(comps));
}

ValidationReport validate_equivalence(const EquivalenceData& e) {
  ValidationReport report;
  auto absorb = [&](const std::string& prefix, const ValidationReport& r) {
    for (const auto& v : r.violations) report.add(prefix + v.law, v.witness, v.message);
  };
  absorb("F.", validate_functor(e.f));
  absorb("G.", validate_functor(e.g));
  if (!report.ok()) return report;
  if (!same_category(e.f.target(), e.g.source()) || !same_category(e.g.target(), e.f.source())) {
    report.add("boundary", {}, "F and G do not run in opposite directions");
    return report;
  }
  auto check_unit = [&](const std::string& name, const NatTrans& t, const FinFunctor& composite,
                        const CategoryRef& base) {
    if (!(t.from() == composite) || !(t.to() == identity_functor(base))) {
      report.add(name + ".boundary", {});
      return;
    }
    absorb(name + ".", validate_nat_trans(t));
    const FinCategory& c = *t.target();
    for (ObjId x : t.source()->objects())
      if (!classify_morphism(c, t[x]).is_iso) report.add(name + ".invertible", {x.value});
  };
  check_unit("alpha", e.alpha, compose(e.g, e.f), e.f.source());
  check_unit("omega", e.omega, compose(e.f, e.g), e.g.source());
  return report;
}

bool check_equivalence(const EquivalenceData& e) { return validate_equivalence(e).ok(); }

EquivalenceData identity_equivalence(const CategoryRef& c) {
  auto id = identity_functor(c);
  return {id, id, identity_nat(id), identity_nat(id)};
}

EquivalenceData compose_equivalences(const EquivalenceData& e1, const EquivalenceData& e2) {
  if (!same_category(e1.f.target(), e2.f.source()))
    throw Error(ErrorKind::BoundaryMismatch, "equivalences do not share a middle category");
  for (const auto* t : {&e1.alpha, &e1.omega, &e2.alpha, &e2.omega}) {
    require_valid(*t);
    inverse_nat(*t);  // throws NotInvertible naming the component
  }
  FinFunctor f = compose(e2.f, e1.f);
  FinFunctor g = compose(e1.g, e2.g);
  // G1 G2 F2 F1 => G1 F1 => 1_K
  NatTrans inner_alpha = whisker_right(whisker_left(e1.g, e2.alpha), e1.f);
  NatTrans alpha = vertical_compose(e1.alpha, inner_alpha);
  // F2 F1 G1 G2 => F2 G2 => 1_M
  NatTrans inner_omega = whisker_right(whisker_left(e2.f, e1.omega), e2.g);
  NatTrans omega = vertical_compose(e2.omega, inner_omega);
  return {std::move(f), std::move(g), std::move(alpha), std::move(omega)};
}

}  // namespace fincat
