#include "fincat/yoneda.hpp"

#include <map>

#include <fmt/format.h>

#include "fincat/error.hpp"

namespace fincat {

bool SetValuedFunctor::operator==(const SetValuedFunctor& o) const {
  return variance == o.variance && obj_val == o.obj_val && mor_val == o.mor_val &&
         same_category(source, o.source);
}

ValidationReport validate_set_functor(const SetValuedFunctor& fun) {
  ValidationReport report;
  const FinCategory& c = *fun.source;
  if (fun.obj_val.size() != c.object_count() || fun.mor_val.size() != c.morphism_count()) {
    report.add("table-size", {fun.obj_val.size(), fun.mor_val.size()});
    return report;
  }
  const bool co = fun.variance == Variance::Covariant;
  bool typed = true;
  for (MorId f : c.morphisms()) {
    std::size_t from = fun(co ? c.dom(f) : c.cod(f));
    std::size_t to = fun(co ? c.cod(f) : c.dom(f));
    if (fun(f).dom() != from || fun(f).cod() != to) {
      report.add("value-typing", {f.value});
      typed = false;
    }
  }
  if (!typed) return report;
  for (ObjId x : c.objects())
    if (fun(c.identity(x)) != identity_function(fun(x))) report.add("preserves-identity", {x.value});
  for (MorId g : c.morphisms())
    for (MorId f : c.morphisms()) {
      if (c.cod(f) != c.dom(g)) continue;
      auto h = c.compose(g, f);
      if (!h) continue;
      FinFunction expect = co ? compose(fun(g), fun(f)) : compose(fun(f), fun(g));
      if (fun(*h) != expect) report.add("preserves-composition", {g.value, f.value});
    }
  return report;
}

void require_valid(const SetValuedFunctor& f) {
  if (!f.source) throw Error(ErrorKind::InvalidFunctor, "set-valued functor without source");
  auto report = validate_set_functor(f);
  if (!report.ok()) throw Error(ErrorKind::InvalidFunctor, report.summary());
}

namespace {

// Position of every morphism inside its own hom-set.
std::vector<std::size_t> hom_positions(const FinCategory& c) {
  std::vector<std::size_t> pos(c.morphism_count());
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> next;
  for (MorId f : c.morphisms()) pos[f.value] = next[{c.dom(f).value, c.cod(f).value}]++;
  return pos;
}

}  // namespace

SetValuedFunctor hom_functor(const CategoryRef& cref, ObjId a, Variance variance) {
  const FinCategory& c = *cref;
  const auto pos = hom_positions(c);
  SetValuedFunctor out{cref, variance, {}, {}};
  const bool co = variance == Variance::Covariant;
  for (ObjId x : c.objects())
    out.obj_val.push_back(co ? hom_set(c, a, x).size() : hom_set(c, x, a).size());
  for (MorId g : c.morphisms()) {
    ObjId x = c.dom(g), y = c.cod(g);
    std::vector<std::size_t> table;
    if (co) {
      for (MorId h : hom_set(c, a, x)) table.push_back(pos[c.then_compose(g, h).value]);
      out.mor_val.emplace_back(out.obj_val[x.value], out.obj_val[y.value], std::move(table));
    } else {
      for (MorId h : hom_set(c, y, a)) table.push_back(pos[c.then_compose(h, g).value]);
      out.mor_val.emplace_back(out.obj_val[y.value], out.obj_val[x.value], std::move(table));
    }
  }
  return out;
}

SetValuedFunctor constant_set_functor(const CategoryRef& c, std::size_t size, Variance variance) {
  SetValuedFunctor out{c, variance, std::vector<std::size_t>(c->object_count(), size), {}};
  out.mor_val.assign(c->morphism_count(), identity_function(size));
  return out;
}

SetValuedFunctor powerset_functor(const FinSetSkeleton& s, Variance variance) {
  SetValuedFunctor out{s.category, variance, {}, {}};
  for (ObjId x : s.category->objects()) out.obj_val.push_back(std::size_t{1} << s.size_of(x));
  for (const auto& f : s.functions) out.mor_val.push_back(powerset(variance, f));
  return out;
}

ElementsCategory category_of_elements(const SetValuedFunctor& fun) {
  require_valid(fun);
  const FinCategory& c = *fun.source;
  const bool co = fun.variance == Variance::Covariant;
  ElementsCategory out;
  CategoryBuilder b;
  std::vector<std::size_t> offset;
  for (ObjId x : c.objects()) {
    offset.push_back(out.element.size());
    for (std::size_t e = 0; e < fun(x); ++e) {
      b.add_object(fmt::format("({},{})", c.object_label(x), e));
      out.element.emplace_back(x, e);
    }
  }
  // index[f][e]: e is the source element (covariant) or target element
  std::vector<std::vector<MorId>> index(c.morphism_count());
  for (MorId f : c.morphisms()) {
    ObjId x = c.dom(f), y = c.cod(f);
    const FinFunction& ff = fun(f);
    for (std::size_t e = 0; e < ff.dom(); ++e) {
      ObjId src{co ? offset[x.value] + e : offset[x.value] + ff(e)};
      ObjId tgt{co ? offset[y.value] + ff(e) : offset[y.value] + e};
      index[f.value].push_back(
          b.add_morphism(fmt::format("{}@{}", c.morphism_label(f), e), src, tgt));
      out.underlying.push_back(f);
    }
  }
  for (ObjId x : c.objects())
    for (std::size_t e = 0; e < fun(x); ++e)
      b.set_identity(ObjId{offset[x.value] + e}, index[c.identity(x).value][e]);
  for (MorId f : c.morphisms())
    for (MorId g : c.morphisms()) {
      if (c.cod(f) != c.dom(g)) continue;
      MorId h = c.then_compose(g, f);
      if (co) {
        for (std::size_t e = 0; e < fun(f).dom(); ++e)
          b.set_compose(index[g.value][fun(f)(e)], index[f.value][e], index[h.value][e]);
      } else {
        for (std::size_t e = 0; e < fun(g).dom(); ++e)
          b.set_compose(index[g.value][e], index[f.value][fun(g)(e)], index[h.value][e]);
      }
    }
  out.category = b.build(false);
  return out;
}

namespace {

// χ at every object for (A, a); empty optional when some χ_X is not bijective.
std::optional<std::vector<FinFunction>> chi_tables(const SetValuedFunctor& fun, ObjId a,
                                                   std::size_t elem) {
  const FinCategory& c = *fun.source;
  const bool co = fun.variance == Variance::Covariant;
  std::vector<FinFunction> chi;
  for (ObjId x : c.objects()) {
    auto homs = co ? hom_set(c, a, x) : hom_set(c, x, a);
    if (homs.size() != fun(x)) return std::nullopt;
    std::vector<std::size_t> table;
    for (MorId f : homs) table.push_back(fun(f)(elem));
    FinFunction chi_x(homs.size(), fun(x), std::move(table));
    if (!classify_function(chi_x).bijective) return std::nullopt;
    chi.push_back(std::move(chi_x));
  }
  return chi;
}

}  // namespace

std::optional<RepresentationWitness> find_representation(const SetValuedFunctor& fun) {
  require_valid(fun);
  const FinCategory& c = *fun.source;
  const bool co = fun.variance == Variance::Covariant;
  std::optional<RepresentationWitness> out;
  for (ObjId a : c.objects())
    for (std::size_t e = 0; e < fun(a); ++e) {
      auto chi = chi_tables(fun, a, e);
      if (!chi) continue;
      if (!out) {
        out = RepresentationWitness{a, e, std::move(*chi), {}, true};
        continue;
      }
      out->alternatives.emplace_back(a, e);
      // morphisms relating the two universal elements
      std::size_t links = 0;
      bool iso = false;
      auto homs = co ? hom_set(c, out->object, a) : hom_set(c, a, out->object);
      for (MorId f : homs)
        if (fun(f)(out->universal_element) == e) {
          ++links;
          iso = classify_morphism(c, f, c.morphism_count()).is_iso;
        }
      if (links != 1 || !iso) out->alternatives_isomorphic = false;
    }
  return out;
}

bool is_natural(const SetValuedFunctor& from, const SetValuedFunctor& to, const SetNatTrans& t) {
  const FinCategory& c = *from.source;
  if (t.size() != c.object_count()) return false;
  for (ObjId x : c.objects())
    if (t[x.value].dom() != from(x) || t[x.value].cod() != to(x)) return false;
  const bool co = from.variance == Variance::Covariant;
  for (MorId g : c.morphisms()) {
    const auto& tb = t[c.dom(g).value];
    const auto& tc = t[c.cod(g).value];
    if (co) {
      for (std::size_t e = 0; e < from(c.dom(g)); ++e)
        if (to(g)(tb(e)) != tc(from(g)(e))) return false;
    } else {
      for (std::size_t e = 0; e < from(c.cod(g)); ++e)
        if (tb(from(g)(e)) != to(g)(tc(e))) return false;
    }
  }
  return true;
}

std::vector<SetNatTrans> enumerate_set_nat(const SetValuedFunctor& from,
                                           const SetValuedFunctor& to, std::size_t budget) {
  if (!same_category(from.source, to.source) || from.variance != to.variance)
    throw Error(ErrorKind::BoundaryMismatch, "set-valued functors differ in source or variance");
  const FinCategory& c = *from.source;
  const bool co = from.variance == Variance::Covariant;
  const std::size_t n = c.object_count();

  // One variable per (object, element of from(object)), object-major, so the
  // ascending search visits families in lexicographic order of their tables.
  std::vector<std::size_t> base(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) base[x + 1] = base[x] + from(ObjId{x});
  const std::size_t vars = base[n];
  for (std::size_t x = 0; x < n; ++x)
    if (from(ObjId{x}) > 0 && to(ObjId{x}) == 0) return {};

  // Naturality at (g, e) ties two variables: to(g) of one equals the other.
  // Each square is checked once its later variable is assigned.
  struct Square {
    std::size_t other;
    MorId g;
    bool mapped_is_self;  // the target-side map applies to this variable
  };
  std::vector<std::vector<Square>> at(vars);
  for (MorId g : c.morphisms()) {
    const std::size_t d = c.dom(g).value, k = c.cod(g).value;
    const FinFunction& fg = from(g);
    // covariant: to(g)(t_d(e)) == t_k(from(g)(e)), e in from(d)
    // contravariant: t_d(from(g)(e)) == to(g)(t_k(e)), e in from(k)
    for (std::size_t e = 0; e < fg.dom(); ++e) {
      std::size_t mapped = co ? base[d] + e : base[k] + e;        // variable under to(g)
      std::size_t plain = co ? base[k] + fg(e) : base[d] + fg(e);  // variable compared directly
      std::size_t later = std::max(mapped, plain);
      at[later].push_back({later == mapped ? plain : mapped, g, later == mapped});
    }
  }

  std::vector<std::size_t> value(vars, 0);
  std::vector<std::size_t> owner(vars);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t v = base[x]; v < base[x + 1]; ++v) owner[v] = x;

  std::vector<SetNatTrans> out;
  std::size_t examined = 0;
  auto consistent = [&](std::size_t v) {
    for (const auto& sq : at[v]) {
      const FinFunction& tg = to(sq.g);
      std::size_t self = value[v], other = value[sq.other];
      bool ok = sq.mapped_is_self ? tg(self) == other : tg(other) == self;
      if (!ok) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t v) -> void {
    if (v == vars) {
      SetNatTrans family;
      for (std::size_t x = 0; x < n; ++x)
        family.emplace_back(from(ObjId{x}), to(ObjId{x}),
                            std::vector<std::size_t>(value.begin() + base[x], value.begin() + base[x + 1]));
      out.push_back(std::move(family));
      return;
    }
    const std::size_t cod = to(ObjId{owner[v]});
    for (std::size_t y = 0; y < cod; ++y) {
      if (++examined > budget)
        throw Error(ErrorKind::BudgetExceeded,
                    fmt::format("natural transformation search exceeded {} assignments", budget));
      value[v] = y;
      if (consistent(v)) self(self, v + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

YonedaResult yoneda_bijection(const SetValuedFunctor& fun, ObjId a, bool check_naturality,
                              std::size_t budget) {
  require_valid(fun);
  const FinCategory& c = *fun.source;
  const bool co = fun.variance == Variance::Covariant;
  const auto pos = hom_positions(c);
  const auto rep = hom_functor(fun.source, a, fun.variance);

  YonedaResult r;
  r.object = a;
  r.value_size = fun(a);
  r.transformations = enumerate_set_nat(rep, fun, budget);
  const std::size_t id_pos = pos[c.identity(a).value];
  for (const auto& alpha : r.transformations) r.theta.push_back(alpha[a.value](id_pos));

  std::map<SetNatTrans, std::size_t> index;
  for (std::size_t i = 0; i < r.transformations.size(); ++i) index.emplace(r.transformations[i], i);

  r.theta_inv_natural = true;
  bool inverse = r.transformations.size() == r.value_size;
  for (std::size_t e = 0; e < r.value_size; ++e) {
    SetNatTrans family;
    for (ObjId x : c.objects()) {
      std::vector<std::size_t> table;
      for (MorId f : co ? hom_set(c, a, x) : hom_set(c, x, a)) table.push_back(fun(f)(e));
      family.emplace_back(rep(x), fun(x), std::move(table));
    }
    if (!is_natural(rep, fun, family)) r.theta_inv_natural = false;
    auto it = index.find(family);
    if (it == index.end()) {
      inverse = false;
      r.theta_inv.push_back(r.transformations.size());
      continue;
    }
    r.theta_inv.push_back(it->second);
    if (r.theta[it->second] != e) inverse = false;
  }
  for (std::size_t i = 0; i < r.theta.size() && inverse; ++i)
    if (r.theta[i] >= r.value_size || r.theta_inv[r.theta[i]] != i) inverse = false;
  r.mutually_inverse = inverse;

  if (check_naturality) {
    bool natural = true;
    for (MorId g : c.morphisms()) {
      if ((co ? c.dom(g) : c.cod(g)) != a) continue;
      ObjId a2 = co ? c.cod(g) : c.dom(g);
      const auto rep2 = hom_functor(fun.source, a2, fun.variance);
      for (const auto& alpha : r.transformations) {
        // α precomposed with Hom(g,-) (resp. Hom(-,g))
        SetNatTrans beta;
        for (ObjId x : c.objects()) {
          std::vector<std::size_t> table;
          for (MorId h : co ? hom_set(c, a2, x) : hom_set(c, x, a2)) {
            MorId moved = co ? c.then_compose(h, g) : c.then_compose(g, h);
            table.push_back(alpha[x.value](pos[moved.value]));
          }
          beta.emplace_back(rep2(x), fun(x), std::move(table));
        }
        std::size_t lhs = beta[a2.value](pos[c.identity(a2).value]);
        std::size_t rhs = fun(g)(alpha[a.value](id_pos));
        if (!is_natural(rep2, fun, beta) || lhs != rhs) natural = false;
      }
    }
    r.natural_in_object = natural;
  }
  return r;
}

bool EmbeddingReport::ok() const {
  if (!injective_on_objects) return false;
  for (const auto& p : pairs)
    if (!p.bijective) return false;
  return true;
}

EmbeddingReport yoneda_embedding(const CategoryRef& cref, std::size_t budget) {
  const FinCategory& c = *cref;
  require_valid(c);
  const auto pos = hom_positions(c);
  EmbeddingReport r;
  // Hom(-,A) as a family of morphism sets; distinct objects give distinct sets
  std::vector<std::vector<std::vector<MorId>>> values;
  for (ObjId a : c.objects()) {
    std::vector<std::vector<MorId>> v;
    for (ObjId x : c.objects()) v.push_back(hom_set(c, x, a));
    values.push_back(std::move(v));
  }
  r.injective_on_objects = true;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j]) r.injective_on_objects = false;

  std::vector<SetValuedFunctor> reps;
  for (ObjId a : c.objects()) reps.push_back(hom_functor(cref, a, Variance::Contravariant));
  for (ObjId a : c.objects())
    for (ObjId b : c.objects()) {
      EmbeddingPair p{a, b, 0, 0, false};
      auto nats = enumerate_set_nat(reps[a.value], reps[b.value], budget);
      p.nat_count = nats.size();
      std::map<SetNatTrans, std::size_t> index;
      for (std::size_t i = 0; i < nats.size(); ++i) index.emplace(nats[i], i);
      auto homs = hom_set(c, a, b);
      p.hom_size = homs.size();
      std::vector<bool> hit(nats.size(), false);
      bool ok = homs.size() == nats.size();
      for (MorId f : homs) {
        SetNatTrans family;
        for (ObjId x : c.objects()) {
          std::vector<std::size_t> table;
          for (MorId h : hom_set(c, x, a)) table.push_back(pos[c.then_compose(f, h).value]);
          family.emplace_back(reps[a.value](x), reps[b.value](x), std::move(table));
        }
        auto it = index.find(family);
        if (it == index.end() || hit[it->second]) {
          ok = false;
          continue;
        }
        hit[it->second] = true;
      }
      p.bijective = ok;
      r.pairs.push_back(p);
    }
  return r;
}

}  // namespace fincat
