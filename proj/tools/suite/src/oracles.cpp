#include "fincat/suite/oracles.hpp"

#include <numeric>

namespace fincat::suite::oracle {

bool category_axioms_hold(const FinCategory& c) {
  const auto& mors = c.morphism_table();
  const auto& ids = c.identity_table();
  const auto& table = c.compose_table();
  const std::size_t n = mors.size();
  auto at = [&](std::size_t g, std::size_t f) { return table[g * n + f]; };

  for (std::size_t x = 0; x < ids.size(); ++x) {
    const auto& m = mors[ids[x].value];
    if (m.dom.value != x || m.cod.value != x) return false;
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      auto h = at(g, f);
      bool composable = mors[f].cod == mors[g].dom;
      if (composable != h.has_value()) return false;
      if (h && (mors[h->value].dom != mors[f].dom || mors[h->value].cod != mors[g].cod)) return false;
    }
  for (std::size_t f = 0; f < n; ++f) {
    auto l = at(ids[mors[f].cod.value].value, f);
    auto r = at(f, ids[mors[f].dom.value].value);
    if (!l || l->value != f || !r || r->value != f) return false;
  }
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t f = 0; f < n; ++f) {
        if (mors[f].cod != mors[g].dom || mors[g].cod != mors[h].dom) continue;
        auto gf = at(g, f);
        auto hg = at(h, g);
        if (at(h, gf->value) != at(hg->value, f)) return false;
      }
  return true;
}

FunctionKind function_kind(const FinFunction& f) {
  std::vector<std::size_t> hits(f.cod(), 0);
  for (std::size_t x = 0; x < f.dom(); ++x) ++hits[f.table()[x]];
  FunctionKind k{true, true};
  for (auto h : hits) {
    if (h > 1) k.injective = false;
    if (h == 0) k.surjective = false;
  }
  return k;
}

std::size_t limit_size(const Diagram& d) {
  const std::size_t v = d.vertices.size();
  for (const auto& s : d.vertices)
    if (s.size == 0) return 0;
  std::vector<std::size_t> x(v, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& e : d.edges)
      if (e.fun.table()[x[e.src]] != x[e.tgt]) ok = false;
    count += ok ? 1 : 0;
    std::size_t i = 0;
    while (i < v && ++x[i] == d.vertices[i].size) x[i++] = 0;
    if (i == v) break;
  }
  return count;
}

std::vector<std::size_t> colimit_partition(const Diagram& d) {
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (const auto& s : d.vertices) {
    offset.push_back(total);
    total += s.size;
  }
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a];
    return a;
  };
  for (const auto& e : d.edges)
    for (std::size_t x = 0; x < e.fun.dom(); ++x) {
      auto a = find(offset[e.src] + x);
      auto b = find(offset[e.tgt] + e.fun.table()[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::size_t> rep(total);
  for (std::size_t i = 0; i < total; ++i) rep[i] = find(i);
  // smallest member as representative
  std::vector<std::size_t> smallest(total, total);
  for (std::size_t i = 0; i < total; ++i) smallest[rep[i]] = std::min(smallest[rep[i]], i);
  for (std::size_t i = 0; i < total; ++i) rep[i] = smallest[rep[i]];
  return rep;
}

std::size_t pullback_size(const FinFunction& f, const FinFunction& g) {
  std::size_t n = 0;
  for (std::size_t x = 0; x < f.dom(); ++x)
    for (std::size_t y = 0; y < g.dom(); ++y) n += f.table()[x] == g.table()[y] ? 1 : 0;
  return n;
}

namespace {

MorId lookup(const FinCategory& c, MorId g, MorId f) {
  return *c.compose_table()[g.value * c.morphism_count() + f.value];
}

}  // namespace

std::vector<MorId> horizontal_components(const NatTrans& beta, const NatTrans& alpha) {
  const auto& m = *beta.target();
  const auto& j = beta.to();
  const auto& f = alpha.from();
  std::vector<MorId> out;
  for (std::size_t x = 0; x < alpha.components().size(); ++x) {
    MorId ja = j.morphism_map()[alpha.components()[x].value];
    MorId bf = beta.components()[f.object_map()[x].value];
    out.push_back(lookup(m, ja, bf));
  }
  return out;
}

std::vector<MorId> vertical_components(const NatTrans& nu, const NatTrans& mu) {
  std::vector<MorId> out;
  for (std::size_t x = 0; x < mu.components().size(); ++x)
    out.push_back(lookup(*mu.target(), nu.components()[x], mu.components()[x]));
  return out;
}

bool set_functor_laws_hold(const SetValuedFunctor& f) {
  const auto& c = *f.source;
  const bool co = f.variance == Variance::Covariant;
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    const auto& data = c.morphism_table()[m];
    const auto& fm = f.mor_val[m];
    std::size_t from = f.obj_val[(co ? data.dom : data.cod).value];
    std::size_t to = f.obj_val[(co ? data.cod : data.dom).value];
    if (fm.dom() != from || fm.cod() != to) return false;
  }
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const auto& t = f.mor_val[c.identity_table()[x].value].table();
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] != i) return false;
  }
  const std::size_t n = c.morphism_count();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      auto gh = c.compose_table()[g * n + h];
      if (!gh) continue;
      const auto& whole = f.mor_val[gh->value].table();
      // covariant: F(g∘h) = F(g)∘F(h); contravariant: F(g∘h) = F(h)∘F(g)
      const auto& first = f.mor_val[co ? h : g].table();
      const auto& second = f.mor_val[co ? g : h].table();
      for (std::size_t i = 0; i < whole.size(); ++i)
        if (whole[i] != second[first[i]]) return false;
    }
  return true;
}

}  // namespace fincat::suite::oracle
