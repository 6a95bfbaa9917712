#include "fincat/adjunction.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

#include "fincat/error.hpp"
#include "fincat/finset.hpp"
#include "fincat/yoneda.hpp"

namespace fincat {

void require_well_typed(const AdjunctionData& a) {
  const auto& L = a.f.source();
  const auto& K = a.f.target();
  if (!same_category(a.h.source(), K) || !same_category(a.h.target(), L))
    throw Error(ErrorKind::BoundaryMismatch, "adjunction: H must go back from K to L");
  if (!(a.unit.from() == identity_functor(L)) || !(a.unit.to() == compose(a.h, a.f)))
    throw Error(ErrorKind::BoundaryMismatch, "adjunction: unit must be 1_L => HF");
  if (!(a.counit.from() == compose(a.f, a.h)) || !(a.counit.to() == identity_functor(K)))
    throw Error(ErrorKind::BoundaryMismatch, "adjunction: counit must be FH => 1_K");
}

TriangleReport check_triangles(const AdjunctionData& a) {
  require_well_typed(a);
  const FinCategory& l = *a.f.source();
  const FinCategory& k = *a.f.target();
  TriangleReport r;

  auto left = vertical_compose(whisker_right(a.counit, a.f), whisker_left(a.f, a.unit));
  for (ObjId x : l.objects())
    if (left[x] != k.identity(a.f(x))) r.left_failures.push_back(x);
  auto right = vertical_compose(whisker_left(a.h, a.counit), whisker_right(a.unit, a.h));
  for (ObjId y : k.objects())
    if (right[y] != l.identity(a.h(y))) r.right_failures.push_back(y);

  for (const auto& v : validate_nat_trans(a.unit).violations)
    if (v.law == "naturality") r.unit_naturality_failures.push_back(MorId{v.witness.at(0)});
  for (const auto& v : validate_nat_trans(a.counit).violations)
    if (v.law == "naturality") r.counit_naturality_failures.push_back(MorId{v.witness.at(0)});
  return r;
}

namespace {

std::size_t position(const std::vector<MorId>& homs, MorId m) {
  return static_cast<std::size_t>(std::find(homs.begin(), homs.end(), m) - homs.begin());
}

// Both directions of the hom-set correspondence, without any checks.
HomBijection raw_bijection(const AdjunctionData& a, ObjId x, ObjId y) {
  const FinCategory& l = *a.f.source();
  const FinCategory& k = *a.f.target();
  HomBijection b{x, y, hom_set(k, a.f(x), y), hom_set(l, x, a.h(y)), {}, {}};
  for (MorId m : b.left_homs)
    b.theta.push_back(position(b.right_homs, l.then_compose(a.h(m), a.unit[x])));
  for (MorId m : b.right_homs)
    b.theta_inv.push_back(position(b.left_homs, k.then_compose(a.counit[y], a.f(m))));
  return b;
}

}  // namespace

HomBijection hom_bijection(const AdjunctionData& a, ObjId x, ObjId y) {
  if (!check_triangles(a).ok())
    throw Error(ErrorKind::TrianglesFailed, "hom bijection requested for a non-adjunction");
  return raw_bijection(a, x, y);
}

BijectionReport verify_hom_bijection(const AdjunctionData& a) {
  require_well_typed(a);
  const FinCategory& l = *a.f.source();
  const FinCategory& k = *a.f.target();
  BijectionReport r;

  for (ObjId x : l.objects())
    for (ObjId y : k.objects()) {
      auto b = raw_bijection(a, x, y);
      bool inverse = true;
      for (std::size_t i = 0; i < b.theta.size() && inverse; ++i)
        inverse = b.theta[i] < b.theta_inv.size() && b.theta_inv[b.theta[i]] == i;
      for (std::size_t j = 0; j < b.theta_inv.size() && inverse; ++j)
        inverse = b.theta_inv[j] < b.theta.size() && b.theta[b.theta_inv[j]] == j;
      if (!inverse) r.inverse_failures.emplace_back(x, y);
    }

  // θ(g∘m∘Ff) = Hg∘θ(m)∘f for f: X'->X, g: Y->Y', m: FX->Y
  auto theta = [&](ObjId x, MorId m) { return l.then_compose(a.h(m), a.unit[x]); };
  for (MorId f : l.morphisms()) {
    ObjId x1 = l.dom(f), x = l.cod(f);
    for (MorId g : k.morphisms()) {
      ObjId y = k.dom(g);
      bool natural = true;
      for (MorId m : hom_set(k, a.f(x), y)) {
        MorId lhs = theta(x1, k.then_compose(g, k.then_compose(m, a.f(f))));
        MorId rhs = l.then_compose(a.h(g), l.then_compose(theta(x, m), f));
        if (lhs != rhs) {
          natural = false;
          break;
        }
      }
      if (!natural) r.naturality_failures.emplace_back(f, g);
    }
  }
  return r;
}

AdjunctionData identity_adjunction(const CategoryRef& c) {
  auto id = identity_functor(c);
  return {id, id, identity_nat(id), identity_nat(id)};
}

AdjunctionData compose_adjunctions(const AdjunctionData& first, const AdjunctionData& second) {
  require_well_typed(first);
  require_well_typed(second);
  if (!same_category(first.f.target(), second.f.source()))
    throw Error(ErrorKind::BoundaryMismatch, "adjunctions do not compose");
  auto f = compose(second.f, first.f);
  auto h = compose(first.h, second.h);
  const FinCategory& l = *first.f.source();
  const FinCategory& m = *second.f.target();

  std::vector<MorId> unit;
  for (ObjId x : l.objects())
    unit.push_back(l.then_compose(first.h(second.unit[first.f(x)]), first.unit[x]));
  std::vector<MorId> counit;
  for (ObjId z : m.objects())
    counit.push_back(m.then_compose(second.counit[z], second.f(first.counit[second.h(z)])));
  return {f, h, NatTrans(identity_functor(first.f.source()), compose(h, f), std::move(unit)),
          NatTrans(compose(f, h), identity_functor(second.f.target()), std::move(counit))};
}

namespace {

// Hom_K(F-, Y) as a contravariant set-valued functor on L.
SetValuedFunctor hom_from_image(const FinFunctor& f, ObjId y) {
  const FinCategory& l = *f.source();
  const FinCategory& k = *f.target();
  SetValuedFunctor out{f.source(), Variance::Contravariant, {}, {}};
  std::vector<std::vector<MorId>> homs;
  for (ObjId x : l.objects()) {
    homs.push_back(hom_set(k, f(x), y));
    out.obj_val.push_back(homs.back().size());
  }
  for (MorId u : l.morphisms()) {
    const auto& src = homs[l.cod(u).value];
    const auto& dst = homs[l.dom(u).value];
    std::vector<std::size_t> table;
    for (MorId m : src) table.push_back(position(dst, k.then_compose(m, f(u))));
    out.mor_val.emplace_back(src.size(), dst.size(), std::move(table));
  }
  return out;
}

// The unique u: x -> target with counit∘F(u) == want, if exactly one exists.
std::optional<MorId> unique_factor(const FinFunctor& f, ObjId x, ObjId target, MorId counit,
                                   MorId want) {
  const FinCategory& l = *f.source();
  const FinCategory& k = *f.target();
  std::optional<MorId> found;
  for (MorId u : hom_set(l, x, target)) {
    if (k.compose(counit, f(u)) != want) continue;
    if (found) return std::nullopt;
    found = u;
  }
  return found;
}

}  // namespace

AdjunctionData build_right_adjoint(const FinFunctor& f,
                                   const std::vector<std::pair<ObjId, MorId>>& objectwise) {
  require_valid(f);
  const FinCategory& l = *f.source();
  const FinCategory& k = *f.target();
  if (objectwise.size() != k.object_count())
    throw Error(ErrorKind::MalformedInput,
                fmt::format("{} choices for {} objects", objectwise.size(), k.object_count()));

  for (ObjId y : k.objects()) {
    auto [hy, eps] = objectwise[y.value];
    if (hy.value >= l.object_count() || eps.value >= k.morphism_count() ||
        k.dom(eps) != f(hy) || k.cod(eps) != y)
      throw Error(ErrorKind::NotUniversal,
                  fmt::format("choice at '{}' is not a morphism F(HY) -> Y", k.object_label(y)));
    auto el = category_of_elements(hom_from_image(f, y));
    std::size_t elem = position(hom_set(k, f(hy), y), eps);
    auto it = std::find(el.element.begin(), el.element.end(), std::pair{hy, elem});
    ObjId node{static_cast<std::size_t>(it - el.element.begin())};
    auto ex = find_extremal_objects(el.category, el.category.morphism_count() + 1);
    if (std::find(ex.terminal.begin(), ex.terminal.end(), node) == ex.terminal.end())
      throw Error(ErrorKind::NotUniversal,
                  fmt::format("(HY, eps) at '{}' is not terminal", k.object_label(y)));
  }

  std::vector<ObjId> hobj;
  for (const auto& [hy, eps] : objectwise) hobj.push_back(hy);
  std::vector<MorId> hmor;
  for (MorId g : k.morphisms()) {
    ObjId y = k.dom(g), y2 = k.cod(g);
    auto u = unique_factor(f, hobj[y.value], hobj[y2.value], objectwise[y2.value].second,
                           k.then_compose(g, objectwise[y.value].second));
    if (!u) throw Error(ErrorKind::NonFunctorial, "no unique factorization for H on a morphism");
    hmor.push_back(*u);
  }
  FinFunctor h(f.target(), f.source(), std::move(hobj), std::move(hmor));
  auto report = validate_functor(h);
  if (!report.ok()) throw Error(ErrorKind::NonFunctorial, report.summary());

  std::vector<MorId> unit;
  for (ObjId x : l.objects()) {
    ObjId fx = f(x);
    auto u = unique_factor(f, x, h(fx), objectwise[fx.value].second, k.identity(fx));
    if (!u) throw Error(ErrorKind::NonFunctorial, "no unique unit component");
    unit.push_back(*u);
  }
  std::vector<MorId> counit;
  for (const auto& [hy, eps] : objectwise) counit.push_back(eps);
  return {f, h, NatTrans(identity_functor(f.source()), compose(h, f), std::move(unit)),
          NatTrans(compose(f, h), identity_functor(f.target()), std::move(counit))};
}

// --- Galois connections ------------------------------------------------------

namespace {

void require_table(const std::vector<std::size_t>& t, std::size_t dom, std::size_t cod,
                   const char* name) {
  if (t.size() != dom)
    throw Error(ErrorKind::MalformedInput, fmt::format("{} has {} entries, expected {}", name,
                                                       t.size(), dom));
  for (auto v : t)
    if (v >= cod) throw Error(ErrorKind::MalformedInput, fmt::format("{} value {} out of range", name, v));
}

void require_monotone_map(const Preorder& from, const Preorder& to,
                          const std::vector<std::size_t>& t, const char* name) {
  for (std::size_t i = 0; i < from.size; ++i)
    for (std::size_t j = 0; j < from.size; ++j)
      if (from(i, j) && !to(t[i], t[j]))
        throw Error(ErrorKind::NotMonotone,
                    fmt::format("{}: {} <= {} but {}({}) !<= {}({})", name, i, j, name, i, name, j));
}

}  // namespace

void require_monotone(const GaloisConnection& gc) {
  validate_preorder(gc.p);
  validate_preorder(gc.q);
  require_table(gc.f, gc.q.size, gc.p.size, "f");
  require_table(gc.g, gc.p.size, gc.q.size, "g");
  require_monotone_map(gc.q, gc.p, gc.f, "f");
  require_monotone_map(gc.p, gc.q, gc.g, "g");
}

std::optional<std::pair<std::size_t, std::size_t>> galois_counterexample(const GaloisConnection& gc) {
  require_monotone(gc);
  for (std::size_t x = 0; x < gc.p.size; ++x)
    for (std::size_t y = 0; y < gc.q.size; ++y)
      if (gc.q(gc.g[x], y) != gc.p(x, gc.f[y])) return std::pair{x, y};
  return std::nullopt;
}

bool check_galois(const GaloisConnection& gc) { return !galois_counterexample(gc).has_value(); }

AdjunctionData galois_to_adjunction(const GaloisConnection& gc) {
  if (auto bad = galois_counterexample(gc))
    throw Error(ErrorKind::NotAdjoint,
                fmt::format("g({}) <= {} and {} <= f({}) disagree", bad->first, bad->second,
                            bad->first, bad->second));
  auto pc = preorder_category(gc.p);
  auto qc = preorder_category(gc.q);
  auto lref = share(pc.category);
  auto kref = share(qc.category);

  auto monotone_functor = [](const CategoryRef& src, const CategoryRef& dst,
                             const PreorderCategory& dc, const std::vector<std::size_t>& t) {
    std::vector<ObjId> objs;
    for (auto v : t) objs.push_back(ObjId{v});
    std::vector<MorId> mors;
    for (MorId m : src->morphisms())
      mors.push_back(dc.at(t[src->dom(m).value], t[src->cod(m).value]));
    return FinFunctor(src, dst, std::move(objs), std::move(mors));
  };
  auto F = monotone_functor(lref, kref, qc, gc.g);
  auto H = monotone_functor(kref, lref, pc, gc.f);

  std::vector<MorId> unit;
  for (std::size_t x = 0; x < gc.p.size; ++x) unit.push_back(pc.at(x, gc.f[gc.g[x]]));
  std::vector<MorId> counit;
  for (std::size_t y = 0; y < gc.q.size; ++y) counit.push_back(qc.at(gc.g[gc.f[y]], y));
  return {F, H, NatTrans(identity_functor(lref), compose(H, F), std::move(unit)),
          NatTrans(compose(F, H), identity_functor(kref), std::move(counit))};
}

GaloisConnection identity_galois(const Preorder& p) {
  std::vector<std::size_t> id(p.size);
  for (std::size_t i = 0; i < p.size; ++i) id[i] = i;
  return {p, p, id, id};
}

GaloisConnection chain_inclusion_galois() {
  return {chain_order(2), chain_order(3), {0, 1, 1}, {0, 1}};
}

std::vector<std::uint64_t> subgroups(const FinGroup& g) {
  const std::size_t n = g.order();
  if (n > 20)
    throw Error(ErrorKind::BudgetExceeded, fmt::format("subgroup search over order {} > 20", n));
  std::vector<std::uint64_t> out;
  const std::uint64_t e = std::uint64_t{1} << g.identity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & e)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = 0; b < n && closed; ++b)
        if ((mask >> b & 1) && !(mask >> g(a, b) & 1)) closed = false;
    }
    if (closed) out.push_back(mask);
  }
  return out;
}

GaloisConnection subgroup_fixed_point_galois(std::size_t n) {
  if (n > 4) throw Error(ErrorKind::BudgetExceeded, "subgroup Galois connection limited to n <= 4");
  auto perms = permutations_of(n);
  auto subs = subgroups(symmetric_group(n));
  const std::size_t ps = std::size_t{1} << n;

  Preorder p{ps, std::vector<bool>(ps * ps)};
  for (std::size_t i = 0; i < ps; ++i)
    for (std::size_t j = 0; j < ps; ++j) p.leq[i * ps + j] = (i & ~j) == 0;
  const std::size_t qs = subs.size();
  Preorder q{qs, std::vector<bool>(qs * qs)};
  for (std::size_t i = 0; i < qs; ++i)
    for (std::size_t j = 0; j < qs; ++j) q.leq[i * qs + j] = (subs[j] & ~subs[i]) == 0;

  std::vector<std::size_t> g;  // stabilizer
  for (std::size_t s = 0; s < ps; ++s) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < perms.size(); ++k) {
      bool fixes = true;
      for (std::size_t a = 0; a < n; ++a)
        if ((s >> a & 1) && perms[k][a] != a) fixes = false;
      if (fixes) mask |= std::uint64_t{1} << k;
    }
    g.push_back(static_cast<std::size_t>(std::find(subs.begin(), subs.end(), mask) - subs.begin()));
  }
  std::vector<std::size_t> f;  // fixed points
  for (auto h : subs) {
    std::size_t fixed = 0;
    for (std::size_t a = 0; a < n; ++a) {
      bool all = true;
      for (std::size_t k = 0; k < perms.size(); ++k)
        if ((h >> k & 1) && perms[k][a] != a) all = false;
      if (all) fixed |= std::size_t{1} << a;
    }
    f.push_back(fixed);
  }
  return {std::move(p), std::move(q), std::move(f), std::move(g)};
}

std::optional<std::size_t> meet(const Preorder& p, std::size_t i, std::size_t j) {
  std::vector<std::size_t> lower;
  for (std::size_t l = 0; l < p.size; ++l)
    if (p(l, i) && p(l, j)) lower.push_back(l);
  for (auto l : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](std::size_t m) { return p(m, l); })) return l;
  return std::nullopt;
}

std::optional<std::size_t> top(const Preorder& p) {
  for (std::size_t t = 0; t < p.size; ++t) {
    bool is_top = true;
    for (std::size_t x = 0; x < p.size && is_top; ++x) is_top = p(x, t);
    if (is_top) return t;
  }
  return std::nullopt;
}

void require_meet_lattice(const Preorder& p) {
  validate_preorder(p);
  if (!top(p)) throw Error(ErrorKind::NotALattice, "no top element");
  for (std::size_t i = 0; i < p.size; ++i)
    for (std::size_t j = 0; j < p.size; ++j)
      if (!meet(p, i, j)) throw Error(ErrorKind::NotALattice, fmt::format("{} and {} have no meet", i, j));
}

bool preserves_meets(const Preorder& q, const Preorder& p, const std::vector<std::size_t>& f) {
  require_meet_lattice(q);
  require_meet_lattice(p);
  require_table(f, q.size, p.size, "f");
  auto equivalent = [&](std::size_t a, std::size_t b) { return p(a, b) && p(b, a); };
  if (!equivalent(f[*top(q)], *top(p))) return false;
  for (std::size_t i = 0; i < q.size; ++i)
    for (std::size_t j = 0; j < q.size; ++j)
      if (!equivalent(f[*meet(q, i, j)], *meet(p, f[i], f[j]))) return false;
  return true;
}

bool check_right_adjoint_preserves_meets(const GaloisConnection& gc) {
  return preserves_meets(gc.q, gc.p, gc.f);
}

// --- free monoid -------------------------------------------------------------

std::vector<std::vector<std::size_t>> words_up_to(std::size_t alphabet, std::size_t bound) {
  std::vector<std::vector<std::size_t>> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= bound && alphabet > 0; ++len) {
    std::size_t end = out.size();
    for (std::size_t w = begin; w < end; ++w)
      for (std::size_t a = 0; a < alphabet; ++a) {
        auto next = out[w];
        next.push_back(a);
        out.push_back(std::move(next));
      }
    begin = end;
  }
  return out;
}

std::size_t fold_word(const FiniteMonoid& m, const std::vector<std::size_t>& f,
                      const std::vector<std::size_t>& word) {
  std::size_t acc = m.unit;
  for (auto a : word) acc = m(acc, f.at(a));
  return acc;
}

FreeMonoidReport verify_free_monoid_adjunction(std::size_t alphabet, const FiniteMonoid& m,
                                               const std::vector<std::size_t>& f,
                                               std::size_t bound) {
  validate_monoid(m);
  require_table(f, alphabet, m.size, "f");
  auto words = words_up_to(alphabet, bound);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;

  FreeMonoidReport r;
  r.words = words.size();
  std::vector<std::size_t> fbar;
  for (const auto& w : words) fbar.push_back(fold_word(m, f, w));

  r.empty_word_to_unit = fbar[0] == m.unit;
  r.agrees_on_letters = true;
  for (std::size_t a = 0; a < alphabet; ++a)
    r.agrees_on_letters = r.agrees_on_letters && fbar[index[{a}]] == f[a];

  // splits[w] lists every (u, v) with u·v = w
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> splits(words.size());
  for (std::size_t w = 0; w < words.size(); ++w)
    for (std::size_t cut = 0; cut <= words[w].size(); ++cut) {
      std::vector<std::size_t> u(words[w].begin(), words[w].begin() + static_cast<std::ptrdiff_t>(cut));
      std::vector<std::size_t> v(words[w].begin() + static_cast<std::ptrdiff_t>(cut), words[w].end());
      splits[w].emplace_back(index[u], index[v]);
    }

  r.multiplicative = true;
  for (std::size_t w = 0; w < words.size(); ++w)
    for (auto [u, v] : splits[w]) {
      ++r.pairs;
      if (fbar[w] != m(fbar[u], fbar[v])) {
        r.multiplicative = false;
        r.failing_pairs.emplace_back(u, v);
      }
    }

  r.induction_witness = true;
  for (std::size_t w = 1; w < words.size(); ++w) {
    std::vector<std::size_t> tail(words[w].begin() + 1, words[w].end());
    if (fbar[w] != m(f[words[w][0]], fbar[index[tail]])) r.induction_witness = false;
  }

  // Count maps phi on in-bound words with phi(ε) = e, phi(a) = f(a) and
  // phi(uv) = phi(u)phi(v); each word's constraints involve only earlier
  // (or the same) shortlex positions.
  std::vector<std::size_t> phi(words.size());
  std::size_t count = 0;
  auto search = [&](auto&& self, std::size_t w) -> void {
    if (count > 1) return;
    if (w == words.size()) {
      ++count;
      return;
    }
    for (std::size_t val = 0; val < m.size; ++val) {
      if (w == 0 && val != m.unit) continue;
      if (words[w].size() == 1 && val != f[words[w][0]]) continue;
      phi[w] = val;
      bool ok = true;
      for (auto [u, v] : splits[w])
        if (phi[w] != m(phi[u], phi[v])) ok = false;
      if (ok) self(self, w + 1);
    }
  };
  search(search, 0);
  r.homomorphisms = count;
  return r;
}

}  // namespace fincat
