#include "fincat/standard.hpp"

#include <map>

#include <fmt/format.h>

#include "fincat/error.hpp"

namespace fincat {

Preorder preorder_closure(std::size_t n,
                          const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Preorder p{n, std::vector<bool>(n * n, false)};
  for (std::size_t i = 0; i < n; ++i) p.leq[i * n + i] = true;
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n)
      throw Error(ErrorKind::MalformedInput,
                  fmt::format("relation pair ({}, {}) outside {} elements", i, j, n));
    p.leq[i * n + j] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq[k * n + j]) p.leq[i * n + j] = true;
  return p;
}

Preorder chain_order(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return preorder_closure(n, pairs);
}

void validate_preorder(const Preorder& p) {
  if (p.leq.size() != p.size * p.size)
    throw Error(ErrorKind::MalformedInput, "relation matrix is not square");
  for (std::size_t i = 0; i < p.size; ++i)
    if (!p(i, i))
      throw Error(ErrorKind::MalformedInput, fmt::format("not reflexive at {}", i));
  for (std::size_t i = 0; i < p.size; ++i)
    for (std::size_t j = 0; j < p.size; ++j)
      for (std::size_t k = 0; k < p.size; ++k)
        if (p(i, j) && p(j, k) && !p(i, k))
          throw Error(ErrorKind::MalformedInput,
                      fmt::format("not transitive at ({}, {}, {})", i, j, k));
}

Preorder opposite_order(const Preorder& p) {
  Preorder q{p.size, std::vector<bool>(p.size * p.size)};
  for (std::size_t i = 0; i < p.size; ++i)
    for (std::size_t j = 0; j < p.size; ++j) q.leq[i * p.size + j] = p(j, i);
  return q;
}

MorId PreorderCategory::at(std::size_t i, std::size_t j) const {
  const std::size_t n = category.object_count();
  if (i >= n || j >= n || !arrow[i * n + j])
    throw Error(ErrorKind::IndexOutOfRange, fmt::format("no arrow {} <= {}", i, j));
  return *arrow[i * n + j];
}

PreorderCategory preorder_category(const Preorder& p) {
  validate_preorder(p);
  const std::size_t n = p.size;
  CategoryBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_object(std::to_string(i));
  std::vector<std::optional<MorId>> arrow(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!p(i, j)) continue;
      if (i == j)
        arrow[i * n + j] = b.add_identity(ObjId{i});
      else
        arrow[i * n + j] = b.add_morphism(fmt::format("{}<={}", i, j), ObjId{i}, ObjId{j});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (p(i, j) && p(j, k))
          b.set_compose(*arrow[j * n + k], *arrow[i * n + j], *arrow[i * n + k]);
  return {b.build(false), std::move(arrow)};
}

FinCategory terminal_category() {
  CategoryBuilder b;
  auto x = b.add_object("*");
  b.add_identity(x);
  return b.build();
}

FinCategory discrete_category(std::size_t n) {
  CategoryBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_identity(b.add_object(std::to_string(i)));
  return b.build();
}

FinCategory chain_category(std::size_t n) { return preorder_category(chain_order(n)).category; }

FinCategory iso_pair_category() {
  CategoryBuilder b;
  auto x = b.add_object("X");
  auto y = b.add_object("Y");
  auto ix = b.add_identity(x);
  auto iy = b.add_identity(y);
  auto f = b.add_morphism("f", x, y);
  auto g = b.add_morphism("g", y, x);
  b.set_compose(g, f, ix);
  b.set_compose(f, g, iy);
  return b.build();
}

FinCategory parallel_pair_category() {
  CategoryBuilder b;
  auto x = b.add_object("X");
  auto y = b.add_object("Y");
  b.add_identity(x);
  b.add_identity(y);
  b.add_morphism("f", x, y);
  b.add_morphism("g", x, y);
  return b.build();
}

FinCategory span_category() {
  CategoryBuilder b;
  auto a = b.add_object("A");
  auto l = b.add_object("L");
  auto r = b.add_object("R");
  b.add_identity(a);
  b.add_identity(l);
  b.add_identity(r);
  b.add_morphism("p", a, l);
  b.add_morphism("q", a, r);
  return b.build();
}

FinCategory monoid_category(const FiniteMonoid& m) {
  validate_monoid(m);
  CategoryBuilder b;
  auto star = b.add_object("*");
  for (std::size_t a = 0; a < m.size; ++a) b.add_morphism(m.label(a), star, star);
  b.set_identity(star, MorId{m.unit});
  for (std::size_t g = 0; g < m.size; ++g)
    for (std::size_t f = 0; f < m.size; ++f) b.set_compose(MorId{g}, MorId{f}, MorId{m(g, f)});
  return b.build(false);
}

FinCategory product_category(const FinCategory& c, const FinCategory& d) {
  const std::size_t c0 = c.object_count(), d0 = d.object_count();
  const std::size_t c1 = c.morphism_count(), d1 = d.morphism_count();
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < c0; ++i)
    for (std::size_t j = 0; j < d0; ++j)
      objects.push_back(fmt::format("({},{})", c.object_labels()[i], d.object_labels()[j]));
  std::vector<MorphismData> morphisms;
  for (std::size_t f = 0; f < c1; ++f)
    for (std::size_t g = 0; g < d1; ++g) {
      const auto& mf = c.morphism(MorId{f});
      const auto& mg = d.morphism(MorId{g});
      morphisms.push_back({fmt::format("({},{})", mf.label, mg.label),
                           ObjId{mf.dom.value * d0 + mg.dom.value},
                           ObjId{mf.cod.value * d0 + mg.cod.value}});
    }
  std::vector<MorId> ids;
  for (std::size_t i = 0; i < c0; ++i)
    for (std::size_t j = 0; j < d0; ++j)
      ids.push_back(MorId{c.identity(ObjId{i}).value * d1 + d.identity(ObjId{j}).value});
  const std::size_t n1 = c1 * d1;
  std::vector<std::optional<MorId>> table(n1 * n1);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n1; ++b) {
      auto left = c.compose(MorId{a / d1}, MorId{b / d1});
      auto right = d.compose(MorId{a % d1}, MorId{b % d1});
      if (left && right) table[a * n1 + b] = MorId{left->value * d1 + right->value};
    }
  return FinCategory(std::move(objects), std::move(morphisms), std::move(ids),
                     std::move(table));
}

SliceCategory slice_category(const FinCategory& c, ObjId base) {
  require_valid(c);
  SliceCategory out;
  CategoryBuilder b;
  std::map<std::size_t, ObjId> object_of;
  for (MorId f : c.morphisms()) {
    if (c.cod(f) != base) continue;
    object_of[f.value] = b.add_object(c.morphism_label(f));
    out.object_arrow.push_back(f);
  }
  // morphisms h: (f: A->K) -> (g: B->K) with g∘h = f
  std::vector<std::tuple<ObjId, ObjId, MorId>> arrows;
  for (MorId f : out.object_arrow)
    for (MorId g : out.object_arrow)
      for (MorId h : hom_set(c, c.dom(f), c.dom(g))) {
        if (*c.compose(g, h) != f) continue;
        ObjId src = object_of[f.value], tgt = object_of[g.value];
        MorId m = b.add_morphism(
            fmt::format("{}:{}->{}", c.morphism_label(h), c.morphism_label(f),
                        c.morphism_label(g)),
            src, tgt);
        if (h == c.identity(c.dom(f)) && f == g) b.set_identity(src, m);
        arrows.emplace_back(src, tgt, h);
        out.morphism_arrow.push_back(h);
      }
  for (std::size_t i = 0; i < arrows.size(); ++i)
    for (std::size_t j = 0; j < arrows.size(); ++j) {
      const auto& [s1, t1, h1] = arrows[j];  // first
      const auto& [s2, t2, h2] = arrows[i];  // second
      if (t1 != s2) continue;
      MorId h = *c.compose(h2, h1);
      for (std::size_t k = 0; k < arrows.size(); ++k) {
        const auto& [s3, t3, h3] = arrows[k];
        if (s3 == s1 && t3 == t2 && h3 == h) {
          b.set_compose(MorId{i}, MorId{j}, MorId{k});
          break;
        }
      }
    }
  out.category = b.build(false);
  return out;
}

Subcategory full_subcategory(const FinCategory& c, const std::vector<ObjId>& objects) {
  Subcategory out;
  out.object_embedding = objects;
  CategoryBuilder b;
  std::map<std::size_t, ObjId> local;
  for (ObjId x : objects) {
    if (x.value >= c.object_count())
      throw Error(ErrorKind::IndexOutOfRange, fmt::format("object {}", x.value));
    local[x.value] = b.add_object(c.object_label(x));
  }
  std::map<std::size_t, MorId> local_mor;
  for (MorId f : c.morphisms()) {
    auto d = local.find(c.dom(f).value), k = local.find(c.cod(f).value);
    if (d == local.end() || k == local.end()) continue;
    MorId m = b.add_morphism(c.morphism_label(f), d->second, k->second);
    local_mor[f.value] = m;
    out.morphism_embedding.push_back(f);
    if (f == c.identity(c.dom(f))) b.set_identity(d->second, m);
  }
  for (auto [g, lg] : local_mor)
    for (auto [f, lf] : local_mor) {
      auto h = c.compose(MorId{g}, MorId{f});
      if (h && c.cod(MorId{f}) == c.dom(MorId{g})) b.set_compose(lg, lf, local_mor.at(h->value));
    }
  out.category = b.build(false);
  return out;
}

}  // namespace fincat
