#include "fincat/concrete.hpp"

#include <fmt/format.h>

#include <set>

#include "fincat/error.hpp"

namespace fincat {

SetEndofunctor identity_endofunctor() {
  return {"1", [](std::size_t n) { return n; }, [](const FinFunction& f) { return f; }};
}

SetEndofunctor compose(const SetEndofunctor& g, const SetEndofunctor& f) {
  return {g.name + "." + f.name, [g, f](std::size_t n) { return g(f(n)); },
          [g, f](const FinFunction& m) { return g(f(m)); }};
}

SetEndofunctor product_functor(std::size_t x) {
  return {fmt::format("{}x-", x), [x](std::size_t n) { return x * n; },
          [x](const FinFunction& f) { return product_map(identity_function(x), f); }};
}

SetEndofunctor exponential_functor(std::size_t x, std::size_t budget) {
  return {fmt::format("-^{}", x), [x, budget](std::size_t n) { return exponential_size(x, n, budget); },
          [x, budget](const FinFunction& f) { return exponential_map(f, x, budget); }};
}

SetEndofunctor covariant_powerset_functor(std::size_t max_bits) {
  return {"P",
          [max_bits](std::size_t n) {
            if (n > max_bits || n >= 64)
              throw Error(ErrorKind::BudgetExceeded, fmt::format("P({}) exceeds 2^{}", n, max_bits));
            return std::size_t{1} << n;
          },
          [max_bits](const FinFunction& f) { return powerset(Variance::Covariant, f, max_bits); }};
}

std::optional<std::pair<FinFunction, FinFunction>> check_endofunctor(const SetEndofunctor& t,
                                                                     std::size_t bound) {
  for (std::size_t a = 0; a <= bound; ++a) {
    auto id = identity_function(a);
    if (t(id) != identity_function(t(a))) return std::pair{id, id};
  }
  for (std::size_t a = 0; a <= bound; ++a)
    for (std::size_t b = 0; b <= bound; ++b)
      for_each_function(a, b, [&](const FinFunction& f) {
        auto tf = t(f);
        if (tf.dom() != t(a) || tf.cod() != t(b)) throw Error(ErrorKind::NonFunctorial, "mistyped image");
      });
  std::optional<std::pair<FinFunction, FinFunction>> bad;
  for (std::size_t a = 0; a <= bound && !bad; ++a)
    for (std::size_t b = 0; b <= bound && !bad; ++b)
      for (std::size_t c = 0; c <= bound && !bad; ++c)
        for_each_function(a, b, [&](const FinFunction& f) {
          if (bad) return;
          auto tf = t(f);
          for_each_function(b, c, [&](const FinFunction& g) {
            if (!bad && t(compose(g, f)) != compose(t(g), tf)) bad = std::pair{g, f};
          });
        });
  return bad;
}

std::optional<FinFunction> check_set_naturality(const SetEndofunctor& s, const SetEndofunctor& t,
                                                const SetNat& alpha, std::size_t bound) {
  std::optional<FinFunction> bad;
  for (std::size_t a = 0; a <= bound && !bad; ++a)
    for (std::size_t b = 0; b <= bound && !bad; ++b) {
      auto aa = alpha(a);
      auto ab = alpha(b);
      for_each_function(a, b, [&](const FinFunction& m) {
        if (!bad && compose(t(m), aa) != compose(ab, s(m))) bad = m;
      });
    }
  return bad;
}

SetAdjunction currying_adjunction(std::size_t x, std::size_t budget) {
  auto f = product_functor(x);
  auto h = exponential_functor(x, budget);
  SetNat unit = [x, budget](std::size_t n) { return curry(identity_function(x * n), x, n, budget); };
  SetNat counit = [x, budget](std::size_t n) { return evaluation(x, n, budget); };
  return {f, h, unit, counit};
}

SetAdjunction identity_set_adjunction() {
  auto id = identity_endofunctor();
  SetNat unit = [](std::size_t n) { return identity_function(n); };
  return {id, id, unit, unit};
}

SetTriangleReport check_set_triangles(const SetAdjunction& a, std::size_t bound,
                                      std::size_t naturality_bound) {
  SetTriangleReport r;
  for (std::size_t n = 0; n <= bound; ++n) {
    const std::size_t fn = a.f(n);
    if (compose(a.counit(fn), a.f(a.unit(n))) != identity_function(fn)) r.left_failures.push_back(n);
    const std::size_t hn = a.h(n);
    if (compose(a.h(a.counit(n)), a.unit(hn)) != identity_function(hn)) r.right_failures.push_back(n);
  }
  r.unit_naturality_failure =
      check_set_naturality(identity_endofunctor(), compose(a.h, a.f), a.unit, naturality_bound);
  r.counit_naturality_failure =
      check_set_naturality(compose(a.f, a.h), identity_endofunctor(), a.counit, naturality_bound);
  return r;
}

FinFunction set_theta(const SetAdjunction& a, std::size_t x, const FinFunction& m) {
  return compose(a.h(m), a.unit(x));
}

FinFunction set_theta_inv(const SetAdjunction& a, std::size_t y, const FinFunction& g) {
  return compose(a.counit(y), a.f(g));
}

SetBijectionReport verify_set_hom_bijection(const SetAdjunction& a, std::size_t bound,
                                            std::size_t naturality_bound, std::size_t budget) {
  SetBijectionReport r;
  for (std::size_t x = 0; x <= bound; ++x) {
    const std::size_t fx = a.f(x);
    auto eta = a.unit(x);
    for (std::size_t y = 0; y <= bound; ++y) {
      const std::size_t hy = a.h(y);
      power_size(y, fx, budget);
      power_size(hy, x, budget);
      auto eps = a.counit(y);
      bool inverse = true;
      for_each_function(fx, y, [&](const FinFunction& m) {
        auto g = compose(a.h(m), eta);
        if (compose(eps, a.f(g)) != m) inverse = false;
      });
      for_each_function(x, hy, [&](const FinFunction& g) {
        auto m = compose(eps, a.f(g));
        if (compose(a.h(m), eta) != g) inverse = false;
      });
      ++r.pairs_checked;
      if (!inverse) r.inverse_failures.emplace_back(x, y);
    }
  }

  for (std::size_t x1 = 0; x1 <= naturality_bound; ++x1)
    for (std::size_t x = 0; x <= naturality_bound; ++x)
      for (std::size_t y = 0; y <= naturality_bound; ++y)
        for (std::size_t y1 = 0; y1 <= naturality_bound; ++y1)
          for_each_function(x1, x, [&](const FinFunction& f) {
            auto ff = a.f(f);
            for_each_function(y, y1, [&](const FinFunction& g) {
              auto hg = a.h(g);
              bool natural = true;
              for_each_function(a.f(x), y, [&](const FinFunction& m) {
                if (!natural) return;
                auto lhs = set_theta(a, x1, compose(g, compose(m, ff)));
                auto rhs = compose(hg, compose(set_theta(a, x, m), f));
                natural = lhs == rhs;
              });
              if (!natural) r.naturality_failures.emplace_back(f, g);
            });
          });
  return r;
}

namespace {

// Every u: x -> target with eps∘F(u) == want; stops after two.
std::vector<FinFunction> factors(const SetEndofunctor& f, std::size_t x, std::size_t target,
                                 const FinFunction& eps, const FinFunction& want,
                                 std::size_t budget) {
  power_size(target, x, budget);
  std::vector<FinFunction> out;
  for_each_function(x, target, [&](const FinFunction& u) {
    if (out.size() < 2 && compose(eps, f(u)) == want) out.push_back(u);
  });
  return out;
}

}  // namespace

BoundedRightAdjoint build_right_adjoint(const SetEndofunctor& f,
                                        const std::vector<std::pair<std::size_t, FinFunction>>& objectwise,
                                        std::size_t x_bound, std::size_t budget) {
  if (objectwise.empty()) throw Error(ErrorKind::MalformedInput, "no objectwise choices");
  BoundedRightAdjoint r;
  r.bound = objectwise.size() - 1;
  for (std::size_t y = 0; y <= r.bound; ++y) {
    const auto& [hy, eps] = objectwise[y];
    if (eps.dom() != f(hy) || eps.cod() != y)
      throw Error(ErrorKind::NotUniversal, fmt::format("choice at {} is not a map F(HY) -> Y", y));
    for (std::size_t x = 0; x <= x_bound; ++x) {
      power_size(y, f(x), budget);
      bool universal = true;
      for_each_function(f(x), y, [&](const FinFunction& m) {
        if (universal && factors(f, x, hy, eps, m, budget).size() != 1) universal = false;
      });
      if (!universal)
        throw Error(ErrorKind::NotUniversal,
                    fmt::format("(HY, eps) at {} does not factor maps from F({}) uniquely", y, x));
    }
    r.h_obj.push_back(hy);
    r.counit.push_back(eps);
  }

  for (std::size_t y = 0; y <= r.bound; ++y)
    for (std::size_t y1 = 0; y1 <= r.bound; ++y1)
      for_each_function(y, y1, [&](const FinFunction& g) {
        auto u = factors(f, r.h_obj[y], r.h_obj[y1], r.counit[y1], compose(g, r.counit[y]), budget);
        if (u.size() != 1) throw Error(ErrorKind::NonFunctorial, "no unique factorization for H");
        r.h_mor.emplace(g, u.front());
      });
  for (const auto& [g, hg] : r.h_mor)
    for (const auto& [g2, hg2] : r.h_mor)
      if (g2.dom() == g.cod() && r.h_mor.at(compose(g2, g)) != compose(hg2, hg))
        throw Error(ErrorKind::NonFunctorial, "factorization does not preserve composition");

  for (std::size_t x = 0; x <= x_bound; ++x) {
    const std::size_t fx = f(x);
    if (fx > r.bound) continue;
    auto u = factors(f, x, r.h_obj[fx], r.counit[fx], identity_function(fx), budget);
    if (u.size() != 1) throw Error(ErrorKind::NonFunctorial, "no unique unit component");
    r.unit.emplace(x, u.front());
  }
  return r;
}

namespace {

// Calls visit(tables) for every family of functions dom[i] -> cod[i].
template <class Visit>
void for_each_family(const std::vector<std::size_t>& dom, const std::vector<std::size_t>& cod,
                     std::size_t budget, Visit&& visit) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    std::size_t p = power_size(cod[i], dom[i], budget);
    if (p != 0 && total > budget / p)
      throw Error(ErrorKind::BudgetExceeded, fmt::format("more than {} families", budget));
    total *= p;
  }
  if (total == 0) return;
  std::vector<std::vector<std::size_t>> tables;
  for (auto d : dom) tables.emplace_back(d, 0);
  while (true) {
    visit(tables);
    std::size_t i = tables.size();
    bool carried = true;
    while (carried && i > 0) {
      --i;
      auto& t = tables[i];
      std::size_t j = t.size();
      carried = true;
      while (carried && j > 0) {
        --j;
        if (++t[j] < cod[i]) carried = false;
        else t[j] = 0;
      }
    }
    if (carried) return;
  }
}

}  // namespace

DeltaInstanceReport limit_delta_instance(const Diagram& d, std::size_t apex_bound,
                                         std::size_t budget) {
  auto lim = limit(d, budget);
  DeltaInstanceReport r;
  std::vector<std::size_t> cod;
  for (std::size_t v = 0; v < d.vertices.size(); ++v) cod.push_back(d.carrier(v));
  for (std::size_t a = 0; a <= apex_bound; ++a) {
    r.apex_sizes.push_back(a);
    r.hom_counts.push_back(power_size(lim.cone.apex, a, budget));
    std::set<FinFunction> mediators;
    std::size_t cones = 0;
    for_each_family(std::vector<std::size_t>(cod.size(), a), cod, budget,
                    [&](const std::vector<std::vector<std::size_t>>& tables) {
                      Cone c{a, {}};
                      for (std::size_t v = 0; v < tables.size(); ++v) c.legs.emplace_back(a, cod[v], tables[v]);
                      if (!is_cone(d, c)) return;
                      ++cones;
                      mediators.insert(lim.mediate(c));
                    });
    r.cone_counts.push_back(cones);
    if (cones != r.hom_counts.back() || mediators.size() != cones) r.bijective = false;
  }
  return r;
}

DeltaInstanceReport colimit_delta_instance(const Diagram& d, std::size_t apex_bound,
                                           std::size_t budget) {
  auto colim = colimit(d);
  DeltaInstanceReport r;
  std::vector<std::size_t> dom;
  for (std::size_t v = 0; v < d.vertices.size(); ++v) dom.push_back(d.carrier(v));
  for (std::size_t a = 0; a <= apex_bound; ++a) {
    r.apex_sizes.push_back(a);
    r.hom_counts.push_back(power_size(a, colim.cocone.apex, budget));
    std::set<FinFunction> mediators;
    std::size_t cocones = 0;
    for_each_family(dom, std::vector<std::size_t>(dom.size(), a), budget,
                    [&](const std::vector<std::vector<std::size_t>>& tables) {
                      Cocone c{a, {}};
                      for (std::size_t v = 0; v < tables.size(); ++v) c.legs.emplace_back(dom[v], a, tables[v]);
                      if (!is_cocone(d, c)) return;
                      ++cocones;
                      mediators.insert(colim.mediate(c));
                    });
    r.cone_counts.push_back(cocones);
    if (cocones != r.hom_counts.back() || mediators.size() != cocones) r.bijective = false;
  }
  return r;
}

}  // namespace fincat
