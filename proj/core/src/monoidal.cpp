#include "fincat/monoidal.hpp"

namespace fincat {

namespace {

SetMonoidal set_base(std::string name) {
  SetMonoidal s;
  s.name = std::move(name);
  s.compose = [](const FinFunction& g, const FinFunction& f) { return fincat::compose(g, f); };
  s.identity = [](std::size_t n) { return identity_function(n); };
  s.dom = [](const FinFunction& f) { return f.dom(); };
  s.cod = [](const FinFunction& f) { return f.cod(); };
  s.is_iso = [](const FinFunction& f) { return classify_function(f).bijective; };
  return s;
}

}  // namespace

SetMonoidal cartesian_structure() {
  auto s = set_base("cartesian");
  s.tensor_obj = [](std::size_t a, std::size_t b) { return a * b; };
  s.tensor_mor = [](const FinFunction& f, const FinFunction& g) { return product_map(f, g); };
  s.unit = 1;
  s.assoc = [](std::size_t a, std::size_t b, std::size_t c) { return product_associator(a, b, c); };
  s.lunit = [](std::size_t a) { return product_projections(1, a).second; };
  s.runit = [](std::size_t a) { return product_projections(a, 1).first; };
  s.braiding = [](std::size_t a, std::size_t b) { return product_swap(a, b); };
  return s;
}

SetMonoidal cocartesian_structure() {
  auto s = set_base("cocartesian");
  s.tensor_obj = [](std::size_t a, std::size_t b) { return a + b; };
  s.tensor_mor = [](const FinFunction& f, const FinFunction& g) { return coproduct_map(f, g); };
  s.unit = 0;
  s.assoc = [](std::size_t a, std::size_t b, std::size_t c) { return coproduct_associator(a, b, c); };
  s.lunit = [](std::size_t a) { return copairing(empty_function(a), identity_function(a)); };
  s.runit = [](std::size_t a) { return copairing(identity_function(a), empty_function(a)); };
  s.braiding = [](std::size_t a, std::size_t b) { return coproduct_swap(a, b); };
  return s;
}

EndoMonoidal endofunctor_structure(const CategoryRef& c) {
  EndoMonoidal s;
  s.name = "endofunctors";
  s.tensor_obj = [](const FinFunctor& f, const FinFunctor& g) { return fincat::compose(f, g); };
  s.tensor_mor = [](const NatTrans& beta, const NatTrans& alpha) {
    return horizontal_compose(beta, alpha);
  };
  s.unit = identity_functor(c);
  s.assoc = [](const FinFunctor& f, const FinFunctor& g, const FinFunctor& h) {
    return identity_nat(fincat::compose(f, fincat::compose(g, h)));
  };
  s.lunit = [](const FinFunctor& f) { return identity_nat(f); };
  s.runit = [](const FinFunctor& f) { return identity_nat(f); };
  s.compose = [](const NatTrans& nu, const NatTrans& mu) { return vertical_compose(nu, mu); };
  s.identity = [](const FinFunctor& f) { return identity_nat(f); };
  s.dom = [](const NatTrans& t) { return t.from(); };
  s.cod = [](const NatTrans& t) { return t.to(); };
  s.is_iso = [](const NatTrans& t) {
    try {
      inverse_nat(t);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  return s;
}

SetMonoid cyclic_monoid_object(std::size_t n) {
  std::vector<std::size_t> add(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) add[pair_index(a, b, n)] = (a + b) % n;
  return {n, FinFunction(n * n, n, std::move(add)), FinFunction(1, n, {0})};
}

SetComonoid diagonal_comonoid(std::size_t n) {
  auto id = identity_function(n);
  return {n, pairing(id, id), constant_function(n, 1, 0)};
}

}  // namespace fincat
