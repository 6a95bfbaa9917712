#include <catch2/catch_amalgamated.hpp>

#include "fincat/algebraic.hpp"
#include "fincat/error.hpp"
#include "fincat/functor.hpp"
#include "fincat/standard.hpp"

using namespace fincat;

namespace {

CategoryRef chain(std::size_t n) { return share(chain_category(n)); }

FinFunctor collapse(const CategoryRef& source, const CategoryRef& terminal) {
  return constant_functor(source, terminal, ObjId{0});
}

EquivalenceData iso_pair_to_terminal() {
  auto k = share(iso_pair_category());
  auto t = share(terminal_category());
  FinFunctor f = collapse(k, t);
  FinFunctor g = constant_functor(t, k, ObjId{0});
  MorId fx = *k->find_morphism("f");
  NatTrans alpha(compose(g, f), identity_functor(k), {k->identity(ObjId{0}), fx});
  NatTrans omega = identity_nat(identity_functor(t));
  return {f, g, alpha, NatTrans(compose(f, g), identity_functor(t), omega.components())};
}

}  // namespace

TEST_CASE("identity and constant functors validate") {
  auto c = chain(3);
  CHECK(validate_functor(identity_functor(c)).ok());
  CHECK(validate_functor(constant_functor(c, c, ObjId{1})).ok());
  auto traits = functor_traits(identity_functor(c));
  CHECK(traits.faithful);
  CHECK(traits.full);
}

TEST_CASE("corrupted morphism entry is located") {
  auto c = chain(3);
  auto id = identity_functor(c);
  auto mors = id.morphism_map();
  auto pc = preorder_category(chain_order(3));
  // send 0<=2 to 0<=1: wrong codomain and breaks (1<=2)∘(0<=1)
  mors[pc.at(0, 2).value] = pc.at(0, 1);
  FinFunctor bad(c, c, id.object_map(), mors);
  auto report = validate_functor(bad);
  CHECK(report.count("preserves-cod") == 1);
  auto comp = report.of_law("preserves-composition");
  REQUIRE(comp.size() == 2);
  for (const auto& v : comp) {
    MorId g{v.witness[0]}, f{v.witness[1]};
    CHECK(*c->compose(g, f) == pc.at(0, 2));
  }
  CHECK_THROWS_AS(functor_traits(bad), Error);
}

TEST_CASE("functor traits") {
  auto t = share(terminal_category());
  // hom(1,0) is empty but hom(*,*) is not, so the collapse is faithful, not full
  auto traits = functor_traits(collapse(chain(2), t));
  CHECK_FALSE(traits.full);
  CHECK(traits.faithful);
  auto z2 = functor_traits(collapse(share(monoid_category(cyclic_monoid(2))), t));
  CHECK(z2.full);
  CHECK_FALSE(z2.faithful);

  auto full = chain(3);
  auto sub = full_subcategory(*full, {ObjId{0}, ObjId{2}});
  auto subref = share(sub.category);
  FinFunctor incl(subref, full, sub.object_embedding, sub.morphism_embedding);
  auto it = functor_traits(incl);
  CHECK(it.full);
  CHECK(it.faithful);
}

TEST_CASE("functors preserve isomorphisms") {
  auto k = share(iso_pair_category());
  for (const auto& f : enumerate_functors(k, k))
    for (MorId m : k->morphisms())
      if (classify_morphism(*k, m).is_iso) CHECK(classify_morphism(*k, f(m)).is_iso);
}

TEST_CASE("functor enumeration and budget") {
  auto c2 = chain(2);
  CHECK(enumerate_functors(c2, c2).size() == 3);
  auto t = share(terminal_category());
  CHECK(enumerate_functors(t, chain(3)).size() == 3);
  try {
    enumerate_functors(chain(3), chain(3), 5);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  CHECK(functor_candidate_bound(*chain(2), *chain(2), 1000) == 3);
}

TEST_CASE("functor category of chain 0<1 into itself") {
  auto c2 = chain(2);
  auto fc = functor_category(c2, c2);
  CHECK(fc.functors.size() == 3);
  // functors are monotone maps (0,0), (0,1), (1,1): a 3-chain
  CHECK(fc.transformations.size() == 6);
  CHECK(validate_category(*fc.category).ok());
  for (ObjId x : fc.category->objects())
    CHECK(fc.transformations[fc.category->identity(x).value] == identity_nat(fc.functors[x.value]));

  auto from_terminal = functor_category(share(terminal_category()), chain(3));
  CHECK(from_terminal.category->object_count() == 3);
  CHECK(from_terminal.category->morphism_count() == 6);
}

TEST_CASE("vertical and horizontal composition") {
  auto sq = share(product_category(chain_category(2), chain_category(2)));
  auto fc = functor_category(chain(2), sq);
  for (const auto& mu : fc.transformations)
    for (const auto& nu : fc.transformations) {
      if (!(mu.to() == nu.from())) continue;
      auto c = vertical_compose(nu, mu);
      CHECK(validate_nat_trans(c).ok());
      CHECK(vertical_compose(identity_nat(nu.to()), c) == c);
    }

  auto c2 = chain(2);
  auto l = functor_category(c2, c2);
  for (const auto& alpha : l.transformations)
    for (const auto& beta : l.transformations) {
      auto h1 = horizontal_compose(beta, alpha);
      auto h2 = horizontal_compose_alt(beta, alpha);
      CHECK(h1 == h2);
      CHECK(validate_nat_trans(h1).ok());
    }
  auto id = identity_functor(c2);
  CHECK(horizontal_compose(identity_nat(id), identity_nat(id)) == identity_nat(compose(id, id)));
}

TEST_CASE("interchange law on all quadruples over chain 0<1") {
  auto c2 = chain(2);
  auto l = functor_category(c2, c2);
  std::size_t checked = 0;
  for (const auto& alpha : l.transformations)
    for (const auto& beta : l.transformations) {
      if (!(alpha.to() == beta.from())) continue;
      for (const auto& gamma : l.transformations)
        for (const auto& delta : l.transformations) {
          if (!(gamma.to() == delta.from())) continue;
          CHECK(check_interchange(delta, gamma, beta, alpha));
          ++checked;
        }
    }
  CHECK(checked > 0);

  // a non-natural family is rejected before comparison
  auto id = identity_functor(c2);
  auto pc = preorder_category(chain_order(2));
  auto k = constant_functor(c2, c2, ObjId{1});
  auto lo = constant_functor(c2, c2, ObjId{0});
  NatTrans bogus(k, k, {pc.at(1, 1), pc.at(1, 1)});
  CHECK(validate_nat_trans(bogus).ok());
  NatTrans wrong(lo, k, {pc.at(0, 1), pc.at(0, 1)});
  CHECK(validate_nat_trans(wrong).ok());
  NatTrans typed_wrong(id, id, {pc.at(0, 0), pc.at(0, 0)});
  CHECK_FALSE(validate_nat_trans(typed_wrong).ok());
  auto idn = identity_nat(id);
  CHECK_THROWS_AS(check_interchange(idn, idn, idn, typed_wrong), Error);
}

TEST_CASE("whiskering is functorial") {
  auto c2 = chain(2);
  auto l = functor_category(c2, c2);
  for (const auto& h : l.functors)
    for (const auto& mu : l.transformations) {
      CHECK(whisker_left(h, identity_nat(mu.from())) == identity_nat(compose(h, mu.from())));
      for (const auto& nu : l.transformations) {
        if (!(mu.to() == nu.from())) continue;
        CHECK(whisker_left(h, vertical_compose(nu, mu)) ==
              vertical_compose(whisker_left(h, nu), whisker_left(h, mu)));
        CHECK(whisker_right(vertical_compose(nu, mu), h) ==
              vertical_compose(whisker_right(nu, h), whisker_right(mu, h)));
      }
    }
}

TEST_CASE("equivalences") {
  CHECK(check_equivalence(identity_equivalence(chain(3))));
  auto e = iso_pair_to_terminal();
  CHECK(check_equivalence(e));
  auto composed = compose_equivalences(e, identity_equivalence(e.f.target()));
  CHECK(check_equivalence(composed));
  auto twice = compose_equivalences(identity_equivalence(e.f.source()), e);
  CHECK(check_equivalence(twice));

  // chain 0<1 is not equivalent to the terminal category
  auto c2 = chain(2);
  auto t = share(terminal_category());
  auto pc = preorder_category(chain_order(2));
  FinFunctor f = collapse(c2, t);
  FinFunctor g = constant_functor(t, c2, ObjId{0});
  NatTrans alpha(compose(g, f), identity_functor(c2), {pc.at(0, 0), pc.at(0, 1)});
  NatTrans omega(compose(f, g), identity_functor(t), {t->identity(ObjId{0})});
  EquivalenceData bad{f, g, alpha, omega};
  CHECK_FALSE(check_equivalence(bad));
  try {
    compose_equivalences(bad, identity_equivalence(t));
    FAIL("expected NotInvertible");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotInvertible);
    CHECK(std::string(err.what()).find("'1'") != std::string::npos);
  }
}
