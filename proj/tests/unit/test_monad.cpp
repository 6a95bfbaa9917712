#include <catch2/catch_amalgamated.hpp>

#include "fincat/error.hpp"
#include "fincat/monad.hpp"

using namespace fincat;

TEST_CASE("table-level monads from adjunctions") {
  auto c = share(chain_category(3));
  CHECK(check_monad(identity_monad(c)).ok());

  auto id = identity_adjunction(share(monoid_category(cyclic_monoid(3))));
  auto m = monad_from_adjunction(id);
  CHECK(check_monad(m).ok());
  CHECK(check_comonad(comonad_from_adjunction(id)).ok());

  auto gc = subgroup_fixed_point_galois(3);
  auto a = galois_to_adjunction(gc);
  auto closure = monad_from_adjunction(a);
  CHECK(check_monad(closure).ok());
  CHECK(check_comonad(comonad_from_adjunction(a)).ok());
  for (std::size_t x = 0; x < gc.p.size; ++x) {
    std::size_t tx = closure.t(ObjId{x}).value;
    CHECK(gc.p(x, tx));                                     // extensive
    CHECK(closure.t(ObjId{tx}).value == tx);                // idempotent
  }
  // a point set {0,1} is closed up to the full set: its stabilizer is trivial
  CHECK(closure.t(ObjId{0b011}).value == 0b111);
  CHECK(closure.t(ObjId{0b001}).value == 0b001);
}

TEST_CASE("a broken adjunction yields no monad") {
  auto c = share(monoid_category(cyclic_monoid(3)));
  auto a = identity_adjunction(c);
  a.unit = NatTrans(a.unit.from(), a.unit.to(), {MorId{1}});
  CHECK_THROWS_AS(monad_from_adjunction(a), Error);
  CHECK_THROWS_AS(comonad_from_adjunction(a), Error);

  // checked directly, the data fails both unit laws
  auto id = identity_functor(c);
  MonadData m{id, identity_nat(id), NatTrans(id, id, {MorId{1}})};
  auto r = check_monad(m);
  CHECK(r.associativity_failures.empty());
  CHECK(r.left_unit_failures.size() == 1);
  CHECK(r.right_unit_failures.size() == 1);
}

TEST_CASE("power-set monad") {
  auto p = powerset_monad();
  auto r = check_set_monad(p, 2, 2);
  CHECK(r.ok());
  CHECK(p.t(p.t(p.t(2))) == 65536);
  // unit laws alone up to size 3
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(compose(p.mult(n), p.unit(p.t(n))) == identity_function(p.t(n)));
    CHECK(compose(p.mult(n), p.t(p.unit(n))) == identity_function(p.t(n)));
  }
  auto s = sample_powerset_associativity(3, 10'000, 0);
  CHECK(s.samples == 10'000);
  CHECK(s.ok());

  auto broken = p;
  broken.mult = [](std::size_t n) { return constant_function(std::size_t{1} << (std::size_t{1} << n), std::size_t{1} << n, 0); };
  auto b = check_set_monad(broken, 1, 1);
  CHECK_FALSE(b.left_unit_failures.empty());
}

TEST_CASE("currying monad and comonad") {
  auto a = currying_adjunction(2);
  auto state = monad_from_adjunction(a);
  CHECK(state.t(1) == 4);
  CHECK(check_set_monad(state, 2, 1).ok());
  auto store = comonad_from_adjunction(a);
  CHECK(check_set_comonad(store, 2, 1).ok());

  auto id = identity_set_adjunction();
  CHECK(check_set_monad(monad_from_adjunction(id), 3, 2).ok());
  CHECK(check_set_comonad(comonad_from_adjunction(id), 3, 2).ok());
}
