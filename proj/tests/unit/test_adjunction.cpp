#include <catch2/catch_amalgamated.hpp>

#include <bit>

#include "fincat/adjunction.hpp"
#include "fincat/error.hpp"
#include "fincat/skeleton.hpp"

using namespace fincat;

namespace {

AdjunctionData with_unit(const AdjunctionData& a, std::vector<MorId> comps) {
  AdjunctionData out = a;
  out.unit = NatTrans(a.unit.from(), a.unit.to(), std::move(comps));
  return out;
}

}  // namespace

TEST_CASE("identity adjunctions satisfy everything") {
  for (auto c : {share(chain_category(3)), share(monoid_category(cyclic_monoid(3))),
                 finset_skeleton(2).category}) {
    auto a = identity_adjunction(c);
    CHECK(check_triangles(a).ok());
    CHECK(verify_hom_bijection(a).ok());
    auto b = hom_bijection(a, ObjId{0}, ObjId{0});
    CHECK(b.left_homs.size() == b.right_homs.size());
  }
}

TEST_CASE("a perturbed unit breaks the triangles and the bijection") {
  auto c = share(monoid_category(cyclic_monoid(3)));
  auto a = identity_adjunction(c);
  REQUIRE(c->identity(ObjId{0}) != MorId{1});
  auto bad = with_unit(a, {MorId{1}});
  auto t = check_triangles(bad);
  CHECK_FALSE(t.ok());
  CHECK(t.left_failures.size() == 1);
  CHECK(t.unit_naturality_failures.empty());  // Z/3 is commutative
  CHECK_FALSE(verify_hom_bijection(bad).ok());
  CHECK_THROWS_AS(hom_bijection(bad, ObjId{0}, ObjId{0}), Error);
}

TEST_CASE("ill-typed adjunction data is rejected") {
  auto a = identity_adjunction(share(chain_category(2)));
  auto other = identity_adjunction(share(chain_category(3)));
  AdjunctionData mixed = a;
  mixed.h = other.h;
  CHECK_THROWS_AS(check_triangles(mixed), Error);
}

TEST_CASE("Galois connections") {
  auto gc = chain_inclusion_galois();
  CHECK(check_galois(gc));
  auto a = galois_to_adjunction(gc);
  CHECK(check_triangles(a).ok());
  CHECK(verify_hom_bijection(a).ok());
  CHECK(check_right_adjoint_preserves_meets(gc));

  auto broken = gc;
  broken.f = {0, 0, 1};
  CHECK_FALSE(check_galois(broken));
  CHECK(galois_counterexample(broken) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK_THROWS_AS(galois_to_adjunction(broken), Error);

  auto decreasing = gc;
  decreasing.f = {1, 0, 0};
  CHECK_THROWS_AS(require_monotone(decreasing), Error);

  CHECK(check_galois(identity_galois(chain_order(4))));
}

TEST_CASE("subgroups and fixed points") {
  CHECK(subgroups(symmetric_group(3)).size() == 6);
  CHECK(subgroups(cyclic_group(4)).size() == 3);
  auto gc = subgroup_fixed_point_galois(3);
  CHECK(gc.p.size == 8);
  CHECK(gc.q.size == 6);
  CHECK(check_galois(gc));
  CHECK(check_triangles(galois_to_adjunction(gc)).ok());
  CHECK(check_right_adjoint_preserves_meets(gc));
  // the empty set is fixed by everything: its stabilizer is the whole group
  CHECK(std::popcount(subgroups(symmetric_group(3))[gc.g[0]]) == 6);
}

TEST_CASE("meets") {
  auto p = chain_order(3);
  CHECK(meet(p, 1, 2) == 1u);
  CHECK(top(p) == 2u);
  Preorder discrete{2, {true, false, false, true}};
  CHECK_FALSE(meet(discrete, 0, 1));
  CHECK_THROWS_AS(require_meet_lattice(discrete), Error);
  // a monotone map that is not meet-preserving: {0,1}x{0,1} -> chain 2
  Preorder square{4, std::vector<bool>(16)};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) square.leq[i * 4 + j] = (i & ~j) == 0;
  CHECK_FALSE(preserves_meets(square, chain_order(2), {0, 1, 1, 1}));
  CHECK(preserves_meets(square, chain_order(2), {0, 0, 0, 1}));
}

TEST_CASE("composing adjunctions") {
  auto a = galois_to_adjunction(chain_inclusion_galois());
  auto id = identity_adjunction(a.f.target());
  auto c = compose_adjunctions(a, id);
  CHECK(check_triangles(c).ok());
  CHECK(c.f == a.f);
  CHECK(c.unit == a.unit);
  CHECK_THROWS_AS(compose_adjunctions(id, identity_adjunction(share(chain_category(2)))), Error);
}

TEST_CASE("right adjoint from objectwise universal arrows") {
  auto gc = chain_inclusion_galois();
  auto a = galois_to_adjunction(gc);
  const FinCategory& k = *a.f.target();
  std::vector<std::pair<ObjId, MorId>> choice;
  for (ObjId y : k.objects()) choice.emplace_back(a.h(y), a.counit[y]);
  auto built = build_right_adjoint(a.f, choice);
  CHECK(built.h == a.h);
  CHECK(built.unit == a.unit);
  CHECK(check_triangles(built).ok());

  // choosing HY = 0 for Y = 2 is a cone but not terminal
  auto bad = choice;
  bad[2] = {ObjId{0}, *hom_set(k, ObjId{0}, ObjId{2}).begin()};
  CHECK_THROWS_AS(build_right_adjoint(a.f, bad), Error);

  // identity functor on Z/3: any invertible element works as ε, H stays the identity
  auto z3 = share(monoid_category(cyclic_monoid(3)));
  auto id = identity_functor(z3);
  auto twisted = build_right_adjoint(id, {{ObjId{0}, MorId{1}}});
  CHECK(check_triangles(twisted).ok());
}

TEST_CASE("free monoid universal property") {
  auto m = cyclic_monoid(2);
  auto r = verify_free_monoid_adjunction(2, m, {1, 0}, 3);
  CHECK(r.words == 15);
  CHECK(r.pairs == 49);
  CHECK(r.ok());
  CHECK(r.failing_pairs.empty());
  CHECK(fold_word(m, {1, 0}, {0, 0, 1}) == 0);

  auto words = words_up_to(2, 2);
  REQUIRE(words.size() == 7);
  CHECK(words[3] == std::vector<std::size_t>{0, 0});
  CHECK(verify_free_monoid_adjunction(3, boolean_matrix_monoid(), {1, 6, 9}, 3).ok());
}
