#include <catch2/catch_amalgamated.hpp>

#include "fincat/algebraic.hpp"
#include "fincat/error.hpp"
#include "fincat/skeleton.hpp"
#include "fincat/standard.hpp"
#include "fincat/yoneda.hpp"

using namespace fincat;

namespace {

CategoryRef chain(std::size_t n) { return share(chain_category(n)); }

}  // namespace

TEST_CASE("hom functors and constants validate") {
  auto c = chain(3);
  for (ObjId a : c->objects()) {
    CHECK(validate_set_functor(hom_functor(c, a, Variance::Covariant)).ok());
    CHECK(validate_set_functor(hom_functor(c, a, Variance::Contravariant)).ok());
  }
  CHECK(validate_set_functor(constant_set_functor(c, 2, Variance::Covariant)).ok());
  auto s = finset_skeleton(2);
  CHECK(validate_set_functor(powerset_functor(s, Variance::Covariant)).ok());
  CHECK(validate_set_functor(powerset_functor(s, Variance::Contravariant)).ok());
}

TEST_CASE("category of elements") {
  auto c = chain(3);
  auto one = category_of_elements(constant_set_functor(c, 1, Variance::Covariant));
  CHECK(one.category.object_count() == 3);
  CHECK(one.category.morphism_count() == 6);
  CHECK(validate_category(one.category).ok());

  auto s = finset_skeleton(2);
  auto el = category_of_elements(powerset_functor(s, Variance::Contravariant));
  CHECK(el.category.object_count() == 1 + 2 + 4);
  CHECK(validate_category(el.category).ok());

  auto rep = category_of_elements(hom_functor(c, ObjId{1}, Variance::Covariant));
  auto ex = find_extremal_objects(rep.category);
  REQUIRE(ex.initial.size() == 1);
  auto [obj, elem] = rep.element[ex.initial.front().value];
  CHECK(obj == ObjId{1});
  CHECK(elem == 0);  // 1_1 is the only element of hom(1,1)
}

TEST_CASE("representations") {
  auto c = chain(3);
  auto w = find_representation(hom_functor(c, ObjId{1}, Variance::Covariant));
  REQUIRE(w);
  CHECK(w->object == ObjId{1});
  CHECK(w->universal_element == 0);

  auto s = finset_skeleton(3);
  auto contra = find_representation(powerset_functor(s, Variance::Contravariant));
  REQUIRE(contra);
  CHECK(contra->object == s.object(2));
  CHECK(contra->universal_element == 0b01);
  REQUIRE(contra->alternatives.size() == 1);
  CHECK(contra->alternatives.front().second == 0b10);
  CHECK(contra->alternatives_isomorphic);

  CHECK_FALSE(find_representation(powerset_functor(s, Variance::Covariant)));
}

TEST_CASE("representability matches extremal elements") {
  auto s = finset_skeleton(2);
  for (auto variance : {Variance::Covariant, Variance::Contravariant}) {
    auto f = powerset_functor(s, variance);
    auto ex = find_extremal_objects(category_of_elements(f).category);
    bool has = variance == Variance::Covariant ? !ex.initial.empty() : !ex.terminal.empty();
    CHECK(has == find_representation(f).has_value());
  }
}

TEST_CASE("Yoneda bijection") {
  auto c = chain(3);
  for (ObjId a : c->objects()) {
    auto r = yoneda_bijection(hom_functor(c, a, Variance::Covariant), a);
    CHECK(r.ok());
    CHECK(r.transformations.size() == hom_set(*c, a, a).size());
  }

  // chain 0<1, |F0| = 2, |F1| = 1
  auto c2 = chain(2);
  SetValuedFunctor f{c2, Variance::Covariant, {2, 1}, {}};
  f.mor_val = {identity_function(2), FinFunction(2, 1, {0, 0}), identity_function(1)};
  REQUIRE(validate_set_functor(f).ok());
  auto r = yoneda_bijection(f, ObjId{0});
  CHECK(r.transformations.size() == 2);
  CHECK(r.ok());

  auto s = finset_skeleton(2);
  auto pc = powerset_functor(s, Variance::Contravariant);
  for (ObjId a : s.category->objects()) {
    auto y = yoneda_bijection(pc, a);
    CHECK(y.transformations.size() == pc(a));
    CHECK(y.ok());
  }
}

TEST_CASE("Yoneda embedding") {
  CHECK(yoneda_embedding(share(terminal_category())).ok());
  auto r = yoneda_embedding(chain(3));
  CHECK(r.ok());
  CHECK(r.pairs.size() == 9);
  auto z2 = yoneda_embedding(share(monoid_category(cyclic_monoid(2))));
  CHECK(z2.ok());
  CHECK(z2.pairs.front().nat_count == 2);
}

TEST_CASE("Nat enumeration matches whole-component brute force") {
  // every family of component functions, filtered by is_natural
  auto brute = [](const SetValuedFunctor& from, const SetValuedFunctor& to) {
    const std::size_t n = from.source->object_count();
    std::vector<SetNatTrans> out;
    SetNatTrans comps(n);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == n) {
        if (is_natural(from, to, comps)) out.push_back(comps);
        return;
      }
      for_each_function(from(ObjId{i}), to(ObjId{i}), [&](const FinFunction& f) {
        comps[i] = f;
        self(self, i + 1);
      });
    };
    rec(rec, 0);
    return out;
  };
  auto s = finset_skeleton(2);
  for (auto v : {Variance::Covariant, Variance::Contravariant}) {
    auto p = powerset_functor(s, v);
    for (ObjId a : s.category->objects()) {
      auto h = hom_functor(s.category, a, v);
      CHECK(enumerate_set_nat(h, p) == brute(h, p));
      CHECK(enumerate_set_nat(p, p) == brute(p, p));
    }
  }
  auto c3 = chain(3);
  auto k = constant_set_functor(c3, 2, Variance::Contravariant);
  for (ObjId a : c3->objects()) {
    auto h = hom_functor(c3, a, Variance::Contravariant);
    CHECK(enumerate_set_nat(h, k) == brute(h, k));
  }
}

TEST_CASE("Yoneda embedding of the FinSet skeleton up to 3") {
  auto r = yoneda_embedding(finset_skeleton(3).category);
  CHECK(r.ok());
  CHECK(r.pairs.size() == 16);
  for (const auto& p : r.pairs) CHECK(p.nat_count == p.hom_size);
}

TEST_CASE("invalid set-valued functors are rejected") {
  auto c2 = chain(2);
  SetValuedFunctor f{c2, Variance::Covariant, {2, 1}, {}};
  f.mor_val = {FinFunction(2, 2, {1, 0}), FinFunction(2, 1, {0, 0}), identity_function(1)};
  CHECK_FALSE(validate_set_functor(f).ok());
  CHECK_THROWS_AS(find_representation(f), Error);
}
