#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fincat/error.hpp"
#include "fincat/finset.hpp"
#include "fincat/skeleton.hpp"

using namespace fincat;

TEST_CASE("function construction and composition") {
  CHECK_THROWS_AS(FinFunction(2, 2, {0, 2}), Error);
  CHECK_THROWS_AS(FinFunction(2, 2, {0}), Error);
  FinFunction f(2, 3, {2, 0});
  FinFunction g(3, 2, {1, 1, 0});
  CHECK(compose(g, f) == FinFunction(2, 2, {0, 1}));
  CHECK_THROWS_AS(compose(f, f), Error);
  CHECK(compose(f, identity_function(2)) == f);
}

TEST_CASE("classify_function") {
  CHECK(classify_function(identity_function(3)) == FunctionClass{true, true, true});
  CHECK(classify_function(FinFunction(2, 1, {0, 0})) == FunctionClass{false, true, false});
  CHECK(classify_function(FinFunction(2, 2, {1, 0})) == FunctionClass{true, true, true});
  CHECK(classify_function(empty_function(2)) == FunctionClass{true, false, false});
  CHECK(classify_function(empty_function(0)).bijective);
}

TEST_CASE("function enumeration covers cod^dom tables") {
  std::size_t count = 0;
  for_each_function(3, 2, [&](const FinFunction&) { ++count; });
  CHECK(count == 8);
  count = 0;
  for_each_function(0, 0, [&](const FinFunction&) { ++count; });
  CHECK(count == 1);
  count = 0;
  for_each_function(2, 0, [&](const FinFunction&) { ++count; });
  CHECK(count == 0);
}

TEST_CASE("exponentials and currying") {
  CHECK(exponential_size(2, 3, 100) == 9);
  CHECK_THROWS_AS(exponential_size(10, 10, 1000), Error);
  CHECK(decode_table(encode_table({2, 0, 1}, 3), 3, 3) == std::vector<std::size_t>{2, 0, 1});
  CHECK(encode_table({1, 0}, 3) == 3);

  // curry(pr2): y ↦ constant function at y
  auto [p1, p2] = product_projections(2, 3);
  auto c = curry(p2, 2, 3, 1000);
  CHECK(c.dom() == 3);
  CHECK(c.cod() == 9);
  for (std::size_t y = 0; y < 3; ++y) CHECK(decode_table(c(y), 2, 3) == std::vector<std::size_t>{y, y});
  CHECK(uncurry(c, 2, 3, 1000) == p2);

  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::size_t> t(6);
    for (auto& v : t) v = rng() % 3;
    FinFunction f(6, 3, t);
    CHECK(uncurry(curry(f, 2, 3, 1000), 2, 3, 1000) == f);
  }

  // ev ∘ (1 × curry f) = f
  FinFunction f(6, 2, {0, 1, 1, 0, 1, 1});
  auto lam = curry(f, 2, 3, 1000);
  auto ev = evaluation(2, 2, 1000);
  CHECK(compose(ev, product_map(identity_function(2), lam)) == f);
}

TEST_CASE("products, coproducts and their maps") {
  auto [p1, p2] = product_projections(2, 3);
  CHECK(p1.dom() == 6);
  CHECK(pairing(p1, p2) == identity_function(6));
  auto [i1, i2] = coproduct_injections(2, 3);
  CHECK(copairing(i1, i2) == identity_function(5));
  CHECK(compose(product_swap(3, 2), product_swap(2, 3)) == identity_function(6));
  CHECK(compose(coproduct_swap(3, 2), coproduct_swap(2, 3)) == identity_function(5));
  CHECK(classify_function(product_associator(2, 3, 2)).bijective);
  FinFunction f(2, 2, {1, 1});
  FinFunction g(1, 3, {2});
  CHECK(coproduct_map(f, g) == FinFunction(3, 5, {1, 1, 4}));
  CHECK(product_map(f, g) == FinFunction(2, 6, {5, 5}));
}

TEST_CASE("power sets") {
  FinFunction f(2, 1, {0, 0});
  auto pre = powerset(Variance::Contravariant, f);
  CHECK(pre(0b1) == 0b11);
  CHECK(pre(0b0) == 0b00);
  auto img = powerset(Variance::Covariant, f);
  CHECK(img(0b01) == 0b1);
  CHECK(img(0b11) == 0b1);
  CHECK(powerset(Variance::Covariant, identity_function(3)) == identity_function(8));
  CHECK(powerset(Variance::Contravariant, identity_function(3)) == identity_function(8));

  FinFunction g(3, 2, {1, 0, 1});
  FinFunction h(2, 3, {2, 2});
  CHECK(powerset(Variance::Covariant, compose(h, g)) ==
        compose(powerset(Variance::Covariant, h), powerset(Variance::Covariant, g)));
  CHECK(powerset(Variance::Contravariant, compose(h, g)) ==
        compose(powerset(Variance::Contravariant, g), powerset(Variance::Contravariant, h)));

  auto mu = powerset_union(2);
  CHECK(mu.dom() == 16);
  CHECK(mu(0b0110) == 0b11);  // {{0},{1}} -> {0,1}
  CHECK(compose(mu, singleton(4)) == identity_function(4));
}

TEST_CASE("FinSet skeleton") {
  auto s = finset_skeleton(3);
  CHECK(s.category->object_count() == 4);
  CHECK(s.category->morphism_count() == 60);
  CHECK(validate_category(*s.category).ok());
  for (MorId m : s.category->morphisms()) CHECK(s.morphism(s.function(m)) == m);
  // morphism classification matches injective/surjective/bijective
  for (MorId m : s.category->morphisms()) {
    auto cls = classify_morphism(*s.category, m);
    auto fc = classify_function(s.function(m));
    CHECK(cls.is_mono == fc.injective);
    CHECK(cls.is_epi == fc.surjective);
    CHECK(cls.is_iso == fc.bijective);
  }
  auto ex = find_extremal_objects(*s.category);
  CHECK(ex.initial == std::vector<ObjId>{ObjId{0}});
  CHECK(ex.terminal == std::vector<ObjId>{ObjId{1}});
}
