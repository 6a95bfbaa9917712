#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fincat/error.hpp"
#include "fincat/monoidal.hpp"
#include "fincat/standard.hpp"

using namespace fincat;

TEST_CASE("coherence for cartesian and cocartesian skeleta") {
  std::vector<std::size_t> sizes{0, 1, 2, 3};
  for (const auto& s : {cartesian_structure(), cocartesian_structure()}) {
    auto r = check_coherence_instances(s, sizes);
    CHECK(r.ok());
    CHECK(r.pentagon_instances == 256);
    CHECK(r.triangle_instances == 16);
    for (auto a : sizes)
      for (auto b : sizes) CHECK(check_symmetry(s, a, b));
  }
}

TEST_CASE("a wrong associator breaks the pentagon") {
  auto s = cartesian_structure();
  s.assoc = [](std::size_t a, std::size_t b, std::size_t c) {
    auto id = product_associator(a, b, c);
    if (a == 2 && b == 2 && c == 2) return product_map(product_swap(2, 2), identity_function(2));
    return id;
  };
  auto r = check_coherence_instances(s, std::vector<std::size_t>{1, 2});
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.pentagon_failures.empty());
}

TEST_CASE("endofunctor category is strict") {
  auto c = share(chain_category(2));
  auto s = endofunctor_structure(c);
  auto endos = enumerate_functors(c, c);
  REQUIRE(endos.size() == 3);
  auto r = check_coherence_instances(s, endos);
  CHECK(r.ok());
  CHECK(r.pentagon_instances == 81);
  for (const auto& f : endos) {
    CHECK(s.tensor_obj(s.unit, f) == f);
    CHECK(s.lunit(f) == identity_nat(f));
  }
}

TEST_CASE("tensor is functorial") {
  std::mt19937_64 rng(7);
  auto random_fn = [&](std::size_t dom, std::size_t cod) {
    std::vector<std::size_t> t(dom);
    for (auto& v : t) v = rng() % cod;
    return FinFunction(dom, cod, t);
  };
  for (const auto& s : {cartesian_structure(), cocartesian_structure()})
    for (int i = 0; i < 100; ++i) {
      auto f2 = random_fn(2, 3), g2 = random_fn(3, 2);
      auto f = random_fn(3, 2), g = random_fn(2, 3);
      CHECK(check_tensor_interchange(s, f, g, f2, g2));
    }
}

TEST_CASE("monoid and comonoid objects") {
  auto s = cartesian_structure();
  CHECK(check_monoid_object(s, cyclic_monoid_object(2)));
  CHECK(check_monoid_object(s, cyclic_monoid_object(3)));
  auto bad = cyclic_monoid_object(2);
  bad.unit = FinFunction(1, 2, {1});
  CHECK_FALSE(check_monoid_object(s, bad));
  bad.unit = FinFunction(2, 2, {0, 0});
  CHECK_THROWS_AS(check_monoid_object(s, bad), Error);

  for (std::size_t n = 0; n <= 3; ++n) CHECK(check_comonoid_object(s, diagonal_comonoid(n)));

  // the diagonal is the only comultiplication on a 2-set
  std::size_t accepted = 0;
  for_each_function(2, 4, [&](const FinFunction& delta) {
    SetComonoid c{2, delta, constant_function(2, 1, 0)};
    if (check_comonoid_object(s, c)) {
      ++accepted;
      CHECK(delta == diagonal_comonoid(2).comult);
    }
  });
  CHECK(accepted == 1);
}

TEST_CASE("convolution") {
  auto s = cartesian_structure();
  auto c = diagonal_comonoid(3);
  auto m = cyclic_monoid_object(2);
  auto e = convolution_unit(s, c, m);
  CHECK(convolution(s, c, m, e, e) == e);
  FinFunction f(3, 2, {0, 1, 1});
  FinFunction g(3, 2, {1, 1, 0});
  auto fg = convolution(s, c, m, f, g);
  for (std::size_t h = 0; h < 3; ++h) CHECK(fg(h) == (f(h) + g(h)) % 2);
  CHECK(convolution(s, c, m, f, e) == f);
  FinFunction k(3, 2, {1, 0, 1});
  CHECK(convolution(s, c, m, convolution(s, c, m, f, g), k) ==
        convolution(s, c, m, f, convolution(s, c, m, g, k)));
  CHECK_THROWS_AS(convolution(s, c, m, FinFunction(2, 2, {0, 0}), g), Error);
}
