#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fincat/error.hpp"
#include "fincat/hopf.hpp"

using namespace fincat;

namespace {

ModMatrix random_matrix(std::size_t r, std::size_t c, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<std::uint64_t> e(r * c);
  for (auto& v : e) v = rng() % p;
  return ModMatrix(r, c, p, e);
}

}  // namespace

TEST_CASE("matrices over GF(p)") {
  CHECK_THROWS_AS(ModMatrix(2, 2, 4), Error);
  CHECK(kron(identity_matrix(2, 5), identity_matrix(3, 5)) == identity_matrix(6, 5));
  CHECK(kron(ModMatrix(1, 1, 5, {3}), ModMatrix(1, 1, 5, {4})) == ModMatrix(1, 1, 5, {2}));
  CHECK_THROWS_AS(kron(identity_matrix(1, 2), identity_matrix(1, 3)), Error);
  CHECK_THROWS_AS(multiply(identity_matrix(2, 2), identity_matrix(3, 2)), Error);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    auto f = random_matrix(2, 2, 5, rng), g = random_matrix(2, 2, 5, rng);
    auto f2 = random_matrix(2, 2, 5, rng), g2 = random_matrix(2, 2, 5, rng);
    CHECK(multiply(kron(f, g), kron(f2, g2)) == kron(multiply(f, f2), multiply(g, g2)));
  }

  CHECK(rank(ModMatrix(2, 2, 3, {1, 2, 2, 1})) == 1);  // 2 = -1 mod 3
  CHECK(rank(ModMatrix(2, 2, 5, {1, 2, 2, 1})) == 2);
  auto sol = solve_linear(ModMatrix(2, 2, 5, {1, 2, 3, 4}), ModMatrix(2, 1, 5, {1, 0}));
  REQUIRE(sol.x);
  CHECK(multiply(ModMatrix(2, 2, 5, {1, 2, 3, 4}), *sol.x) == ModMatrix(2, 1, 5, {1, 0}));
  CHECK(sol.nullity == 0);
  CHECK_FALSE(solve_linear(ModMatrix(2, 1, 2, {1, 1}), ModMatrix(2, 1, 2, {1, 0})).x);

  CHECK(multiply(swap_matrix(2, 3, 2), swap_matrix(3, 2, 2)) == identity_matrix(6, 2));
  CHECK(multiply(tau23(2, 3, 2, 3, 3), tau23(2, 2, 3, 3, 3)) == identity_matrix(36, 3));
}

TEST_CASE("strict FinVect coherence") {
  auto s = finvect_structure(3);
  auto r = check_coherence_instances(s, std::vector<std::size_t>{1, 2, 3});
  CHECK(r.ok());
  CHECK(check_symmetry(s, std::size_t{2}, std::size_t{3}));
}

TEST_CASE("field and truncated polynomial structures") {
  CHECK(check_bimonoid({field_algebra(2), field_coalgebra(2)}).ok());
  auto sol = solve_antipode({field_algebra(5), field_coalgebra(5)});
  REQUIRE(sol.antipode);
  CHECK(*sol.antipode == identity_matrix(1, 5));

  auto poly = truncated_polynomial(3, 5);
  CHECK(check_algebra(poly.algebra).ok());
  CHECK(check_coalgebra(poly.coalgebra).ok());
  CHECK_FALSE(poly.bialgebra_asserted);

  auto t = truncated_tensor_algebra(1, 3, 5);
  CHECK(t.algebra.mult == poly.algebra.mult);
  CHECK(t.coalgebra.comult == poly.coalgebra.comult);

  auto t2 = truncated_tensor_algebra(2, 2, 3);
  CHECK(t2.algebra.dim == 7);
  CHECK(check_algebra(t2.algebra).ok());
  CHECK(check_coalgebra(t2.coalgebra).ok());
  // (a1)·(a2) = a1⊗a2, at shortlex position 4
  CHECK(t2.basis[4] == std::vector<std::size_t>{0, 1});
  CHECK(t2.algebra.mult(4, 1 * 7 + 2) == 1);
  // δ(a1⊗a2) has three summands
  std::size_t terms = 0;
  for (std::size_t i = 0; i < 49; ++i) terms += t2.coalgebra.comult(i, 4);
  CHECK(terms == 3);
  CHECK_THROWS_AS(truncated_tensor_algebra(3, 5, 2), Error);
}

TEST_CASE("tensor products of algebras and coalgebras") {
  auto z2 = group_algebra(cyclic_group(2), 3).bimonoid;
  auto a = tensor_of_algebras(z2.algebra, z2.algebra);
  CHECK(check_algebra(a).ok());
  auto c = tensor_of_coalgebras(z2.coalgebra, z2.coalgebra);
  CHECK(check_coalgebra(c).ok());
  CHECK(check_bimonoid({a, c}).ok());

  // k ⊗ A is A on the nose under the strict flattening
  auto ka = tensor_of_algebras(field_algebra(3), z2.algebra);
  CHECK(ka.mult == z2.algebra.mult);

  auto poly = truncated_polynomial(2, 2);
  CHECK(check_coalgebra(tensor_of_coalgebras(poly.coalgebra, poly.coalgebra)).ok());
  CHECK_THROWS_AS(tensor_of_algebras(z2.algebra, field_algebra(5)), Error);
}

TEST_CASE("group algebras and function algebras") {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (const auto& g : {cyclic_group(2), cyclic_group(3), symmetric_group(3)}) {
      auto h = group_algebra(g, p);
      CHECK(check_hopf(h).ok());
      auto sol = solve_antipode(h.bimonoid);
      REQUIRE(sol.antipode);
      CHECK(*sol.antipode == h.antipode);
      CHECK(sol.nullity == 0);
      CHECK(check_hopf(function_hopf(g, p)).ok());
    }
  }
  CHECK(group_algebra(cyclic_group(2), 3).antipode == identity_matrix(2, 3));
  CHECK(group_algebra(cyclic_group(3), 2).antipode == permutation_matrix({0, 2, 1}, 2));

  auto f2 = function_hopf(cyclic_group(2), 7);
  CHECK(f2.bimonoid.coalgebra.comult == ModMatrix(4, 2, 7, {1, 0, 0, 1, 0, 1, 1, 0}));

  auto fs3 = function_hopf(symmetric_group(3), 2);
  const auto& bm = fs3.bimonoid;
  auto sw = swap_matrix(6, 6, 2);
  CHECK(multiply(bm.algebra.mult, sw) == bm.algebra.mult);
  CHECK(multiply(sw, bm.coalgebra.comult) != bm.coalgebra.comult);

  auto trivial = function_hopf(cyclic_group(1), 3);
  CHECK(trivial.bimonoid.algebra.dim == 1);
}

TEST_CASE("monoid algebra without antipode") {
  auto b = monoid_algebra(absorbing_monoid(), 3);
  CHECK(check_bimonoid(b).ok());
  CHECK_FALSE(solve_antipode(b).antipode);

  auto bad = b;
  bad.coalgebra.counit = ModMatrix(1, 2, 3, {1, 2});
  CHECK_THROWS_AS(solve_antipode(bad), Error);
}

TEST_CASE("homomorphisms and antipode naturality") {
  const std::uint64_t p = 3;
  auto s3 = symmetric_group(3);
  auto z2 = cyclic_group(2);
  auto sign = group_algebra_map(s3, z2, sign_map(3), p);
  auto hs3 = group_algebra(s3, p);
  auto hz2 = group_algebra(z2, p);
  CHECK(check_bimonoid_hom(hs3.bimonoid, hz2.bimonoid, sign));
  CHECK(check_antipode_naturality(hs3, hz2, sign));
  CHECK(check_antipode_naturality(hz2, hz2, identity_matrix(2, p)));
  CHECK_THROWS_AS(group_algebra_map(z2, z2, {1, 0}, p), Error);

  // over GF(2), the algebra homomorphisms k(Z/2) -> k(Z/2) are exactly the
  // matrices found by brute force
  auto b = group_algebra(z2, 2).bimonoid;
  std::size_t algebra_homs = 0, bimonoid_homs = 0;
  for (std::uint64_t code = 0; code < 16; ++code) {
    ModMatrix f(2, 2, 2, {code >> 3 & 1, code >> 2 & 1, code >> 1 & 1, code & 1});
    algebra_homs += check_algebra_hom(b.algebra, b.algebra, f) ? 1 : 0;
    bimonoid_homs += check_bimonoid_hom(b, b, f) ? 1 : 0;
  }
  CHECK(bimonoid_homs == 2);  // induced by the two group endomorphisms
  CHECK(algebra_homs >= bimonoid_homs);
}

TEST_CASE("convolution monoid on End(B)") {
  auto h = group_algebra(cyclic_group(3), 5);
  const auto& b = h.bimonoid;
  auto e = multiply(b.algebra.unit, b.coalgebra.counit);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    auto f = random_matrix(3, 3, 5, rng), g = random_matrix(3, 3, 5, rng), k = random_matrix(3, 3, 5, rng);
    CHECK(convolve(b, convolve(b, f, g), k) == convolve(b, f, convolve(b, g, k)));
    CHECK(convolve(b, f, e) == f);
    CHECK(convolve(b, e, f) == f);
  }
}
