#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "fincat/concrete.hpp"
#include "fincat/error.hpp"

using namespace fincat;

TEST_CASE("skeleton endofunctors are functorial") {
  CHECK_FALSE(check_endofunctor(product_functor(2), 2));
  CHECK_FALSE(check_endofunctor(exponential_functor(2), 2));
  CHECK_FALSE(check_endofunctor(covariant_powerset_functor(), 2));

  // sends every map to an identity of the right size but breaks composition
  SetEndofunctor broken{"broken", [](std::size_t n) { return n; }, [](const FinFunction& f) {
                          return f.dom() == f.cod() ? identity_function(f.dom()) : f;
                        }};
  CHECK(check_endofunctor(broken, 2).has_value());
}

TEST_CASE("currying adjunction") {
  for (std::size_t x : {1u, 2u}) {
    auto a = currying_adjunction(x);
    auto t = check_set_triangles(a, 3, 2);
    CHECK(t.ok());
    auto b = verify_set_hom_bijection(a, 3, 2);
    CHECK(b.ok());
    CHECK(b.pairs_checked == 16);
  }
  // θ is currying
  auto a = currying_adjunction(2);
  for_each_function(6, 2, [&](const FinFunction& m) {
    CHECK(set_theta(a, 3, m) == curry(m, 2, 3, 1000));
  });
  CHECK(check_set_triangles(currying_adjunction(0), 2, 1).ok());
}

TEST_CASE("mutated currying data fails locally") {
  auto a = currying_adjunction(2);
  auto bad = a;
  bad.unit = [a](std::size_t n) {
    auto u = a.unit(n);
    if (n != 1) return u;
    return FinFunction(1, u.cod(), {(u(0) + 1) % u.cod()});
  };
  auto t = check_set_triangles(bad, 3, 2);
  CHECK(t.left_failures == std::vector<std::size_t>{1});
  CHECK(t.unit_naturality_failure.has_value());
  CHECK_FALSE(verify_set_hom_bijection(bad, 2, 1).ok());

  auto bad2 = a;
  bad2.counit = [a](std::size_t n) {
    auto e = a.counit(n);
    if (n != 2) return e;
    return compose(FinFunction(2, 2, {1, 0}), e);
  };
  auto t2 = check_set_triangles(bad2, 3, 2);
  CHECK_FALSE(t2.ok());
  CHECK(std::find(t2.right_failures.begin(), t2.right_failures.end(), 2u) !=
        t2.right_failures.end());
}

TEST_CASE("right adjoint of X×- rebuilt from evaluation maps") {
  const std::size_t x = 2;
  auto f = product_functor(x);
  std::vector<std::pair<std::size_t, FinFunction>> choice;
  for (std::size_t y = 0; y <= 2; ++y) choice.emplace_back(y * y, evaluation(x, y, 1000));
  auto r = build_right_adjoint(f, choice, 2);
  auto ref = currying_adjunction(x);
  for (const auto& [g, hg] : r.h_mor) CHECK(hg == ref.h(g));
  REQUIRE(r.unit.count(1) == 1);
  CHECK(r.unit.at(1) == ref.unit(1));
  CHECK(r.unit.count(2) == 0);  // F(2) = 4 lies outside the bound

  // a non-universal choice: HY = 1 instead of Y^2 at Y = 2
  auto bad = choice;
  bad[2] = {1, FinFunction(2, 2, {0, 1})};
  CHECK_THROWS_AS(build_right_adjoint(f, bad, 2), Error);

  // identity functor with identity choices
  std::vector<std::pair<std::size_t, FinFunction>> ids;
  for (std::size_t y = 0; y <= 2; ++y) ids.emplace_back(y, identity_function(y));
  auto id = build_right_adjoint(identity_endofunctor(), ids, 2);
  for (const auto& [g, hg] : id.h_mor) CHECK(hg == g);
}

TEST_CASE("lim and colim against the diagonal") {
  auto lr = limit_delta_instance(product_diagram(2, 3), 2);
  CHECK(lr.bijective);
  CHECK(lr.hom_counts == std::vector<std::size_t>{1, 6, 36});
  CHECK(lr.cone_counts == lr.hom_counts);

  auto eq = limit_delta_instance(parallel_diagram(FinFunction(3, 2, {0, 1, 0}),
                                                  FinFunction(3, 2, {0, 0, 0})), 2);
  CHECK(eq.bijective);
  CHECK(eq.hom_counts[2] == 4);

  auto cr = colimit_delta_instance(coproduct_diagram(1, 2), 2);
  CHECK(cr.bijective);
  CHECK(cr.hom_counts == std::vector<std::size_t>{0, 1, 8});
  CHECK(colimit_delta_instance(span_diagram(FinFunction(1, 2, {0}), FinFunction(1, 2, {1})), 3)
            .bijective);
}
