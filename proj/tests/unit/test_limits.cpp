#include <catch2/catch_amalgamated.hpp>

#include "fincat/error.hpp"
#include "fincat/limits.hpp"

using namespace fincat;

TEST_CASE("products and the terminal set") {
  auto lim = limit(product_diagram(2, 3));
  CHECK(lim.cone.apex == 6);
  CHECK(lim.tuples[4] == std::vector<std::size_t>{1, 1});
  CHECK(check_universal(product_diagram(2, 3), lim.cone).universal);

  auto term = limit(empty_diagram());
  CHECK(term.cone.apex == 1);
  CHECK(term.cone.legs.empty());
  CHECK(check_universal(empty_diagram(), term.cone).universal);

  auto init = colimit(empty_diagram());
  CHECK(init.cocone.apex == 0);
  CHECK(check_universal(empty_diagram(), init.cocone).universal);
}

TEST_CASE("swapped product cone is still universal; oversized apex is not") {
  auto d = product_diagram(2, 2);
  auto lim = limit(d);
  Cone swapped{4, {compose(lim.cone.legs[0], product_swap(2, 2)),
                   compose(lim.cone.legs[1], product_swap(2, 2))}};
  CHECK(check_universal(d, swapped).universal);

  // five elements over the 2x2 product: two elements share a tuple
  Cone big{5, {FinFunction(5, 2, {0, 0, 1, 1, 1}), FinFunction(5, 2, {0, 1, 0, 1, 1})}};
  auto r = check_universal(d, big);
  CHECK_FALSE(r.universal);
  CHECK(r.mediator_count == 2);
}

TEST_CASE("equalizer") {
  FinFunction f(3, 2, {0, 1, 0});
  FinFunction g(3, 2, {0, 0, 0});
  auto eq = equalizer(f, g);
  CHECK(eq.cone.apex == 2);
  CHECK(eq.cone.legs[0] == FinFunction(2, 3, {0, 2}));
  CHECK(classify_function(eq.cone.legs[0]).injective);
  CHECK(check_universal(parallel_diagram(f, g), eq.cone).universal);
}

TEST_CASE("pullback") {
  FinFunction f(2, 2, {0, 1});
  FinFunction g(3, 2, {1, 1, 0});
  auto pb = pullback(f, g);
  CHECK(pb.cone.apex == 3);  // (0,2), (1,0), (1,1)
  CHECK(pb.tuples[0] == std::vector<std::size_t>{0, 2, 0});
  CHECK(check_universal(cospan_diagram(f, g), pb.cone).universal);
}

TEST_CASE("coproduct, coequalizer and pushout") {
  auto cp = colimit(coproduct_diagram(2, 3));
  CHECK(cp.cocone.apex == 5);
  CHECK(cp.cocone.legs[1] == FinFunction(3, 5, {2, 3, 4}));
  CHECK(check_universal(coproduct_diagram(2, 3), cp.cocone).universal);

  FinFunction f(2, 3, {0, 1});
  FinFunction g(2, 3, {1, 2});
  auto ce = coequalizer(f, g);
  CHECK(ce.cocone.apex == 1);
  CHECK(check_universal(parallel_diagram(f, g), ce.cocone).universal);

  auto po = pushout(FinFunction(1, 2, {0}), FinFunction(1, 2, {1}));
  CHECK(po.cocone.apex == 3);
  CHECK(po.cocone.legs[0] == FinFunction(2, 3, {0, 1}));
  CHECK(po.cocone.legs[1] == FinFunction(2, 3, {2, 0}));
  CHECK(check_universal(span_diagram(FinFunction(1, 2, {0}), FinFunction(1, 2, {1})),
                        po.cocone).universal);
}

TEST_CASE("mediators") {
  auto d = product_diagram(2, 2);
  auto lim = limit(d);
  Cone other{3, {FinFunction(3, 2, {1, 0, 1}), FinFunction(3, 2, {1, 1, 0})}};
  auto m = lim.mediate(other);
  CHECK(m == FinFunction(3, 4, {3, 1, 2}));
  CHECK(compose(lim.cone.legs[0], m) == other.legs[0]);

  FinFunction f(2, 2, {0, 1});
  FinFunction g(2, 2, {1, 1});
  auto pd = parallel_diagram(f, g);
  auto eq = limit(pd);
  Cone bad{1, {FinFunction(1, 2, {0}), FinFunction(1, 2, {0})}};
  CHECK_THROWS_AS(eq.mediate(bad), Error);

  auto ce = colimit(pd);
  CHECK(ce.cocone.apex == 1);
  Cocone c2{2, {FinFunction(2, 2, {0, 0}), FinFunction(2, 2, {0, 0})}};
  CHECK(ce.mediate(c2) == FinFunction(1, 2, {0}));
  Cocone bad2{2, {FinFunction(2, 2, {0, 1}), FinFunction(2, 2, {0, 1})}};
  CHECK_THROWS_AS(ce.mediate(bad2), Error);
}

TEST_CASE("colimit with a redundant apex element is not universal") {
  auto d = coproduct_diagram(1, 1);
  Cocone extra{3, {FinFunction(1, 3, {0}), FinFunction(1, 3, {1})}};
  auto r = check_universal(d, extra);
  CHECK_FALSE(r.universal);
}

TEST_CASE("empty-set edge cases") {
  FinFunction f(2, 2, {0, 0});
  FinFunction g(2, 2, {1, 1});
  auto eq = equalizer(f, g);
  CHECK(eq.cone.apex == 0);
  CHECK(check_universal(parallel_diagram(f, g), eq.cone).universal);
  auto pb = pullback(empty_function(2), FinFunction(1, 2, {0}));
  CHECK(pb.cone.apex == 0);
}

TEST_CASE("malformed diagrams are rejected") {
  Diagram d = product_diagram(2, 2);
  d.edges.push_back({"e", 0, 5, identity_function(2)});
  CHECK_THROWS_AS(limit(d), Error);
  Diagram e = product_diagram(2, 3);
  e.edges.push_back({"e", 0, 1, identity_function(2)});
  CHECK_THROWS_AS(colimit(e), Error);
}
