#include <catch2/catch_amalgamated.hpp>

#include "fincat/algebraic.hpp"
#include "fincat/category.hpp"
#include "fincat/error.hpp"
#include "fincat/standard.hpp"

using namespace fincat;

namespace {

// Rebuild `c` with one composition entry overwritten.
FinCategory with_compose(const FinCategory& c, MorId g, MorId f, MorId h) {
  auto table = c.compose_table();
  table[g.value * c.morphism_count() + f.value] = h;
  return FinCategory(c.object_labels(), c.morphism_table(), c.identity_table(), table);
}

}  // namespace

TEST_CASE("terminal and chain categories validate") {
  CHECK(validate_category(terminal_category()).ok());
  auto chain = chain_category(3);
  CHECK(chain.object_count() == 3);
  CHECK(chain.morphism_count() == 6);
  CHECK(validate_category(chain).ok());
}

TEST_CASE("unit-law corruption is reported pair by pair") {
  auto chain = chain_category(3);
  auto pc = preorder_category(chain_order(3));
  MorId id0 = pc.at(0, 0), id1 = pc.at(1, 1), f = pc.at(0, 1);
  // 1_1 ∘ f redirected to the identity of 0 breaks typing and the unit law
  auto bad = with_compose(chain, id1, f, id0);
  auto report = validate_category(bad);
  CHECK_FALSE(report.ok());
  CHECK(report.count("left-unit") == 1);
  CHECK(report.of_law("left-unit").front().witness == std::vector<std::size_t>{f.value, id1.value});
}

TEST_CASE("constructor rejects out-of-range tables") {
  CHECK_THROWS_AS(FinCategory({"x"}, {{"id", ObjId{0}, ObjId{1}}}, {MorId{0}}, {MorId{0}}),
                  Error);
}

TEST_CASE("opposite is an involution and reverses chains") {
  auto chain = chain_category(3);
  auto op = opposite(chain);
  CHECK(validate_category(op).ok());
  CHECK(opposite(op) == chain);
  auto ex = find_extremal_objects(op);
  CHECK(ex.initial == std::vector<ObjId>{ObjId{2}});
  CHECK(ex.terminal == std::vector<ObjId>{ObjId{0}});
  CHECK(opposite(terminal_category()) == terminal_category());
}

TEST_CASE("hom-sets in a chain") {
  auto chain = chain_category(2);
  CHECK(hom_set(chain, ObjId{0}, ObjId{1}).size() == 1);
  CHECK(hom_set(chain, ObjId{1}, ObjId{0}).empty());
  auto t = terminal_category();
  CHECK(hom_set(t, ObjId{0}, ObjId{0}) == std::vector<MorId>{MorId{0}});
  CHECK_THROWS_AS(hom_set(chain, ObjId{0}, ObjId{5}), Error);
}

TEST_CASE("morphism classification") {
  auto pc = preorder_category(chain_order(2));
  auto cls = classify_morphism(pc.category, pc.at(0, 1));
  CHECK(cls.is_mono);
  CHECK(cls.is_epi);
  CHECK_FALSE(cls.is_iso);
  CHECK_FALSE(cls.inverse);

  auto id = classify_morphism(pc.category, pc.at(0, 0));
  CHECK(id.is_iso);
  CHECK(id.inverse == pc.at(0, 0));

  auto iso = iso_pair_category();
  auto f = *iso.find_morphism("f");
  auto g = *iso.find_morphism("g");
  auto c = classify_morphism(iso, f);
  CHECK(c.is_iso);
  CHECK(c.inverse == g);
  CHECK(is_isomorphic(iso, ObjId{0}, ObjId{1}));
}

TEST_CASE("group categories: every morphism is iso") {
  auto s3 = monoid_category(symmetric_group(3).as_monoid());
  for (MorId f : s3.morphisms()) CHECK(classify_morphism(s3, f).is_iso);
  auto bm = monoid_category(boolean_matrix_monoid());
  CHECK(validate_category(bm).ok());
}

TEST_CASE("extremal objects") {
  auto ex = find_extremal_objects(chain_category(3));
  CHECK(ex.initial == std::vector<ObjId>{ObjId{0}});
  CHECK(ex.terminal == std::vector<ObjId>{ObjId{2}});
  CHECK(ex.zero.empty());

  auto t = find_extremal_objects(terminal_category());
  CHECK(t.initial.size() == 1);
  CHECK(t.terminal.size() == 1);
  CHECK(t.zero.size() == 1);

  auto d = find_extremal_objects(discrete_category(2));
  CHECK(d.initial.empty());
  CHECK(d.terminal.empty());
  CHECK(d.zero.empty());

  auto iso = find_extremal_objects(iso_pair_category());
  CHECK(iso.zero.size() == 2);
  CHECK(iso.uniquely_isomorphic);
}

TEST_CASE("standard constructions") {
  auto z2 = monoid_category(cyclic_monoid(2));
  CHECK(z2.object_count() == 1);
  CHECK(z2.morphism_count() == 2);
  CHECK(z2.compose(MorId{1}, MorId{1}) == MorId{0});

  auto sq = product_category(chain_category(2), chain_category(2));
  CHECK(sq.object_count() == 4);
  CHECK(sq.morphism_count() == 9);
  CHECK(validate_category(sq).ok());
  auto ex = find_extremal_objects(sq);
  CHECK(ex.initial == std::vector<ObjId>{ObjId{0}});
  CHECK(ex.terminal == std::vector<ObjId>{ObjId{3}});

  auto slice = slice_category(chain_category(3), ObjId{2});
  CHECK(slice.category.object_count() == 3);
  CHECK(validate_category(slice.category).ok());

  auto sub = full_subcategory(chain_category(3), {ObjId{0}, ObjId{2}});
  CHECK(sub.category.morphism_count() == 3);
  CHECK(validate_category(sub.category).ok());

  FiniteMonoid bad{2, {0, 1, 1, 1}, 1, {}};
  CHECK_THROWS_AS(monoid_category(bad), Error);
}

TEST_CASE("composites of monos and epis") {
  auto pc = preorder_category(chain_order(3));
  const auto& c = pc.category;
  for (MorId f : c.morphisms())
    for (MorId g : c.morphisms()) {
      if (c.cod(f) != c.dom(g)) continue;
      auto h = *c.compose(g, f);
      auto cf = classify_morphism(c, f), cg = classify_morphism(c, g), ch = classify_morphism(c, h);
      if (cf.is_mono && cg.is_mono) CHECK(ch.is_mono);
      if (cf.is_epi && cg.is_epi) CHECK(ch.is_epi);
      if (cf.is_iso && cg.is_iso) CHECK(ch.is_iso);
    }
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(require_valid(chain_category(3), 2), Error);
}
