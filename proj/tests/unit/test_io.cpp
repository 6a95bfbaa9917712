#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "fincat/error.hpp"
#include "fincat/io.hpp"

using namespace fincat;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::IoError;
}

fs::path scratch_dir(const std::string& name) {
  auto d = fs::temp_directory_path() / ("fincat-test-" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

bool same_payload(const Bundle& a, const Bundle& b) {
  if (a.kind != b.kind) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.payload);
        if constexpr (std::is_same_v<T, CategoryPayload>) {
          return *x.category == *y.category && x.preset == y.preset;
        } else if constexpr (std::is_same_v<T, AdjunctionData>) {
          return x.f == y.f && x.h == y.h && x.unit == y.unit && x.counit == y.counit;
        } else if constexpr (std::is_same_v<T, GaloisConnection>) {
          return x.p == y.p && x.q == y.q && x.f == y.f && x.g == y.g;
        } else if constexpr (std::is_same_v<T, AlgebraPayload>) {
          return x.modulus == y.modulus && x.dim == y.dim && x.mult == y.mult && x.unit == y.unit &&
                 x.comult == y.comult && x.counit == y.counit && x.antipode == y.antipode;
        } else if constexpr (std::is_same_v<T, MonadData>) {
          return x.t == y.t && x.mult == y.mult && x.unit == y.unit;
        } else {
          return x == y;
        }
      },
      a.payload);
}

}  // namespace

TEST_CASE("every fixture round-trips through text") {
  for (const auto& fx : corpus_fixtures()) {
    INFO(fx.name);
    auto text = write_bundle(fx.bundle);
    auto back = parse_bundle_text(text);
    CHECK(same_payload(fx.bundle, back));
    CHECK(write_bundle(back) == text);
  }
}

TEST_CASE("emitted corpus parses and validates") {
  auto dir = scratch_dir("corpus");
  auto paths = emit_corpus(dir);
  CHECK(paths.size() == corpus_fixtures().size());
  for (const auto& p : paths) CHECK_NOTHROW(parse_bundle(p));

  auto chain3 = parse_bundle_as(dir / "chain-3.cat", BundleKind::Category);
  const auto& c = *std::get<CategoryPayload>(chain3.payload).category;
  CHECK(c.object_count() == 3);
  CHECK(c.morphism_count() == 6);
  auto z2 = parse_bundle_as(dir / "z2-group.grp", BundleKind::Group);
  CHECK(std::get<FinGroup>(z2.payload).order() == 2);
  CHECK(kind_of([&] { parse_bundle_as(dir / "z2-group.grp", BundleKind::Category); }) ==
        ErrorKind::SchemaMismatch);

  // digests do not change between emissions
  std::vector<std::string> first;
  for (const auto& p : paths) first.push_back(fnv1a_hex(read_file(p)));
  auto again = emit_corpus(dir);
  for (std::size_t i = 0; i < again.size(); ++i) CHECK(fnv1a_hex(read_file(again[i])) == first[i]);
  fs::remove_all(dir);
}

TEST_CASE("hand-written bundles") {
  auto text = R"(fincat category   # two objects, one arrow
object X
object "the Y"
morphism 1X 0 0
morphism 1Y 1 1
morphism f 0 1
identity 0 0
identity 1 1
end
)";
  auto b = parse_bundle_text(text);
  const auto& c = *std::get<CategoryPayload>(b.payload).category;
  CHECK(c.object_label(ObjId{1}) == "the Y");
  CHECK(c.compose(MorId{2}, MorId{0}) == MorId{2});

  auto dir = scratch_dir("refs");
  std::ofstream(dir / "two.cat") << text;
  std::ofstream(dir / "id.fun") << "fincat functor\nsource file two.cat\ntarget file two.cat\n"
                                   "objects 0 1\nmorphisms 0 1 2\nend\n";
  auto f = parse_bundle_as(dir / "id.fun", BundleKind::Functor);
  CHECK(std::get<FinFunctor>(f.payload) == identity_functor(share(c)));

  std::ofstream(dir / "bad.fun") << "fincat functor\nsource file two.cat\ntarget file two.cat\n"
                                    "objects 1 0\nmorphisms 1 0 2\nend\n";
  CHECK(kind_of([&] { parse_bundle(dir / "bad.fun"); }) == ErrorKind::ValidationFailed);
  CHECK_NOTHROW(parse_bundle(dir / "bad.fun", false));
  CHECK(kind_of([&] { parse_bundle(dir / "missing.cat"); }) == ErrorKind::IoError);
  fs::remove_all(dir);

  auto g = parse_bundle_text("fincat group\npreset symmetric 3\nend\n");
  CHECK(std::get<FinGroup>(g.payload) == symmetric_group(3));
  auto p = parse_bundle_text("fincat category\npreset finset-skeleton 2\nend\n");
  CHECK(std::get<CategoryPayload>(p.payload).category->object_count() == 3);
}

TEST_CASE("malformed input is located") {
  auto full = write_bundle(corpus_fixtures().front().bundle);
  // a cut inside the header word reads as an unknown kind instead
  for (std::size_t cut = full.find('\n'); cut + 1 < full.size(); cut += 7) {
    INFO(cut);
    CHECK(kind_of([&] { parse_bundle_text(full.substr(0, cut)); }) == ErrorKind::ParseError);
  }

  try {
    parse_bundle_text("fincat group\norder 2\ntable 0 1 1 x\nend\n");
    FAIL("accepted a bad token");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("<text>:3:13") != std::string::npos);
  }
  CHECK(kind_of([] { parse_bundle_text("fincat group\norder 2\ntable 0 1 1\nend\n"); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([] { parse_bundle_text("fincat widget\nend\n"); }) == ErrorKind::SchemaMismatch);
  CHECK(kind_of([] { parse_bundle_text("fincat group\ncolour red\nend\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_bundle_text("fincat group\norder 2\ntable 0 0 0 0\nend\n"); }) ==
        ErrorKind::ValidationFailed);
  CHECK(kind_of([] {
          parse_bundle_text("fincat functor\nsource {\nfincat group\npreset cyclic 2\n}\nend\n");
        }) == ErrorKind::SchemaMismatch);
  CHECK(kind_of([] { parse_bundle_text("fincat category\npreset chain 2\nend\nextra\n"); }) ==
        ErrorKind::ParseError);
}
