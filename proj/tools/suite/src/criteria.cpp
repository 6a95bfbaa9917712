#include "fincat/suite/criteria.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "fincat/adjunction.hpp"
#include "fincat/concrete.hpp"
#include "fincat/error.hpp"
#include "fincat/hopf.hpp"
#include "fincat/monad.hpp"
#include "fincat/monoidal.hpp"
#include "fincat/skeleton.hpp"
#include "fincat/suite/oracles.hpp"

namespace fincat::suite {

namespace fs = std::filesystem;

// --- corpus -------------------------------------------------------------------------

const Bundle& Corpus::get(const std::string& name, BundleKind kind) const {
  for (const auto& [n, b] : bundles)
    if (n == name) {
      if (b.kind != kind)
        throw Error(ErrorKind::SchemaMismatch, fmt::format("fixture '{}' is a {} bundle, expected {}", name,
                                                           to_string(b.kind), to_string(kind)));
      return b;
    }
  throw Error(ErrorKind::SchemaMismatch, fmt::format("fixture '{}' missing from {}", name, dir.string()));
}

CategoryRef Corpus::category(const std::string& name) const {
  return std::get<CategoryPayload>(get(name, BundleKind::Category).payload).category;
}

std::vector<std::pair<std::string, CategoryRef>> Corpus::categories() const {
  std::vector<std::pair<std::string, CategoryRef>> out;
  for (const auto& [n, c] : all<CategoryPayload>(BundleKind::Category)) out.emplace_back(n, c.category);
  return out;
}

Corpus load_corpus(const fs::path& dir) {
  Corpus c;
  c.dir = dir;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec))
    if (e.is_regular_file()) files.push_back(e.path());
  if (ec) throw Error(ErrorKind::IoError, fmt::format("cannot list '{}': {}", dir.string(), ec.message()));
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    std::string name = p.filename().string();
    std::string text = read_file(p);
    c.digests.emplace_back(name, fnv1a_hex(text));
    c.bundles.emplace_back(name, parse_bundle_text(text, dir, true, name));
    c.texts.emplace_back(name, std::move(text));
  }
  return c;
}

Corpus prepare_corpus(const fs::path& dir) {
  bool empty = true;
  std::error_code ec;
  if (fs::is_directory(dir, ec))
    for (const auto& e : fs::directory_iterator(dir, ec))
      if (e.is_regular_file()) empty = false;
  if (empty) emit_corpus(dir);
  return load_corpus(dir);
}

bool CriterionResult::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
}

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

// Accumulates one law over many instances, keeping the first counterexample.
struct Tally {
  Tally(std::string m, std::string l) : module(std::move(m)), law(std::move(l)) {}

  std::string module;
  std::string law;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  json first;

  void record(bool ok, const std::function<json()>& witness = {}) {
    ++instances;
    if (ok) return;
    if (failures++ == 0) first = witness ? witness() : json(nullptr);
  }
  Verdict verdict() const {
    Verdict v{module, law, failures == 0, instances, nullptr};
    if (failures) v.counterexample = {{"failures", failures}, {"first", first}};
    return v;
  }
};

json ids_json(const std::vector<ObjId>& v) {
  json j = json::array();
  for (auto x : v) j.push_back(x.value);
  return j;
}

json table_json(const FinFunction& f) { return f.table(); }

// --- 1: category axioms --------------------------------------------------------------

FinCategory permuted(const FinCategory& c, Rng& rng) {
  const std::size_t n0 = c.object_count(), n1 = c.morphism_count();
  std::vector<std::size_t> po(n0), pm(n1);
  std::iota(po.begin(), po.end(), std::size_t{0});
  std::iota(pm.begin(), pm.end(), std::size_t{0});
  for (std::size_t i = n0; i > 1; --i) std::swap(po[i - 1], po[pick(rng, i)]);
  for (std::size_t i = n1; i > 1; --i) std::swap(pm[i - 1], pm[pick(rng, i)]);
  std::vector<std::string> labels(n0);
  for (std::size_t x = 0; x < n0; ++x) labels[po[x]] = c.object_labels()[x];
  std::vector<MorphismData> mors(n1);
  for (std::size_t f = 0; f < n1; ++f) {
    const auto& m = c.morphism_table()[f];
    mors[pm[f]] = {m.label, ObjId{po[m.dom.value]}, ObjId{po[m.cod.value]}};
  }
  std::vector<MorId> ids(n0);
  for (std::size_t x = 0; x < n0; ++x) ids[po[x]] = MorId{pm[c.identity_table()[x].value]};
  std::vector<std::optional<MorId>> table(n1 * n1);
  for (std::size_t g = 0; g < n1; ++g)
    for (std::size_t f = 0; f < n1; ++f)
      if (auto h = c.compose_table()[g * n1 + f]) table[pm[g] * n1 + pm[f]] = MorId{pm[h->value]};
  return FinCategory(labels, mors, ids, table);
}

FinCategory random_valid(Rng& rng, std::size_t max_mor) {
  while (true) {
    FinCategory c;
    switch (pick(rng, 4)) {
      case 0: {
        std::size_t n = 1 + pick(rng, 4);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t k = pick(rng, 2 * n); k > 0; --k) pairs.emplace_back(pick(rng, n), pick(rng, n));
        c = preorder_category(preorder_closure(n, pairs)).category;
        break;
      }
      case 1: {
        switch (pick(rng, 4)) {
          case 0: c = monoid_category(cyclic_monoid(1 + pick(rng, max_mor))); break;
          case 1: c = monoid_category(absorbing_monoid()); break;
          case 2: c = monoid_category(symmetric_group(3).as_monoid()); break;
          default: c = monoid_category(cyclic_group(2 + pick(rng, 5)).as_monoid()); break;
        }
        break;
      }
      case 2: {
        const FinCategory small[] = {chain_category(2), iso_pair_category(), parallel_pair_category(),
                                     span_category(), monoid_category(cyclic_monoid(2)),
                                     discrete_category(2)};
        c = product_category(small[pick(rng, 6)], small[pick(rng, 6)]);
        break;
      }
      default: {
        const FinCategory small[] = {terminal_category(), chain_category(3), iso_pair_category(),
                                     parallel_pair_category(), span_category(), discrete_category(3)};
        c = small[pick(rng, 6)];
        break;
      }
    }
    if (c.morphism_count() <= max_mor) return permuted(c, rng);
  }
}

// One local edit of the raw tables; the result may or may not be a category.
FinCategory perturbed(const FinCategory& c, Rng& rng) {
  auto labels = c.object_labels();
  auto mors = c.morphism_table();
  auto ids = c.identity_table();
  auto table = c.compose_table();
  const std::size_t n0 = labels.size(), n1 = mors.size();
  switch (pick(rng, 5)) {
    case 0: {  // rewrite a composite
      auto& e = table[pick(rng, n1 * n1)];
      if (e) e = MorId{pick(rng, n1)};
      break;
    }
    case 1: table[pick(rng, n1 * n1)].reset(); break;
    case 2: table[pick(rng, n1 * n1)] = MorId{pick(rng, n1)}; break;
    case 3: ids[pick(rng, n0)] = MorId{pick(rng, n1)}; break;
    default: mors[pick(rng, n1)].cod = ObjId{pick(rng, n0)}; break;
  }
  return FinCategory(labels, mors, ids, table);
}

FinCategory random_raw(Rng& rng, std::size_t max_mor) {
  const std::size_t n0 = 1 + pick(rng, 3);
  const std::size_t n1 = n0 + pick(rng, max_mor - n0 + 1);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n0; ++x) labels.push_back(fmt::format("x{}", x));
  std::vector<MorphismData> mors;
  std::vector<MorId> ids;
  for (std::size_t x = 0; x < n0; ++x) {
    mors.push_back({fmt::format("1_{}", x), ObjId{x}, ObjId{x}});
    ids.push_back(MorId{x});
  }
  for (std::size_t f = n0; f < n1; ++f)
    mors.push_back({fmt::format("m{}", f), ObjId{pick(rng, n0)}, ObjId{pick(rng, n0)}});
  std::vector<std::optional<MorId>> table(n1 * n1);
  for (std::size_t g = 0; g < n1; ++g)
    for (std::size_t f = 0; f < n1; ++f) {
      if (mors[f].cod != mors[g].dom) continue;
      if (g == ids[mors[f].cod.value].value) {
        table[g * n1 + f] = MorId{f};
      } else if (f == ids[mors[g].dom.value].value) {
        table[g * n1 + f] = MorId{g};
      } else {
        std::vector<std::size_t> typed;
        for (std::size_t h = 0; h < n1; ++h)
          if (mors[h].dom == mors[f].dom && mors[h].cod == mors[g].cod) typed.push_back(h);
        table[g * n1 + f] = MorId{typed.empty() ? pick(rng, n1) : typed[pick(rng, typed.size())]};
      }
    }
  return FinCategory(labels, mors, ids, table);
}

CriterionResult criterion_axioms(const Corpus& corpus, const SuiteOptions& opt) {
  Rng rng(opt.seed);
  Tally agree{"cat-core", "validate_category-matches-oracle"};
  std::size_t valid = 0;
  for (std::size_t i = 0; i < opt.random_tables; ++i) {
    FinCategory c;
    switch (i % 4) {
      case 0: c = random_valid(rng, opt.table_morphisms); break;
      case 3: c = random_raw(rng, opt.table_morphisms); break;
      default: c = perturbed(random_valid(rng, opt.table_morphisms), rng); break;
    }
    bool expected = oracle::category_axioms_hold(c);
    bool got = validate_category(c).ok();
    valid += expected ? 1 : 0;
    agree.record(expected == got, [&] {
      return json{{"table", i}, {"oracle", expected}, {"library", got},
                  {"morphisms", c.morphism_count()}};
    });
  }
  Tally fixtures{"cat-core", "corpus-categories-valid"};
  for (const auto& [name, c] : corpus.categories())
    fixtures.record(validate_category(*c).ok() && oracle::category_axioms_hold(*c),
                    [&, n = name] { return json(n); });
  return {1, "category axioms against a brute-force oracle",
          {agree.verdict(), fixtures.verdict()},
          fmt::format("{} random tables ({} valid, {} invalid), {} disagreements", opt.random_tables, valid,
                      opt.random_tables - valid, agree.failures)};
}

// --- 2: mono / epi / iso -----------------------------------------------------------------

CriterionResult criterion_classes(const Corpus& corpus) {
  Tally chain{"cat-core", "chain-non-identities-mono-epi-not-iso"};
  Tally chain_id{"cat-core", "chain-identities-iso"};
  for (const char* name : {"chain-2.cat", "chain-3.cat"}) {
    auto c = corpus.category(name);
    for (MorId f : c->morphisms()) {
      auto k = classify_morphism(*c, f);
      bool is_id = c->identity(c->dom(f)) == f;
      if (is_id)
        chain_id.record(k.is_iso, [&] { return json{{"category", name}, {"morphism", f.value}}; });
      else
        chain.record(k.is_mono && k.is_epi && !k.is_iso,
                     [&] { return json{{"category", name}, {"morphism", f.value}}; });
    }
  }
  Tally perm{"cat-core", "permutation-categories-all-iso"};
  std::vector<std::pair<std::string, CategoryRef>> perms = {{"s3-monoid.cat", corpus.category("s3-monoid.cat")},
                                                            {"z2-monoid.cat", corpus.category("z2-monoid.cat")},
                                                            {"iso-pair.cat", corpus.category("iso-pair.cat")}};
  for (const auto& [name, g] : corpus.all<FinGroup>(BundleKind::Group))
    perms.emplace_back(name, share(monoid_category(g.as_monoid())));
  for (const auto& [name, c] : perms)
    for (MorId f : c->morphisms()) {
      auto k = classify_morphism(*c, f);
      perm.record(k.is_iso && k.is_mono && k.is_epi && k.inverse.has_value(),
                  [&, n = name] { return json{{"category", n}, {"morphism", f.value}}; });
    }
  Tally fin{"cat-core", "finset-skeleton-classes-match-oracle"};
  for (std::size_t n : {2, 3}) {
    auto name = fmt::format("finset-{}.cat", n);
    auto s = finset_skeleton(n);
    auto c = corpus.category(name);
    fin.record(*c == *s.category, [&] { return json{{"category", name}, {"error", "not the skeleton"}}; });
    if (!(*c == *s.category)) continue;
    for (MorId f : c->morphisms()) {
      auto k = classify_morphism(*c, f);
      auto o = oracle::function_kind(s.function(f));
      fin.record(k.is_mono == o.injective && k.is_epi == o.surjective &&
                     k.is_iso == (o.injective && o.surjective),
                 [&] {
                   return json{{"category", name}, {"function", table_json(s.function(f))},
                               {"mono", k.is_mono}, {"epi", k.is_epi}, {"iso", k.is_iso}};
                 });
    }
  }
  return {2, "mono, epi and iso classification",
          {chain.verdict(), chain_id.verdict(), perm.verdict(), fin.verdict()},
          fmt::format("{} chain arrows, {} permutation arrows, {} skeleton functions", chain.instances + chain_id.instances,
                      perm.instances, fin.instances)};
}

// --- 3: limits and colimits ------------------------------------------------------------------

struct Shape {
  std::size_t vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

std::vector<Shape> all_shapes(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<Shape> out;
  for (std::size_t v = 1; v <= max_vertices; ++v) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = 0; b < v; ++b) slots.emplace_back(a, b);
    // nondecreasing slot sequences of length <= max_edges
    std::vector<std::size_t> seq;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      Shape s{v, {}};
      for (auto i : seq) s.edges.push_back(slots[i]);
      out.push_back(std::move(s));
      if (seq.size() == max_edges) return;
      for (std::size_t i = from; i < slots.size(); ++i) {
        seq.push_back(i);
        grow(i);
        seq.pop_back();
      }
    };
    grow(0);
  }
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// The space of diagrams: shapes × carrier sizes × edge functions, enumerated
// in a fixed order and decoded from a global index.
class DiagramSpace {
 public:
  DiagramSpace(std::size_t max_vertices, std::size_t max_edges, std::size_t max_carrier)
      : shapes_(all_shapes(max_vertices, max_edges)), max_carrier_(max_carrier) {
    for (std::size_t s = 0; s < shapes_.size(); ++s) {
      const std::size_t v = shapes_[s].vertices;
      for (std::uint64_t code = 0; code < ipow(max_carrier + 1, v); ++code) {
        auto sizes = carriers(v, code);
        std::uint64_t count = 1;
        for (const auto& [a, b] : shapes_[s].edges) count *= ipow(sizes[b], sizes[a]);
        if (count == 0) continue;
        blocks_.push_back({s, code, total_, count});
        total_ += count;
      }
    }
  }

  std::uint64_t size() const { return total_; }

  Diagram at(std::uint64_t index) const {
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                               [](std::uint64_t i, const Block& b) { return i < b.start; });
    const Block& blk = *std::prev(it);
    const Shape& shape = shapes_[blk.shape];
    auto sizes = carriers(shape.vertices, blk.carriers);
    Diagram d;
    for (auto n : sizes) d.vertices.push_back({n, {}});
    std::uint64_t rest = index - blk.start;
    for (std::size_t e = 0; e < shape.edges.size(); ++e) {
      auto [a, b] = shape.edges[e];
      std::vector<std::size_t> table(sizes[a]);
      for (auto& t : table) {
        t = static_cast<std::size_t>(rest % sizes[b]);
        rest /= sizes[b];
      }
      d.edges.push_back({fmt::format("e{}", e), a, b, FinFunction(sizes[a], sizes[b], table)});
    }
    return d;
  }

 private:
  struct Block {
    std::size_t shape;
    std::uint64_t carriers;
    std::uint64_t start;
    std::uint64_t count;
  };

  std::vector<std::size_t> carriers(std::size_t v, std::uint64_t code) const {
    std::vector<std::size_t> s(v);
    for (auto& n : s) {
      n = static_cast<std::size_t>(code % (max_carrier_ + 1));
      code /= max_carrier_ + 1;
    }
    return s;
  }

  std::vector<Shape> shapes_;
  std::size_t max_carrier_;
  std::vector<Block> blocks_;
  std::uint64_t total_ = 0;
};

bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

json diagram_json(const Diagram& d) {
  json v = json::array(), e = json::array();
  for (const auto& s : d.vertices) v.push_back(s.size);
  for (const auto& x : d.edges) e.push_back({{"src", x.src}, {"tgt", x.tgt}, {"table", x.fun.table()}});
  return {{"vertices", v}, {"edges", e}};
}

struct LimitTallies {
  Tally lim_universal{"finset", "limit-universal"};
  Tally lim_count{"finset", "limit-size-matches-oracle"};
  Tally colim_universal{"finset", "colimit-universal"};
  Tally colim_classes{"finset", "colimit-classes-match-union-find"};

  void check(const Diagram& d) {
    auto l = limit(d);
    lim_count.record(l.cone.apex == oracle::limit_size(d), [&] { return diagram_json(d); });
    bool uni = false;
    try {
      uni = check_universal(d, l.cone).universal;
    } catch (const Error&) {
    }
    lim_universal.record(uni, [&] { return diagram_json(d); });
    auto c = colimit(d);
    auto expected = oracle::colimit_partition(d);
    std::size_t classes = std::set<std::size_t>(expected.begin(), expected.end()).size();
    colim_classes.record(same_partition(c.class_of, expected) && c.cocone.apex == classes,
                         [&] { return diagram_json(d); });
    uni = false;
    try {
      uni = check_universal(d, c.cocone).universal;
    } catch (const Error&) {
    }
    colim_universal.record(uni, [&] { return diagram_json(d); });
  }
};

CriterionResult criterion_limits(const Corpus& corpus, const SuiteOptions& opt) {
  DiagramSpace space(3, 3, 3);
  const std::uint64_t n = space.size();
  const std::uint64_t take = std::min<std::uint64_t>(n, opt.diagram_cap);
  LimitTallies t;
  for (std::uint64_t k = 0; k < take; ++k) t.check(space.at(k * n / take));
  for (const auto& [name, d] : corpus.all<Diagram>(BundleKind::Diagram)) t.check(d);

  Tally product{"finset", "product-size"};
  Tally coproduct{"finset", "coproduct-size"};
  for (std::size_t x = 0; x <= 3; ++x)
    for (std::size_t y = 0; y <= 3; ++y) {
      product.record(limit(product_diagram(x, y)).cone.apex == x * y, [&] { return json{x, y}; });
      coproduct.record(colimit(coproduct_diagram(x, y)).cocone.apex == x + y, [&] { return json{x, y}; });
    }
  Tally pull{"finset", "pullback-size-matches-count"};
  Tally coeq{"finset", "coequalizer-matches-union-find"};
  for (std::size_t z = 0; z <= 3; ++z)
    for (std::size_t x = 0; x <= 3; ++x)
      for_each_function(x, z, [&](const FinFunction& f) {
        for (std::size_t y = 0; y <= 3; ++y)
          for_each_function(y, z, [&](const FinFunction& g) {
            pull.record(pullback(f, g).cone.apex == oracle::pullback_size(f, g),
                        [&] { return json{{"f", f.table()}, {"g", g.table()}, {"cod", z}}; });
            if (x == y) {
              auto d = parallel_diagram(f, g);
              auto expected = oracle::colimit_partition(d);
              auto c = colimit(d);
              std::size_t classes = std::set<std::size_t>(expected.begin(), expected.end()).size();
              coeq.record(same_partition(c.class_of, expected) && c.cocone.apex == classes,
                          [&] { return json{{"f", f.table()}, {"g", g.table()}}; });
            }
          });
      });
  return {3, "limits and colimits of small diagrams",
          {t.lim_universal.verdict(), t.lim_count.verdict(), t.colim_universal.verdict(),
           t.colim_classes.verdict(), product.verdict(), coproduct.verdict(), pull.verdict(), coeq.verdict()},
          fmt::format("{} of {} generated diagrams plus {} fixtures, {} pullbacks, {} coequalizers", take, n,
                      t.lim_count.instances - take, pull.instances, coeq.instances)};
}

// --- 4: Yoneda ---------------------------------------------------------------------------------

// Every set-valued functor on c with object values <= max_value.
std::vector<SetValuedFunctor> all_set_functors(const CategoryRef& c, Variance variance, std::size_t max_value) {
  const std::size_t n0 = c->object_count(), n1 = c->morphism_count();
  const bool co = variance == Variance::Covariant;
  // composition constraints (g, h, g∘h) checked once all three are assigned
  std::vector<std::vector<std::array<std::size_t, 3>>> due(n1);
  for (std::size_t g = 0; g < n1; ++g)
    for (std::size_t h = 0; h < n1; ++h)
      if (auto gh = c->compose(MorId{g}, MorId{h})) due[std::max({g, h, gh->value})].push_back({g, h, gh->value});
  std::vector<bool> is_identity(n1, false);
  for (std::size_t x = 0; x < n0; ++x) is_identity[c->identity(ObjId{x}).value] = true;

  std::vector<SetValuedFunctor> out;
  std::vector<std::size_t> values(n0, 0);
  while (true) {
    SetValuedFunctor f{c, variance, values, std::vector<FinFunction>(n1)};
    std::function<void(std::size_t)> assign = [&](std::size_t m) {
      if (m == n1) {
        out.push_back(f);
        return;
      }
      const auto& data = c->morphism(MorId{m});
      std::size_t from = values[(co ? data.dom : data.cod).value];
      std::size_t to = values[(co ? data.cod : data.dom).value];
      auto consistent = [&] {
        for (const auto& [g, h, gh] : due[m]) {
          const auto& first = f.mor_val[co ? h : g];
          const auto& second = f.mor_val[co ? g : h];
          if (compose(second, first) != f.mor_val[gh]) return false;
        }
        return true;
      };
      if (is_identity[m]) {
        f.mor_val[m] = identity_function(from);
        if (consistent()) assign(m + 1);
        return;
      }
      for_each_function(from, to, [&](const FinFunction& fn) {
        f.mor_val[m] = fn;
        if (consistent()) assign(m + 1);
      });
    };
    assign(0);
    std::size_t i = 0;
    while (i < n0 && ++values[i] > max_value) values[i++] = 0;
    if (i == n0) break;
  }
  return out;
}

CriterionResult criterion_yoneda(const Corpus& corpus) {
  Tally laws{"yoneda", "enumerated-functors-satisfy-laws"};
  Tally count{"yoneda", "nat-count-equals-value"};
  Tally inverse{"yoneda", "theta-mutually-inverse-and-natural"};
  Tally embed{"yoneda", "embedding-injective-and-bijective-on-homs"};
  std::size_t categories = 0, functors = 0;
  for (const auto& [name, c] : corpus.categories()) {
    bool small = c->object_count() <= 3 && c->morphism_count() <= 8;
    if (small) {
      ++categories;
      for (auto variance : {Variance::Covariant, Variance::Contravariant}) {
        for (const auto& f : all_set_functors(c, variance, 2)) {
          ++functors;
          laws.record(oracle::set_functor_laws_hold(f) && validate_set_functor(f).ok(),
                      [&, n = name] { return json{{"category", n}, {"values", f.obj_val}}; });
          for (ObjId a : c->objects()) {
            auto r = yoneda_bijection(f, a);
            auto witness = [&, n = name] {
              return json{{"category", n}, {"variance", variance == Variance::Covariant ? "co" : "contra"},
                          {"values", f.obj_val}, {"object", a.value}};
            };
            count.record(r.transformations.size() == f(a) && r.value_size == f(a), witness);
            inverse.record(r.ok(), witness);
          }
        }
      }
    }
    bool ok = false;
    try {
      ok = yoneda_embedding(c).ok();
    } catch (const Error&) {
    }
    embed.record(ok, [&, n = name] { return json(n); });
  }
  return {4, "Yoneda bijection and embedding",
          {laws.verdict(), count.verdict(), inverse.verdict(), embed.verdict()},
          fmt::format("{} categories, {} functors, {} (functor, object) pairs, {} embeddings", categories, functors,
                      count.instances, embed.instances)};
}

// --- 5: adjunctions ------------------------------------------------------------------------------

AdjunctionData with_component(const AdjunctionData& a, bool unit, ObjId x, MorId m) {
  AdjunctionData out = a;
  const NatTrans& t = unit ? a.unit : a.counit;
  auto comps = t.components();
  comps[x.value] = m;
  (unit ? out.unit : out.counit) = NatTrans(t.from(), t.to(), std::move(comps));
  return out;
}

CriterionResult criterion_adjunctions(const Corpus& corpus, const SuiteOptions& opt) {
  Tally tri{"adjunction", "triangles-hold"};
  Tally bij{"adjunction", "hom-bijection-natural"};
  auto both = [&](const std::string& name, const AdjunctionData& a) {
    tri.record(check_triangles(a).ok(), [&] { return json(name); });
    bij.record(verify_hom_bijection(a).ok(), [&] { return json(name); });
  };
  for (const auto& [name, a] : corpus.all<AdjunctionData>(BundleKind::Adjunction)) both(name, a);
  for (const auto& [name, c] : corpus.categories()) both("identity on " + name, identity_adjunction(c));

  Tally galois{"adjunction", "galois-condition"};
  Tally meets{"adjunction", "right-adjoint-preserves-meets"};
  for (const auto& [name, gc] : corpus.all<GaloisConnection>(BundleKind::Galois)) {
    galois.record(check_galois(gc), [&, n = name] { return json(n); });
    both(name, galois_to_adjunction(gc));
    bool ok = false;
    try {
      require_meet_lattice(gc.p);
      require_meet_lattice(gc.q);
      ok = check_right_adjoint_preserves_meets(gc);
    } catch (const Error&) {
    }
    meets.record(ok, [&, n = name] { return json(n); });
  }

  Tally curry{"adjunction", "currying-triangles-and-bijection"};
  for (std::size_t x = 0; x <= 2; ++x) {
    auto a = currying_adjunction(x);
    curry.record(check_set_triangles(a, 3, 2).ok() && verify_set_hom_bijection(a, 3, 2).ok(),
                 [&] { return json{{"x", x}}; });
  }

  // single-component mutations of non-thin identity adjunctions
  struct Base {
    std::string name;
    CategoryRef c;
    ObjId at;
  };
  std::vector<Base> bases = {{"finset-2.cat", corpus.category("finset-2.cat"), ObjId{2}},
                             {"Z/3", share(monoid_category(cyclic_monoid(3))), ObjId{0}},
                             {"s3-monoid.cat", corpus.category("s3-monoid.cat"), ObjId{0}},
                             {"boolean 2x2 matrices", share(monoid_category(boolean_matrix_monoid())), ObjId{0}}};
  Tally mut_tri{"adjunction", "mutation-fails-triangles-at-mutated-object"};
  Tally mut_bij{"adjunction", "mutation-fails-hom-bijection"};
  for (const auto& b : bases) {
    auto a = identity_adjunction(b.c);
    for (bool unit : {true, false})
      for (MorId e : hom_set(*b.c, b.at, b.at)) {
        if (e == b.c->identity(b.at) || mut_tri.instances >= opt.adjunction_mutations) continue;
        auto m = with_component(a, unit, b.at, e);
        auto r = check_triangles(m);
        bool localized = std::count(r.left_failures.begin(), r.left_failures.end(), b.at) +
                             std::count(r.right_failures.begin(), r.right_failures.end(), b.at) >
                         0;
        auto witness = [&] {
          return json{{"base", b.name}, {"component", unit ? "unit" : "counit"}, {"object", b.at.value},
                      {"replacement", e.value}, {"left_failures", ids_json(r.left_failures)},
                      {"right_failures", ids_json(r.right_failures)}};
        };
        mut_tri.record(!r.ok() && localized, witness);
        mut_bij.record(!verify_hom_bijection(m).ok(), witness);
      }
  }
  Tally mut_count{"adjunction", "mutation-count"};
  mut_count.record(mut_tri.instances == opt.adjunction_mutations,
                   [&] { return json{{"generated", mut_tri.instances}}; });
  return {5, "adjunctions: triangles and hom-set bijection",
          {tri.verdict(), bij.verdict(), galois.verdict(), meets.verdict(), curry.verdict(), mut_tri.verdict(),
           mut_bij.verdict(), mut_count.verdict()},
          fmt::format("{} adjunctions pass, {} mutations rejected by both checks", tri.instances,
                      mut_tri.instances - std::max(mut_tri.failures, mut_bij.failures))};
}

// --- 6: free monoid -----------------------------------------------------------------------------

FiniteMonoid max_monoid(std::size_t n) {
  FiniteMonoid m{n, std::vector<std::size_t>(n * n), 0, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.mult[a * n + b] = std::max(a, b);
  return m;
}

CriterionResult criterion_free_monoid(const SuiteOptions& opt) {
  std::vector<std::pair<std::string, FiniteMonoid>> monoids;
  for (std::size_t n = 1; n <= 6; ++n) monoids.emplace_back(fmt::format("Z/{}", n), cyclic_monoid(n));
  monoids.emplace_back("absorbing", absorbing_monoid());
  monoids.emplace_back("max on 3", max_monoid(3));
  monoids.emplace_back("S3", symmetric_group(3).as_monoid());
  Tally t{"adjunction", "free-monoid-universal-property"};
  std::size_t pairs = 0;
  for (std::size_t alphabet = 1; alphabet <= 2; ++alphabet)
    for (const auto& [name, m] : monoids)
      for_each_function(alphabet, m.size, [&](const FinFunction& f) {
        auto r = verify_free_monoid_adjunction(alphabet, m, f.table(), opt.free_monoid_bound);
        pairs += r.pairs;
        t.record(r.ok(), [&, n = name] {
          return json{{"monoid", n}, {"alphabet", alphabet}, {"f", f.table()}, {"homomorphisms", r.homomorphisms}};
        });
      });
  return {6, "free monoid universal property", {t.verdict()},
          fmt::format("{} (alphabet, monoid, map) instances, {} word pairs, bound {}", t.instances, pairs,
                      opt.free_monoid_bound)};
}

// --- 7: monads --------------------------------------------------------------------------------------

CriterionResult criterion_monads(const Corpus& corpus, const SuiteOptions& opt) {
  Tally exhaustive{"monoidal-monad", "powerset-laws-exhaustive"};
  auto p = powerset_monad();
  auto r = check_set_monad(p, 2, 2);
  exhaustive.record(r.ok(), [] { return json("powerset up to size 2"); });
  const std::size_t top_level = p.t(p.t(p.t(2)));

  Tally sampled{"monoidal-monad", "powerset-associativity-sampled"};
  auto s = sample_powerset_associativity(3, opt.monad_samples, opt.seed);
  sampled.instances = s.samples;
  sampled.failures = s.failures;
  if (s.first_failure) sampled.first = *s.first_failure;

  Tally induced{"monoidal-monad", "adjunction-induced-monad"};
  Tally coinduced{"monoidal-monad", "adjunction-induced-comonad"};
  auto both = [&](const std::string& name, const AdjunctionData& a) {
    induced.record(check_monad(monad_from_adjunction(a)).ok(), [&] { return json(name); });
    coinduced.record(check_comonad(comonad_from_adjunction(a)).ok(), [&] { return json(name); });
  };
  for (const auto& [name, a] : corpus.all<AdjunctionData>(BundleKind::Adjunction)) both(name, a);
  for (const auto& [name, gc] : corpus.all<GaloisConnection>(BundleKind::Galois))
    both(name, galois_to_adjunction(gc));
  for (const auto& [name, c] : corpus.categories()) both("identity on " + name, identity_adjunction(c));
  for (std::size_t x = 0; x <= 2; ++x) {
    auto a = currying_adjunction(x);
    auto name = fmt::format("currying X={}", x);
    induced.record(check_set_monad(monad_from_adjunction(a), 2, 1).ok(), [&] { return json(name); });
    coinduced.record(check_set_comonad(comonad_from_adjunction(a), 2, 1).ok(), [&] { return json(name); });
  }
  Tally fixtures{"monoidal-monad", "monad-fixtures"};
  for (const auto& [name, m] : corpus.all<MonadData>(BundleKind::Monad))
    fixtures.record(check_monad(m).ok(), [&, n = name] { return json(n); });
  return {7, "monad and comonad laws",
          {exhaustive.verdict(), sampled.verdict(), induced.verdict(), coinduced.verdict(), fixtures.verdict()},
          fmt::format("power set exhaustive to |A|=2 (top level {} elements), {} samples at |A|=3, {} induced monads",
                      top_level, s.samples, induced.instances)};
}

// --- 8: coherence -----------------------------------------------------------------------------------

CriterionResult criterion_coherence() {
  std::vector<Verdict> out;
  std::size_t instances = 0;
  auto add = [&](const std::string& name, const CoherenceReport& r) {
    instances += r.pentagon_instances + r.triangle_instances;
    Verdict v{"monoidal-monad", name + "-pentagon-triangle", r.ok(),
              r.pentagon_instances + r.triangle_instances + r.iso_instances, nullptr};
    if (!r.ok())
      v.counterexample = {{"pentagon", r.pentagon_failures}, {"triangle", r.triangle_failures},
                          {"iso", r.iso_failures}};
    out.push_back(std::move(v));
  };
  const std::vector<std::size_t> sizes = {0, 1, 2, 3};
  add("cartesian", check_coherence_instances(cartesian_structure(), sizes));
  add("cocartesian", check_coherence_instances(cocartesian_structure(), sizes));
  for (std::uint64_t p : {2, 3, 5})
    add(fmt::format("finvect-gf{}", p), check_coherence_instances(finvect_structure(p), std::vector<std::size_t>{1, 2, 3}));
  return {8, "monoidal coherence", out, fmt::format("{} pentagon and triangle instances", instances)};
}

// --- 9: Hopf ------------------------------------------------------------------------------------------

ModMatrix inverse_permutation_oracle(const FinGroup& g, std::uint64_t p) {
  ModMatrix m(g.order(), g.order(), p);
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (g.table()[a * g.order() + b] == g.identity()) m.set(b, a, 1);
  return m;
}

json failed_diagrams(const DiagramReport& r) {
  json j = json::array();
  for (const auto& d : r.diagrams)
    if (!d.passed) j.push_back(d.name);
  return j;
}

CriterionResult criterion_hopf(const Corpus& corpus) {
  Tally group{"finvect-hopf", "group-algebra-hopf"};
  Tally function{"finvect-hopf", "function-algebra-hopf"};
  Tally solved{"finvect-hopf", "solved-antipode-is-inversion"};
  Tally natural{"finvect-hopf", "antipode-natural-for-sign"};
  std::vector<std::pair<std::string, FinGroup>> groups;
  for (const char* name : {"z2-group.grp", "z3-group.grp", "s3-group.grp"})
    groups.emplace_back(name, std::get<FinGroup>(corpus.get(name, BundleKind::Group).payload));
  for (const auto& [name, g] : groups)
    for (std::uint64_t p : {2, 3, 5}) {
      auto w = [&, n = name](const DiagramReport& r) { return json{{"group", n}, {"p", p}, {"failed", failed_diagrams(r)}}; };
      auto h = group_algebra(g, p);
      auto rg = check_hopf(h);
      group.record(rg.ok(), [&] { return w(rg); });
      auto rf = check_hopf(function_hopf(g, p));
      function.record(rf.ok(), [&] { return w(rf); });
      auto sol = solve_antipode(h.bimonoid);
      solved.record(sol.antipode && *sol.antipode == inverse_permutation_oracle(g, p) && sol.nullity == 0,
                    [&, n = name] { return json{{"group", n}, {"p", p}, {"nullity", sol.nullity}}; });
    }
  const auto& s3 = std::get<FinGroup>(corpus.get("s3-group.grp", BundleKind::Group).payload);
  const auto& z2 = std::get<FinGroup>(corpus.get("z2-group.grp", BundleKind::Group).payload);
  for (std::uint64_t p : {2, 3, 5}) {
    auto f = group_algebra_map(s3, z2, sign_map(3), p);
    natural.record(check_antipode_naturality(group_algebra(s3, p), group_algebra(z2, p), f),
                   [&] { return json{{"p", p}}; });
  }
  Tally no_antipode{"finvect-hopf", "monoid-algebra-has-no-antipode"};
  Tally fixtures{"finvect-hopf", "algebra-fixtures"};
  for (const auto& [name, a] : corpus.all<AlgebraPayload>(BundleKind::Algebra)) {
    if (a.antipode) {
      auto r = check_hopf(a.hopf());
      fixtures.record(r.ok(), [&, n = name] { return json{{"fixture", n}, {"failed", failed_diagrams(r)}}; });
    } else if (a.has_algebra() && a.has_coalgebra() && name.rfind("k-", 0) == 0) {
      // a monoid algebra without a stored antipode: it is a bimonoid, and none exists
      auto sol = solve_antipode(a.bimonoid());
      no_antipode.record(check_bimonoid(a.bimonoid()).ok() && !sol.antipode, [&, n = name] { return json(n); });
    } else {
      bool ok = (!a.has_algebra() || check_algebra(a.algebra()).ok()) &&
                (!a.has_coalgebra() || check_coalgebra(a.coalgebra()).ok());
      fixtures.record(ok, [&, n = name] { return json(n); });
    }
  }
  return {9, "group and function Hopf algebras",
          {group.verdict(), function.verdict(), solved.verdict(), natural.verdict(), no_antipode.verdict(),
           fixtures.verdict()},
          fmt::format("{} (group, p) pairs, {} algebra fixtures, {} fixtures without antipode", group.instances,
                      fixtures.instances, no_antipode.instances)};
}

// --- 10: interchange ---------------------------------------------------------------------------------

CriterionResult criterion_interchange(const Corpus& corpus, const SuiteOptions& opt) {
  const std::vector<std::string> names = {"chain-2.cat", "chain-3.cat", "z2-monoid.cat",
                                          "parallel-pair.cat", "span.cat", "iso-pair.cat"};
  std::vector<CategoryRef> cats;
  for (const auto& n : names) cats.push_back(corpus.category(n));
  std::map<std::pair<std::size_t, std::size_t>, FunctorCategory> fc;
  auto functor_cat = [&](std::size_t k, std::size_t l) -> const FunctorCategory& {
    auto it = fc.find({k, l});
    if (it == fc.end()) it = fc.emplace(std::make_pair(k, l), functor_category(cats[k], cats[l])).first;
    return it->second;
  };
  Rng rng(opt.seed);
  // α then β, composable, drawn from one functor category
  auto pair_of = [&](const FunctorCategory& f) {
    const auto& c = *f.category;
    MorId a{pick(rng, c.morphism_count())};
    std::vector<MorId> next;
    for (ObjId y : c.objects()) {
      auto h = hom_set(c, c.cod(a), y);
      next.insert(next.end(), h.begin(), h.end());
    }
    MorId b = next[pick(rng, next.size())];
    return std::make_pair(f.transformations[a.value], f.transformations[b.value]);
  };
  Tally law{"functor-nat", "interchange"};
  Tally oracle_law{"functor-nat", "interchange-oracle"};
  Tally horizontal{"functor-nat", "horizontal-composite-matches-oracle"};
  for (std::size_t i = 0; i < opt.interchange_quadruples; ++i) {
    std::size_t k = pick(rng, cats.size()), l = pick(rng, cats.size()), m = pick(rng, cats.size());
    auto [alpha, beta] = pair_of(functor_cat(k, l));
    auto [gamma, delta] = pair_of(functor_cat(l, m));
    auto witness = [&] {
      return json{{"K", names[k]}, {"L", names[l]}, {"M", names[m]}, {"quadruple", i}};
    };
    law.record(check_interchange(delta, gamma, beta, alpha), witness);
    NatTrans db = NatTrans(alpha.from(), beta.to(), oracle::vertical_components(beta, alpha));
    NatTrans dg = NatTrans(gamma.from(), delta.to(), oracle::vertical_components(delta, gamma));
    auto lhs = oracle::horizontal_components(dg, db);
    auto top = NatTrans(compose(gamma.from(), alpha.from()), compose(gamma.to(), alpha.to()),
                        oracle::horizontal_components(gamma, alpha));
    auto bottom = NatTrans(compose(delta.from(), beta.from()), compose(delta.to(), beta.to()),
                           oracle::horizontal_components(delta, beta));
    oracle_law.record(lhs == oracle::vertical_components(bottom, top), witness);
    horizontal.record(horizontal_compose(gamma, alpha).components() == top.components(), witness);
  }
  return {10, "interchange law on random quadruples", {law.verdict(), oracle_law.verdict(), horizontal.verdict()},
          fmt::format("{} quadruples over {} functor categories, {} failures", law.instances, fc.size(),
                      law.failures + oracle_law.failures + horizontal.failures)};
}

std::string title_of(int id) {
  static const char* titles[] = {"",
                                 "category axioms against a brute-force oracle",
                                 "mono, epi and iso classification",
                                 "limits and colimits of small diagrams",
                                 "Yoneda bijection and embedding",
                                 "adjunctions: triangles and hom-set bijection",
                                 "free monoid universal property",
                                 "monad and comonad laws",
                                 "monoidal coherence",
                                 "group and function Hopf algebras",
                                 "interchange law on random quadruples",
                                 "byte-identical corpus reports"};
  return titles[id];
}

}  // namespace

CriterionResult run_criterion(int id, const Corpus& corpus, const SuiteOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = criterion_axioms(corpus, opt); break;
      case 2: r = criterion_classes(corpus); break;
      case 3: r = criterion_limits(corpus, opt); break;
      case 4: r = criterion_yoneda(corpus); break;
      case 5: r = criterion_adjunctions(corpus, opt); break;
      case 6: r = criterion_free_monoid(opt); break;
      case 7: r = criterion_monads(corpus, opt); break;
      case 8: r = criterion_coherence(); break;
      case 9: r = criterion_hopf(corpus); break;
      case 10: r = criterion_interchange(corpus, opt); break;
      default: throw Error(ErrorKind::MalformedInput, fmt::format("no criterion {}", id));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedInput && (id < 1 || id > 10)) throw;
    r = {id, title_of(id), {{"suite", "criterion-completed", false, 0, json(e.what())}}, e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report corpus_report(const Corpus& corpus, const SuiteOptions& opt, bool timing,
                     std::vector<CriterionResult>* results) {
  Report rep("corpus");
  rep.enable_timing(timing);
  for (const auto& [name, text] : corpus.texts) rep.add_input(name, text);
  rep.set_seed(opt.seed);
  rep.set_budget("random_tables", opt.random_tables);
  rep.set_budget("table_morphisms", opt.table_morphisms);
  rep.set_budget("diagram_cap", opt.diagram_cap);
  rep.set_budget("monad_samples", opt.monad_samples);
  rep.set_budget("interchange_quadruples", opt.interchange_quadruples);
  rep.set_budget("free_monoid_bound", opt.free_monoid_bound);
  rep.set_budget("adjunction_mutations", opt.adjunction_mutations);
  json criteria = json::array();
  for (int id = 1; id <= 10; ++id) {
    auto r = run_criterion(id, corpus, opt);
    json laws = json::array();
    for (const auto& v : r.verdicts) laws.push_back(v.law);
    criteria.push_back({{"id", id}, {"title", r.title}, {"passed", r.passed()}, {"summary", r.summary},
                        {"laws", laws}});
    rep.add_verdicts(r.verdicts);
    rep.set_timing(fmt::format("criterion-{}", id), r.seconds);
    if (results) results->push_back(std::move(r));
  }
  rep.result()["criteria"] = std::move(criteria);
  return rep;
}

std::vector<CriterionResult> run_corpus_suite(const fs::path& dir, const SuiteOptions& opt,
                                              std::string* report_text) {
  std::vector<CriterionResult> results;
  auto first = corpus_report(prepare_corpus(dir), opt, false, &results);
  auto start = std::chrono::steady_clock::now();
  auto second = corpus_report(load_corpus(dir), opt, false);
  auto a = first.dump(), b = second.dump();
  std::size_t at = 0;
  while (at < std::min(a.size(), b.size()) && a[at] == b[at]) ++at;
  Verdict v{"cli-harness", "report-byte-identical", a == b, 2, nullptr};
  if (a != b) v.counterexample = {{"first_difference", at}};
  CriterionResult r{11, title_of(11), {v}, fmt::format("two reports of {} bytes, {}", a.size(), a == b ? "identical" : "different")};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  results.push_back(std::move(r));
  if (report_text) *report_text = std::move(a);
  return results;
}

}  // namespace fincat::suite
