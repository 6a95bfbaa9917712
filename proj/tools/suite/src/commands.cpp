#include "fincat/suite/commands.hpp"

#include <fmt/format.h>

#include <cstdlib>
#include <map>
#include <set>

#include "fincat/adjunction.hpp"
#include "fincat/error.hpp"
#include "fincat/hopf.hpp"
#include "fincat/io.hpp"
#include "fincat/monad.hpp"
#include "fincat/monoidal.hpp"
#include "fincat/suite/oracles.hpp"

namespace fincat::suite {

namespace fs = std::filesystem;

namespace {

Verdict verdict(std::string module, std::string law, bool ok, std::uint64_t instances, json cex = nullptr) {
  return {std::move(module), std::move(law), ok, instances, ok ? json(nullptr) : std::move(cex)};
}

// Parses a required input and records its digest.
Bundle load(Report& rep, const std::string& flag, const std::string& path, BundleKind kind, bool validate = true) {
  if (path.empty())
    throw Error(ErrorKind::MalformedInput, fmt::format("--{} <file> is required", flag));
  std::string text = read_file(path);
  rep.add_input(path, text);
  Bundle b = parse_bundle_text(text, fs::path(path).parent_path(), validate, path);
  if (b.kind != kind)
    throw Error(ErrorKind::SchemaMismatch,
                fmt::format("{}: expected a {} bundle, got {}", path, to_string(kind), to_string(b.kind)));
  return b;
}

// One verdict per law of a validation report; `laws` lists the laws checked.
void add_report(Report& rep, const std::string& module, const ValidationReport& r,
                const std::vector<std::string>& laws, std::uint64_t instances) {
  std::set<std::string> named(laws.begin(), laws.end());
  for (const auto& law : laws) {
    auto vs = r.of_law(law);
    json cex = nullptr;
    if (!vs.empty())
      cex = {{"violations", vs.size()}, {"witness", vs.front().witness}, {"message", vs.front().message}};
    rep.add_verdict(verdict(module, law, vs.empty(), instances, cex));
  }
  // laws the caller did not anticipate still surface
  std::map<std::string, std::vector<Violation>> other;
  for (const auto& v : r.violations)
    if (!named.count(v.law)) other[v.law].push_back(v);
  for (const auto& [law, vs] : other)
    rep.add_verdict(verdict(module, law, false, instances,
                            {{"violations", vs.size()}, {"witness", vs.front().witness}, {"message", vs.front().message}}));
}

json functions_json(const std::vector<FinFunction>& fs) {
  json j = json::array();
  for (const auto& f : fs) j.push_back(f.table());
  return j;
}

json ids_json(const std::vector<ObjId>& v) {
  json j = json::array();
  for (auto x : v) j.push_back(x.value);
  return j;
}

json ids_json(const std::vector<MorId>& v) {
  json j = json::array();
  for (auto x : v) j.push_back(x.value);
  return j;
}

const std::vector<std::string> kCategoryLaws = {"identity-typing", "compose-undefined", "compose-not-composable",
                                                "compose-typing",  "left-unit",         "right-unit",
                                                "associativity"};

// --- validate ------------------------------------------------------------------------

std::string first_path(const CommandArgs& a) {
  for (const auto* p : {&a.bundle, &a.category, &a.functor, &a.diagram, &a.adjunction, &a.galois, &a.group,
                        &a.monad, &a.algebra})
    if (!p->empty()) return *p;
  throw Error(ErrorKind::MalformedInput, "validate needs a bundle file");
}

void diagrams(Report& rep, const std::string& what, const DiagramReport& r) {
  for (const auto& d : r.diagrams) {
    json cex = nullptr;
    if (d.counterexample) cex = {{"row", d.counterexample->first}, {"col", d.counterexample->second}};
    rep.add_verdict(verdict("finvect-hopf", what + "/" + d.name, d.passed, 1, cex));
  }
}

void validate_cmd(Report& rep, const CommandArgs& a) {
  std::string path = first_path(a);
  std::string text = read_file(path);
  rep.add_input(path, text);
  Bundle b = parse_bundle_text(text, fs::path(path).parent_path(), false, path);
  rep.result()["kind"] = std::string(to_string(b.kind));
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CategoryPayload>) {
          const auto& c = *p.category;
          add_report(rep, "cat-core", validate_category(c), kCategoryLaws, c.morphism_count());
          rep.result()["objects"] = c.object_count();
          rep.result()["morphisms"] = c.morphism_count();
        } else if constexpr (std::is_same_v<T, FinFunctor>) {
          add_report(rep, "cat-core", validate_category(*p.source()), kCategoryLaws, p.source()->morphism_count());
          add_report(rep, "functor-nat", validate_functor(p), {"preserves-dom", "preserves-cod", "preserves-identity", "preserves-composition"},
                     p.source()->morphism_count());
        } else if constexpr (std::is_same_v<T, NatTrans>) {
          add_report(rep, "functor-nat", validate_nat_trans(p), {"component-typing", "naturality"},
                     p.source()->morphism_count());
        } else if constexpr (std::is_same_v<T, SetValuedFunctor>) {
          add_report(rep, "yoneda", validate_set_functor(p),
                     {"table-size", "value-typing", "preserves-identity", "preserves-composition"}, p.source->morphism_count());
        } else if constexpr (std::is_same_v<T, Diagram>) {
          bool ok = true;
          json cex = nullptr;
          try {
            validate_diagram(p);
          } catch (const Error& e) {
            ok = false;
            cex = e.what();
          }
          rep.add_verdict(verdict("finset", "diagram-well-formed", ok, p.edges.size(), cex));
        } else if constexpr (std::is_same_v<T, AdjunctionData>) {
          require_well_typed(p);
          auto t = check_triangles(p);
          rep.add_verdict(verdict("adjunction", "left-triangle", t.left_failures.empty(), p.f.source()->object_count(),
                                  ids_json(t.left_failures)));
          rep.add_verdict(verdict("adjunction", "right-triangle", t.right_failures.empty(),
                                  p.f.target()->object_count(), ids_json(t.right_failures)));
          rep.add_verdict(verdict("adjunction", "unit-naturality", t.unit_naturality_failures.empty(),
                                  p.f.source()->morphism_count(), ids_json(t.unit_naturality_failures)));
          rep.add_verdict(verdict("adjunction", "counit-naturality", t.counit_naturality_failures.empty(),
                                  p.f.target()->morphism_count(), ids_json(t.counit_naturality_failures)));
        } else if constexpr (std::is_same_v<T, GaloisConnection>) {
          validate_preorder(p.p);
          validate_preorder(p.q);
          require_monotone(p);
          auto cex = galois_counterexample(p);
          rep.add_verdict(verdict("adjunction", "galois-condition", !cex, p.p.size * p.q.size,
                                  cex ? json{cex->first, cex->second} : json(nullptr)));
        } else if constexpr (std::is_same_v<T, AlgebraPayload>) {
          if (p.has_algebra()) diagrams(rep, "algebra", check_algebra(p.algebra()));
          if (p.has_coalgebra()) diagrams(rep, "coalgebra", check_coalgebra(p.coalgebra()));
          if (p.has_algebra() && p.has_coalgebra() && !p.antipode)
            diagrams(rep, "bimonoid", check_bimonoid(p.bimonoid()));
          if (p.antipode) diagrams(rep, "hopf", check_hopf(p.hopf()));
        } else if constexpr (std::is_same_v<T, FinGroup>) {
          rep.add_verdict(verdict("finvect-hopf", "group-axioms", true, p.order() * p.order()));
          rep.result()["order"] = p.order();
        } else if constexpr (std::is_same_v<T, MonadData>) {
          auto r = check_monad(p);
          rep.add_verdict(verdict("monoidal-monad", "associativity", r.associativity_failures.empty(),
                                  p.t.source()->object_count(), ids_json(r.associativity_failures)));
          rep.add_verdict(verdict("monoidal-monad", "left-unit", r.left_unit_failures.empty(),
                                  p.t.source()->object_count(), ids_json(r.left_unit_failures)));
          rep.add_verdict(verdict("monoidal-monad", "right-unit", r.right_unit_failures.empty(),
                                  p.t.source()->object_count(), ids_json(r.right_unit_failures)));
          rep.add_verdict(verdict("monoidal-monad", "naturality", r.natural, 2));
        }
      },
      b.payload);
}

// --- limits / colimits ---------------------------------------------------------------------

UniversalOptions universal_options(const CommandArgs& a) {
  UniversalOptions o;
  if (a.budget) o.work_budget = *a.budget;
  return o;
}

void limits_cmd(Report& rep, const CommandArgs& a) {
  auto d = std::get<Diagram>(load(rep, "diagram", a.diagram, BundleKind::Diagram).payload);
  auto opt = universal_options(a);
  rep.set_budget("work_budget", opt.work_budget);
  auto l = limit(d);
  json tuples = l.tuples;
  rep.result()["apex"] = l.cone.apex;
  rep.result()["tuples"] = tuples;
  rep.result()["legs"] = functions_json(l.cone.legs);
  rep.add_verdict(verdict("finset", "cone", is_cone(d, l.cone), d.edges.size()));
  auto expected = oracle::limit_size(d);
  rep.add_verdict(verdict("finset", "apex-size-matches-count", l.cone.apex == expected, 1,
                          json{{"apex", l.cone.apex}, {"count", expected}}));
  auto u = check_universal(d, l.cone, opt);
  rep.add_verdict(verdict("finset", "universal", u.universal, u.cones_examined,
                          json{{"apex", u.failing_apex}, {"mediators", u.mediator_count}}));
}

void colimits_cmd(Report& rep, const CommandArgs& a) {
  auto d = std::get<Diagram>(load(rep, "diagram", a.diagram, BundleKind::Diagram).payload);
  auto opt = universal_options(a);
  rep.set_budget("work_budget", opt.work_budget);
  auto c = colimit(d);
  rep.result()["apex"] = c.cocone.apex;
  rep.result()["class_of"] = c.class_of;
  rep.result()["offsets"] = c.offsets;
  rep.result()["legs"] = functions_json(c.cocone.legs);
  rep.add_verdict(verdict("finset", "cocone", is_cocone(d, c.cocone), d.edges.size()));
  auto expected = oracle::colimit_partition(d);
  bool same = expected.size() == c.class_of.size();
  for (std::size_t i = 0; same && i < expected.size(); ++i)
    for (std::size_t j = 0; j < expected.size(); ++j)
      if ((expected[i] == expected[j]) != (c.class_of[i] == c.class_of[j])) same = false;
  rep.add_verdict(verdict("finset", "classes-match-union-find", same, expected.size()));
  auto u = check_universal(d, c.cocone, opt);
  rep.add_verdict(verdict("finset", "universal", u.universal, u.cones_examined,
                          json{{"apex", u.failing_apex}, {"mediators", u.mediator_count}}));
}

// --- yoneda / represent -------------------------------------------------------------------

SetValuedFunctor load_set_functor(Report& rep, const CommandArgs& a) {
  auto f = std::get<SetValuedFunctor>(load(rep, "functor", a.functor, BundleKind::SetFunctor).payload);
  if (!a.category.empty()) {
    auto c = std::get<CategoryPayload>(load(rep, "category", a.category, BundleKind::Category).payload).category;
    if (!same_category(c, f.source))
      throw Error(ErrorKind::SchemaMismatch, "the functor is not defined on the given category");
  }
  return f;
}

void yoneda_cmd(Report& rep, const CommandArgs& a) {
  auto f = load_set_functor(rep, a);
  if (!a.object) throw Error(ErrorKind::MalformedInput, "--object <index> is required");
  if (*a.object >= f.source->object_count())
    throw Error(ErrorKind::IndexOutOfRange, fmt::format("object {} does not exist", *a.object));
  std::size_t budget = a.budget.value_or(kDefaultYonedaBudget);
  rep.set_budget("enumeration", budget);
  auto r = yoneda_bijection(f, ObjId{*a.object}, true, budget);
  json nats = json::array();
  for (const auto& t : r.transformations) nats.push_back(functions_json(t));
  rep.result()["object"] = *a.object;
  rep.result()["nat_count"] = r.transformations.size();
  rep.result()["value_size"] = r.value_size;
  rep.result()["theta"] = r.theta;
  rep.result()["theta_inv"] = r.theta_inv;
  rep.result()["transformations"] = nats;
  rep.add_verdict(verdict("yoneda", "nat-count-equals-value", r.transformations.size() == r.value_size, 1,
                          json{{"nat", r.transformations.size()}, {"value", r.value_size}}));
  rep.add_verdict(verdict("yoneda", "theta-mutually-inverse", r.mutually_inverse, r.value_size));
  rep.add_verdict(verdict("yoneda", "theta-inverse-natural", r.theta_inv_natural, r.value_size));
  rep.add_verdict(verdict("yoneda", "natural-in-object", r.natural_in_object.value_or(true),
                          f.source->morphism_count()));
}

void represent_cmd(Report& rep, const CommandArgs& a) {
  auto f = load_set_functor(rep, a);
  auto w = find_representation(f);
  rep.add_verdict(verdict("yoneda", "representable", w.has_value(), f.source->object_count(),
                          "no (object, element) pair induces bijections"));
  if (!w) return;
  json alts = json::array();
  for (const auto& [x, e] : w->alternatives) alts.push_back({x.value, e});
  rep.result()["object"] = w->object.value;
  rep.result()["universal_element"] = w->universal_element;
  rep.result()["chi"] = functions_json(w->chi);
  rep.result()["alternatives"] = alts;
  rep.add_verdict(verdict("yoneda", "alternatives-uniquely-isomorphic", w->alternatives_isomorphic,
                          w->alternatives.size()));
}

// --- adjoint / galois -------------------------------------------------------------------

void adjunction_verdicts(Report& rep, const AdjunctionData& adj) {
  auto t = check_triangles(adj);
  rep.add_verdict(verdict("adjunction", "left-triangle", t.left_failures.empty(), adj.f.source()->object_count(),
                          ids_json(t.left_failures)));
  rep.add_verdict(verdict("adjunction", "right-triangle", t.right_failures.empty(),
                          adj.f.target()->object_count(), ids_json(t.right_failures)));
  rep.add_verdict(verdict("adjunction", "unit-naturality", t.unit_naturality_failures.empty(),
                          adj.f.source()->morphism_count(), ids_json(t.unit_naturality_failures)));
  rep.add_verdict(verdict("adjunction", "counit-naturality", t.counit_naturality_failures.empty(),
                          adj.f.target()->morphism_count(), ids_json(t.counit_naturality_failures)));
  auto b = verify_hom_bijection(adj);
  json inv = json::array(), nat = json::array();
  for (const auto& [x, y] : b.inverse_failures) inv.push_back({x.value, y.value});
  for (const auto& [f, g] : b.naturality_failures) nat.push_back({f.value, g.value});
  const auto pairs = adj.f.source()->object_count() * adj.f.target()->object_count();
  rep.add_verdict(verdict("adjunction", "hom-bijection-inverse", b.inverse_failures.empty(), pairs, inv));
  rep.add_verdict(verdict("adjunction", "hom-bijection-natural", b.naturality_failures.empty(),
                          adj.f.source()->morphism_count() * adj.f.target()->morphism_count(), nat));
  if (t.ok()) {
    json sizes = json::array();
    for (ObjId x : adj.f.source()->objects())
      for (ObjId y : adj.f.target()->objects()) {
        auto h = hom_bijection(adj, x, y);
        sizes.push_back({{"x", x.value}, {"y", y.value}, {"size", h.left_homs.size()}, {"theta", h.theta}});
      }
    rep.result()["hom_sets"] = sizes;
  }
}

void adjoint_cmd(Report& rep, const CommandArgs& a) {
  auto adj = std::get<AdjunctionData>(load(rep, "adjunction", a.adjunction, BundleKind::Adjunction).payload);
  adjunction_verdicts(rep, adj);
}

void galois_cmd(Report& rep, const CommandArgs& a) {
  auto gc = std::get<GaloisConnection>(load(rep, "galois", a.galois, BundleKind::Galois).payload);
  auto cex = galois_counterexample(gc);
  rep.add_verdict(verdict("adjunction", "galois-condition", !cex, gc.p.size * gc.q.size,
                          cex ? json{{"x", cex->first}, {"y", cex->second}} : json(nullptr)));
  std::vector<std::size_t> closure, kernel;
  for (std::size_t x = 0; x < gc.p.size; ++x) closure.push_back(gc.f[gc.g[x]]);
  for (std::size_t y = 0; y < gc.q.size; ++y) kernel.push_back(gc.g[gc.f[y]]);
  rep.result()["closure"] = closure;  // f∘g on P
  rep.result()["kernel"] = kernel;    // g∘f on Q
  if (!cex) adjunction_verdicts(rep, galois_to_adjunction(gc));
  bool lattices = true;
  try {
    require_meet_lattice(gc.p);
    require_meet_lattice(gc.q);
  } catch (const Error&) {
    lattices = false;
  }
  rep.result()["meet_lattices"] = lattices;
  if (lattices && !cex)
    rep.add_verdict(verdict("adjunction", "right-adjoint-preserves-meets", check_right_adjoint_preserves_meets(gc),
                            gc.q.size * gc.q.size));
}

// --- monad -----------------------------------------------------------------------------------

void monad_report(Report& rep, const std::string& what, const MonadReport& r, std::size_t objects) {
  rep.add_verdict(verdict("monoidal-monad", what + "/associativity", r.associativity_failures.empty(), objects,
                          ids_json(r.associativity_failures)));
  rep.add_verdict(verdict("monoidal-monad", what + "/left-unit", r.left_unit_failures.empty(), objects,
                          ids_json(r.left_unit_failures)));
  rep.add_verdict(verdict("monoidal-monad", what + "/right-unit", r.right_unit_failures.empty(), objects,
                          ids_json(r.right_unit_failures)));
  rep.add_verdict(verdict("monoidal-monad", what + "/naturality", r.natural, 2));
}

void monad_cmd(Report& rep, const CommandArgs& a) {
  if (!a.monad.empty()) {
    auto m = std::get<MonadData>(load(rep, "monad", a.monad, BundleKind::Monad).payload);
    monad_report(rep, "monad", check_monad(m), m.t.source()->object_count());
    return;
  }
  if (!a.adjunction.empty()) {
    auto adj = std::get<AdjunctionData>(load(rep, "adjunction", a.adjunction, BundleKind::Adjunction).payload);
    monad_report(rep, "induced-monad", check_monad(monad_from_adjunction(adj)), adj.f.source()->object_count());
    monad_report(rep, "induced-comonad", check_comonad(comonad_from_adjunction(adj)),
                 adj.f.target()->object_count());
    return;
  }
  // the power-set monad: exhaustive up to the bound, sampled one size above
  const std::size_t bound = std::min<std::size_t>(a.max_size, 2);
  const std::size_t samples = a.budget.value_or(10'000);
  rep.set_budget("exhaustive_bound", bound);
  rep.set_budget("samples", samples);
  auto r = check_set_monad(powerset_monad(), bound, bound);
  auto sizes = [](const std::vector<std::size_t>& v) { return json(v); };
  rep.add_verdict(verdict("monoidal-monad", "powerset/associativity", r.associativity_failures.empty(), bound + 1,
                          sizes(r.associativity_failures)));
  rep.add_verdict(verdict("monoidal-monad", "powerset/left-unit", r.left_unit_failures.empty(), bound + 1,
                          sizes(r.left_unit_failures)));
  rep.add_verdict(verdict("monoidal-monad", "powerset/right-unit", r.right_unit_failures.empty(), bound + 1,
                          sizes(r.right_unit_failures)));
  rep.add_verdict(verdict("monoidal-monad", "powerset/naturality",
                          !r.mult_naturality_failure && !r.unit_naturality_failure, 2));
  auto s = sample_powerset_associativity(bound + 1, samples, a.seed);
  rep.add_verdict(verdict("monoidal-monad", "powerset/associativity-sampled", s.ok(), s.samples,
                          s.first_failure ? json(*s.first_failure) : json(nullptr)));
  rep.result()["sampled_size"] = bound + 1;
  rep.result()["sample_failures"] = s.failures;
}

// --- coherence ----------------------------------------------------------------------------

void coherence_cmd(Report& rep, const CommandArgs& a) {
  CoherenceReport r;
  rep.set_budget("max_size", a.max_size);
  if (a.structure == "cartesian" || a.structure == "cocartesian") {
    std::vector<std::size_t> sizes;
    for (std::size_t n = 0; n <= a.max_size; ++n) sizes.push_back(n);
    r = check_coherence_instances(a.structure == "cartesian" ? cartesian_structure() : cocartesian_structure(),
                                  sizes);
  } else if (a.structure == "finvect") {
    std::uint64_t p = a.modulus.value_or(2);
    if (!is_prime(p)) throw Error(ErrorKind::MalformedInput, fmt::format("modulus {} is not prime", p));
    std::vector<std::size_t> dims;
    for (std::size_t n = 1; n <= a.max_size; ++n) dims.push_back(n);
    r = check_coherence_instances(finvect_structure(p), dims);
  } else {
    throw Error(ErrorKind::MalformedInput,
                fmt::format("unknown structure '{}' (cartesian, cocartesian, finvect)", a.structure));
  }
  rep.result()["structure"] = a.structure;
  rep.add_verdict(verdict("monoidal-monad", "pentagon", r.pentagon_failures.empty(), r.pentagon_instances,
                          r.pentagon_failures));
  rep.add_verdict(verdict("monoidal-monad", "triangle", r.triangle_failures.empty(), r.triangle_instances,
                          r.triangle_failures));
  rep.add_verdict(verdict("monoidal-monad", "structure-maps-invertible", r.iso_failures.empty(), r.iso_instances,
                          r.iso_failures));
}

// --- hopf ----------------------------------------------------------------------------------

void hopf_cmd(Report& rep, const CommandArgs& a) {
  if (!a.algebra.empty()) {
    auto p = std::get<AlgebraPayload>(load(rep, "algebra", a.algebra, BundleKind::Algebra).payload);
    if (p.antipode) {
      diagrams(rep, "hopf", check_hopf(p.hopf()));
    } else if (p.has_algebra() && p.has_coalgebra()) {
      auto r = check_bimonoid(p.bimonoid());
      diagrams(rep, "bimonoid", r);
      if (!r.ok()) return;
      auto sol = solve_antipode(p.bimonoid());
      rep.result()["antipode"] = sol.antipode ? json(sol.antipode->entries()) : json("none");
      rep.result()["antipode_nullity"] = sol.nullity;
    } else {
      if (p.has_algebra()) diagrams(rep, "algebra", check_algebra(p.algebra()));
      if (p.has_coalgebra()) diagrams(rep, "coalgebra", check_coalgebra(p.coalgebra()));
    }
    return;
  }
  auto g = std::get<FinGroup>(load(rep, "group", a.group, BundleKind::Group).payload);
  if (!a.modulus) throw Error(ErrorKind::MalformedInput, "--modulus <prime> is required");
  const std::uint64_t p = *a.modulus;
  auto h = group_algebra(g, p);
  diagrams(rep, "group-algebra", check_hopf(h));
  diagrams(rep, "function-algebra", check_hopf(function_hopf(g, p)));
  auto sol = solve_antipode(h.bimonoid);
  rep.add_verdict(verdict("finvect-hopf", "group-algebra/solved-antipode-is-inversion",
                          sol.antipode && *sol.antipode == h.antipode && sol.nullity == 0, 1,
                          json{{"nullity", sol.nullity}}));
  rep.result()["dim"] = g.order();
  rep.result()["inverse"] = g.inverses();
}

// --- corpus / emit ------------------------------------------------------------------------

fs::path fixture_dir(const CommandArgs& a) {
  if (!a.fixtures.empty()) return a.fixtures;
  if (const char* env = std::getenv("FINCAT_FIXTURES"); env && *env) return env;
  return "fixtures";
}

}  // namespace

Report run_command(const std::string& name, const CommandArgs& a) {
  if (name == "corpus") {
    auto corpus = prepare_corpus(fixture_dir(a));
    SuiteOptions opt = a.suite;
    opt.seed = a.seed;
    return corpus_report(corpus, opt, a.timing);
  }
  Report rep(name);
  rep.enable_timing(a.timing);
  rep.set_seed(a.seed);
  if (name == "validate") validate_cmd(rep, a);
  else if (name == "limits") limits_cmd(rep, a);
  else if (name == "colimits") colimits_cmd(rep, a);
  else if (name == "yoneda") yoneda_cmd(rep, a);
  else if (name == "represent") represent_cmd(rep, a);
  else if (name == "adjoint") adjoint_cmd(rep, a);
  else if (name == "galois") galois_cmd(rep, a);
  else if (name == "monad") monad_cmd(rep, a);
  else if (name == "coherence") coherence_cmd(rep, a);
  else if (name == "hopf") hopf_cmd(rep, a);
  else if (name == "emit") {
    json paths = json::array();
    for (const auto& p : emit_corpus(fixture_dir(a))) paths.push_back(p.filename().string());
    rep.result()["written"] = paths;
  } else {
    throw Error(ErrorKind::MalformedInput, fmt::format("unknown command '{}'", name));
  }
  return rep;
}

std::string error_document(const std::string& command, const std::exception& e) {
  json err = {{"message", e.what()}};
  if (const auto* fe = dynamic_cast<const Error*>(&e)) err["kind"] = std::string(to_string(fe->kind()));
  return json{{"command", command}, {"error", err}, {"passed", false}}.dump(2) + "\n";
}

}  // namespace fincat::suite
