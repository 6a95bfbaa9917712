#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "fincat/io.hpp"
#include "fincat/suite/report.hpp"

namespace fincat::suite {

/// Parsed fixture directory, in file-name order.
struct Corpus {
  std::filesystem::path dir;
  std::vector<std::pair<std::string, std::string>> digests;  // file name, FNV-1a
  std::vector<std::pair<std::string, std::string>> texts;    // file name, contents
  std::vector<std::pair<std::string, Bundle>> bundles;

  /// Throws SchemaMismatch if the fixture is missing or of another kind.
  const Bundle& get(const std::string& name, BundleKind kind) const;
  CategoryRef category(const std::string& name) const;
  std::vector<std::pair<std::string, CategoryRef>> categories() const;
  template <class T>
  std::vector<std::pair<std::string, T>> all(BundleKind kind) const {
    std::vector<std::pair<std::string, T>> out;
    for (const auto& [name, b] : bundles)
      if (b.kind == kind) out.emplace_back(name, std::get<T>(b.payload));
    return out;
  }
};

/// Parses every regular file in `dir` (sorted by name). Throws on the first
/// bundle that fails to parse or validate.
Corpus load_corpus(const std::filesystem::path& dir);
/// Emits the canonical fixtures into `dir` when it holds none, then loads it.
Corpus prepare_corpus(const std::filesystem::path& dir);

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t random_tables = 1000;
  std::size_t table_morphisms = 12;
  std::size_t diagram_cap = 500;
  std::size_t monad_samples = 10'000;
  std::size_t interchange_quadruples = 1000;
  std::size_t free_monoid_bound = 4;
  std::size_t adjunction_mutations = 50;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Verdict> verdicts;
  std::string summary;  // one line of counts
  double seconds = 0;

  bool passed() const;
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const Corpus& corpus, const SuiteOptions& opt);

/// Criteria 1..10 in order; criterion 11 compares two complete reports and
/// is added by run_corpus_suite.
Report corpus_report(const Corpus& corpus, const SuiteOptions& opt, bool timing,
                     std::vector<CriterionResult>* results = nullptr);

/// All eleven criteria. Criterion 11 builds the report a second time from a
/// fresh load of the fixture directory and compares bytes.
std::vector<CriterionResult> run_corpus_suite(const std::filesystem::path& dir, const SuiteOptions& opt,
                                              std::string* report_text = nullptr);

}  // namespace fincat::suite
