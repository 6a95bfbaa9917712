#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>

#include "fincat/suite/criteria.hpp"

int main(int argc, char** argv) {
  using namespace fincat::suite;
  CLI::App app{"acceptance criteria over the fixture corpus"};
  std::string fixtures = "acceptance-fixtures";
  std::string report;
  SuiteOptions opt;
  app.add_option("--fixtures", fixtures, "fixture directory, emitted when empty")->capture_default_str();
  app.add_option("--report", report, "write the corpus report here");
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::vector<CriterionResult> results;
  std::string text;
  try {
    results = run_corpus_suite(fixtures, opt, &text);
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 2;
  }
  if (!report.empty()) std::ofstream(report, std::ios::binary) << text;

  int failed = 0;
  for (const auto& r : results) {
    failed += r.passed() ? 0 : 1;
    fmt::print("[{}] {:>2} {}: {} ({:.2f}s)\n", r.passed() ? "PASS" : "FAIL", r.id, r.title, r.summary, r.seconds);
    for (const auto& v : r.verdicts)
      if (!v.passed) fmt::print("       {}/{}: {}\n", v.module, v.law, v.counterexample.dump());
  }
  fmt::print("{} of {} criteria passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}
