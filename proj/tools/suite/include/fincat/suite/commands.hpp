#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fincat/suite/criteria.hpp"
#include "fincat/suite/report.hpp"

namespace fincat::suite {

struct CommandArgs {
  std::string category, functor, diagram, adjunction, galois, group, monad, algebra, bundle;
  std::optional<std::size_t> object;
  std::optional<std::uint64_t> modulus;
  std::uint64_t seed = 0;
  std::optional<std::size_t> budget;
  std::string structure = "cartesian";  // coherence
  std::size_t max_size = 3;             // coherence object sizes, power-set bound
  std::string fixtures;                 // corpus directory
  bool timing = false;
  SuiteOptions suite;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate", "limits", "colimits", "yoneda",    "represent",
                                                 "adjoint",  "galois", "monad",    "coherence", "hopf",
                                                 "corpus",   "emit"};
  return names;
}

/// Runs one command. Input problems propagate as fincat::Error; law
/// failures are verdicts in the returned report.
Report run_command(const std::string& name, const CommandArgs& args);

/// 0 when every verdict passes, 1 otherwise.
inline int exit_status(const Report& r) { return r.passed() ? 0 : 1; }
/// Exit status for an exception escaping run_command.
inline constexpr int kInputErrorStatus = 2;

/// Structured document for an input error.
std::string error_document(const std::string& command, const std::exception& e);

}  // namespace fincat::suite
