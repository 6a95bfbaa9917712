#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fincat::suite {

using json = nlohmann::json;

/// One checked law. `instances` counts what was examined.
struct Verdict {
  std::string module;
  std::string law;
  bool passed = true;
  std::uint64_t instances = 0;
  json counterexample;  // null when passed
};

/// Command output. Serialization is deterministic: keys are sorted and
/// timing is written only when enabled.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add_input(const std::string& name, const std::string& text);
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set_budget(const std::string& key, std::uint64_t value) { budgets_[key] = value; }
  void add_verdict(Verdict v) { verdicts_.push_back(std::move(v)); }
  void add_verdicts(const std::vector<Verdict>& vs);
  /// Command-specific payload (tables, counts).
  json& result() { return result_; }
  void set_timing(const std::string& key, double seconds) { timing_[key] = seconds; }
  void enable_timing(bool on) { timing_enabled_ = on; }

  bool passed() const;
  const std::vector<Verdict>& verdicts() const { return verdicts_; }
  json to_json() const;
  std::string dump() const;

 private:
  std::string command_;
  json inputs_ = json::array();
  std::uint64_t seed_ = 0;
  json budgets_ = json::object();
  std::vector<Verdict> verdicts_;
  json result_ = json::object();
  json timing_ = json::object();
  bool timing_enabled_ = false;
};

}  // namespace fincat::suite
