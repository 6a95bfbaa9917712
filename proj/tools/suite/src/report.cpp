#include "fincat/suite/report.hpp"

#include "fincat/io.hpp"

namespace fincat::suite {

void Report::add_input(const std::string& name, const std::string& text) {
  inputs_.push_back({{"path", name}, {"fnv1a", fnv1a_hex(text)}, {"bytes", text.size()}});
}

void Report::add_verdicts(const std::vector<Verdict>& vs) {
  for (const auto& v : vs) verdicts_.push_back(v);
}

bool Report::passed() const {
  for (const auto& v : verdicts_)
    if (!v.passed) return false;
  return true;
}

json Report::to_json() const {
  json verdicts = json::array();
  for (const auto& v : verdicts_) {
    json j = {{"module", v.module}, {"law", v.law}, {"passed", v.passed}, {"instances", v.instances}};
    if (!v.passed) j["counterexample"] = v.counterexample;
    verdicts.push_back(std::move(j));
  }
  json j = {{"command", command_}, {"inputs", inputs_}, {"seed", seed_}, {"budgets", budgets_},
            {"verdicts", std::move(verdicts)}, {"passed", passed()}, {"result", result_}};
  if (timing_enabled_) j["timing"] = timing_;
  return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace fincat::suite
