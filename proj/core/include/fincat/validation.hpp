#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fincat {

/// One failed law instance. `witness` holds the indices (morphisms, objects,
/// elements) that exhibit the failure, in the order the law names them.
struct Violation {
  std::string law;
  std::vector<std::size_t> witness;
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }

  void add(std::string law, std::vector<std::size_t> witness,
           std::string message = {}) {
    violations.push_back({std::move(law), std::move(witness), std::move(message)});
  }

  std::size_t count(const std::string& law) const {
    std::size_t n = 0;
    for (const auto& v : violations) n += v.law == law ? 1 : 0;
    return n;
  }

  std::vector<Violation> of_law(const std::string& law) const {
    std::vector<Violation> out;
    for (const auto& v : violations)
      if (v.law == law) out.push_back(v);
    return out;
  }

  std::string summary() const;
};

}  // namespace fincat
