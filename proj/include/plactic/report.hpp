#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace plactic {

/// One property checked over a finite domain. Counterexamples are recorded in
/// enumeration order, so reports are reproducible.
struct Check {
  Check() = default;
  explicit Check(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;

  static constexpr std::size_t kMaxCounterexamples = 5;

  bool passed() const noexcept { return failures == 0; }

  void record(bool ok, std::string const& description = {}) {
    ++cases;
    if (ok) return;
    ++failures;
    if (counterexamples.size() < kMaxCounterexamples) {
      counterexamples.push_back(description);
    }
  }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++cases;
    if (ok) return;
    ++failures;
    if (counterexamples.size() < kMaxCounterexamples) {
      counterexamples.push_back(describe());
    }
  }
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool passed() const noexcept {
    for (auto const& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }

  Check const* find(std::string const& name) const {
    for (auto const& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  void append(Report const& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    for (auto const& [key, value] : other.details.items()) details[key] = value;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (auto const& c : checks) {
      j["checks"].push_back({{"name", c.name},
                             {"passed", c.passed()},
                             {"cases", c.cases},
                             {"failures", c.failures},
                             {"counterexamples", c.counterexamples}});
    }
    if (!details.empty()) j["details"] = details;
    return j;
  }
};

}  // namespace plactic
