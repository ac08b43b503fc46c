#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>

namespace cgexact {

/// Outcome of one identity family checked over many instances.
struct IdentityCheck {
  std::string family;
  std::uint64_t instances = 0;
  std::optional<std::string> counterexample;  // first failure, if any

  bool passed() const { return !counterexample.has_value(); }

  /// Records one instance; keeps only the first failure.
  void record(bool ok, const std::string& detail = {}) {
    ++instances;
    if (!ok && !counterexample) counterexample = detail;
  }
  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++instances;
    if (!ok && !counterexample) counterexample = describe();
  }
};

struct Report {
  std::deque<IdentityCheck> checks;  // deque: family() references stay valid

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }

  IdentityCheck& family(const std::string& name) {
    for (auto& c : checks)
      if (c.family == name) return c;
    checks.push_back({name, 0, std::nullopt});
    return checks.back();
  }

  /// Folds another report in, summing instance counts per family.
  void merge(const Report& other) {
    for (const auto& c : other.checks) {
      auto& mine = family(c.family);
      mine.instances += c.instances;
      if (!mine.counterexample && c.counterexample) mine.counterexample = c.counterexample;
    }
  }

  const IdentityCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.family == name) return &c;
    return nullptr;
  }
};

}  // namespace cgexact
