#pragma once

#include <string>
#include <vector>

namespace gml {

// Accumulating validation outcome: every failed clause is recorded, so a
// caller sees the full picture rather than the first problem only.
struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
  void merge(const ValidationReport& o, const std::string& prefix) {
    for (const auto& f : o.failures) fail(prefix + f);
  }
  std::string summary() const {
    if (ok) return "ok";
    std::string s;
    for (const auto& f : failures) {
      if (!s.empty()) s += "; ";
      s += f;
    }
    return s;
  }
};

}  // namespace gml
