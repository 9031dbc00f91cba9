#pragma once

#include <string>
#include <utility>
#include <vector>

namespace affweyl {

struct Check {
  std::string name;
  bool pass;
  std::string expected;
  std::string actual;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Check> checks;
  long long elapsed_ms = 0;

  void param(const std::string& k, const std::string& v) { parameters.emplace_back(k, v); }
  void add(const std::string& name, bool pass, const std::string& expected = "true",
           const std::string& actual = "", const std::string& detail = "") {
    checks.push_back({name, pass, expected,
                      actual.empty() ? (pass ? expected : "false") : actual, detail});
  }
  bool all_pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
  std::string json() const;   // stable field order
  std::string text() const;   // one line per check
};

}  // namespace affweyl
