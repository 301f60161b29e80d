// Check reports: one row per executed check, with expected/computed values
// and timings, plus JSON and CSV emission for the command-line driver.

#pragma once

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/linalg.hpp"

#include "json.hpp"

namespace brauer {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string expected;
  std::string computed;
  double millis = 0.0;
};

struct Report {
  std::string suite;
  std::map<std::string, std::string> params;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.skipped && !c.pass) return false;
    return true;
  }
  bool any_skipped() const {
    for (const auto& c : checks)
      if (c.skipped) return true;
    return false;
  }
  int exit_code() const { return !all_passed() ? 1 : (any_skipped() ? 2 : 0); }
};

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string suite) { rep_.suite = std::move(suite); }

  void param(const std::string& key, const std::string& value) { rep_.params[key] = value; }

  template <class T>
  static std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }

  void record(const std::string& name, bool pass, const std::string& expected,
              const std::string& computed, double millis) {
    rep_.checks.push_back({name, pass, false, expected, computed, millis});
  }

  // Runs fn() -> pair<expected, computed> strings; passes when they match.
  // A BudgetExceeded from fn marks the check as skipped rather than failed.
  template <class Fn>
  void check(const std::string& name, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    CheckResult res;
    res.name = name;
    try {
      auto [expected, computed] = fn();
      res.expected = expected;
      res.computed = computed;
      res.pass = expected == computed;
    } catch (const BudgetExceeded& e) {
      res.skipped = true;
      res.computed = e.what();
    }
    res.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    rep_.checks.push_back(std::move(res));
  }

  void check_true(const std::string& name, bool value) {
    check(name, [&] { return std::pair<std::string, std::string>("true", value ? "true" : "false"); });
  }

  template <class T, class U>
  void check_eq(const std::string& name, const T& expected, const U& computed) {
    check(name, [&] { return std::pair<std::string, std::string>(str(expected), str(computed)); });
  }

  Report take() { return std::move(rep_); }

 private:
  Report rep_;
};

inline nlohmann::json report_to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"skipped", c.skipped},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"millis", c.millis}});
  nlohmann::json params(r.params);
  return {{"schema", "1"},
          {"suite", r.suite},
          {"params", params},
          {"checks", checks},
          {"status", r.exit_code() == 0 ? "pass" : (r.exit_code() == 1 ? "fail" : "skipped")}};
}

inline void print_report(const Report& r, std::ostream& os) {
  os << "suite: " << r.suite;
  if (!r.params.empty()) {
    os << " (";
    bool first = true;
    for (const auto& [k, v] : r.params) {
      if (!first) os << ", ";
      first = false;
      os << k << "=" << v;
    }
    os << ")";
  }
  os << "\n";
  for (const auto& c : r.checks) {
    const char* tag = c.skipped ? "SKIP" : (c.pass ? " ok " : "FAIL");
    os << "  [" << tag << "] " << c.name;
    if (!c.skipped && !c.pass) os << "  expected " << c.expected << ", got " << c.computed;
    if (c.skipped) os << "  (" << c.computed << ")";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", c.millis);
    os << "  [" << buf << " ms]\n";
  }
  os << (r.all_passed() ? (r.any_skipped() ? "status: pass (with skips)" : "status: pass")
                        : "status: FAIL")
     << "\n";
}

}  // namespace brauer
