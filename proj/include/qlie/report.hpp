#pragma once

/**
 * @file report.hpp
 * @brief Verification reports: named checks with verdicts and witnesses.
 *
 * An asserted check that fails makes the report fail. A reported-only check
 * records its verdict without affecting the outcome.
 */

#include "json.hpp"

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qlie {

struct Check {
  std::string name;
  bool asserted = true;
  bool holds = false;
  std::string detail;  ///< witness on failure, or the reported value
  double seconds = 0;
};

class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }

  void add(Check c) { checks_.push_back(std::move(c)); }
  void assert_that(std::string name, bool holds, std::string detail = {}) {
    checks_.push_back({std::move(name), true, holds, std::move(detail), 0});
  }
  void report(std::string name, bool holds, std::string detail = {}) {
    checks_.push_back({std::move(name), false, holds, std::move(detail), 0});
  }

  /// Runs f, which fills holds/detail; exceptions count as failures.
  void run(std::string name, bool asserted, const std::function<void(Check&)>& f) {
    Check c{std::move(name), asserted, false, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      f(c);
    } catch (const std::exception& e) {
      c.holds = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    checks_.push_back(std::move(c));
  }

  void merge(const Report& o) {
    for (const auto& c : o.checks_) {
      Check x = c;
      if (!o.title_.empty()) x.name = o.title_ + "/" + x.name;
      checks_.push_back(std::move(x));
    }
  }

  bool ok() const {
    for (const auto& c : checks_)
      if (c.asserted && !c.holds) return false;
    return true;
  }

  std::size_t failures() const {
    std::size_t k = 0;
    for (const auto& c : checks_) k += (c.asserted && !c.holds) ? 1 : 0;
    return k;
  }

  static std::string verdict(const Check& c) {
    if (c.asserted) return c.holds ? "holds" : "fails";
    return c.holds ? "reported: holds" : "reported: fails";
  }

  /// Deterministic text summary (timings omitted unless requested).
  std::string to_text(bool with_timing = false) const {
    std::string s;
    if (!title_.empty()) s += "== " + title_ + " ==\n";
    for (const auto& c : checks_) {
      s += "[" + verdict(c) + "] " + c.name;
      if (!c.detail.empty()) s += ": " + c.detail;
      if (with_timing) s += " (" + std::to_string(c.seconds) + " s)";
      s += "\n";
    }
    s += ok() ? "RESULT: all asserted checks hold\n" : "RESULT: " + std::to_string(failures()) + " asserted check(s) failed\n";
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["title"] = title_;
    j["ok"] = ok();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks_) {
      j["checks"].push_back({{"name", c.name},
                             {"kind", c.asserted ? "asserted" : "reported"},
                             {"verdict", c.holds ? "holds" : "fails"},
                             {"detail", c.detail}});
    }
    return j;
  }

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace qlie
