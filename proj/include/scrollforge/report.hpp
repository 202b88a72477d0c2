#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rng.hpp"

namespace scrollforge::k3pipeline {

struct CheckRow {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  int64_t millis = 0;
};

// Named checks with (expected, actual, pass) and timings; deterministic
// given (seed, prime) with timings excluded from the determinism hash.
struct VerificationReport {
  uint64_t seed = 0;
  uint32_t prime = 0;
  std::vector<CheckRow> checks;
  int retries = 0;

  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  std::string canonical_text() const {
    std::ostringstream os;
    os << "seed=" << seed << " prime=" << prime << " retries=" << retries << "\n";
    for (auto& c : checks)
      os << c.name << "|" << c.expected << "|" << c.actual << "|" << (c.pass ? 1 : 0) << "\n";
    return os.str();
  }

  uint64_t determinism_hash() const { return fnv1a64(canonical_text()); }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["seed"] = seed;
    j["prime"] = prime;
    j["retries"] = retries;
    j["determinism_hash"] = determinism_hash();
    j["checks"] = nlohmann::json::array();
    for (auto& c : checks) {
      nlohmann::json row;
      row["name"] = c.name;
      row["expected"] = c.expected;
      row["actual"] = c.actual;
      row["pass"] = c.pass;
      row["millis"] = c.millis;
      j["checks"].push_back(row);
    }
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "seed " << seed << ", prime " << prime << ", retries " << retries << "\n";
    size_t w = 0;
    for (auto& c : checks) w = std::max(w, c.name.size());
    for (auto& c : checks) {
      os << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name;
      os << std::string(w - c.name.size() + 2, ' ');
      os << "expected " << c.expected << ", got " << c.actual << "  (" << c.millis << " ms)\n";
    }
    os << (all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
  }
};

// appends rows and measures wall time between calls
class Recorder {
public:
  explicit Recorder(VerificationReport* rep, std::string stage)
      : rep_(rep), stage_(std::move(stage)), last_(now()) {}

  void record(const std::string& name, const std::string& expected, const std::string& actual,
              bool pass) {
    auto t = now();
    rep_->checks.push_back(
        {stage_ + "/" + name, expected, actual, pass, ms_between(last_, t)});
    last_ = t;
  }

  template <typename T>
  void eq(const std::string& name, const T& expected, const T& actual) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    record(name, e.str(), a.str(), expected == actual);
  }

  void is_true(const std::string& name, bool value, const std::string& expected = "true") {
    record(name, expected, value ? "true" : "false", value);
  }

private:
  static std::chrono::steady_clock::time_point now() { return std::chrono::steady_clock::now(); }
  static int64_t ms_between(std::chrono::steady_clock::time_point a,
                            std::chrono::steady_clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
  }

  VerificationReport* rep_;
  std::string stage_;
  std::chrono::steady_clock::time_point last_;
};

} // namespace scrollforge::k3pipeline
