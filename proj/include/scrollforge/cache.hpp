#pragma once

#include <filesystem>
#include <fstream>
#include <optional>

#include "io.hpp"
#include "json.hpp"
#include "points.hpp"
#include "report.hpp"

namespace scrollforge::k3pipeline {

inline constexpr const char* kCodeVersion = "scrollforge-1";

// Content-addressed stage cache: ideals in the idealkit file format plus a
// meta.json with points, polynomials, check rows and the retry counter.
// Keyed by (stage, seed, prime, code version) so reruns skip completed
// Groebner computations.
class ArtifactCache {
public:
  ArtifactCache() = default;
  explicit ArtifactCache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }

  std::string key(const std::string& stage, uint64_t seed, uint32_t prime) const {
    std::string material = stage + "|" + std::to_string(seed) + "|" + std::to_string(prime) +
                           "|" + kCodeVersion;
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(material)));
    return std::string(buf) + "-" + stage;
  }

  std::filesystem::path slot(const std::string& stage, uint64_t seed, uint32_t prime) const {
    return std::filesystem::path(dir_) / key(stage, seed, prime);
  }

  bool has(const std::string& stage, uint64_t seed, uint32_t prime) const {
    return enabled() && std::filesystem::exists(slot(stage, seed, prime) / "meta.json");
  }

  void store(const std::string& stage, uint64_t seed, uint32_t prime,
             const nlohmann::json& meta,
             const std::vector<std::pair<std::string, idealkit::Ideal>>& ideals) const {
    if (!enabled()) return;
    auto dir = slot(stage, seed, prime);
    std::filesystem::create_directories(dir);
    nlohmann::json m = meta;
    m["ideals"] = nlohmann::json::array();
    for (auto& [name, I] : ideals) {
      idealkit::write_ideal_file((dir / (name + ".ideal")).string(), I);
      m["ideals"].push_back(name);
    }
    std::ofstream out(dir / "meta.json", std::ios::binary);
    out << m.dump(2) << "\n";
  }

  std::optional<nlohmann::json> load_meta(const std::string& stage, uint64_t seed,
                                          uint32_t prime) const {
    if (!has(stage, seed, prime)) return std::nullopt;
    std::ifstream in(slot(stage, seed, prime) / "meta.json", std::ios::binary);
    nlohmann::json m;
    in >> m;
    return m;
  }

  idealkit::Ideal load_ideal(const std::string& stage, uint64_t seed, uint32_t prime,
                             const std::string& name) const {
    return idealkit::read_ideal_file((slot(stage, seed, prime) / (name + ".ideal")).string());
  }

private:
  std::string dir_;
};

// serialization helpers for meta.json
inline nlohmann::json point_to_json(const projlab::Point& p) {
  nlohmann::json j = nlohmann::json::array();
  for (auto c : p.c) j.push_back(c);
  return j;
}

inline projlab::Point point_from_json(const nlohmann::json& j) {
  projlab::Point p;
  for (auto& v : j) p.c.push_back(v.get<uint32_t>());
  return p;
}

inline nlohmann::json points_to_json(const std::vector<projlab::Point>& ps) {
  nlohmann::json j = nlohmann::json::array();
  for (auto& p : ps) j.push_back(point_to_json(p));
  return j;
}

inline std::vector<projlab::Point> points_from_json(const nlohmann::json& j) {
  std::vector<projlab::Point> out;
  for (auto& e : j) out.push_back(point_from_json(e));
  return out;
}

inline nlohmann::json rows_to_json(const std::vector<CheckRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (auto& r : rows) {
    nlohmann::json e;
    e["name"] = r.name;
    e["expected"] = r.expected;
    e["actual"] = r.actual;
    e["pass"] = r.pass;
    e["millis"] = r.millis;
    j.push_back(e);
  }
  return j;
}

inline std::vector<CheckRow> rows_from_json(const nlohmann::json& j) {
  std::vector<CheckRow> rows;
  for (auto& e : j)
    rows.push_back({e["name"].get<std::string>(), e["expected"].get<std::string>(),
                    e["actual"].get<std::string>(), e["pass"].get<bool>(),
                    e["millis"].get<int64_t>()});
  return rows;
}

} // namespace scrollforge::k3pipeline
