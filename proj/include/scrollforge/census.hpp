#pragma once

#include <iomanip>

#include "json.hpp"
#include "lattice.hpp"

namespace scrollforge::hklattice {

// Discriminant table, degree-9 class enumeration, involution matrices and
// the double point count, with JSON and aligned-text renderers.
struct Census {
  int64_t dmin = 7, dmax = 100;
  std::vector<DiscriminantVerdict> table;
  std::vector<Degree9Row> degree9;
  DoublePointResult dr;
  std::vector<std::string> notes;
};

inline Census build_census(int64_t dmin = 7, int64_t dmax = 100) {
  Census c;
  c.dmin = dmin;
  c.dmax = dmax;
  for (int64_t d = dmin; d <= dmax; ++d) c.table.push_back(hassett_verdict(d));
  c.degree9 = enumerate_degree9();
  c.dr = double_points({41, 9, 8, -11, 4});
  c.notes = {
      "curve classes: the effectivity proof accepts dp and 6fp-55dp; the statement's "
      "fp is replaced by dp, following the proof's a1 = 0 branch",
      "prime rule: odd primes p = 2 (mod 3) excluded; a literal reading would also "
      "exclude p = 2 and with it every admissible discriminant, so p = 2 is exempt"};
  return c;
}

inline nlohmann::json census_json(const Census& c) {
  nlohmann::json j;
  j["range"] = {c.dmin, c.dmax};
  j["discriminants"] = nlohmann::json::array();
  for (auto& v : c.table) {
    nlohmann::json row;
    row["d"] = v.d;
    row["divisorial"] = v.divisorial;
    row["k3_associated"] = v.k3_associated;
    j["discriminants"].push_back(row);
  }
  j["degree9_classes"] = nlohmann::json::array();
  for (auto& r : c.degree9) {
    nlohmann::json row;
    row["class"] = r.cls.str();
    row["q"] = r.q.str();
    row["R2"] = r.r_squared.str();
    row["accepted"] = r.accepted;
    j["degree9_classes"].push_back(row);
  }
  j["double_points"] = c.dr.count.str();
  auto mdiv = involution_matrix(Side::divisor);
  auto mcur = involution_matrix(Side::curve);
  j["involution"]["divisor"] = {{mdiv[0][0], mdiv[0][1]}, {mdiv[1][0], mdiv[1][1]}};
  j["involution"]["curve"] = {{mcur[0][0], mcur[0][1]}, {mcur[1][0], mcur[1][1]}};
  j["lattice_discriminant"] = scroll_lattice_discriminant(3, 9, 41);
  j["notes"] = c.notes;
  return j;
}

inline std::string census_text(const Census& c) {
  std::ostringstream os;
  os << "discriminant census, d in [" << c.dmin << ", " << c.dmax << "]\n";
  os << "   d  divisorial  K3-associated\n";
  for (auto& v : c.table) {
    os << std::setw(4) << v.d << "  " << (v.divisorial ? "yes" : " no") << "         "
       << (v.k3_associated ? "yes" : " no") << "\n";
  }
  os << "\neffective degree-9 curve classes (g = 22)\n";
  os << "  class        q       R^2    verdict\n";
  for (auto& r : c.degree9) {
    os << "  " << std::setw(10) << std::left << r.cls.str() << std::right << "  "
       << std::setw(6) << r.q.str() << "  " << std::setw(5) << r.r_squared.str() << "  "
       << (r.accepted ? "accepted" : "rejected") << "\n";
  }
  os << "\ndouble point count D(R) = " << c.dr.count.str() << "\n";
  os << "lattice <h^2, R> discriminant = " << scroll_lattice_discriminant(3, 9, 41) << "\n";
  auto mdiv = involution_matrix(Side::divisor);
  auto mcur = involution_matrix(Side::curve);
  os << "involution on divisors: [[" << mdiv[0][0] << ", " << mdiv[0][1] << "], ["
     << mdiv[1][0] << ", " << mdiv[1][1] << "]]\n";
  os << "involution on curves:   [[" << mcur[0][0] << ", " << mcur[0][1] << "], ["
     << mcur[1][0] << ", " << mcur[1][1] << "]]\n";
  for (auto& n : c.notes) os << "note: " << n << "\n";
  return os.str();
}

} // namespace scrollforge::hklattice
