#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ideal.hpp"

namespace scrollforge::idealkit {

// Deterministic, bit-exact ideal file format:
//   ring p=<prime> vars=<n> order=<name>
//   <one polynomial per line, canonical textual form, lines sorted>
inline std::string serialize_ideal(const Ideal& I) {
  std::vector<std::string> lines;
  for (auto& g : I.gens()) lines.push_back(g.to_string());
  std::sort(lines.begin(), lines.end());
  std::ostringstream os;
  os << "ring p=" << I.ring()->p() << " vars=" << I.ring()->nvars
     << " order=" << I.ring()->order.name() << "\n";
  for (auto& l : lines) os << l << "\n";
  return os.str();
}

inline Ideal parse_ideal(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("ideal parse: empty input");
  uint32_t p = 0;
  int nvars = 0;
  std::string order_name;
  {
    std::istringstream hs(header);
    std::string tok;
    hs >> tok;
    if (tok != "ring") throw std::invalid_argument("ideal parse: bad header");
    while (hs >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("ideal parse: bad header field");
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "p") p = static_cast<uint32_t>(std::stoul(val));
      else if (key == "vars") nvars = std::stoi(val);
      else if (key == "order") order_name = val;
    }
  }
  RingPtr ring = polycore::make_ring(p, nvars, polycore::MonomialOrder::from_name(order_name));
  std::vector<Polynomial> gens;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    gens.push_back(Polynomial::parse(ring, line));
  }
  return Ideal(ring, std::move(gens));
}

inline Ideal parse_ideal(const std::string& text) {
  std::istringstream is(text);
  return parse_ideal(is);
}

inline void write_ideal_file(const std::string& path, const Ideal& I) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_ideal(I);
}

inline Ideal read_ideal_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return parse_ideal(in);
}

} // namespace scrollforge::idealkit
