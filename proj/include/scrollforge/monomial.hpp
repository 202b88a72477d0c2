#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>

namespace scrollforge::polycore {

inline constexpr int kMaxVars = 16;

// Exponent vector with cached total degree.  Positions past the ring's
// variable count stay zero.
struct Monomial {
  std::array<uint8_t, kMaxVars> e{};
  uint16_t deg = 0;

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  bool is_one() const { return deg == 0; }
};

inline Monomial mono_one() { return Monomial{}; }

inline Monomial mono_var(int i, int pow = 1) {
  Monomial m;
  m.e[i] = static_cast<uint8_t>(pow);
  m.deg = static_cast<uint16_t>(pow);
  return m;
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  int d = a.deg + b.deg;
  if (d > 0xffff) throw std::overflow_error("monomial degree overflow");
  for (int i = 0; i < kMaxVars; ++i) {
    int s = a.e[i] + b.e[i];
    if (s > 0xff) throw std::overflow_error("monomial exponent overflow");
    m.e[i] = static_cast<uint8_t>(s);
  }
  m.deg = static_cast<uint16_t>(d);
  return m;
}

// quotient a / b; requires b | a
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<uint8_t>(a.e[i] - b.e[i]);
  m.deg = static_cast<uint16_t>(a.deg - b.deg);
  return m;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    m.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    d += m.e[i];
  }
  m.deg = static_cast<uint16_t>(d);
  return m;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (int i = 0; i < kMaxVars; ++i) {
      h ^= m.e[i];
      h *= 0x100000001b3ULL;
    }
    return static_cast<size_t>(h);
  }
};

// Total order on monomials.  block(k) eliminates the first k variables:
// the leading block is compared degrevlex first, then the tail block.
struct MonomialOrder {
  enum class Kind { degrevlex, lex, block };
  Kind kind = Kind::degrevlex;
  int block_vars = 0;

  static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder block(int k) { return {Kind::block, k}; }

  std::string name() const {
    switch (kind) {
      case Kind::degrevlex: return "degrevlex";
      case Kind::lex: return "lex";
      case Kind::block: return "block" + std::to_string(block_vars);
    }
    return "?";
  }

  static MonomialOrder from_name(const std::string& s) {
    if (s == "degrevlex") return degrevlex();
    if (s == "lex") return lex();
    if (s.rfind("block", 0) == 0) return block(std::stoi(s.substr(5)));
    throw std::invalid_argument("unknown monomial order: " + s);
  }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Kind::block || block_vars == o.block_vars);
  }
};

// degrevlex on the variable range [lo, hi): compare degree, then the last
// differing exponent (larger exponent late means smaller monomial).
inline int cmp_degrevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

inline int cmp_lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

// returns <0 if a < b, 0 if equal, >0 if a > b
inline int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord, int nvars) {
  switch (ord.kind) {
    case MonomialOrder::Kind::degrevlex:
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      return cmp_degrevlex_range(a, b, 0, nvars);
    case MonomialOrder::Kind::lex:
      return cmp_lex_range(a, b, 0, nvars);
    case MonomialOrder::Kind::block: {
      int c = cmp_degrevlex_range(a, b, 0, ord.block_vars);
      if (c) return c;
      return cmp_degrevlex_range(a, b, ord.block_vars, nvars);
    }
  }
  return 0;
}

} // namespace scrollforge::polycore
