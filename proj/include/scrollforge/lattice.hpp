#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace scrollforge::hklattice {

// Integer class a*f + b*d on the divisor side or a*fp + b*dp on the curve
// side of the Hilbert square of a K3 surface of genus g.
enum class Side { divisor, curve };

struct LatticeClass {
  int64_t a = 0;
  int64_t b = 0;
  Side side = Side::curve;
  int64_t g = 22;

  static LatticeClass div(int64_t a, int64_t b, int64_t g = 22) {
    return {a, b, Side::divisor, g};
  }
  static LatticeClass cur(int64_t a, int64_t b, int64_t g = 22) {
    return {a, b, Side::curve, g};
  }

  std::string str() const {
    const char* f = side == Side::divisor ? "f" : "fp";
    const char* d = side == Side::divisor ? "d" : "dp";
    std::ostringstream os;
    os << a << f << (b < 0 ? "" : "+") << b << d;
    return os.str();
  }
};

// Beauville-Bogomolov form: on divisors q(f,f)=2g-2, q(f,d)=0, q(d,d)=-2;
// on curve classes q(fp,fp)=2g-2, q(fp,dp)=0, q(dp,dp)=-1/2.
inline Rational bb_q(const LatticeClass& x, const LatticeClass& y) {
  if (x.side != y.side || x.g != y.g)
    throw std::invalid_argument("bb_q: mixed sides or genus");
  Rational qdd = x.side == Side::divisor ? Rational(-2) : Rational(-1, 2);
  return Rational(x.a * y.a * (2 * x.g - 2)) + qdd * Rational(x.b * y.b);
}

inline Rational bb_q(const LatticeClass& x) { return bb_q(x, x); }

// intersection pairing between the two sides: f.fp = 2g-2, d.dp = -1,
// f.dp = d.fp = 0
inline int64_t pair(const LatticeClass& div, const LatticeClass& cur) {
  if (div.side == cur.side) throw std::invalid_argument("pair: need one class per side");
  if (div.g != cur.g) throw std::invalid_argument("pair: genus mismatch");
  const LatticeClass& D = div.side == Side::divisor ? div : cur;
  const LatticeClass& C = div.side == Side::divisor ? cur : div;
  return D.a * C.a * (2 * D.g - 2) - D.b * C.b;
}

// the Pluecker polarization class 2f - 9d (genus 22)
inline LatticeClass plucker_class() { return LatticeClass::div(2, -9, 22); }

// degree of a curve class with respect to the Pluecker line bundle
inline int64_t plucker_degree(const LatticeClass& cur) {
  if (cur.side != Side::curve) throw std::invalid_argument("plucker_degree: curve side only");
  return pair(plucker_class(), cur);
}

// R^2 = (deg)^2/2 - q(Z,Z) for the scroll associated to a degree-9 class
inline Rational scroll_self_intersection(const LatticeClass& cur) {
  int64_t deg = plucker_degree(cur);
  return Rational(deg * deg, 2) - bb_q(cur);
}

struct Degree9Row {
  LatticeClass cls;
  Rational q;
  Rational r_squared;
  bool accepted = false; // effective and compatible with the double point count
};

// All effective degree-9 curve classes at g = 22: solutions of 84a - 9b'
// with the effectivity bound q >= -5/2, filtered by R^2 = 41.
inline std::vector<Degree9Row> enumerate_degree9() {
  std::vector<Degree9Row> rows;
  // plucker_degree(a, b) = 84 a + 9 b = 9 forces a = 3 a1, b = 1 - 28 a1;
  // q >= -5/2 becomes 7 a1^2 - 14 a1 - 1 <= 0, i.e. a1 in {0, 1, 2}
  for (int64_t a1 = 0; a1 <= 2; ++a1) {
    LatticeClass z = LatticeClass::cur(3 * a1, 1 - 28 * a1);
    Degree9Row row;
    row.cls = z;
    row.q = bb_q(z);
    row.r_squared = scroll_self_intersection(z);
    row.accepted = (row.r_squared == Rational(41));
    rows.push_back(row);
  }
  return rows;
}

// brute-force oracle companion: all classes of Pluecker degree 9 with
// q >= -5/2 in a box
inline std::vector<LatticeClass> degree9_brute_force(int64_t amax, int64_t bmax) {
  std::vector<LatticeClass> out;
  for (int64_t a = -amax; a <= amax; ++a)
    for (int64_t b = -bmax; b <= bmax; ++b) {
      LatticeClass z = LatticeClass::cur(a, b);
      if (plucker_degree(z) != 9) continue;
      if (bb_q(z) >= Rational(-5, 2)) out.push_back(z);
    }
  return out;
}

// discriminant of the saturated rank-2 lattice <h^2, R> in a cubic fourfold
inline int64_t scroll_lattice_discriminant(int64_t h2h2, int64_t h2r, int64_t r2) {
  return h2h2 * r2 - h2r * h2r;
}

// ---------------------------------------------------------------------------
// double point formula
// ---------------------------------------------------------------------------

struct DoublePointInput {
  int64_t r_squared = 0;  // R^2 in the fourfold
  int64_t h_squared = 0;  // h^2 . R = deg R
  int64_t k_squared = 0;  // K_R^2
  int64_t h_dot_k = 0;    // h . K_R
  int64_t chi_top = 0;    // topological Euler number
};

struct DoublePointResult {
  Rational count;
  bool integral = false; // flags half-integer results instead of throwing
};

// 2 D(R) = R^2 - 6 h^2 - K_R^2 - 3 h.K_R + chi_top
inline DoublePointResult double_points(const DoublePointInput& in) {
  Rational two_d(in.r_squared - 6 * in.h_squared - in.k_squared - 3 * in.h_dot_k + in.chi_top);
  DoublePointResult res;
  res.count = two_d / Rational(2);
  res.integral = res.count.is_integer();
  return res;
}

// ---------------------------------------------------------------------------
// Hassett discriminant conditions
// ---------------------------------------------------------------------------

struct DiscriminantVerdict {
  int64_t d = 0;
  bool divisorial = false;    // C_d nonempty (an irreducible divisor)
  bool k3_associated = false; // Hodge-theoretically associated K3 exists
};

// divisorial: d > 6 and d = 0 or 2 (mod 6).  K3-associated: additionally
// d not divisible by 4 or 9 or by any odd prime p = 2 (mod 3); the paper's
// phrase literally includes p = 2, which would exclude every admissible d,
// so the odd-prime reading is implemented (see the census note).
inline DiscriminantVerdict hassett_verdict(int64_t d) {
  if (d < 1) throw std::invalid_argument("hassett_verdict: d must be positive");
  DiscriminantVerdict v;
  v.d = d;
  v.divisorial = d > 6 && (d % 6 == 0 || d % 6 == 2);
  if (!v.divisorial) return v;
  if (d % 4 == 0 || d % 9 == 0) return v;
  int64_t m = d;
  while (m % 2 == 0) m /= 2; // p = 2 exempt under the odd-prime reading
  for (int64_t p = 3; p * p <= m; p += 2) {
    while (m % p == 0) {
      if (p % 3 == 2) return v;
      m /= p;
    }
  }
  if (m > 1 && m % 3 == 2) return v; // leftover odd prime factor
  v.k3_associated = true;
  return v;
}

// ---------------------------------------------------------------------------
// the nef-ray involution
// ---------------------------------------------------------------------------

enum class Transport { pushforward, pullback };

// Matrix action of the anti-automorphism exchanging the two Hilbert-square
// structures: on divisors f' -> 55f - 252d, d' -> 12f - 55d; on curve
// classes f' -> 55fp - 504dp, d' -> 6fp - 55dp.  Both matrices square to
// the identity, so pushforward and pullback act by the same matrix.
inline LatticeClass involution_transport(const LatticeClass& x, Transport = Transport::pushforward) {
  if (x.g != 22) throw std::invalid_argument("involution_transport: g = 22 only");
  if (x.side == Side::divisor)
    return LatticeClass::div(55 * x.a + 12 * x.b, -252 * x.a - 55 * x.b);
  return LatticeClass::cur(55 * x.a + 6 * x.b, -504 * x.a - 55 * x.b);
}

inline std::array<std::array<int64_t, 2>, 2> involution_matrix(Side side) {
  if (side == Side::divisor) return {{{55, 12}, {-252, -55}}};
  return {{{55, 6}, {-504, -55}}};
}

} // namespace scrollforge::hklattice
