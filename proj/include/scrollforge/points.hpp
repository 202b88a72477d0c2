#pragma once

#include "hilbert.hpp"
#include "rng.hpp"

namespace scrollforge::projlab {

using idealkit::Budget;
using idealkit::default_budget;
using idealkit::Ideal;
using polycore::Polynomial;
using polycore::PrimeField;
using polycore::RingPtr;

// ---------------------------------------------------------------------------
// projective points over F_p
// ---------------------------------------------------------------------------

struct Point {
  std::vector<uint32_t> c;

  bool operator==(const Point& o) const { return c == o.c; }
  bool operator<(const Point& o) const { return c < o.c; } // lex on normalized coords
};

inline Point normalize_point(std::vector<uint32_t> v, const PrimeField& f) {
  size_t lead = v.size();
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] % f.modulus()) { lead = i; break; }
  if (lead == v.size()) throw std::invalid_argument("zero vector is not a projective point");
  uint32_t inv = f.inv(v[lead] % f.modulus());
  for (auto& x : v) x = f.mul(x % f.modulus(), inv);
  return Point{std::move(v)};
}

inline Point random_point(const RingPtr& ring, Rng& rng) {
  std::vector<uint32_t> v(ring->nvars);
  for (auto& x : v) x = static_cast<uint32_t>(rng.below(ring->p()));
  v[ring->nvars - 1] = 1 + static_cast<uint32_t>(rng.below(ring->p() - 1));
  return normalize_point(std::move(v), ring->field);
}

inline uint32_t eval_at(const Polynomial& f, const Point& p) { return f.evaluate(p.c); }

// ideal of a single rational point: canonical basis of the linear forms
// vanishing there
inline Ideal point_ideal(const RingPtr& ring, const Point& p) {
  linalg::Mat m(ring->field, 1, ring->nvars);
  for (int j = 0; j < ring->nvars; ++j) m.at(0, j) = p.c[j];
  auto ker = linalg::kernel(m);
  std::vector<Polynomial> gens;
  for (auto& v : ker) gens.push_back(Polynomial::linear(ring, v));
  return Ideal(ring, std::move(gens));
}

// vanishing ideal of a finite set of distinct rational points, assembled
// degree by degree and certified against the expected length
inline Ideal vanishing_ideal(const RingPtr& ring, const std::vector<Point>& pts,
                             const Budget& budget = default_budget()) {
  if (pts.empty()) throw std::invalid_argument("vanishing_ideal: no points");
  if (pts.size() == 1) return point_ideal(ring, pts[0]);
  std::vector<Polynomial> gens;
  size_t want = pts.size();
  int reached = -1;
  for (int d = 1; d <= 2 * static_cast<int>(want) + 2; ++d) {
    auto mons = idealkit::monomials_of_degree(ring, d);
    linalg::Mat m(ring->field, pts.size(), mons.size());
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = 0; j < mons.size(); ++j)
        m.at(i, j) = Polynomial::monomial(ring, mons[j]).evaluate(pts[i].c);
    size_t rk = mons.size() - linalg::kernel(m).size();
    for (auto& v : linalg::kernel(m)) {
      std::vector<polycore::Term> ts;
      for (size_t j = 0; j < mons.size(); ++j)
        if (v[j]) ts.push_back({mons[j], v[j]});
      gens.push_back(Polynomial::from_terms(ring, std::move(ts)));
    }
    if (rk == want && reached < 0) reached = d;
    if (reached > 0 && d >= reached + 1) break;
  }
  Ideal I(ring, std::move(gens));
  auto h = idealkit::hilbert_data(I, budget);
  if (h.dim != 0 || h.degree != static_cast<int64_t>(want))
    throw std::logic_error("vanishing_ideal: certification failed");
  return I;
}

// ---------------------------------------------------------------------------
// binary forms f(s,t) = sum c_i s^(d-i) t^i, used for fiber and root work
// ---------------------------------------------------------------------------

struct BinaryForm {
  PrimeField field;
  std::vector<uint32_t> c; // degree = c.size() - 1

  int degree() const { return static_cast<int>(c.size()) - 1; }

  uint32_t eval(uint32_t s, uint32_t t) const {
    // Horner in two stages
    uint32_t acc = 0;
    uint32_t sp = 1;
    std::vector<uint32_t> spow(c.size());
    for (size_t i = 0; i < c.size(); ++i) { spow[i] = sp; sp = field.mul(sp, s); }
    uint32_t tp = 1;
    for (size_t i = 0; i < c.size(); ++i) {
      acc = field.add(acc, field.mul(c[i], field.mul(spow[c.size() - 1 - i], tp)));
      tp = field.mul(tp, t);
    }
    return acc;
  }
};

// extract binary form from a polynomial in a 2-variable ring
inline BinaryForm binary_of(const Polynomial& f) {
  int d = f.degree();
  BinaryForm b{f.ring()->field, std::vector<uint32_t>(d + 1, 0)};
  for (auto& t : f.terms()) {
    if (static_cast<int>(t.mono.deg) != d) throw std::invalid_argument("binary_of: not homogeneous");
    b.c[t.mono.e[1]] = t.coeff;
  }
  return b;
}

// all roots (s:t) in P^1(F_p) with multiplicities, ordered t=0 first then s=1,t ascending.
// Exhaustive scan: p is small enough that this is cheap and deterministic.
inline std::vector<std::pair<Point, int>> binary_roots(const BinaryForm& f) {
  const PrimeField& F = f.field;
  uint32_t p = F.modulus();
  std::vector<std::pair<Point, int>> out;
  auto mult_at = [&](uint32_t s, uint32_t t) {
    // multiplicity via successive synthetic division by (t*S - s*T)
    std::vector<uint32_t> cur = f.c;
    int m = 0;
    while (cur.size() > 1) {
      // evaluate
      BinaryForm g{F, cur};
      if (g.eval(s, t) != 0) break;
      // divide by (t*S - s*T) when t != 0, else by T
      std::vector<uint32_t> q(cur.size() - 1, 0);
      if (t != 0) {
        uint32_t tinv = F.inv(t);
        uint32_t carry = 0;
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
          q[i] = F.mul(F.add(cur[i], carry), tinv);
          carry = F.mul(q[i], s);
        }
      } else {
        for (size_t i = 0; i + 1 < cur.size(); ++i) q[i] = cur[i + 1];
      }
      cur = q;
      ++m;
    }
    if (cur.size() == 1 && cur[0] == 0 && m == 0) m = static_cast<int>(f.c.size()); // zero form
    return m;
  };
  for (uint32_t t0 = 0; t0 < p; ++t0) {
    if (f.eval(1, t0) == 0) {
      int m = mult_at(1, t0);
      if (m) out.push_back({Point{{1, t0}}, m});
    }
  }
  if (f.c.back() == 0) { // (0:1)
    int m = mult_at(0, 1);
    if (m) out.push_back({Point{{0, 1}}, m});
  }
  return out;
}

// roots of a quadratic binary form; empty when irreducible over F_p
inline std::vector<Point> quadratic_roots(const PrimeField& F, uint32_t a, uint32_t b,
                                          uint32_t cc) {
  // a s^2 + b s t + c t^2
  if (a == 0) {
    if (b == 0) {
      if (cc == 0) throw std::invalid_argument("zero quadratic");
      return {Point{{1, 0}}, Point{{1, 0}}}; // c t^2: double root
    }
    // t (b s + c t)
    return {Point{{1, 0}}, normalize_point({F.neg(cc), b}, F)};
  }
  uint32_t disc = F.sub(F.mul(b, b), F.mul(4, F.mul(a, cc)));
  if (!F.is_square(disc)) return {};
  uint32_t r = F.sqrt(disc);
  uint32_t inv2a = F.inv(F.mul(2, a));
  uint32_t s1 = F.mul(F.add(F.neg(b), r), inv2a);
  uint32_t s2 = F.mul(F.sub(F.neg(b), r), inv2a);
  return {normalize_point({s1, 1}, F), normalize_point({s2, 1}, F)};
}

} // namespace scrollforge::projlab
