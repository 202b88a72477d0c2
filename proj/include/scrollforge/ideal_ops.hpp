#pragma once

#include "ideal.hpp"
#include "linalg.hpp"

namespace scrollforge::idealkit {

// ---------------------------------------------------------------------------
// monomial enumeration and graded pieces
// ---------------------------------------------------------------------------

inline void enumerate_monomials_rec(int nvars, int var, int left, Monomial& cur,
                                    std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.e[var] = static_cast<uint8_t>(left);
    cur.deg = 0;
    for (int i = 0; i < nvars; ++i) cur.deg = static_cast<uint16_t>(cur.deg + cur.e[i]);
    out.push_back(cur);
    cur.e[var] = 0;
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur.e[var] = static_cast<uint8_t>(e);
    enumerate_monomials_rec(nvars, var + 1, left - e, cur, out);
  }
  cur.e[var] = 0;
}

// all degree-d monomials, sorted descending by the ring order
inline std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d) {
  std::vector<Monomial> out;
  Monomial cur;
  enumerate_monomials_rec(ring->nvars, 0, d, cur, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return polycore::mono_cmp(a, b, ring->order, ring->nvars) > 0;
  });
  return out;
}

// dimension of (S/I)_d = number of standard monomials of degree d
inline int graded_dim(const Ideal& I, int d, const Budget& budget = default_budget()) {
  if (I.is_zero_ideal()) return static_cast<int>(monomials_of_degree(I.ring(), d).size());
  const auto& gb = I.groebner(budget);
  auto mons = monomials_of_degree(I.ring(), d);
  int count = 0;
  for (auto& m : mons) {
    bool divisible = false;
    for (auto& g : gb.elems)
      if (g.lead().mono.divides(m)) { divisible = true; break; }
    if (!divisible) ++count;
  }
  return count;
}

// canonical basis (RREF rows) of the degree-d piece of I
inline std::vector<Polynomial> graded_piece(const Ideal& I, int d,
                                            const Budget& budget = default_budget()) {
  const RingPtr& ring = I.ring();
  auto mons = monomials_of_degree(ring, d);
  std::unordered_map<Monomial, size_t, polycore::MonomialHash> col;
  for (size_t i = 0; i < mons.size(); ++i) col[mons[i]] = i;
  std::vector<Polynomial> rows_src;
  const auto& gb = I.is_zero_ideal() ? std::vector<Polynomial>{} : I.groebner(budget).elems;
  for (auto& g : gb) {
    if (!g.is_homogeneous()) throw std::invalid_argument("graded_piece: inhomogeneous ideal");
    int dg = g.degree();
    if (dg > d) continue;
    for (auto& m : monomials_of_degree(ring, d - dg)) rows_src.push_back(g.times_term(m, 1));
  }
  if (rows_src.empty()) return {};
  linalg::Mat mat(ring->field, rows_src.size(), mons.size());
  for (size_t r = 0; r < rows_src.size(); ++r)
    for (auto& t : rows_src[r].terms()) mat.at(r, col.at(t.mono)) = t.coeff;
  auto pivots = linalg::rref(mat);
  std::vector<Polynomial> out;
  for (size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Term> ts;
    for (size_t c = 0; c < mons.size(); ++c)
      if (mat.at(r, c)) ts.push_back({mons[c], mat.at(r, c)});
    out.push_back(Polynomial::from_terms(ring, std::move(ts)));
  }
  return out;
}

// minimal homogeneous generators, degree by degree
inline std::vector<Polynomial> minimal_generators(const Ideal& I,
                                                  const Budget& budget = default_budget()) {
  if (I.is_zero_ideal()) return {};
  std::vector<Polynomial> gens = I.groebner(budget).elems;
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return Polynomial::compare(a, b) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& g : gens) {
    Ideal sub(I.ring(), minimal);
    if (minimal.empty() || !sub.contains(g, budget)) minimal.push_back(g);
  }
  return minimal;
}

// ---------------------------------------------------------------------------
// ring plumbing: auxiliary variable in front, variable permutations
// ---------------------------------------------------------------------------

inline RingPtr prepend_var(const RingPtr& ring, const std::string& name,
                           MonomialOrder ord) {
  std::vector<std::string> names;
  names.push_back(name);
  for (auto& n : ring->names) names.push_back(n);
  return polycore::make_ring(ring->p(), names, ord);
}

inline std::vector<int> shift_map(int n, int by) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + by;
  return v;
}

// ---------------------------------------------------------------------------
// elimination, intersection, colon, saturation
// ---------------------------------------------------------------------------

// I \cap k[x_k,...]: generators of the elimination ideal in the same ring
// (no occurrence of the first k variables), via a block(k) basis.
inline Ideal eliminate(const Ideal& I, int k, const Budget& budget = default_budget()) {
  if (k == 0) return Ideal(I.ring(), I.groebner(budget).elems);
  const auto& gb = I.groebner(MonomialOrder::block(k), budget);
  std::vector<Polynomial> kept;
  for (auto& g : gb.elems) {
    bool pure = true;
    for (auto& t : g.terms())
      for (int i = 0; i < k && pure; ++i)
        if (t.mono.e[i]) pure = false;
    if (pure) kept.push_back(polycore::map_poly(g, I.ring(), polycore::identity_map(I.ring()->nvars)));
  }
  return Ideal(I.ring(), std::move(kept));
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> gens = I.gens();
  for (auto& g : J.gens()) gens.push_back(g);
  return Ideal(I.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> gens;
  for (auto& a : I.gens())
    for (auto& b : J.gens()) gens.push_back(a * b);
  return Ideal(I.ring(), std::move(gens));
}

// I \cap J via one auxiliary variable u and elimination:
// (u*I + (1-u)*J) \cap k[x].
inline Ideal ideal_intersect(const Ideal& I, const Ideal& J,
                             const Budget& budget = default_budget()) {
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(I.ring(), {});
  const RingPtr& ring = I.ring();
  RingPtr ext = prepend_var(ring, "u", MonomialOrder::block(1));
  auto shift = shift_map(ring->nvars, 1);
  Polynomial u = Polynomial::variable(ext, 0);
  Polynomial one_minus_u = Polynomial::constant(ext, 1) - u;
  std::vector<Polynomial> gens;
  for (auto& g : I.gens()) gens.push_back(u * polycore::map_poly(g, ext, shift));
  for (auto& g : J.gens()) gens.push_back(one_minus_u * polycore::map_poly(g, ext, shift));
  Ideal big(ext, std::move(gens));
  Ideal elim = eliminate(big, 1, budget);
  std::vector<int> back(ext->nvars, -1);
  for (int i = 0; i < ring->nvars; ++i) back[i + 1] = i;
  std::vector<Polynomial> out;
  for (auto& g : elim.gens()) out.push_back(polycore::map_poly(g, ring, back));
  return Ideal(ring, std::move(out));
}

// exact division g / f (throws if not divisible)
inline Polynomial poly_div_exact(const Polynomial& g, const Polynomial& f) {
  const RingPtr& ring = g.ring();
  Polynomial q(ring), r = g;
  std::vector<Term> qt;
  while (!r.is_zero()) {
    const Term& lt = r.lead();
    if (!f.lead().mono.divides(lt.mono))
      throw std::domain_error("poly_div_exact: not divisible");
    Monomial m = polycore::mono_div(lt.mono, f.lead().mono);
    uint32_t c = ring->field.mul(lt.coeff, ring->field.inv(f.lead().coeff));
    qt.push_back({m, c});
    r = r - f.times_term(m, c);
  }
  return Polynomial::from_terms(ring, std::move(qt));
}

// I : f for a single polynomial, via (I \cap <f>) / f
inline Ideal colon_single(const Ideal& I, const Polynomial& f,
                          const Budget& budget = default_budget()) {
  if (f.is_zero()) throw std::invalid_argument("colon by zero");
  Ideal inter = ideal_intersect(I, Ideal(I.ring(), {f}), budget);
  std::vector<Polynomial> gens;
  for (auto& g : inter.gens()) gens.push_back(poly_div_exact(g, f));
  return Ideal(I.ring(), std::move(gens));
}

// I : J = intersection of single colons over the generators of J
inline Ideal ideal_colon(const Ideal& I, const Ideal& J,
                         const Budget& budget = default_budget()) {
  if (J.is_zero_ideal()) throw std::invalid_argument("colon by zero ideal");
  bool first = true;
  Ideal acc;
  for (auto& f : J.gens()) {
    Ideal c = colon_single(I, f, budget);
    acc = first ? c : ideal_intersect(acc, c, budget);
    first = false;
  }
  return acc;
}

// I : J^infty by iterated colon with reduced-basis stabilization
inline Ideal ideal_saturate(const Ideal& I, const Ideal& J,
                            const Budget& budget = default_budget()) {
  Ideal cur = I;
  for (;;) {
    Ideal next = ideal_colon(cur, J, budget);
    if (next.equals(cur, budget)) return cur;
    cur = next;
  }
}

// ---------------------------------------------------------------------------
// saturation with respect to single variables and the irrelevant ideal
// ---------------------------------------------------------------------------

inline Ideal permute_ideal(const Ideal& I, std::span<const int> perm, const RingPtr& target) {
  std::vector<Polynomial> gens;
  for (auto& g : I.gens()) gens.push_back(polycore::map_poly(g, target, perm));
  return Ideal(target, std::move(gens));
}

// I : x_v^infty via the reverse-lex trick: in degrevlex with x_v last, the
// saturation is generated by the basis elements with their x_v powers
// stripped (homogeneous I only).
inline Ideal saturate_variable(const Ideal& I, int v, const Budget& budget = default_budget()) {
  const RingPtr& ring = I.ring();
  int n = ring->nvars;
  std::vector<int> perm(n), back(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (i != v) perm[i] = k++;
  perm[v] = n - 1;
  for (int i = 0; i < n; ++i) back[perm[i]] = i;
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[perm[i]] = ring->names[i];
  RingPtr pring = polycore::make_ring(ring->p(), names, MonomialOrder::degrevlex());
  Ideal P = permute_ideal(I, perm, pring);
  const auto& gb = P.groebner(MonomialOrder::degrevlex(), budget);
  std::vector<Polynomial> stripped;
  for (auto& g : gb.elems) {
    int minexp = 255;
    for (auto& t : g.terms()) minexp = std::min(minexp, static_cast<int>(t.mono.e[n - 1]));
    if (minexp == 0) {
      stripped.push_back(g);
    } else {
      Polynomial d = Polynomial::variable(pring, n - 1, minexp);
      stripped.push_back(poly_div_exact(g, d));
    }
  }
  Ideal S(pring, std::move(stripped));
  // canonicalize in the original ring
  return permute_ideal(Ideal(pring, S.groebner(budget).elems), back, ring);
}

// saturation by the irrelevant maximal ideal: intersection of the
// per-variable saturations (they coincide for generic data, in which case
// no intersection is computed).
inline Ideal saturate_irrelevant(const Ideal& I, const Budget& budget = default_budget()) {
  if (I.is_zero_ideal()) return I;
  if (I.is_unit(budget)) return I;
  const RingPtr& ring = I.ring();
  std::vector<Ideal> sats;
  for (int v = 0; v < ring->nvars; ++v) sats.push_back(saturate_variable(I, v, budget));
  std::vector<Ideal> distinct;
  for (auto& s : sats) {
    bool seen = false;
    for (auto& d : distinct)
      if (d.equals(s, budget)) { seen = true; break; }
    if (!seen) distinct.push_back(s);
  }
  Ideal acc = distinct[0];
  for (size_t i = 1; i < distinct.size(); ++i) acc = ideal_intersect(acc, distinct[i], budget);
  return Ideal(ring, acc.groebner(budget).elems);
}

enum class IdealOp { sum, product, intersection, colon, saturation };

// the spec-level ideal algebra entry point
inline Ideal ideal_algebra(const Ideal& I, const Ideal& J, IdealOp op,
                           const Budget& budget = default_budget()) {
  switch (op) {
    case IdealOp::sum: return ideal_sum(I, J);
    case IdealOp::product: return ideal_product(I, J);
    case IdealOp::intersection: return ideal_intersect(I, J, budget);
    case IdealOp::colon: return ideal_colon(I, J, budget);
    case IdealOp::saturation: return ideal_saturate(I, J, budget);
  }
  throw std::logic_error("ideal_algebra: bad op");
}

} // namespace scrollforge::idealkit
