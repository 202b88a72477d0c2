#pragma once

#include "nodes.hpp"

namespace scrollforge::linsys {

using idealkit::Budget;
using idealkit::default_budget;
using idealkit::graded_piece;
using idealkit::HilbertData;
using idealkit::Ideal;
using polycore::Polynomial;
using polycore::RingPtr;
using projlab::Point;
using projlab::ProjScheme;

// ---------------------------------------------------------------------------
// linear systems of plane forms with base conditions
// ---------------------------------------------------------------------------

// A base condition: vanish to the given order along a reduced
// zero-dimensional locus in P^2.
struct BaseCondition {
  ProjScheme locus;
  int multiplicity = 1;
};

struct FormBasis {
  int degree = 0;
  std::vector<Polynomial> basis; // canonical echelon basis
  int expected_dim = 0;          // naive count; equality flagged as generic
  bool generic = false;

  int dim() const { return static_cast<int>(basis.size()); }
};

// Degree-d piece of the intersection of the (ordinary) powers of the
// condition ideals; ordinary powers equal symbolic powers for the reduced
// plane points used here.
inline FormBasis forms_with_base_conditions(const RingPtr& plane, int d,
                                            const std::vector<BaseCondition>& conds,
                                            const Budget& budget = default_budget()) {
  if (d < 1) throw std::invalid_argument("forms_with_base_conditions: degree must be >= 1");
  FormBasis out;
  out.degree = d;
  Ideal J = Ideal::zero(plane);
  bool first = true;
  int64_t drop = 0;
  for (auto& c : conds) {
    if (c.multiplicity < 1) throw std::invalid_argument("multiplicity must be >= 1");
    Ideal power = c.locus.ideal;
    for (int k = 1; k < c.multiplicity; ++k)
      power = idealkit::ideal_product(power, c.locus.ideal);
    J = first ? power : idealkit::ideal_intersect(J, power, budget);
    first = false;
    int64_t len = idealkit::hilbert_data(c.locus.ideal, budget).degree;
    drop += len * (c.multiplicity + 1) * c.multiplicity / 2;
  }
  out.basis = first ? graded_piece(Ideal(plane, {Polynomial::constant(plane, 1)}), d, budget)
                    : graded_piece(J, d, budget);
  int total = static_cast<int>(idealkit::monomials_of_degree(plane, d).size());
  out.expected_dim = total - static_cast<int>(drop);
  out.generic = out.dim() == std::max(out.expected_dim, 0);
  return out;
}

// ---------------------------------------------------------------------------
// divisor class bookkeeping on blow-ups of P^2
// ---------------------------------------------------------------------------

// Class a*h - sum_i b_i E_i on the blow-up of P^2 at len(b) points,
// with K = -3h + sum E_i.
struct BlowupClass {
  int64_t a = 0;
  std::vector<int64_t> b;

  static BlowupClass uniform(int64_t a, int64_t bmult, int npts) {
    return BlowupClass{a, std::vector<int64_t>(npts, bmult)};
  }
};

inline int64_t intersect(const BlowupClass& c, const BlowupClass& d) {
  size_t n = std::max(c.b.size(), d.b.size());
  int64_t v = c.a * d.a;
  for (size_t i = 0; i < n; ++i) {
    int64_t bi = i < c.b.size() ? c.b[i] : 0;
    int64_t di = i < d.b.size() ? d.b[i] : 0;
    v -= bi * di;
  }
  return v;
}

inline BlowupClass canonical_class(int npts) {
  return BlowupClass{-3, std::vector<int64_t>(npts, -1)};
}

inline int64_t self_intersection(const BlowupClass& c) { return intersect(c, c); }

inline int64_t k_pairing(const BlowupClass& c) {
  return intersect(c, canonical_class(static_cast<int>(c.b.size())));
}

// adjunction: p_a = 1 + (C^2 + C.K)/2
inline int64_t arithmetic_genus(const BlowupClass& c) {
  int64_t s = self_intersection(c) + k_pairing(c);
  if (s % 2 != 0) throw std::domain_error("class_arithmetic: odd adjunction sum");
  return 1 + s / 2;
}

inline int64_t degree_under(const BlowupClass& c, const BlowupClass& embedding) {
  return intersect(c, embedding);
}

// Euler-characteristic Hilbert polynomial for the image of a blow-up
// surface embedded by `emb`, minus `nodes` non-normal double points:
// HP(t) = 1 + (D^2 t^2 - D.K t)/2 - nodes.
inline HilbertData surface_hp(const BlowupClass& emb, int64_t nodes = 0) {
  int64_t d2 = self_intersection(emb);
  int64_t dk = k_pairing(emb);
  HilbertData h;
  h.dim = 2;
  h.degree = d2;
  h.hp = {Rational(1 - nodes), Rational(-dk, 2), Rational(d2, 2)};
  return h;
}

// curve of class c on the surface, embedded by emb
inline HilbertData curve_hp(const BlowupClass& c, const BlowupClass& emb) {
  return idealkit::expect_curve(degree_under(c, emb), arithmetic_genus(c));
}

// ---------------------------------------------------------------------------
// rational maps and their images
// ---------------------------------------------------------------------------

// Tuple of equal-degree forms defining a rational map P^m --> P^k.
struct RationalMapModel {
  RingPtr source;
  RingPtr target;
  std::vector<Polynomial> forms;

  RationalMapModel(RingPtr src, RingPtr tgt, std::vector<Polynomial> f)
      : source(std::move(src)), target(std::move(tgt)), forms(std::move(f)) {
    if (forms.empty()) throw std::invalid_argument("RationalMapModel: no forms");
    int d = forms[0].degree();
    for (auto& g : forms)
      if (g.is_zero() || g.degree() != d || !g.is_homogeneous())
        throw std::invalid_argument("RationalMapModel: forms must be equal-degree nonzero");
    if (target->nvars != static_cast<int>(forms.size()))
      throw std::invalid_argument("RationalMapModel: target size mismatch");
  }

  int form_degree() const { return forms[0].degree(); }

  ProjScheme base_scheme(const Budget& budget = default_budget()) const {
    return projlab::make_scheme(source, forms, budget);
  }

  Point apply(const Point& p) const {
    std::vector<uint32_t> v;
    v.reserve(forms.size());
    for (auto& f : forms) v.push_back(f.evaluate(p.c));
    return projlab::normalize_point(std::move(v), source->field);
  }

  // composition: this o inner, with common factors of the composite forms
  // NOT removed (callers strip binary-form gcds where needed)
  std::vector<Polynomial> compose_forms(const std::vector<Polynomial>& inner) const {
    std::vector<Polynomial> out;
    out.reserve(forms.size());
    for (auto& f : forms) out.push_back(f.substitute(inner));
    return out;
  }
};

inline RationalMapModel map_from_basis(const RingPtr& source, const std::vector<Polynomial>& basis,
                                       const std::string& target_stem) {
  RingPtr target = polycore::make_ring(source->p(),
                                       polycore::default_names(static_cast<int>(basis.size()),
                                                               target_stem));
  return RationalMapModel(source, target, basis);
}

// Closure of m(X \ base locus); for X through base points this is the
// strict-transform image.  A Hilbert hint switches to the certified
// kernel route; otherwise exact graph elimination plus saturation.
inline ProjScheme image_scheme(const RationalMapModel& m, const ProjScheme& X,
                               const HilbertData* expected = nullptr, int max_degree = 8,
                               const Budget& budget = default_budget()) {
  bool inside = true;
  for (auto& f : m.forms)
    if (!X.ideal.contains(f, budget)) { inside = false; break; }
  if (inside) throw projlab::VerificationError("image_scheme: X inside the base scheme");
  Ideal img = expected ? projlab::map_image_kernel(X.ideal, m.forms, m.target, *expected,
                                                   max_degree, budget)
                       : idealkit::saturate_irrelevant(
                             projlab::map_image_elimination(X.ideal, m.forms, m.target, budget),
                             budget);
  return projlab::scheme_presaturated(m.target, std::move(img));
}

inline ProjScheme whole_space(const RingPtr& ring) {
  return projlab::scheme_presaturated(ring, Ideal::zero(ring));
}

} // namespace scrollforge::linsys
