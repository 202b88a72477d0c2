#pragma once

#include <functional>

#include "io.hpp"
#include "points.hpp"

namespace scrollforge::projlab {

using idealkit::eliminate;
using idealkit::graded_dim;
using idealkit::graded_piece;
using idealkit::GroebnerBasis;
using idealkit::hilbert_data;
using idealkit::HilbertData;
using idealkit::Ideal;
using idealkit::normal_form;
using polycore::MonomialOrder;
using polycore::Term;

struct GenericityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Closed subscheme of P^n: ambient ring with n+1 variables and a saturated
// homogeneous ideal.
struct ProjScheme {
  RingPtr ring;
  Ideal ideal;

  int ambient_dim() const { return ring->nvars - 1; }
  bool is_empty(const Budget& b = default_budget()) const { return ideal.is_unit(b); }
  bool contains(const ProjScheme& other, const Budget& b = default_budget()) const {
    return other.ideal.contains_ideal(ideal, b); // X >= Y iff I_X <= I_Y
  }
  bool contains_point(const Point& p) const {
    for (auto& g : ideal.gens())
      if (eval_at(g, p) != 0) return false;
    return true;
  }
  bool equals(const ProjScheme& o, const Budget& b = default_budget()) const {
    return ideal.equals(o.ideal, b);
  }
};

inline ProjScheme make_scheme(const RingPtr& ring, std::vector<Polynomial> gens,
                              const Budget& budget = default_budget()) {
  Ideal I(ring, std::move(gens));
  return ProjScheme{ring, idealkit::saturate_irrelevant(I, budget)};
}

inline ProjScheme scheme_presaturated(const RingPtr& ring, Ideal I) {
  return ProjScheme{ring, std::move(I)};
}

inline HilbertData hilbert(const ProjScheme& X, const Budget& b = default_budget()) {
  return hilbert_data(X.ideal, b);
}

// Linear subspace: ideal generated by independent linear forms.
struct LinearSubspace {
  ProjScheme scheme;
  int codim = 0;

  int dim() const { return scheme.ambient_dim() - codim; }
  const std::vector<Polynomial>& forms() const { return scheme.ideal.gens(); }
};

// Smallest linear subspace containing X: the degree-1 piece of its ideal.
inline LinearSubspace span_of(const ProjScheme& X, const Budget& b = default_budget()) {
  if (X.is_empty(b)) throw std::invalid_argument("span: empty scheme");
  auto lin = graded_piece(X.ideal, 1, b);
  return LinearSubspace{scheme_presaturated(X.ring, Ideal(X.ring, lin)),
                        static_cast<int>(lin.size())};
}

inline LinearSubspace line_through(const RingPtr& ring, const Point& a, const Point& b) {
  linalg::Mat m(ring->field, 2, ring->nvars);
  for (int j = 0; j < ring->nvars; ++j) { m.at(0, j) = a.c[j]; m.at(1, j) = b.c[j]; }
  auto ker = linalg::kernel(m);
  if (static_cast<int>(ker.size()) != ring->nvars - 2)
    throw std::invalid_argument("line_through: coincident points");
  std::vector<Polynomial> gens;
  for (auto& v : ker) gens.push_back(Polynomial::linear(ring, v));
  return LinearSubspace{scheme_presaturated(ring, Ideal(ring, gens)), ring->nvars - 2};
}

// linear span of a list of rational points
inline LinearSubspace span_points(const RingPtr& ring, const std::vector<Point>& pts) {
  linalg::Mat m(ring->field, pts.size(), ring->nvars);
  for (size_t i = 0; i < pts.size(); ++i)
    for (int j = 0; j < ring->nvars; ++j) m.at(i, j) = pts[i].c[j];
  auto ker = linalg::kernel(m);
  std::vector<Polynomial> gens;
  for (auto& v : ker) gens.push_back(Polynomial::linear(ring, v));
  return LinearSubspace{scheme_presaturated(ring, Ideal(ring, gens)),
                        static_cast<int>(ker.size())};
}

// ---------------------------------------------------------------------------
// images of rational maps
// ---------------------------------------------------------------------------

// Exact graph elimination: in k[x, u, y] take I_X + <y_i - u*q_i(x)> and
// eliminate x and u; the result is the ideal of the cone over the closure
// of the image (no saturation by the base locus is needed in this form).
inline Ideal map_image_elimination(const Ideal& IX, const std::vector<Polynomial>& forms,
                                   const RingPtr& target, const Budget& budget = default_budget()) {
  const RingPtr& src = IX.ring();
  int ns = src->nvars, nt = target->nvars;
  if (static_cast<int>(forms.size()) != nt)
    throw std::invalid_argument("map_image_elimination: form count");
  std::vector<std::string> names = src->names;
  names.push_back("t@");
  for (auto& n : target->names) names.push_back(n);
  RingPtr big = polycore::make_ring(src->p(), names, MonomialOrder::block(ns + 1));
  auto sshift = idealkit::shift_map(ns, 0);
  std::vector<Polynomial> gens;
  for (auto& g : IX.gens()) gens.push_back(polycore::map_poly(g, big, sshift));
  Polynomial u = Polynomial::variable(big, ns);
  for (int i = 0; i < nt; ++i)
    gens.push_back(Polynomial::variable(big, ns + 1 + i) -
                   u * polycore::map_poly(forms[i], big, sshift));
  Ideal graph(big, std::move(gens));
  Ideal elim = eliminate(graph, ns + 1, budget);
  std::vector<int> back(big->nvars, -1);
  for (int i = 0; i < nt; ++i) back[ns + 1 + i] = i;
  std::vector<Polynomial> out;
  for (auto& g : elim.gens()) out.push_back(polycore::map_poly(g, target, back));
  return Ideal(target, std::move(out));
}

// Exact degree-by-degree kernel of the map's coordinate ring homomorphism,
// certified against an expected Hilbert polynomial.  Every degree-d piece
// {F : F(forms) in I_X} is computed by linear algebra over F_p, so the
// assembled ideal is a saturated subideal of the image ideal; equality of
// Hilbert polynomials then pins it exactly.
inline Ideal map_image_kernel(const Ideal& IX, const std::vector<Polynomial>& forms,
                              const RingPtr& target, const HilbertData& expected,
                              int max_degree = 8, const Budget& budget = default_budget()) {
  const RingPtr& src = IX.ring();
  const GroebnerBasis* gb = IX.is_zero_ideal() ? nullptr : &IX.groebner(budget);
  // power cache for form substitution
  std::vector<std::vector<Polynomial>> pows(forms.size());
  for (size_t i = 0; i < forms.size(); ++i) pows[i].push_back(Polynomial::constant(src, 1));
  auto subst = [&](const polycore::Monomial& m) {
    Polynomial acc = Polynomial::constant(src, 1);
    for (size_t i = 0; i < forms.size(); ++i) {
      int e = m.e[i];
      if (!e) continue;
      while (static_cast<int>(pows[i].size()) <= e) pows[i].push_back(pows[i].back() * forms[i]);
      acc = acc * pows[i][e];
    }
    return acc;
  };
  std::vector<Polynomial> gens;
  for (int d = 1; d <= max_degree; ++d) {
    auto mons = idealkit::monomials_of_degree(target, d);
    std::vector<Polynomial> reduced;
    reduced.reserve(mons.size());
    std::unordered_map<polycore::Monomial, size_t, polycore::MonomialHash> col;
    for (auto& m : mons) {
      Polynomial s = subst(m);
      if (gb) s = normal_form(s, *gb, budget);
      for (auto& t : s.terms()) col.try_emplace(t.mono, col.size());
      reduced.push_back(std::move(s));
    }
    linalg::Mat mat(target->field, mons.size(), std::max<size_t>(col.size(), 1));
    for (size_t r = 0; r < reduced.size(); ++r)
      for (auto& t : reduced[r].terms()) mat.at(r, col.at(t.mono)) = t.coeff;
    // kernel rows act on the left: combinations of target monomials
    linalg::Mat tr(target->field, mat.cols, mat.rows);
    for (size_t i = 0; i < mat.rows; ++i)
      for (size_t j = 0; j < mat.cols; ++j) tr.at(j, i) = mat.at(i, j);
    auto ker = linalg::kernel(std::move(tr));
    for (auto& v : ker) {
      std::vector<Term> ts;
      for (size_t j = 0; j < mons.size(); ++j)
        if (v[j]) ts.push_back({mons[j], v[j]});
      gens.push_back(Polynomial::from_terms(target, std::move(ts)));
    }
    if (!gens.empty()) {
      Ideal J = idealkit::saturate_irrelevant(Ideal(target, gens), budget);
      if (hilbert_data(J, budget).same_polynomial(expected)) return J;
    }
  }
  throw GenericityError("map_image_kernel: expected Hilbert polynomial not reached by degree " +
                        std::to_string(max_degree));
}

// ---------------------------------------------------------------------------
// projections
// ---------------------------------------------------------------------------

// Closure of the image of X under projection from a linear center; target
// coordinates are the center's defining forms.  With an expected Hilbert
// polynomial the certified kernel route is used, otherwise graph elimination.
inline ProjScheme project_from(const ProjScheme& X, const LinearSubspace& center,
                               const HilbertData* expected = nullptr, int max_degree = 10,
                               const Budget& budget = default_budget()) {
  const auto& forms = center.forms();
  if (forms.empty()) throw std::invalid_argument("project_from: trivial center");
  bool inside = true;
  for (auto& f : forms)
    if (!X.ideal.contains(f, budget)) { inside = false; break; }
  if (inside) throw VerificationError("project_from: X contained in center, empty image");
  RingPtr target = polycore::make_ring(X.ring->p(), static_cast<int>(forms.size()),
                                       MonomialOrder::degrevlex());
  Ideal img = expected
                  ? map_image_kernel(X.ideal, forms, target, *expected, max_degree, budget)
                  : idealkit::saturate_irrelevant(
                        map_image_elimination(X.ideal, forms, target, budget), budget);
  return scheme_presaturated(target, std::move(img));
}

// ---------------------------------------------------------------------------
// singular loci, residuation, intersections
// ---------------------------------------------------------------------------

namespace detail {
inline Polynomial det_rec(const std::vector<std::vector<Polynomial>>& m,
                          std::vector<int>& cols, int row) {
  if (cols.size() == 1) return m[row][cols[0]];
  Polynomial acc = Polynomial::zero(m[0][0].ring());
  for (size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> rest;
    for (size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    Polynomial minor = det_rec(m, rest, row + 1);
    Polynomial term = m[row][cols[k]] * minor;
    acc = (k % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}
} // namespace detail

// Subscheme cut by I_X plus the c x c minors of the Jacobian of a minimal
// generating set; c is the codimension, supplied by the caller from
// hilbert_data.
inline ProjScheme singular_locus(const ProjScheme& X, int codim,
                                 const Budget& budget = default_budget()) {
  auto gens = idealkit::minimal_generators(X.ideal, budget);
  int n = X.ring->nvars;
  std::vector<std::vector<Polynomial>> jac(gens.size(), std::vector<Polynomial>());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int v = 0; v < n; ++v) jac[i].push_back(gens[i].derivative(v));
  std::vector<Polynomial> minors = X.ideal.gens();
  // all c x c minors
  std::vector<int> rows(codim), cols(codim);
  std::function<void(int, int)> pick_rows = [&](int start, int k) {
    if (k == codim) {
      std::function<void(int, int)> pick_cols = [&](int cstart, int ck) {
        if (ck == codim) {
          std::vector<std::vector<Polynomial>> sub(codim);
          for (int i = 0; i < codim; ++i)
            for (int j = 0; j < codim; ++j) sub[i].push_back(jac[rows[i]][cols[j]]);
          std::vector<int> cix(codim);
          for (int j = 0; j < codim; ++j) cix[j] = j;
          Polynomial d = detail::det_rec(sub, cix, 0);
          if (!d.is_zero()) minors.push_back(d);
          return;
        }
        for (int c = cstart; c < n; ++c) { cols[ck] = c; pick_cols(c + 1, ck + 1); }
      };
      pick_cols(0, 0);
      return;
    }
    for (int r = start; r < static_cast<int>(gens.size()); ++r) { rows[k] = r; pick_rows(r + 1, k + 1); }
  };
  pick_rows(0, 0);
  return make_scheme(X.ring, std::move(minors), budget);
}

// scheme-theoretic residual: saturation of (I_total : I_component)
inline ProjScheme residual(const ProjScheme& total, const ProjScheme& component,
                           const Budget& budget = default_budget()) {
  if (!total.contains(component, budget))
    throw std::invalid_argument("residual: component not contained in total");
  Ideal c = idealkit::ideal_colon(total.ideal, component.ideal, budget);
  return ProjScheme{total.ring, idealkit::saturate_irrelevant(c, budget)};
}

// degree-by-degree colon pieces {h : h * I_component <= I_total}
inline std::vector<Polynomial> colon_piece(const Ideal& total, const Ideal& component, int d,
                                           const Budget& budget = default_budget()) {
  const RingPtr& ring = total.ring();
  const auto& gb = total.groebner(budget);
  auto mons = idealkit::monomials_of_degree(ring, d);
  std::unordered_map<polycore::Monomial, size_t, polycore::MonomialHash> col;
  std::vector<std::vector<std::pair<size_t, uint32_t>>> rows(mons.size());
  size_t stride = 0;
  for (auto& g : component.gens()) {
    std::unordered_map<polycore::Monomial, size_t, polycore::MonomialHash> lcol;
    std::vector<Polynomial> nfs;
    for (auto& m : mons) {
      Polynomial nf = normal_form(g.times_term(m, 1), gb, budget);
      for (auto& t : nf.terms()) lcol.try_emplace(t.mono, lcol.size());
      nfs.push_back(std::move(nf));
    }
    for (size_t k = 0; k < mons.size(); ++k)
      for (auto& t : nfs[k].terms()) rows[k].push_back({stride + lcol.at(t.mono), t.coeff});
    stride += lcol.size();
  }
  linalg::Mat mat(ring->field, std::max<size_t>(stride, 1), mons.size());
  for (size_t k = 0; k < mons.size(); ++k)
    for (auto& [r, c] : rows[k]) mat.at(r, k) = c;
  auto ker = linalg::kernel(std::move(mat));
  std::vector<Polynomial> out;
  for (auto& v : ker) {
    std::vector<Term> ts;
    for (size_t j = 0; j < mons.size(); ++j)
      if (v[j]) ts.push_back({mons[j], v[j]});
    out.push_back(Polynomial::from_terms(ring, std::move(ts)));
  }
  return out;
}

// Residual with a certification target: candidate from low-degree colon
// pieces, certified by the scheme-union identity
// I_total = I_component \cap I_residual (exact basis equality).
inline ProjScheme residual_certified(const ProjScheme& total, const ProjScheme& component,
                                     const HilbertData& expected, int max_degree = 6,
                                     const Budget& budget = default_budget()) {
  if (!total.contains(component, budget))
    throw std::invalid_argument("residual: component not contained in total");
  std::vector<Polynomial> gens;
  for (int d = 1; d <= max_degree; ++d) {
    auto piece = colon_piece(total.ideal, component.ideal, d, budget);
    for (auto& g : piece) gens.push_back(g);
    if (gens.empty()) continue;
    Ideal J = idealkit::saturate_irrelevant(Ideal(total.ring, gens), budget);
    if (!hilbert_data(J, budget).same_polynomial(expected)) continue;
    Ideal meet = idealkit::ideal_intersect(component.ideal, J, budget);
    if (!meet.equals(total.ideal, budget))
      throw VerificationError("residual: union certificate failed");
    return scheme_presaturated(total.ring, std::move(J));
  }
  throw VerificationError("residual: expected Hilbert polynomial not reached");
}

inline ProjScheme scheme_intersection(const ProjScheme& X, const ProjScheme& Y,
                                      const Budget& budget = default_budget()) {
  return make_scheme(X.ring, [&] {
    std::vector<Polynomial> g = X.ideal.gens();
    for (auto& h : Y.ideal.gens()) g.push_back(h);
    return g;
  }(), budget);
}

// length of a zero-dimensional intersection
inline int64_t intersection_length(const ProjScheme& X, const ProjScheme& Y,
                                   const Budget& budget = default_budget()) {
  auto Z = scheme_intersection(X, Y, budget);
  auto h = hilbert(Z, budget);
  if (h.dim != 0)
    throw VerificationError("intersection_length: intersection has dimension " +
                            std::to_string(h.dim));
  return h.degree;
}

} // namespace scrollforge::projlab
