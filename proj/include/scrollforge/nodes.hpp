#pragma once

#include <functional>
#include <optional>

#include "scheme.hpp"

namespace scrollforge::projlab {

// Certificate for an ordinary double point (or a Galois-stable orbit of
// them): local multiplicity 2 and nondegenerate quadratic tangent cone.
struct NodeCertificate {
  std::optional<Point> point; // absent for orbit schemes
  int64_t weight = 1;         // orbit length
  bool multiplicity_two = false;
  bool nondegenerate_cone = false;

  bool ok() const { return multiplicity_two && nondegenerate_cone; }
};

struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// tangent cones
// ---------------------------------------------------------------------------

// Tangent cone of X at a rational point, as a homogeneous ideal in a local
// ring on n variables.  The point moves to (1:0:...:0) and the chart
// variable x0 is saturated away; on the saturated homogeneous ideal, a
// basis for a graded order in which the x0-exponent dominates within each
// degree has the property that the maximal-x0 part of each element is the
// lowest local form, and these parts generate the cone.
inline Ideal tangent_cone_at(const ProjScheme& X, const Point& P, RingPtr* local_out,
                             const Budget& budget = default_budget()) {
  const RingPtr& ring = X.ring;
  int n = ring->nvars;
  // linear substitution x -> M x' with column 0 = P, identity elsewhere
  int pivot = 0;
  while (P.c[pivot] == 0) ++pivot;
  // x_i = sum_j M[i][j] x'_j ; columns: j=0 -> P, else unit vectors skipping pivot
  std::vector<std::vector<uint32_t>> M(n, std::vector<uint32_t>(n, 0));
  for (int i = 0; i < n; ++i) M[i][0] = P.c[i];
  int k = 1;
  for (int j = 0; j < n; ++j) {
    if (j == pivot) continue;
    M[j][k] = 1;
    ++k;
  }
  std::vector<Polynomial> subs(n);
  for (int i = 0; i < n; ++i) {
    std::vector<uint32_t> row(n);
    for (int j = 0; j < n; ++j) row[j] = M[i][j];
    subs[i] = Polynomial::linear(ring, row);
  }
  std::vector<Polynomial> moved;
  for (auto& g : X.ideal.gens()) moved.push_back(g.substitute(subs));
  Ideal shifted = idealkit::saturate_variable(Ideal(ring, moved), 0, budget);
  // graded basis with the x0-exponent dominant within each degree
  const auto& gb = shifted.groebner(polycore::MonomialOrder::block(1), budget);
  // local ring on the n-1 non-chart variables
  std::vector<std::string> lnames(ring->names.begin() + 1, ring->names.end());
  RingPtr local = polycore::make_ring(ring->p(), lnames, polycore::MonomialOrder::degrevlex());
  std::vector<int> down(n, -1);
  for (int i = 1; i < n; ++i) down[i] = i - 1;
  std::vector<Polynomial> tc;
  for (auto& g : gb.elems) {
    int top = 0;
    for (auto& t : g.terms()) top = std::max(top, static_cast<int>(t.mono.e[0]));
    std::vector<polycore::Term> ts;
    for (auto& t : g.terms())
      if (t.mono.e[0] == top) {
        polycore::Monomial m = t.mono;
        m.deg = static_cast<uint16_t>(m.deg - top);
        m.e[0] = 0;
        ts.push_back({m, t.coeff});
      }
    Polynomial low = Polynomial::from_terms(gb.ring, std::move(ts));
    tc.push_back(polycore::map_poly(low, local, down));
  }
  if (local_out) *local_out = local;
  return Ideal(local, std::move(tc));
}

// ---------------------------------------------------------------------------
// node certification
// ---------------------------------------------------------------------------

namespace detail {

// binary quadratic on the span of the two tangent directions
inline bool nondegenerate_residual_quadric(const Ideal& tc, const RingPtr& local,
                                           const Budget& budget) {
  auto lin = graded_piece(tc, 1, budget);
  int m = local->nvars;
  // parametrize the common zero plane W of the linear part
  linalg::Mat mat(local->field, lin.size(), m);
  for (size_t i = 0; i < lin.size(); ++i)
    for (auto& t : lin[i].terms())
      for (int v = 0; v < m; ++v)
        if (t.mono.e[v]) mat.at(i, v) = t.coeff;
  auto ker = linalg::kernel(std::move(mat));
  if (ker.size() != 2) return false;
  RingPtr bin = polycore::make_ring(local->p(), {"s@", "t@"});
  std::vector<Polynomial> par(m);
  for (int v = 0; v < m; ++v) {
    std::vector<polycore::Term> ts;
    if (ker[0][v]) ts.push_back({polycore::mono_var(0), ker[0][v]});
    if (ker[1][v]) ts.push_back({polycore::mono_var(1), ker[1][v]});
    par[v] = Polynomial::from_terms(bin, std::move(ts));
  }
  for (auto& q : graded_piece(tc, 2, budget)) {
    Polynomial rq = q.substitute(par);
    if (rq.is_zero()) continue;
    BinaryForm bf = binary_of(rq);
    if (bf.degree() != 2) continue;
    const auto& F = local->field;
    uint32_t disc = F.sub(F.mul(bf.c[1], bf.c[1]), F.mul(4, F.mul(bf.c[0], bf.c[2])));
    return disc != 0;
  }
  return false;
}

} // namespace detail

// Ordinary-double-point check at a rational point of a curve (x_dim 1) or a
// surface (x_dim 2), via the tangent cone:
//   curve:   projectivized cone is two distinct reduced points (a
//            nondegenerate binary quadric on the tangent plane)
//   surface: projectivized cone is a pair of disjoint lines, i.e. degree 2,
//            arithmetic genus -1, smooth
inline NodeCertificate certify_node_at(const ProjScheme& X, const Point& P, int x_dim,
                                       const Budget& budget = default_budget()) {
  if (X.ring->p() == 2) throw std::domain_error("node certification needs p > 2");
  NodeCertificate cert;
  cert.point = P;
  RingPtr local;
  Ideal tc = tangent_cone_at(X, P, &local, budget);
  auto h = idealkit::hilbert_data(tc, budget);
  if (x_dim == 1) {
    cert.multiplicity_two = (h.dim == 0 && h.degree == 2);
    cert.nondegenerate_cone =
        cert.multiplicity_two && detail::nondegenerate_residual_quadric(tc, local, budget);
  } else if (x_dim == 2) {
    cert.multiplicity_two = (h.dim == 1 && h.degree == 2);
    bool genus_ok = h.pa.has_value() && *h.pa == -1;
    bool smooth_cone = false;
    if (cert.multiplicity_two && genus_ok) {
      ProjScheme cone = scheme_presaturated(local, tc);
      int codim = local->nvars - 1 - 1; // lines in P^(n-2)... codimension of a curve
      ProjScheme sing = singular_locus(cone, codim, budget);
      smooth_cone = sing.is_empty(budget);
    }
    cert.nondegenerate_cone = genus_ok && smooth_cone;
  } else {
    throw std::invalid_argument("certify_node_at: x_dim must be 1 or 2");
  }
  return cert;
}

// Orbit-scheme certification for plane curves: S is a Galois-stable
// zero-dimensional subscheme of the singular locus; every point of S is an
// ordinary node iff the 2x2 minors of the Hessian have no common zero on S
// (the Hessian of a plane curve drops to rank <= 1 exactly at non-nodal
// singular points).
inline NodeCertificate certify_orbit_plane(const ProjScheme& X, const ProjScheme& S,
                                           const Budget& budget = default_budget()) {
  if (X.ring->nvars != 3) throw std::invalid_argument("certify_orbit_plane: ambient must be P^2");
  if (X.ring->p() == 2 || X.ring->p() == 3)
    throw std::domain_error("node certification needs p > 3");
  auto gens = idealkit::minimal_generators(X.ideal, budget);
  if (gens.size() != 1) throw std::invalid_argument("certify_orbit_plane: not a plane curve");
  const Polynomial& f = gens[0];
  std::vector<std::vector<Polynomial>> H(3, std::vector<Polynomial>(3, Polynomial::zero(X.ring)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) H[i][j] = f.derivative(i).derivative(j);
  std::vector<Polynomial> cond = S.ideal.gens();
  for (int i0 = 0; i0 < 3; ++i0)
    for (int j0 = 0; j0 < 3; ++j0)
      for (int i1 = i0 + 1; i1 < 3; ++i1)
        for (int j1 = j0 + 1; j1 < 3; ++j1)
          cond.push_back(H[i0][j0] * H[i1][j1] - H[i0][j1] * H[i1][j0]);
  Ideal bad = idealkit::saturate_irrelevant(Ideal(X.ring, cond), budget);
  NodeCertificate cert;
  cert.weight = idealkit::hilbert_data(S.ideal, budget).degree;
  cert.multiplicity_two = cert.nondegenerate_cone = bad.is_unit(budget);
  return cert;
}

// Plane-curve node check at a rational point, by direct evaluation: the
// point is singular and the Hessian has a nonvanishing 2x2 minor there.
inline NodeCertificate certify_point_plane(const ProjScheme& X, const Point& P,
                                           const Budget& budget = default_budget()) {
  if (X.ring->p() == 2 || X.ring->p() == 3)
    throw std::domain_error("node certification needs p > 3");
  auto gens = idealkit::minimal_generators(X.ideal, budget);
  if (gens.size() != 1 || X.ring->nvars != 3)
    throw std::invalid_argument("certify_point_plane: not a plane curve");
  const Polynomial& f = gens[0];
  NodeCertificate cert;
  cert.point = P;
  if (eval_at(f, P) != 0) return cert;
  for (int v = 0; v < 3; ++v)
    if (eval_at(f.derivative(v), P) != 0) return cert; // smooth point, not a node
  uint32_t H[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) H[i][j] = eval_at(f.derivative(i).derivative(j), P);
  const auto& F = X.ring->field;
  bool rank2 = false;
  for (int i0 = 0; i0 < 3 && !rank2; ++i0)
    for (int i1 = i0 + 1; i1 < 3 && !rank2; ++i1)
      for (int j0 = 0; j0 < 3 && !rank2; ++j0)
        for (int j1 = j0 + 1; j1 < 3 && !rank2; ++j1)
          rank2 |= F.sub(F.mul(H[i0][j0], H[i1][j1]), F.mul(H[i0][j1], H[i1][j0])) != 0;
  cert.multiplicity_two = cert.nondegenerate_cone = rank2;
  return cert;
}

// Spec-level entry point: certificates for each listed point plus, for
// plane curves, one orbit certificate for the residual subscheme of S.
inline std::vector<NodeCertificate> certify_nodes(const ProjScheme& X, const ProjScheme& S,
                                                  const std::vector<Point>& split_points,
                                                  int x_dim,
                                                  const Budget& budget = default_budget()) {
  std::vector<NodeCertificate> certs;
  for (auto& P : split_points) {
    if (!S.contains_point(P))
      throw std::invalid_argument("certify_nodes: listed point not on the scheme");
    if (X.ring->nvars == 3)
      certs.push_back(certify_point_plane(X, P, budget));
    else
      certs.push_back(certify_node_at(X, P, x_dim, budget));
  }
  // residual orbit (plane curves only)
  int64_t slen = idealkit::hilbert_data(S.ideal, budget).degree;
  if (static_cast<int64_t>(split_points.size()) < slen) {
    if (X.ring->nvars != 3)
      throw std::invalid_argument("certify_nodes: irrational points outside P^2");
    Ideal rest = S.ideal;
    for (auto& P : split_points)
      rest = idealkit::ideal_colon(rest, point_ideal(X.ring, P), budget);
    rest = idealkit::saturate_irrelevant(rest, budget);
    ProjScheme orbit = scheme_presaturated(X.ring, rest);
    certs.push_back(certify_orbit_plane(X, orbit, budget));
  }
  return certs;
}

inline void require_all_nodes(const std::vector<NodeCertificate>& certs, const std::string& what) {
  for (auto& c : certs)
    if (!c.ok()) {
      std::string where = c.point ? ("point (" + std::to_string(c.point->c[0]) + ":...)")
                                  : "orbit scheme";
      throw CertificationError(what + ": non-nodal singularity at " + where);
    }
}

} // namespace scrollforge::projlab
