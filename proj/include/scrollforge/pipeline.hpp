#pragma once

#include "cache.hpp"
#include "lattice.hpp"
#include "linsys.hpp"

namespace scrollforge::k3pipeline {

using idealkit::Budget;
using idealkit::default_budget;
using idealkit::graded_dim;
using idealkit::graded_piece;
using idealkit::hilbert_data;
using idealkit::HilbertData;
using idealkit::Ideal;
using linsys::BlowupClass;
using linsys::FormBasis;
using linsys::RationalMapModel;
using polycore::Polynomial;
using polycore::RingPtr;
using projlab::GenericityError;
using projlab::LinearSubspace;
using projlab::Point;
using projlab::ProjScheme;
using projlab::VerificationError;

// ---------------------------------------------------------------------------
// configuration
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& all_stages() {
  static const std::vector<std::string> s{"scroll",      "octic",          "embed",
                                          "quadrics",    "reconstruct",    "ruling-quadric",
                                          "fixtures",    "lattice"};
  return s;
}

struct RunConfig {
  uint64_t seed = 1;
  uint32_t prime = 32003;
  std::vector<std::string> stages = all_stages();
  int retry_budget = 20;
  std::string cache_dir;
  Budget gb_budget;

  bool wants(const std::string& s) const {
    for (auto& t : stages)
      if (t == s) return true;
    return false;
  }
};

// The smooth chain must be requested as a dependency-closed prefix.
inline void validate_stages(const RunConfig& cfg) {
  static const std::vector<std::string> chain{"scroll", "octic", "embed", "quadrics",
                                              "reconstruct", "ruling-quadric"};
  for (auto& s : cfg.stages) {
    bool known = false;
    for (auto& t : all_stages()) known |= (t == s);
    if (!known) throw std::invalid_argument("unknown stage: " + s);
  }
  int deepest = -1;
  for (size_t i = 0; i < chain.size(); ++i)
    if (cfg.wants(chain[i])) deepest = static_cast<int>(i);
  for (int i = 0; i <= deepest; ++i)
    if (!cfg.wants(chain[i]))
      throw std::invalid_argument("stage " + chain[deepest] + " requires " + chain[i]);
}

struct GenericityExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// artifacts
// ---------------------------------------------------------------------------

// Everything produced by one seeded run of the constructions, with
// provenance; optional fields fill in stage order.
struct PipelineArtifacts {
  uint64_t seed = 0;
  uint32_t prime = 32003;

  RingPtr plane_z, p4, plane_w, p5, tring;
  Point o; // (0:0:1), the blown-up point of F_1

  // scroll stage
  std::vector<Polynomial> conics;                 // |2h-E| basis
  std::optional<RationalMapModel> phi_z;          // plane_z -> P^4
  std::optional<ProjScheme> Z;
  std::array<Point, 2> ell_pts;
  std::optional<LinearSubspace> ell;
  std::vector<Polynomial> proj_forms;             // P^4 -> plane_w linears
  std::vector<Point> t_p4, x_p4, y_p4;            // secant triples on Z
  std::vector<Point> x_plane, y_plane;            // their plane preimages
  std::vector<Point> nprime;                      // n'_i in plane_w
  std::optional<Polynomial> sextic;               // C plane model
  std::optional<ProjScheme> C;                    // C in P^4

  // octic stage
  std::optional<ProjScheme> GammaP, SingGP, O9;

  // embed stage
  std::optional<Polynomial> Jcubic;
  std::optional<RationalMapModel> phi;            // plane_w -> P^5 quartics
  std::optional<ProjScheme> T, Gamma;
  std::vector<Point> nodes;                       // n_i in P^5

  // quadrics stage
  std::vector<Polynomial> Q4, V;
  std::optional<ProjScheme> Y, B, Tcheck, TPi;
  std::optional<LinearSubspace> Pi;

  // reconstruct stage
  std::vector<Polynomial> m_forms;                // plane_z -> P^5, degree 8
  std::optional<ProjScheme> R;

  // ruling-quadric stage
  std::vector<std::array<Point, 2>> ruling_spans;
  std::vector<LinearSubspace> rulings;
  std::optional<Polynomial> Qquad;
  std::optional<ProjScheme> RQ, GammaResidual;

  void init_rings(uint32_t p) {
    prime = p;
    plane_z = polycore::make_ring(p, {"x0", "x1", "x2"});
    p4 = polycore::make_ring(p, {"z0", "z1", "z2", "z3", "z4"});
    plane_w = polycore::make_ring(p, {"w0", "w1", "w2"});
    p5 = polycore::make_ring(p, {"v0", "v1", "v2", "v3", "v4", "v5"});
    tring = polycore::make_ring(p, {"t0", "t1"});
    o = Point{std::vector<uint32_t>{0, 0, 1}};
  }
};

// ---------------------------------------------------------------------------
// small geometric helpers
// ---------------------------------------------------------------------------

namespace detail {

inline Point combine(const projlab::Point& a, const projlab::Point& b, uint32_t la, uint32_t lb,
                     const polycore::PrimeField& F) {
  std::vector<uint32_t> v(a.c.size());
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = F.add(F.mul(la, a.c[i]), F.mul(lb, b.c[i]));
  return projlab::normalize_point(std::move(v), F);
}

// binary forms as coefficient vectors c[i] = coeff of t0^(d-i) t1^i
inline std::vector<uint32_t> binary_coeffs(const Polynomial& f, int degree) {
  std::vector<uint32_t> c(degree + 1, 0);
  for (auto& t : f.terms()) {
    if (static_cast<int>(t.mono.deg) != degree)
      throw std::invalid_argument("binary_coeffs: degree mismatch");
    c[t.mono.e[1]] = t.coeff;
  }
  return c;
}

inline Polynomial binary_poly(const RingPtr& tring, const std::vector<uint32_t>& c) {
  std::vector<polycore::Term> ts;
  int d = static_cast<int>(c.size()) - 1;
  for (int i = 0; i <= d; ++i)
    if (c[i]) {
      polycore::Monomial m;
      m.e[0] = static_cast<uint8_t>(d - i);
      m.e[1] = static_cast<uint8_t>(i);
      m.deg = static_cast<uint16_t>(d);
      ts.push_back({m, c[i]});
    }
  return Polynomial::from_terms(tring, std::move(ts));
}

// univariate helpers on coefficient vectors (index = power of x, ascending)
inline std::vector<uint32_t> uni_trim(std::vector<uint32_t> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline std::vector<uint32_t> uni_rem(std::vector<uint32_t> a, const std::vector<uint32_t>& b,
                                     const polycore::PrimeField& F) {
  if (b.empty()) throw std::domain_error("uni_rem: zero divisor");
  uint32_t lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    uint32_t q = F.mul(a.back(), lead_inv);
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] = F.sub(a[off + i], F.mul(q, b[i]));
    a = uni_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

inline std::vector<uint32_t> uni_gcd(std::vector<uint32_t> a, std::vector<uint32_t> b,
                                     const polycore::PrimeField& F) {
  a = uni_trim(std::move(a));
  b = uni_trim(std::move(b));
  while (!b.empty()) {
    auto r = uni_rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline std::vector<uint32_t> uni_derivative(const std::vector<uint32_t>& a,
                                            const polycore::PrimeField& F) {
  std::vector<uint32_t> d;
  for (size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], F.reduce(i)));
  return uni_trim(std::move(d));
}

// binary form squarefree: simple roots only, including at (1:0) and (0:1)
inline bool binary_squarefree(const std::vector<uint32_t>& c, const polycore::PrimeField& F) {
  // c[i] coeff of t0^(d-i) t1^i; univariate in x = t1/t0: u[i] = c[i]
  auto u = uni_trim(c);
  if (u.empty()) return false;
  size_t lead_zeros = c.size() - u.size(); // multiplicity of the (1:0) root... t0-divisibility
  // u as written has u[i] = coeff of x^i after dividing by t0^(d - ...)
  size_t trail = 0;
  while (trail < u.size() && u[trail] == 0) ++trail;
  if (lead_zeros > 1 || trail > 1) return false;
  std::vector<uint32_t> core(u.begin() + trail, u.end());
  auto g = uni_gcd(core, uni_derivative(core, F), F);
  return g.size() <= 1;
}

// exact division of binary coefficient vectors (as univariate in t1 with
// matching t0-degrees handled by the caller)
inline std::vector<uint32_t> uni_div_exact(std::vector<uint32_t> a,
                                           const std::vector<uint32_t>& b,
                                           const polycore::PrimeField& F) {
  a = uni_trim(std::move(a));
  auto bb = uni_trim(b);
  if (bb.empty()) throw std::domain_error("uni_div_exact: zero divisor");
  if (a.empty()) return {};
  std::vector<uint32_t> q(a.size() - bb.size() + 1, 0);
  uint32_t lead_inv = F.inv(bb.back());
  while (a.size() >= bb.size()) {
    uint32_t qc = F.mul(a.back(), lead_inv);
    size_t off = a.size() - bb.size();
    q[off] = qc;
    for (size_t i = 0; i < bb.size(); ++i) a[off + i] = F.sub(a[off + i], F.mul(qc, bb[i]));
    a = uni_trim(std::move(a));
    if (a.empty()) break;
  }
  if (!a.empty()) throw std::domain_error("uni_div_exact: not divisible");
  return q;
}

} // namespace detail

// ---------------------------------------------------------------------------
// the hyperelliptic double-cover model y^2 = disc(t), used to certify the
// reconstructed scroll symbolically
// ---------------------------------------------------------------------------

// Elements a(t) + b(t) y of F_p[t0,t1][y] / (y^2 - disc)
struct CoverCtx {
  RingPtr tring;
  Polynomial disc;
};

struct CoverElt {
  Polynomial ev, od;

  bool is_zero() const { return ev.is_zero() && od.is_zero(); }
};

inline CoverElt cover_zero(const CoverCtx& C) {
  return {Polynomial::zero(C.tring), Polynomial::zero(C.tring)};
}
inline CoverElt cover_of(const Polynomial& p, const CoverCtx& C) {
  return {p, Polynomial::zero(C.tring)};
}
inline CoverElt cover_conj(const CoverElt& a) { return {a.ev, -a.od}; }
inline CoverElt cover_add(const CoverElt& a, const CoverElt& b) {
  return {a.ev + b.ev, a.od + b.od};
}
inline CoverElt cover_mul(const CoverElt& a, const CoverElt& b, const CoverCtx& C) {
  return {a.ev * b.ev + a.od * b.od * C.disc, a.ev * b.od + a.od * b.ev};
}
inline CoverElt cover_scale(const CoverElt& a, uint32_t c) { return {a.ev.scaled(c), a.od.scaled(c)}; }

// evaluate a ternary polynomial at three cover elements (power-cached)
inline CoverElt cover_subst(const Polynomial& f, const std::array<CoverElt, 3>& X,
                            const CoverCtx& C) {
  std::array<std::vector<CoverElt>, 3> pows;
  for (int i = 0; i < 3; ++i) pows[i].push_back(cover_of(Polynomial::constant(C.tring, 1), C));
  CoverElt acc = cover_zero(C);
  for (auto& t : f.terms()) {
    CoverElt v = cover_of(Polynomial::constant(C.tring, t.coeff), C);
    for (int i = 0; i < 3; ++i) {
      int e = t.mono.e[i];
      if (!e) continue;
      while (static_cast<int>(pows[i].size()) <= e)
        pows[i].push_back(cover_mul(pows[i].back(), X[i], C));
      v = cover_mul(v, pows[i][e], C);
    }
    acc = cover_add(acc, v);
  }
  return acc;
}

// The incidence certificate for the reconstructed scroll: a degree-d form g
// on P^5 vanishes on every ruling <m(a), m(iota(a))> of the scroll iff
// g(lambda m(A) + mu m(B)) is identically zero on the double cover, where
// A, B are the two Weierstrass-conjugate liftings.
inline bool certify_on_ruled_family(const Polynomial& g, const std::vector<Polynomial>& m_forms,
                                    const Polynomial& f4, const Polynomial& f5,
                                    const CoverCtx& C) {
  const RingPtr& tring = C.tring;
  Polynomial t0 = Polynomial::variable(tring, 0);
  Polynomial t1 = Polynomial::variable(tring, 1);
  Polynomial two_f4 = f4.scaled(2);
  std::array<CoverElt, 3> A{cover_of(two_f4 * t0, C), cover_of(two_f4 * t1, C),
                            CoverElt{-f5, Polynomial::constant(tring, 1)}};
  std::vector<CoverElt> alpha, beta;
  for (auto& m : m_forms) {
    CoverElt a = cover_subst(m, A, C);
    alpha.push_back(a);
    beta.push_back(cover_conj(a));
  }
  int d = g.degree();
  std::vector<CoverElt> bucket(d + 1, cover_zero(C)); // lambda^k mu^(d-k)
  for (auto& term : g.terms()) {
    std::vector<int> slots;
    for (int i = 0; i < g.ring()->nvars; ++i)
      for (int e = 0; e < term.mono.e[i]; ++e) slots.push_back(i);
    for (int mask = 0; mask < (1 << d); ++mask) {
      int nl = 0;
      CoverElt prod = cover_of(Polynomial::constant(C.tring, term.coeff), C);
      for (int s = 0; s < d; ++s) {
        bool lam = mask & (1 << s);
        nl += lam;
        prod = cover_mul(prod, lam ? alpha[slots[s]] : beta[slots[s]], C);
      }
      bucket[nl] = cover_add(bucket[nl], prod);
    }
  }
  for (auto& b : bucket)
    if (!b.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// interpolation of low-degree forms through sampled points
// ---------------------------------------------------------------------------

inline std::vector<Polynomial> interpolate_forms(const RingPtr& ring, int degree,
                                                 const std::vector<Point>& samples) {
  auto mons = idealkit::monomials_of_degree(ring, degree);
  linalg::Mat m(ring->field, samples.size(), mons.size());
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = 0; j < mons.size(); ++j)
      m.at(i, j) = Polynomial::monomial(ring, mons[j]).evaluate(samples[i].c);
  auto ker = linalg::kernel(std::move(m));
  std::vector<Polynomial> out;
  for (auto& v : ker) {
    std::vector<polycore::Term> ts;
    for (size_t j = 0; j < mons.size(); ++j)
      if (v[j]) ts.push_back({mons[j], v[j]});
    out.push_back(Polynomial::from_terms(ring, std::move(ts)));
  }
  return out;
}

} // namespace scrollforge::k3pipeline
