#pragma once

#include "stages.hpp"

namespace scrollforge::k3pipeline {

// ---------------------------------------------------------------------------
// binary-form gcd utilities for the fixture parametrizations
// ---------------------------------------------------------------------------

namespace detail {

struct BinaryVec {
  std::vector<uint32_t> c; // c[i] = coeff of t0^(deg-i) t1^i
};

inline int low_zeros(const std::vector<uint32_t>& c) {
  int k = 0;
  while (k < static_cast<int>(c.size()) && c[k] == 0) ++k;
  return k;
}
inline int high_zeros(const std::vector<uint32_t>& c) {
  int k = 0;
  while (k < static_cast<int>(c.size()) && c[c.size() - 1 - k] == 0) ++k;
  return k;
}

// gcd of binary forms as (t1-mult, t0-mult, univariate core)
inline std::vector<uint32_t> binary_gcd(const std::vector<uint32_t>& a,
                                        const std::vector<uint32_t>& b,
                                        const polycore::PrimeField& F) {
  int a1 = low_zeros(a), a0 = high_zeros(a);
  int b1 = low_zeros(b), b0 = high_zeros(b);
  std::vector<uint32_t> ca(a.begin() + a1, a.end() - a0);
  std::vector<uint32_t> cb(b.begin() + b1, b.end() - b0);
  auto core = uni_gcd(ca, cb, F);
  if (core.empty()) core = {1};
  // normalize monic
  uint32_t inv = F.inv(core.back());
  for (auto& x : core) x = F.mul(x, inv);
  std::vector<uint32_t> out;
  int m1 = std::min(a1, b1), m0 = std::min(a0, b0);
  out.assign(m1, 0);
  for (auto x : core) out.push_back(x);
  for (int k = 0; k < m0; ++k) out.push_back(0);
  return out;
}

inline std::vector<uint32_t> binary_divexact(const std::vector<uint32_t>& a,
                                             const std::vector<uint32_t>& g,
                                             const polycore::PrimeField& F) {
  int a1 = low_zeros(a), a0 = high_zeros(a);
  int g1 = low_zeros(g), g0 = high_zeros(g);
  if (a1 < g1 || a0 < g0) throw std::domain_error("binary_divexact: multiplicity");
  std::vector<uint32_t> ca(a.begin() + a1, a.end() - a0);
  std::vector<uint32_t> cg(g.begin() + g1, g.end() - g0);
  auto q = uni_div_exact(ca, cg, F);
  std::vector<uint32_t> out;
  out.assign(a1 - g1, 0);
  for (auto x : q) out.push_back(x);
  for (int k = 0; k < a0 - g0; ++k) out.push_back(0);
  return out;
}

// strip the common factor from a tuple of binary forms of equal degree
inline std::vector<std::vector<uint32_t>> strip_common_factor(
    std::vector<std::vector<uint32_t>> forms, const polycore::PrimeField& F) {
  std::vector<uint32_t> g;
  bool first = true;
  for (auto& f : forms) {
    bool zero = true;
    for (auto x : f) zero &= (x == 0);
    if (zero) continue;
    g = first ? f : binary_gcd(g, f, F);
    first = false;
  }
  if (first) throw std::domain_error("strip_common_factor: all zero");
  for (auto& f : forms) {
    bool zero = true;
    for (auto x : f) zero &= (x == 0);
    if (!zero) f = binary_divexact(f, g, F);
  }
  return forms;
}

// x2-coefficient profile of a plane form: f = sum profile[k] * x2^k
inline std::vector<Polynomial> x2_profile(const Polynomial& f, const RingPtr& tring, int top) {
  std::vector<Polynomial> out(top + 1, Polynomial::zero(tring));
  for (auto& t : f.terms()) {
    if (t.mono.e[2] > top) throw std::invalid_argument("x2_profile: degree too high");
    polycore::Monomial m;
    m.e[0] = t.mono.e[0];
    m.e[1] = t.mono.e[1];
    m.deg = static_cast<uint16_t>(t.mono.e[0] + t.mono.e[1]);
    out[t.mono.e[2]] = out[t.mono.e[2]] + Polynomial::monomial(tring, m, t.coeff);
  }
  return out;
}

// evaluate a tuple of plane forms along a binary parametrization
inline std::vector<std::vector<uint32_t>> compose_binary(const std::vector<Polynomial>& forms,
                                                         const std::vector<Polynomial>& par,
                                                         const RingPtr& tring, int out_degree) {
  std::vector<std::vector<uint32_t>> out;
  for (auto& f : forms) out.push_back(binary_coeffs(f.substitute(par), out_degree));
  return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// shared fixture scaffolding: Z, a disjoint line, the composite projection
// ---------------------------------------------------------------------------

struct FixtureBase {
  PipelineArtifacts A; // only the scroll-level fields are used
  std::vector<Polynomial> mid; // plane_z -> plane_w composite conics
};

inline FixtureBase fixture_base(uint32_t prime, Rng& rng, const Budget& budget) {
  FixtureBase fb;
  fb.A.init_rings(prime);
  PipelineArtifacts& A = fb.A;
  ProjScheme o_sch = projlab::scheme_presaturated(A.plane_z, projlab::point_ideal(A.plane_z, A.o));
  auto conics = linsys::forms_with_base_conditions(A.plane_z, 2, {{o_sch, 1}}, budget);
  if (conics.dim() != 5) throw VerificationError("fixture: conic system dimension");
  A.conics = conics.basis;
  A.phi_z = RationalMapModel(A.plane_z, A.p4, A.conics);
  auto z_hp = linsys::surface_hp(BlowupClass::uniform(2, 1, 1));
  A.Z = linsys::image_scheme(*A.phi_z, linsys::whole_space(A.plane_z), &z_hp, 4, budget);
  for (int tries = 0;; ++tries) {
    if (tries > 40) throw GenericityError("fixture: no disjoint line");
    Point a = projlab::random_point(A.p4, rng);
    Point b = projlab::random_point(A.p4, rng);
    if (a == b) continue;
    auto L = projlab::line_through(A.p4, a, b);
    if (!projlab::scheme_intersection(*A.Z, L.scheme, budget).is_empty(budget)) continue;
    A.ell_pts = {a, b};
    A.ell = L;
    break;
  }
  A.proj_forms = A.ell->forms();
  for (auto& L : A.proj_forms) fb.mid.push_back(L.substitute(A.conics));
  return fb;
}

// ---------------------------------------------------------------------------
// fixture: degenerate rulings — C = B + l1 + l2 with B in |4h-2E|
// ---------------------------------------------------------------------------

inline void fixture_degenerate_rulings(uint32_t prime, Rng& rng, Recorder& rec,
                                       const Budget& budget) {
  FixtureBase fb = fixture_base(prime, rng, budget);
  PipelineArtifacts& A = fb.A;
  const auto& F = A.plane_z->field;
  ProjScheme o_sch = projlab::scheme_presaturated(A.plane_z, projlab::point_ideal(A.plane_z, A.o));

  // a smooth genus-2 member B of |4h-2E|
  auto sys = linsys::forms_with_base_conditions(A.plane_z, 4, {{o_sch, 2}}, budget);
  rec.eq<int>("quartic-system-dim", 12, sys.dim());
  Polynomial quartic(A.plane_z);
  bool found = false;
  for (int tries = 0; tries < 40 && !found; ++tries) {
    Polynomial f = Polynomial::zero(A.plane_z);
    for (auto& b : sys.basis) f = f + b.scaled(static_cast<uint32_t>(rng.below(prime)));
    if (f.is_zero() || f.degree() != 4) continue;
    auto prof = detail::x2_profile(f, A.tring, 2);
    if (prof[2].is_zero()) continue;
    if (!detail::binary_squarefree(detail::binary_coeffs(prof[2], 2), F)) continue;
    std::vector<Polynomial> jac{f, f.derivative(0), f.derivative(1), f.derivative(2)};
    Ideal sing = idealkit::saturate_irrelevant(Ideal(A.plane_z, jac), budget);
    Ideal away = idealkit::ideal_saturate(sing, projlab::point_ideal(A.plane_z, A.o), budget);
    if (!away.is_unit(budget)) continue;
    quartic = f;
    found = true;
  }
  if (!found) throw GenericityError("fixture: no smooth |4h-2E| member");
  rec.eq<int64_t>("pa-B-class", 2, linsys::arithmetic_genus(BlowupClass::uniform(4, 2, 1)));

  auto b_hp = idealkit::expect_curve(6, 2);
  ProjScheme B4 = linsys::image_scheme(*A.phi_z, projlab::make_scheme(A.plane_z, {quartic}, budget),
                                       &b_hp, 5, budget);
  rec.eq<std::string>("B-on-Z-hilbert", "(dim 1, deg 6, pa 2)",
                      hilbert_data(B4.ideal, budget).str());

  auto bp_hp = idealkit::expect_curve(6, 10);
  ProjScheme Bproj = projlab::project_from(B4, *A.ell, &bp_hp, 9, budget);
  std::vector<Polynomial> bpg;
  for (auto& g : Bproj.ideal.gens())
    bpg.push_back(polycore::map_poly(g, A.plane_w, polycore::identity_map(3)));
  ProjScheme Bp = projlab::scheme_presaturated(A.plane_w, Ideal(A.plane_w, bpg));
  auto bsex = idealkit::minimal_generators(Bp.ideal, budget);
  if (bsex.size() != 1 || bsex[0].degree() != 6)
    throw GenericityError("fixture: projected B is not a plane sextic");
  ProjScheme singBp = projlab::singular_locus(Bp, 1, budget);
  auto h8 = hilbert_data(singBp.ideal, budget);
  rec.eq<std::string>("Bprime-sing", "(dim 0, deg 8)", h8.str());
  if (h8.dim != 0 || h8.degree != 8) throw GenericityError("fixture: B' does not have 8 nodes");
  auto cert8 = projlab::certify_orbit_plane(Bp, singBp, budget);
  rec.is_true("Bprime-8-nodes-certified", cert8.ok());
  if (!cert8.ok()) throw GenericityError("fixture: B' nodes not ordinary");

  // two rulings through o and their images, meeting at o9
  std::array<Point, 2> dirs;
  std::array<Polynomial, 2> Fline;
  for (int i = 0; i < 2; ++i) {
    for (int tries = 0;; ++tries) {
      if (tries > 40) throw GenericityError("fixture: ruling choice");
      uint32_t d0 = static_cast<uint32_t>(rng.below(prime));
      uint32_t d1 = static_cast<uint32_t>(rng.below(prime));
      if (d0 == 0 && d1 == 0) continue;
      Point q1 = projlab::normalize_point({d0, d1, 0}, F);
      Point q2 = projlab::normalize_point({d0, d1, 1}, F);
      Point w1 = detail::map_point(fb.mid, q1, F);
      Point w2 = detail::map_point(fb.mid, q2, F);
      if (w1 == w2) continue;
      auto L = projlab::line_through(A.plane_w, w1, w2);
      if (L.forms().size() != 1) continue;
      if (i == 1 && L.forms()[0] == Fline[0]) continue;
      dirs[i] = projlab::normalize_point({d0, d1}, F);
      Fline[i] = L.forms()[0];
      break;
    }
  }
  // o9 = F'_1 cap F'_2
  linalg::Mat lm(F, 2, 3);
  for (int i = 0; i < 2; ++i)
    for (auto& t : Fline[i].terms())
      for (int v = 0; v < 3; ++v)
        if (t.mono.e[v]) lm.at(i, v) = t.coeff;
  auto ker = linalg::kernel(std::move(lm));
  rec.eq<int>("F-lines-meet-in-a-point", 1, static_cast<int>(ker.size()));
  if (ker.size() != 1) throw GenericityError("fixture: image lines coincide");
  Point o9 = projlab::normalize_point(ker[0], F);
  bool o9_off_B = !Bp.contains_point(o9);
  rec.is_true("o9-off-Bprime", o9_off_B);
  if (!o9_off_B) throw GenericityError("fixture: o9 lies on B'");

  // the reducible octic and its nine marked points
  Ideal nine = idealkit::saturate_irrelevant(
      idealkit::ideal_intersect(singBp.ideal, projlab::point_ideal(A.plane_w, o9), budget),
      budget);
  ProjScheme nine_sch = projlab::scheme_presaturated(A.plane_w, nine);
  rec.eq<std::string>("nine-point-scheme", "(dim 0, deg 9)",
                      hilbert_data(nine, budget).str());
  auto cubics = linsys::forms_with_base_conditions(A.plane_w, 3, {{nine_sch, 1}}, budget);
  rec.eq<int>("unique-cubic", 1, cubics.dim());
  if (cubics.dim() != 1) throw GenericityError("fixture: cubic through nine not unique");
  bool jsmooth = projlab::singular_locus(projlab::make_scheme(A.plane_w, {cubics.basis[0]}, budget),
                                         1, budget)
                     .is_empty(budget);
  rec.is_true("unique-cubic-smooth", jsmooth);
  if (!jsmooth) throw GenericityError("fixture: cubic through nine is singular");

  auto quartics = linsys::forms_with_base_conditions(A.plane_w, 4, {{nine_sch, 1}}, budget);
  rec.eq<int>("quartics-through-nine", 6, quartics.dim());
  if (quartics.dim() != 6) throw GenericityError("fixture: quartic system off");
  RationalMapModel phi(A.plane_w, A.p5, quartics.basis);
  auto t_hp = linsys::surface_hp(BlowupClass::uniform(4, 1, 9));
  ProjScheme T = linsys::image_scheme(phi, linsys::whole_space(A.plane_w), &t_hp, 4, budget);
  rec.eq<std::string>("T-hilbert", "(dim 2, deg 7)", hilbert_data(T.ideal, budget).str());
  rec.eq<int>("h0-I_T(2)", 3, 21 - graded_dim(T.ideal, 2, budget));

  // component images: B embedded by omega_B(1), the two twisted cubics
  BlowupClass bclass{6, {2, 2, 2, 2, 2, 2, 2, 2, 0}};
  auto bim_hp = linsys::curve_hp(bclass, BlowupClass::uniform(4, 1, 9));
  ProjScheme Bim = linsys::image_scheme(phi, Bp, &bim_hp, 4, budget);
  rec.eq<std::string>("B-image-hilbert", "(dim 1, deg 8, pa 2)",
                      hilbert_data(Bim.ideal, budget).str());
  std::array<ProjScheme, 2> Fim{projlab::make_scheme(A.p5, {}, budget),
                                projlab::make_scheme(A.p5, {}, budget)};
  for (int i = 0; i < 2; ++i) {
    auto f_hp = idealkit::expect_curve(3, 0);
    Fim[i] = linsys::image_scheme(phi, projlab::make_scheme(A.plane_w, {Fline[i]}, budget), &f_hp,
                                  4, budget);
  }
  rec.is_true("F1-F2-disjoint",
              projlab::scheme_intersection(Fim[0], Fim[1], budget).is_empty(budget));
  rec.eq<int64_t>("B.F1", 6, projlab::intersection_length(Bim, Fim[0], budget));
  rec.eq<int64_t>("B.F2", 6, projlab::intersection_length(Bim, Fim[1], budget));

  Ideal gamma = idealkit::ideal_intersect(
      Bim.ideal, idealkit::ideal_intersect(Fim[0].ideal, Fim[1].ideal, budget), budget);
  rec.eq<std::string>("Gamma-union-hilbert", "(dim 1, deg 14, pa 12)",
                      hilbert_data(gamma, budget).str());

  // the eight assigned nodes: (F1+F2).B away from the images of (l1+l2).B
  for (int i = 0; i < 2; ++i) {
    // residual points of the ruling against the quartic, upstairs
    auto prof = detail::x2_profile(quartic, A.tring, 2);
    std::vector<uint32_t> dd{dirs[i].c[0], dirs[i].c[1]};
    uint32_t b2 = prof[2].evaluate(dd), b3 = prof[1].evaluate(dd), b4 = prof[0].evaluate(dd);
    auto roots = projlab::quadratic_roots(F, b2, b3, b4); // b2 u^2 + b3 u s + b4 s^2 in (u:s)
    if (roots.size() != 2 || roots[0] == roots[1])
      throw GenericityError("fixture: ruling tangent to B");
    std::vector<Point> two;
    for (auto& r : roots) {
      // r = (u : s): plane point (s d0, s d1, u)
      uint32_t s = r.c[1], u = r.c[0];
      Point zp = projlab::normalize_point({F.mul(s, dd[0]), F.mul(s, dd[1]), u}, F);
      Point wp = detail::map_point(fb.mid, zp, F);
      two.push_back(detail::map_point(phi.forms, wp, F));
    }
    ProjScheme Wi = projlab::scheme_intersection(Bim, Fim[i], budget);
    Ideal rest = idealkit::saturate_irrelevant(
        idealkit::ideal_colon(Wi.ideal, projlab::vanishing_ideal(A.p5, two, budget), budget),
        budget);
    auto hrest = hilbert_data(rest, budget);
    rec.eq<std::string>("assigned-nodes-on-F" + std::to_string(i + 1), "(dim 0, deg 4)",
                        hrest.str());
    if (hrest.dim != 0 || hrest.degree != 4)
      throw GenericityError("fixture: assigned node count off");
  }
}

// ---------------------------------------------------------------------------
// fixture: two rational curves — Gamma_1, Gamma_2 in |3h-2E| and the scroll
// reconstructed from their ruling-aligned parametrizations
// ---------------------------------------------------------------------------

inline void fixture_two_rational(uint32_t prime, Rng& rng, Recorder& rec, const Budget& budget) {
  FixtureBase fb = fixture_base(prime, rng, budget);
  PipelineArtifacts& A = fb.A;
  const auto& F = A.plane_z->field;
  ProjScheme o_sch = projlab::scheme_presaturated(A.plane_z, projlab::point_ideal(A.plane_z, A.o));

  auto sys = linsys::forms_with_base_conditions(A.plane_z, 3, {{o_sch, 2}}, budget);
  rec.eq<int>("nodal-cubic-system-dim", 7, sys.dim());

  // two nodal cubics through o with five split pairwise intersections
  std::array<Polynomial, 2> cubic{Polynomial::zero(A.plane_z), Polynomial::zero(A.plane_z)};
  std::array<std::vector<Polynomial>, 2> prof;
  std::vector<Point> vroots;
  for (int tries = 0;; ++tries) {
    if (tries > 60) throw GenericityError("fixture2: cubic sampling exhausted");
    for (int i = 0; i < 2; ++i) {
      Polynomial f = Polynomial::zero(A.plane_z);
      for (auto& b : sys.basis) f = f + b.scaled(static_cast<uint32_t>(rng.below(prime)));
      cubic[i] = f.is_zero() ? cubic[i] : f.monic();
    }
    if (cubic[0].is_zero() || cubic[1].is_zero() || cubic[0] == cubic[1]) continue;
    bool ok = true;
    for (int i = 0; i < 2 && ok; ++i) {
      if (cubic[i].degree() != 3) { ok = false; break; }
      prof[i] = detail::x2_profile(cubic[i], A.tring, 1);
      if (prof[i][1].is_zero() ||
          !detail::binary_squarefree(detail::binary_coeffs(prof[i][1], 2), F)) {
        ok = false;
        break;
      }
      std::vector<Polynomial> jac{cubic[i], cubic[i].derivative(0), cubic[i].derivative(1),
                                  cubic[i].derivative(2)};
      Ideal sing = idealkit::saturate_irrelevant(Ideal(A.plane_z, jac), budget);
      Ideal away = idealkit::ideal_saturate(sing, projlab::point_ideal(A.plane_z, A.o), budget);
      ok = away.is_unit(budget);
    }
    if (!ok) continue;
    // W = e2 e3' - e2' e3 has the five intersection parameters as roots
    Polynomial W = prof[0][1] * prof[1][0] - prof[1][1] * prof[0][0];
    if (W.is_zero() || W.degree() != 5) continue;
    if (!detail::binary_squarefree(detail::binary_coeffs(W, 5), F)) continue;
    auto roots = projlab::binary_roots(projlab::BinaryForm{F, detail::binary_coeffs(W, 5)});
    int total = 0;
    for (auto& [pt, m] : roots) total += m;
    if (roots.size() != 5 || total != 5) continue; // need five split simple roots
    vroots.clear();
    for (auto& [pt, m] : roots) vroots.push_back(pt);
    break;
  }
  rec.eq<int>("Gamma1.Gamma2-on-Z", 5, static_cast<int>(vroots.size()));
  rec.eq<int64_t>("class-(3h-2E)^2", 5,
                  linsys::self_intersection(BlowupClass::uniform(3, 2, 1)));

  // nodal-cubic parametrizations aligned by the ruling parameter
  auto zpar = [&](int i) {
    // t -> (e2 t0 : e2 t1 : -e3)
    std::vector<Polynomial> par(3, Polynomial::zero(A.tring));
    Polynomial t0 = Polynomial::variable(A.tring, 0), t1 = Polynomial::variable(A.tring, 1);
    par[0] = prof[i][1] * t0;
    par[1] = prof[i][1] * t1;
    par[2] = -prof[i][0];
    return par;
  };

  // plane quartic images
  std::array<ProjScheme, 2> quartic_img{projlab::make_scheme(A.plane_w, {}, budget),
                                        projlab::make_scheme(A.plane_w, {}, budget)};
  std::array<Polynomial, 2> quartic_poly{Polynomial::zero(A.plane_w),
                                         Polynomial::zero(A.plane_w)};
  RationalMapModel midmap(A.plane_z, A.plane_w, fb.mid);
  for (int i = 0; i < 2; ++i) {
    auto q_hp = idealkit::expect_curve(4, 3);
    quartic_img[i] = linsys::image_scheme(
        midmap, projlab::make_scheme(A.plane_z, {cubic[i]}, budget), &q_hp, 5, budget);
    auto mins = idealkit::minimal_generators(quartic_img[i].ideal, budget);
    if (mins.size() != 1 || mins[0].degree() != 4)
      throw GenericityError("fixture2: image not a plane quartic");
    quartic_poly[i] = mins[0];
    ProjScheme sing = projlab::singular_locus(quartic_img[i], 1, budget);
    auto hs = hilbert_data(sing.ideal, budget);
    rec.eq<std::string>("quartic" + std::to_string(i + 1) + "-sing", "(dim 0, deg 3)", hs.str());
    if (hs.dim != 0 || hs.degree != 3) throw GenericityError("fixture2: quartic not 3-nodal");
    auto cert = projlab::certify_orbit_plane(quartic_img[i], sing, budget);
    if (!cert.ok()) throw GenericityError("fixture2: quartic nodes not ordinary");
  }
  rec.is_true("two-3-nodal-quartics", true);

  // plane parametrizations of the quartics (degree 4 after the gcd strip)
  std::array<std::vector<Polynomial>, 2> wpar;
  for (int i = 0; i < 2; ++i) {
    auto raw = detail::compose_binary(fb.mid, zpar(i), A.tring, 6);
    auto stripped = detail::strip_common_factor(raw, F);
    std::vector<Polynomial> par;
    int deg = 0;
    for (auto& c : stripped) deg = std::max<int>(deg, static_cast<int>(c.size()) - 1);
    for (auto& c : stripped) {
      std::vector<uint32_t> cc = c;
      cc.resize(deg + 1, 0); // degrees agree after stripping; guard anyway
      par.push_back(detail::binary_poly(A.tring, cc));
    }
    if (deg != 4) throw GenericityError("fixture2: plane parametrization degree off");
    wpar[i] = par;
  }

  // the sixteen intersection points of the two quartics, all split
  Polynomial meet16 = quartic_poly[1].substitute(wpar[0]);
  if (meet16.is_zero() || meet16.degree() != 16)
    throw GenericityError("fixture2: intersection pullback degenerate");
  auto roots16 = projlab::binary_roots(projlab::BinaryForm{F, detail::binary_coeffs(meet16, 16)});
  int tot = 0;
  for (auto& [pt, m] : roots16) tot += m;
  if (roots16.size() != 16 || tot != 16)
    throw GenericityError("fixture2: sixteen intersections not split and transverse");
  rec.eq<int>("quartic-intersections", 16, static_cast<int>(roots16.size()));

  auto eval_par = [&](const std::vector<Polynomial>& par, const Point& t) {
    std::vector<uint32_t> v;
    for (auto& p : par) v.push_back(p.evaluate(t.c));
    return projlab::normalize_point(std::move(v), F);
  };

  std::vector<Point> vimg;
  for (auto& t : vroots) vimg.push_back(eval_par(wpar[0], t));
  std::vector<Point> sixteen, others;
  for (auto& [t, m] : roots16) sixteen.push_back(eval_par(wpar[0], t));
  for (auto& p : sixteen) {
    bool isv = false;
    for (auto& v : vimg) isv |= (v == p);
    if (!isv) others.push_back(p);
  }
  rec.eq<int>("non-v-intersections", 11, static_cast<int>(others.size()));
  if (others.size() != 11) throw GenericityError("fixture2: v-image matching failed");
  std::sort(others.begin(), others.end());
  std::vector<Point> chosen3(others.begin(), others.begin() + 3);
  std::vector<Point> nprime(others.begin() + 3, others.end());
  rec.eq<int>("partition-5-3-8", 8, static_cast<int>(nprime.size()));

  // nine points: the six quartic nodes plus the three chosen crossings
  Ideal nine = idealkit::ideal_intersect(
      projlab::singular_locus(quartic_img[0], 1, budget).ideal,
      projlab::singular_locus(quartic_img[1], 1, budget).ideal, budget);
  nine = idealkit::saturate_irrelevant(
      idealkit::ideal_intersect(nine, projlab::vanishing_ideal(A.plane_w, chosen3, budget),
                                budget),
      budget);
  ProjScheme nine_sch = projlab::scheme_presaturated(A.plane_w, nine);
  auto h9 = hilbert_data(nine, budget);
  rec.eq<std::string>("nine-point-scheme", "(dim 0, deg 9)", h9.str());
  if (h9.dim != 0 || h9.degree != 9) throw GenericityError("fixture2: nine-point scheme off");
  auto cubics9 = linsys::forms_with_base_conditions(A.plane_w, 3, {{nine_sch, 1}}, budget);
  rec.eq<int>("unique-cubic", 1, cubics9.dim());
  if (cubics9.dim() != 1) throw GenericityError("fixture2: cubic not unique");
  bool jsmooth =
      projlab::singular_locus(projlab::make_scheme(A.plane_w, {cubics9.basis[0]}, budget), 1,
                              budget)
          .is_empty(budget);
  rec.is_true("unique-cubic-smooth", jsmooth);
  if (!jsmooth) throw GenericityError("fixture2: unique cubic singular");

  auto quartics9 = linsys::forms_with_base_conditions(A.plane_w, 4, {{nine_sch, 1}}, budget);
  rec.eq<int>("quartics-through-nine", 6, quartics9.dim());
  if (quartics9.dim() != 6) throw GenericityError("fixture2: quartic system off");
  RationalMapModel phi(A.plane_w, A.p5, quartics9.basis);
  auto t_hp = linsys::surface_hp(BlowupClass::uniform(4, 1, 9));
  ProjScheme T = linsys::image_scheme(phi, linsys::whole_space(A.plane_w), &t_hp, 4, budget);
  rec.eq<std::string>("T-hilbert", "(dim 2, deg 7)", hilbert_data(T.ideal, budget).str());

  // degree-7 rational images of the two curves
  std::array<ProjScheme, 2> gim{projlab::make_scheme(A.p5, {}, budget),
                                projlab::make_scheme(A.p5, {}, budget)};
  for (int i = 0; i < 2; ++i) {
    auto g_hp = idealkit::expect_curve(7, 0);
    gim[i] = linsys::image_scheme(phi, quartic_img[i], &g_hp, 4, budget);
    rec.eq<std::string>("Gamma" + std::to_string(i + 1) + "-hilbert", "(dim 1, deg 7, pa 0)",
                        hilbert_data(gim[i].ideal, budget).str());
  }
  Ideal gunion = idealkit::ideal_intersect(gim[0].ideal, gim[1].ideal, budget);
  rec.eq<std::string>("Gamma-union-hilbert", "(dim 1, deg 14, pa 12)",
                      hilbert_data(gunion, budget).str());
  rec.eq<int64_t>("Gamma1.Gamma2-in-P5", 13,
                  projlab::intersection_length(gim[0], gim[1], budget));

  // node images in P^5
  std::vector<Point> n8;
  for (auto& p : nprime) n8.push_back(detail::map_point(phi.forms, p, F));
  std::vector<Point> n5;
  for (auto& p : vimg) n5.push_back(detail::map_point(phi.forms, p, F));

  // P^5 parametrizations, degree 7 after stripping the base-point factor
  std::array<std::vector<std::vector<uint32_t>>, 2> gpar;
  for (int i = 0; i < 2; ++i) {
    auto raw = detail::compose_binary(phi.forms, wpar[i], A.tring, 16);
    auto stripped = detail::strip_common_factor(raw, F);
    int deg = 0;
    for (auto& c : stripped) deg = std::max<int>(deg, static_cast<int>(c.size()) - 1);
    if (deg != 7) throw GenericityError("fixture2: scroll parametrization degree off");
    for (auto& c : stripped) c.resize(deg + 1, 0);
    gpar[i] = stripped;
  }
  rec.eq<int>("ruling-parametrization-degree", 7,
              static_cast<int>(gpar[0][0].size()) - 1);

  // sample the ruled union and interpolate its cubics
  auto eval_bin = [&](const std::vector<uint32_t>& c, uint32_t s, uint32_t t) {
    projlab::BinaryForm bf{F, c};
    return bf.eval(s, t);
  };
  std::vector<Point> samples;
  int guard = 0;
  while (samples.size() < 90) {
    if (++guard > 20000) throw GenericityError("fixture2: sampling exhausted");
    uint32_t s = 1, t = static_cast<uint32_t>(rng.below(prime));
    std::vector<uint32_t> pa, pb;
    for (int k = 0; k < 6; ++k) {
      pa.push_back(eval_bin(gpar[0][k], s, t));
      pb.push_back(eval_bin(gpar[1][k], s, t));
    }
    bool za = true, zb = true;
    for (auto v : pa) za &= (v == 0);
    for (auto v : pb) zb &= (v == 0);
    if (za || zb) continue;
    Point A5 = projlab::normalize_point(pa, F);
    Point B5 = projlab::normalize_point(pb, F);
    if (A5 == B5) continue;
    Point P = detail::combine(A5, B5, 1 + static_cast<uint32_t>(rng.below(prime - 1)),
                              1 + static_cast<uint32_t>(rng.below(prime - 1)), F);
    bool dup = false;
    for (auto& q : samples) dup |= (q == P);
    if (!dup) samples.push_back(P);
  }
  // certification ring for the fixture parametrization
  RingPtr lring = polycore::make_ring(prime, {"t0", "t1", "la", "mu"});
  std::vector<Polynomial> linepar;
  for (int k = 0; k < 6; ++k) {
    Polynomial la = Polynomial::variable(lring, 2), mu = Polynomial::variable(lring, 3);
    Polynomial g1 = polycore::map_poly(detail::binary_poly(A.tring, gpar[0][k]), lring,
                                       std::vector<int>{0, 1});
    Polynomial g2 = polycore::map_poly(detail::binary_poly(A.tring, gpar[1][k]), lring,
                                       std::vector<int>{0, 1});
    linepar.push_back(la * g1 + mu * g2);
  }
  std::vector<Polynomial> cubics;
  bool certified = false;
  for (int round = 0; round < 6 && !certified; ++round) {
    cubics = interpolate_forms(A.p5, 3, samples);
    certified = !cubics.empty();
    for (auto& g : cubics) certified &= g.substitute(linepar).is_zero();
    if (!certified) {
      int want = static_cast<int>(samples.size()) + 40;
      while (static_cast<int>(samples.size()) < want) {
        uint32_t t = static_cast<uint32_t>(rng.below(prime));
        std::vector<uint32_t> pa, pb;
        for (int k = 0; k < 6; ++k) {
          pa.push_back(eval_bin(gpar[0][k], 1, t));
          pb.push_back(eval_bin(gpar[1][k], 1, t));
        }
        bool za = true, zb = true;
        for (auto v : pa) za &= (v == 0);
        for (auto v : pb) zb &= (v == 0);
        if (za || zb) continue;
        Point A5 = projlab::normalize_point(pa, F);
        Point B5 = projlab::normalize_point(pb, F);
        if (A5 == B5) continue;
        samples.push_back(detail::combine(A5, B5,
                                          1 + static_cast<uint32_t>(rng.below(prime - 1)),
                                          1 + static_cast<uint32_t>(rng.below(prime - 1)), F));
      }
    }
  }
  rec.eq<int>("h0-I_R(3)", 6, static_cast<int>(cubics.size()));
  rec.is_true("cubics-vanish-on-rulings", certified);
  if (!certified || cubics.size() != 6) throw GenericityError("fixture2: scroll cubics failed");

  Ideal JR = idealkit::saturate_irrelevant(Ideal(A.p5, cubics), budget);
  auto hr = hilbert_data(JR, budget);
  rec.eq<std::string>("R-hilbert", "(dim 2, deg 9)", hr.str());
  auto expected = linsys::surface_hp(BlowupClass::uniform(5, 4, 1), 8);
  bool hp_match = hr.same_polynomial(expected);
  rec.is_true("R-hilbert-polynomial-match", hp_match);
  if (!hp_match) throw VerificationError("fixture2: scroll Hilbert polynomial off");
  ProjScheme R = projlab::scheme_presaturated(A.p5, JR);
  rec.is_true("Gamma-union-inside-R", R.contains(projlab::scheme_presaturated(A.p5, gunion), budget));

  // Sing(R) = {n_1..n_8}, and none of the five v-nodes
  ProjScheme singR = projlab::singular_locus(R, 3, budget);
  auto hsing = hilbert_data(singR.ideal, budget);
  rec.eq<std::string>("Sing-R", "(dim 0, deg 8)", hsing.str());
  Ideal n8ideal = projlab::vanishing_ideal(A.p5, n8, budget);
  bool sing_match = singR.ideal.equals(n8ideal, budget);
  rec.is_true("Sing-R-is-the-8-nodes", sing_match);
  if (!sing_match) throw VerificationError("fixture2: Sing(R) mismatch");
  bool v_off = true;
  for (auto& v : n5) v_off &= !singR.contains_point(v);
  rec.is_true("v-nodes-not-on-Sing-R", v_off);
  bool odp = true;
  for (auto& n : n8) odp &= projlab::certify_node_at(R, n, 2, budget).ok();
  rec.is_true("R-nodes-are-ODP", odp);
  if (!odp || !v_off) throw VerificationError("fixture2: node certification failed");
}

inline void stage_fixtures(uint32_t prime, uint64_t seed, int attempt, Recorder& rec,
                           const Budget& budget) {
  Rng rng1 = derived_rng(seed, "fixture-degenerate", attempt);
  fixture_degenerate_rulings(prime, rng1, rec, budget);
  Rng rng2 = derived_rng(seed, "fixture-two-rational", attempt);
  fixture_two_rational(prime, rng2, rec, budget);
}

} // namespace scrollforge::k3pipeline
