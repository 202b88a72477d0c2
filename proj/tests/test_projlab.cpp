#include "doctest.h"

#include "scrollforge/nodes.hpp"

using namespace scrollforge;
using namespace scrollforge::polycore;
using namespace scrollforge::idealkit;
using namespace scrollforge::projlab;

namespace {
RingPtr P2() { return make_ring(32003, {"x", "y", "z"}); }
RingPtr P3() { return make_ring(32003, {"w0", "w1", "w2", "w3"}); }

ProjScheme twisted_cubic(const RingPtr& r) {
  auto w = [&](int i) { return Polynomial::variable(r, i); };
  return make_scheme(r, {w(0) * w(2) - w(1) * w(1), w(0) * w(3) - w(1) * w(2),
                         w(1) * w(3) - w(2) * w(2)});
}
} // namespace

TEST_CASE("span of points") {
  auto r6 = make_ring(32003, 6); // P^5
  Rng rng(17);
  Point a = random_point(r6, rng), b = random_point(r6, rng);
  auto pts = vanishing_ideal(r6, {a, b});
  auto L = span_of(scheme_presaturated(r6, pts));
  CHECK(L.codim == 4); // a line in P^5
  // idempotence: span of a linear space is itself
  auto L2 = span_of(L.scheme);
  CHECK(L2.codim == L.codim);
  CHECK(L2.scheme.ideal.equals(L.scheme.ideal));
}

TEST_CASE("projection of the twisted cubic from a point on it") {
  auto r = P3();
  ProjScheme C = twisted_cubic(r);
  // center (1:0:0:0) lies on the curve; image should be a conic
  Point on{std::vector<uint32_t>{1, 0, 0, 0}};
  REQUIRE(C.contains_point(on));
  auto center = LinearSubspace{scheme_presaturated(r, point_ideal(r, on)), 3};
  ProjScheme img = project_from(C, center);
  auto h = hilbert(img);
  CHECK(h.dim == 1);
  CHECK(h.degree == 2);
  // oracle: parametrize and eliminate directly; the image of
  // (t^2 u, t u^2, u^3) satisfies z0 z2 = z1^2
  const auto& gens = img.ideal.gens();
  REQUIRE(gens.size() == 1);
  auto z = [&](int i) { return Polynomial::variable(img.ring, i); };
  Ideal conic(img.ring, {z(0) * z(2) - z(1) * z(1)});
  CHECK(img.ideal.equals(conic));
  // hinted route agrees
  HilbertData hint = expect_curve(2, 0);
  ProjScheme img2 = project_from(C, center, &hint);
  CHECK(img2.ideal.equals(img.ideal));
}

TEST_CASE("projection from a disjoint line can fill the plane") {
  auto r = P3();
  ProjScheme C = twisted_cubic(r);
  // project P^3 -> P^1 from a generic line: image of the cubic is all of P^1
  Rng rng(5);
  for (int attempt = 0; attempt < 5; ++attempt) {
    Point a = random_point(r, rng), b = random_point(r, rng);
    auto L = line_through(r, a, b);
    if (!scheme_intersection(C, L.scheme).is_empty()) continue;
    ProjScheme img = project_from(C, L);
    CHECK(img.ideal.is_zero_ideal());
    return;
  }
  FAIL("no disjoint line found");
}

TEST_CASE("singular locus of a nodal cubic") {
  auto r = P2();
  auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1),
       z = Polynomial::variable(r, 2);
  // z y^2 = x^3 + x^2 z: node at (0:0:1)
  ProjScheme X = make_scheme(r, {z * y * y - x * x * x - x * x * z});
  ProjScheme S = singular_locus(X, 1);
  auto h = hilbert(S);
  CHECK(h.dim == 0);
  CHECK(h.degree == 1);
  Point node{std::vector<uint32_t>{0, 0, 1}};
  CHECK(S.contains_point(node));
  // oracle: the Jacobian generators all vanish at the node
  for (auto& g : X.ideal.gens())
    for (int v = 0; v < 3; ++v) CHECK(eval_at(g.derivative(v), node) == 0);

  auto cert = certify_point_plane(X, node);
  CHECK(cert.ok());
  // tangent-cone route agrees (cone y^2 - x^2)
  auto cert2 = certify_node_at(X, node, 1);
  CHECK(cert2.ok());

  // smooth conic: empty singular locus
  ProjScheme Q = make_scheme(r, {x * z - y * y});
  CHECK(singular_locus(Q, 1).is_empty());
}

TEST_CASE("cusp fails certification") {
  auto r = P2();
  auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1),
       z = Polynomial::variable(r, 2);
  ProjScheme X = make_scheme(r, {z * y * y - x * x * x});
  Point cusp{std::vector<uint32_t>{0, 0, 1}};
  auto cert = certify_point_plane(X, cusp);
  CHECK_FALSE(cert.ok());
  auto cert2 = certify_node_at(X, cusp, 1);
  CHECK_FALSE(cert2.ok());
  ProjScheme S = singular_locus(X, 1);
  CHECK_THROWS_AS(require_all_nodes(certify_nodes(X, S, {cusp}, 1), "cusp fixture"),
                  CertificationError);
}

TEST_CASE("tangent cone of a smooth conic is the tangent line") {
  auto r = P2();
  auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1),
       z = Polynomial::variable(r, 2);
  ProjScheme Q = make_scheme(r, {x * z - y * y});
  Point P{std::vector<uint32_t>{1, 0, 0}};
  RingPtr local;
  Ideal tc = tangent_cone_at(Q, P, &local);
  auto lin = graded_piece(tc, 1);
  CHECK(lin.size() == 1); // one tangent line in the plane chart
}

TEST_CASE("surface node certificate: two transverse planes in P^5") {
  auto r = make_ring(32003, 6);
  auto v = [&](int i) { return Polynomial::variable(r, i); };
  // planes {x3=x4=x5=0} and {x1=x2=x5=0} meet only at (1:0:...:0)
  Ideal I1(r, {v(3), v(4), v(5)});
  Ideal I2(r, {v(1), v(2), v(5)});
  ProjScheme X = scheme_presaturated(r, ideal_intersect(I1, I2));
  Point P{std::vector<uint32_t>{1, 0, 0, 0, 0, 0}};
  auto cert = certify_node_at(X, P, 2);
  CHECK(cert.ok());
  // degenerate contrast: planes meeting along a line are not an ODP
  Ideal J2(r, {v(2), v(3), v(5)});
  ProjScheme Y = scheme_presaturated(r, ideal_intersect(I1, J2));
  auto bad = certify_node_at(Y, P, 2);
  CHECK_FALSE(bad.ok());
}

TEST_CASE("residual of one line in a pair of lines") {
  auto r = P2();
  auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  ProjScheme pair = make_scheme(r, {x * y});
  ProjScheme lineX = make_scheme(r, {x});
  ProjScheme other = residual(pair, lineX);
  CHECK(other.ideal.equals(Ideal(r, {y})));
  // certified variant with the expected line data
  ProjScheme other2 = residual_certified(pair, lineX, expect_curve(1, 0));
  CHECK(other2.ideal.equals(other.ideal));
  CHECK_THROWS_AS(residual(lineX, pair), std::invalid_argument);
}

TEST_CASE("intersection length of two lines") {
  auto r = P2();
  auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  ProjScheme A = make_scheme(r, {x});
  ProjScheme B = make_scheme(r, {y});
  CHECK(intersection_length(A, B) == 1);
  CHECK_THROWS_AS(intersection_length(A, A), VerificationError);
}

TEST_CASE("vanishing ideal of random plane points") {
  auto r = P2();
  Rng rng(29);
  std::vector<Point> pts;
  while (pts.size() < 9) {
    Point p = random_point(r, rng);
    bool dup = false;
    for (auto& q : pts) dup |= (q == p);
    if (!dup) pts.push_back(p);
  }
  Ideal I = vanishing_ideal(r, pts);
  auto h = hilbert_data(I);
  CHECK(h.dim == 0);
  CHECK(h.degree == 9);
  CHECK(graded_dim(I, 3) == 9); // so cubics through 9 general points: 10 - 9 = 1
  for (auto& p : pts)
    for (auto& g : I.gens()) CHECK(eval_at(g, p) == 0);
}

TEST_CASE("binary form roots") {
  PrimeField F(32003);
  // (s - 2t)(s - 3t)^2 = s^3 - 8 s^2 t + 21 s t^2 - 18 t^3
  BinaryForm f{F, {1, F.reduce_signed(-8), 21, F.reduce_signed(-18)}};
  auto roots = binary_roots(f);
  REQUIRE(roots.size() == 2);
  int total = 0;
  for (auto& [pt, m] : roots) total += m;
  CHECK(total == 3);
  // quadratic solver
  auto qr = quadratic_roots(F, 1, F.reduce_signed(-5), 6); // (s-2t)(s-3t)
  REQUIRE(qr.size() == 2);
  CHECK(!(qr[0] == qr[1]));
}
