#include "doctest.h"

#include "scrollforge/hilbert.hpp"

using namespace scrollforge;
using namespace scrollforge::polycore;
using namespace scrollforge::idealkit;

TEST_CASE("twisted cubic hilbert data with polynomial-fit oracle") {
  auto r = make_ring(32003, {"w0", "w1", "w2", "w3"});
  auto w = [&](int i) { return Polynomial::variable(r, i); };
  Ideal I(r, {w(0) * w(2) - w(1) * w(1), w(0) * w(3) - w(1) * w(2),
              w(1) * w(3) - w(2) * w(2)});
  auto h = hilbert_data(I);
  CHECK(h.dim == 1);
  CHECK(h.degree == 3);
  REQUIRE(h.pa.has_value());
  CHECK(*h.pa == 0);
  // oracle: graded_dim at d = 1..5, then fit HP(d) = 3d + 1 and compare
  for (int d = 1; d <= 5; ++d) CHECK(graded_dim(I, d) == 3 * d + 1);
  CHECK(h.hp_at(7) == Rational(22));
}

TEST_CASE("zero and unit ideals") {
  auto r = make_ring(32003, 4); // P^3
  auto h0 = hilbert_data(Ideal::zero(r));
  CHECK(h0.dim == 3);
  CHECK(h0.degree == 1);
  auto hu = hilbert_data(Ideal(r, {Polynomial::constant(r, 1)}));
  CHECK(hu.dim == -1);
  CHECK(hu.degree == 0);
}

TEST_CASE("points and plane curves") {
  auto r = make_ring(32003, {"x", "y", "z"});
  auto x = Polynomial::variable(r, 0);
  auto y = Polynomial::variable(r, 1);
  // one reduced point (0:0:1)
  auto hp = hilbert_data(Ideal(r, {x, y}));
  CHECK(hp.dim == 0);
  CHECK(hp.degree == 1);
  // a plane quartic: dim 1, degree 4, pa = 3
  auto z = Polynomial::variable(r, 2);
  auto f = x * x * x * x + y * y * y * y + z * z * z * z;
  auto hq = hilbert_data(Ideal(r, {f}));
  CHECK(hq.dim == 1);
  CHECK(hq.degree == 4);
  CHECK(*hq.pa == 3);
}

TEST_CASE("expected-HP builders agree with computed data") {
  auto r = make_ring(32003, {"w0", "w1", "w2", "w3"});
  auto w = [&](int i) { return Polynomial::variable(r, i); };
  Ideal I(r, {w(0) * w(2) - w(1) * w(1), w(0) * w(3) - w(1) * w(2),
              w(1) * w(3) - w(2) * w(2)});
  auto h = hilbert_data(I);
  CHECK(h.same_polynomial(expect_curve(3, 0)));
  CHECK_FALSE(h.same_polynomial(expect_curve(3, 1)));
}
