#include "doctest.h"

#include "scrollforge/linsys.hpp"

using namespace scrollforge;
using namespace scrollforge::polycore;
using namespace scrollforge::idealkit;
using namespace scrollforge::projlab;
using namespace scrollforge::linsys;

namespace {
RingPtr plane() { return make_ring(32003, {"x0", "x1", "x2"}); }
Point origin_pt() { return Point{std::vector<uint32_t>{0, 0, 1}}; }
} // namespace

TEST_CASE("plane systems with a fat point") {
  auto r = plane();
  ProjScheme o = scheme_presaturated(r, point_ideal(r, origin_pt()));
  // |2h - E|: conics through one point
  auto fb2 = forms_with_base_conditions(r, 2, {{o, 1}});
  CHECK(fb2.dim() == 5);
  CHECK(fb2.generic);
  // |5h - 4E|: quintics with a 4-fold point
  auto fb5 = forms_with_base_conditions(r, 5, {{o, 4}});
  CHECK(fb5.dim() == 11);
  CHECK(fb5.generic);
  // every basis form vanishes to order 4: all third partials vanish at o
  for (auto& f : fb5.basis) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          CHECK(eval_at(f.derivative(i).derivative(j).derivative(k), origin_pt()) == 0);
  }
}

TEST_CASE("quartics and cubics through nine general points") {
  auto r = plane();
  Rng rng(101);
  std::vector<Point> pts;
  while (pts.size() < 9) {
    Point p = random_point(r, rng);
    bool dup = false;
    for (auto& q : pts) dup |= (q == p);
    if (!dup) pts.push_back(p);
  }
  ProjScheme nine = scheme_presaturated(r, vanishing_ideal(r, pts));
  auto quartics = forms_with_base_conditions(r, 4, {{nine, 1}});
  CHECK(quartics.dim() == 6);
  auto cubics = forms_with_base_conditions(r, 3, {{nine, 1}});
  CHECK(cubics.dim() == 1);
  // empty system is not an error
  auto lines = forms_with_base_conditions(r, 1, {{nine, 1}});
  CHECK(lines.dim() == 0);
}

TEST_CASE("class arithmetic on F1 and Bl9") {
  // (6h-4E)^2 = 20, genus 4
  auto c64 = BlowupClass::uniform(6, 4, 1);
  CHECK(self_intersection(c64) == 20);
  CHECK(arithmetic_genus(c64) == 4);
  // (4h-2E): genus 2
  CHECK(arithmetic_genus(BlowupClass::uniform(4, 2, 1)) == 2);
  // (3h-2E)^2 = 5, genus 0
  auto c32 = BlowupClass::uniform(3, 2, 1);
  CHECK(self_intersection(c32) == 5);
  CHECK(arithmetic_genus(c32) == 0);
  // deg on P^5 of (8h-2*sum E)(4h-sum E) = 14
  CHECK(degree_under(BlowupClass::uniform(8, 2, 9), BlowupClass::uniform(4, 1, 9)) == 14);
  // (2h-E) on F1: the cubic scroll data
  auto emb = BlowupClass::uniform(2, 1, 1);
  CHECK(self_intersection(emb) == 3);
  auto hp = surface_hp(emb);
  CHECK(hp.degree == 3);
  CHECK(hp.hp_at(2) == Rational(12)); // h^0(O_Z(2)) = 1 + (12+10)/2
}

TEST_CASE("image of the plane under conics through a point is the cubic scroll") {
  auto r = plane();
  ProjScheme o = scheme_presaturated(r, point_ideal(r, origin_pt()));
  auto fb = forms_with_base_conditions(r, 2, {{o, 1}});
  REQUIRE(fb.dim() == 5);
  auto m = map_from_basis(r, fb.basis, "z");
  // certified kernel route
  auto hint = surface_hp(BlowupClass::uniform(2, 1, 1));
  ProjScheme Z = image_scheme(m, whole_space(r), &hint);
  auto h = hilbert(Z);
  CHECK(h.dim == 2);
  CHECK(h.degree == 3);
  CHECK(graded_dim(Z.ideal, 2) == 12); // so three quadrics contain Z
  // exact elimination route agrees
  ProjScheme Z2 = image_scheme(m, whole_space(r));
  CHECK(Z2.ideal.equals(Z.ideal));
  // the scroll is smooth: codim 2 Jacobian minors have no common zero
  CHECK(singular_locus(Z, 2).is_empty());
  // image points satisfy the ideal
  Rng rng(7);
  for (int k = 0; k < 10; ++k) {
    Point p = random_point(r, rng);
    Point q = m.apply(p);
    CHECK(Z.contains_point(q));
  }
}

TEST_CASE("image of a curve through base points is the strict transform image") {
  auto r = plane();
  ProjScheme o = scheme_presaturated(r, point_ideal(r, origin_pt()));
  auto fb = forms_with_base_conditions(r, 2, {{o, 1}});
  auto m = map_from_basis(r, fb.basis, "z");
  // a nodal cubic with its node at the base point o: class 3h - 2E,
  // image degree (3h-2E).(2h-E) = 4, rational
  auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1),
       z = Polynomial::variable(r, 2);
  ProjScheme nodal = make_scheme(r, {z * (x * x - y * y) + x * x * x + y * y * y});
  auto hint = curve_hp(BlowupClass::uniform(3, 2, 1), BlowupClass::uniform(2, 1, 1));
  CHECK(hint.degree == 4);
  CHECK(*hint.pa == 0);
  ProjScheme img = image_scheme(m, nodal, &hint);
  auto h = hilbert(img);
  CHECK(h.degree == 4);
  CHECK(*h.pa == 0); // the node was resolved by the blow-up
}

TEST_CASE("image errors when X sits inside the base scheme") {
  auto r = plane();
  ProjScheme o = scheme_presaturated(r, point_ideal(r, origin_pt()));
  auto fb = forms_with_base_conditions(r, 2, {{o, 1}});
  auto m = map_from_basis(r, fb.basis, "z");
  CHECK_THROWS_AS(image_scheme(m, o), VerificationError);
}
