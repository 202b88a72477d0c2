#include "doctest.h"

#include "scrollforge/lattice.hpp"
#include "scrollforge/rng.hpp"

using namespace scrollforge;
using namespace scrollforge::hklattice;

TEST_CASE("Beauville-Bogomolov values") {
  CHECK(bb_q(LatticeClass::cur(0, 1)) == Rational(-1, 2));  // q(dp,dp)
  CHECK(bb_q(LatticeClass::cur(1, 0)) == Rational(42));     // q(fp,fp) = 2g-2
  CHECK(bb_q(LatticeClass::cur(3, -27)) == Rational(27, 2));
  CHECK(bb_q(LatticeClass::div(55, -252)) == Rational(42)); // q(55f-252d) = q(f)
  CHECK(bb_q(plucker_class()) == Rational(6));              // q(2f-9d) = 6
  CHECK_THROWS_AS(bb_q(LatticeClass::cur(1, 0), LatticeClass::div(1, 0)),
                  std::invalid_argument);
}

TEST_CASE("intersection pairing table") {
  CHECK(pair(LatticeClass::div(1, 0), LatticeClass::cur(1, 0)) == 42); // f.fp
  CHECK(pair(LatticeClass::div(0, 1), LatticeClass::cur(0, 1)) == -1); // d.dp
  CHECK(pair(LatticeClass::div(1, 0), LatticeClass::cur(0, 1)) == 0);
  CHECK(pair(LatticeClass::div(0, 1), LatticeClass::cur(1, 0)) == 0);
  CHECK(pair(LatticeClass::div(2, -9), LatticeClass::cur(0, 1)) == 9); // (2f-9d).dp
  CHECK_THROWS_AS(pair(LatticeClass::cur(1, 0), LatticeClass::cur(0, 1)),
                  std::invalid_argument);
}

TEST_CASE("bilinearity and symmetry on random classes") {
  Rng rng(13);
  for (int k = 0; k < 50; ++k) {
    auto rnd = [&]() { return static_cast<int64_t>(rng.below(41)) - 20; };
    LatticeClass x = LatticeClass::cur(rnd(), rnd());
    LatticeClass y = LatticeClass::cur(rnd(), rnd());
    CHECK(bb_q(x, y) == bb_q(y, x));
    LatticeClass sum = LatticeClass::cur(x.a + y.a, x.b + y.b);
    CHECK(bb_q(sum) == bb_q(x) + bb_q(y) + Rational(2) * bb_q(x, y));
  }
}

TEST_CASE("plucker degrees") {
  CHECK(plucker_degree(LatticeClass::cur(0, 1)) == 9);   // dp
  CHECK(plucker_degree(LatticeClass::cur(6, -55)) == 9); // 6fp-55dp
  CHECK(plucker_degree(LatticeClass::cur(1, 0)) == 84);  // fp
}

TEST_CASE("degree 9 class enumeration") {
  auto rows = enumerate_degree9();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].cls.a == 0);
  CHECK(rows[0].cls.b == 1); // dp
  CHECK(rows[0].q == Rational(-1, 2));
  CHECK(rows[0].r_squared == Rational(41));
  CHECK(rows[0].accepted);
  CHECK(rows[1].cls.a == 3);
  CHECK(rows[1].cls.b == -27);
  CHECK(rows[1].q == Rational(27, 2));
  CHECK(rows[1].r_squared == Rational(27)); // rejected: 81/2 - 27/2
  CHECK_FALSE(rows[1].accepted);
  CHECK(rows[2].cls.a == 6);
  CHECK(rows[2].cls.b == -55);
  CHECK(rows[2].q == Rational(-1, 2));
  CHECK(rows[2].accepted);
  // exhaustive: the brute-force box finds exactly these three
  auto brute = degree9_brute_force(100, 1000);
  CHECK(brute.size() == 3);
  // lattice discriminant det [[3,9],[9,41]] = 42
  CHECK(scroll_lattice_discriminant(3, 9, 41) == 42);
}

TEST_CASE("double point formula") {
  auto r = double_points({41, 9, 8, -11, 4});
  CHECK(r.integral);
  CHECK(r.count == Rational(8));
  auto zero = double_points({0, 0, 0, 0, 0});
  CHECK(zero.count == Rational(0));
  auto rejected = double_points({27, 9, 8, -11, 4});
  CHECK(rejected.count == Rational(1));
  // parity flag, no throw
  auto odd = double_points({1, 0, 0, 0, 0});
  CHECK_FALSE(odd.integral);
  // affine-linear in each argument
  auto base = double_points({10, 3, 2, 1, 5}).count;
  auto bumped = double_points({12, 3, 2, 1, 5}).count;
  CHECK(bumped - base == Rational(1));
}

TEST_CASE("hassett verdicts") {
  auto v42 = hassett_verdict(42);
  CHECK(v42.divisorial);
  CHECK(v42.k3_associated);
  auto v14 = hassett_verdict(14);
  CHECK(v14.divisorial);
  CHECK(v14.k3_associated);
  auto v26 = hassett_verdict(26);
  CHECK(v26.divisorial);
  CHECK(v26.k3_associated);
  auto v8 = hassett_verdict(8);
  CHECK(v8.divisorial);
  CHECK_FALSE(v8.k3_associated); // 4 | 8
  CHECK_FALSE(hassett_verdict(6).divisorial);
  CHECK_FALSE(hassett_verdict(7).divisorial);
  // d = 2(n^2+n+1) for n = 2,3,4
  for (int64_t n : {2, 3, 4}) {
    auto v = hassett_verdict(2 * (n * n + n + 1));
    CHECK(v.divisorial);
    CHECK(v.k3_associated);
  }
  // every k3-associated d is divisorial by construction
  for (int64_t d = 7; d <= 200; ++d) {
    auto v = hassett_verdict(d);
    if (v.k3_associated) CHECK(v.divisorial);
  }
}

TEST_CASE("involution transport") {
  // r(d) = 12f' - 55d' on divisors
  auto rd = involution_transport(LatticeClass::div(0, 1));
  CHECK(rd.a == 12);
  CHECK(rd.b == -55);
  // matrix squares to the identity
  for (Side s : {Side::divisor, Side::curve}) {
    auto M = involution_matrix(s);
    int64_t m00 = M[0][0] * M[0][0] + M[0][1] * M[1][0];
    int64_t m01 = M[0][0] * M[0][1] + M[0][1] * M[1][1];
    int64_t m10 = M[1][0] * M[0][0] + M[1][1] * M[1][0];
    int64_t m11 = M[1][0] * M[0][1] + M[1][1] * M[1][1];
    CHECK(m00 == 1);
    CHECK(m01 == 0);
    CHECK(m10 == 0);
    CHECK(m11 == 1);
  }
  // involution and isometry on random classes
  Rng rng(99);
  for (int k = 0; k < 50; ++k) {
    auto rnd = [&]() { return static_cast<int64_t>(rng.below(61)) - 30; };
    for (Side s : {Side::divisor, Side::curve}) {
      LatticeClass x{rnd(), rnd(), s, 22};
      LatticeClass y = involution_transport(x);
      LatticeClass z = involution_transport(y);
      CHECK(z.a == x.a);
      CHECK(z.b == x.b);
      CHECK(bb_q(y) == bb_q(x));
    }
  }
  // nef rays swap: f <-> 55f - 252d
  auto rf = involution_transport(LatticeClass::div(1, 0));
  CHECK(rf.a == 55);
  CHECK(rf.b == -252);
  auto back = involution_transport(LatticeClass::div(55, -252));
  CHECK(back.a == 1);
  CHECK(back.b == 0);
  // curve-side rays: r(d'_p) = 6fp - 55dp
  auto rdp = involution_transport(LatticeClass::cur(0, 1));
  CHECK(rdp.a == 6);
  CHECK(rdp.b == -55);
}
