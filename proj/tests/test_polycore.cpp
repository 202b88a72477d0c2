#include "doctest.h"

#include "scrollforge/poly.hpp"
#include "scrollforge/rng.hpp"

using namespace scrollforge;
using namespace scrollforge::polycore;

TEST_CASE("prime field basics") {
  PrimeField f7(7);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.add(6, 1) == 0);
  PrimeField f(32003);
  CHECK(f.mul(32002, 32002) == 1);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(PrimeField(6), std::domain_error);
  // sqrt on a few squares
  for (uint32_t a : {2u, 5u, 1234u}) {
    uint32_t sq = f.mul(a, a);
    uint32_t r = f.sqrt(sq);
    CHECK(f.mul(r, r) == sq);
  }
}

TEST_CASE("field axioms on random triples") {
  PrimeField f(32003);
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    uint32_t a = static_cast<uint32_t>(rng.below(32003));
    uint32_t b = static_cast<uint32_t>(rng.below(32003));
    uint32_t c = static_cast<uint32_t>(rng.below(32003));
    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    if (a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

static Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

TEST_CASE("polynomial arithmetic") {
  auto r = make_ring(32003, {"x", "y"});
  auto x = Polynomial::variable(r, 0);
  auto y = Polynomial::variable(r, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x * Polynomial::zero(r)).is_zero());
  // Frobenius in characteristic 2
  auto r2 = make_ring(2, {"x", "y"});
  auto x2 = Polynomial::variable(r2, 0);
  auto y2 = Polynomial::variable(r2, 1);
  CHECK((x2 + y2) * (x2 + y2) == x2 * x2 + y2 * y2);
  // degree additivity
  CHECK((x * x * y + y * y * y).degree() == 3);
}

TEST_CASE("ring mismatch is a usage error") {
  auto r1 = make_ring(32003, {"x", "y"});
  auto r2 = make_ring(32003, {"x", "y", "z"});
  auto f = Polynomial::variable(r1, 0);
  auto g = Polynomial::variable(r2, 2);
  CHECK_THROWS_AS(f + g, std::invalid_argument);
}

TEST_CASE("evaluation") {
  auto r = make_ring(7, {"x", "y"});
  auto f = P(r, "1*x0^2+1*x1^1");
  std::vector<uint32_t> pt{2, 3};
  CHECK(f.evaluate(pt) == 0); // 4 + 3 = 0 mod 7
  std::vector<uint32_t> bad{1};
  CHECK_THROWS_AS(f.evaluate(bad), std::invalid_argument);
  // constant term at the origin
  auto g = P(r, "5+2*x0^1");
  std::vector<uint32_t> origin{0, 0};
  CHECK(g.evaluate(origin) == 5);
}

TEST_CASE("homogeneity under rescaling") {
  auto r = make_ring(32003, 3);
  Rng rng(11);
  auto f = P(r, "3*x0^2*x1^1+7*x1^2*x2^1+11*x0^1*x1^1*x2^1");
  REQUIRE(f.is_homogeneous());
  PrimeField fld(32003);
  for (int k = 0; k < 20; ++k) {
    std::vector<uint32_t> pt{static_cast<uint32_t>(rng.below(32003)),
                             static_cast<uint32_t>(rng.below(32003)),
                             static_cast<uint32_t>(rng.below(32003))};
    uint32_t lam = static_cast<uint32_t>(1 + rng.below(32002));
    std::vector<uint32_t> sc{fld.mul(pt[0], lam), fld.mul(pt[1], lam), fld.mul(pt[2], lam)};
    CHECK(f.evaluate(sc) == fld.mul(f.evaluate(pt), fld.pow(lam, 3)));
  }
}

TEST_CASE("serialization round trip is the identity") {
  auto r = make_ring(32003, 4);
  Rng rng(23);
  for (int k = 0; k < 30; ++k) {
    std::vector<Term> ts;
    for (int i = 0; i < 6; ++i) {
      Monomial m;
      int d = 0;
      for (int v = 0; v < 4; ++v) {
        m.e[v] = static_cast<uint8_t>(rng.below(4));
        d += m.e[v];
      }
      m.deg = static_cast<uint16_t>(d);
      ts.push_back({m, static_cast<uint32_t>(rng.below(32003))});
    }
    auto f = Polynomial::from_terms(r, ts);
    CHECK(Polynomial::parse(r, f.to_string()) == f);
  }
}

TEST_CASE("monomial orders") {
  auto ord = MonomialOrder::degrevlex();
  // x*z vs y^2 in degrevlex x>y>z: lcm-degree equal; last differing exponent
  Monomial xz = mono_var(0) * mono_var(2);
  Monomial y2 = mono_var(1, 2);
  CHECK(mono_cmp(y2, xz, ord, 3) > 0); // y^2 > xz in degrevlex
  auto lex = MonomialOrder::lex();
  CHECK(mono_cmp(xz, y2, lex, 3) > 0); // x beats y in lex
  // block order eliminates the leading block
  auto blk = MonomialOrder::block(1);
  Monomial x = mono_var(0);
  Monomial z3 = mono_var(2, 3);
  CHECK(mono_cmp(x, z3, blk, 3) > 0); // any x beats any pure tail monomial
  CHECK(MonomialOrder::from_name("block2").name() == "block2");
}
