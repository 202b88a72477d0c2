#include "doctest.h"

#include "scrollforge/hilbert.hpp"
#include "scrollforge/ideal_ops.hpp"
#include "scrollforge/rng.hpp"

using namespace scrollforge;
using namespace scrollforge::polycore;
using namespace scrollforge::idealkit;

TEST_CASE("colon and saturation basics") {
  auto r = make_ring(32003, {"x", "y", "z"});
  auto x = Polynomial::variable(r, 0);
  auto y = Polynomial::variable(r, 1);
  auto z = Polynomial::variable(r, 2);

  // <x^2> : <x> = <x>
  Ideal I(r, {x * x});
  Ideal J(r, {x});
  CHECK(ideal_algebra(I, J, IdealOp::colon).equals(J));

  // sat(<x^2 y, x^2 z>, <y,z>) = <x^2>; oracle: colon twice, observe stabilization
  Ideal K(r, {x * x * y, x * x * z});
  Ideal YZ(r, {y, z});
  Ideal c1 = ideal_colon(K, YZ);
  Ideal c2 = ideal_colon(c1, YZ);
  CHECK(c1.equals(c2)); // stabilized after one colon
  Ideal sat = ideal_algebra(K, YZ, IdealOp::saturation);
  CHECK(sat.equals(Ideal(r, {x * x})));
  CHECK(sat.equals(c1));

  // I + <1> is the unit ideal
  Ideal unit = ideal_sum(I, Ideal(r, {Polynomial::constant(r, 1)}));
  CHECK(unit.is_unit());
}

TEST_CASE("saturation stability property") {
  auto r = make_ring(32003, 3);
  Rng rng(3);
  for (int t = 0; t < 5; ++t) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 2; ++g) {
      std::vector<Term> ts;
      for (auto& m : monomials_of_degree(r, 2))
        if (rng.below(2)) ts.push_back({m, static_cast<uint32_t>(1 + rng.below(32002))});
      gens.push_back(Polynomial::from_terms(r, ts));
    }
    Ideal I(r, gens);
    Ideal J(r, {Polynomial::variable(r, 0)});
    if (I.is_zero_ideal()) continue;
    Ideal s1 = ideal_saturate(I, J);
    CHECK(ideal_saturate(s1, J).equals(s1));
  }
}

TEST_CASE("elimination examples") {
  auto r = make_ring(32003, {"x", "y", "z"});
  auto x = Polynomial::variable(r, 0);
  auto y = Polynomial::variable(r, 1);
  auto z = Polynomial::variable(r, 2);
  // eliminate x from <x - y, x - z> -> <y - z>
  Ideal I(r, {x - y, x - z});
  Ideal E = eliminate(I, 1);
  CHECK(E.equals(Ideal(r, {y - z})));
  // eliminate 0 variables: the basis of I itself
  Ideal E0 = eliminate(I, 0);
  CHECK(E0.equals(I));
}

TEST_CASE("twisted cubic graph elimination gives the catalecticant minors") {
  // graph of (s:t) -> (s^3, s^2 t, s t^2, t^3): w_i = u * par_i in
  // vars (s,t,u,w0..w3); eliminating (s,t,u) leaves the image cone
  auto r = make_ring(32003, {"s", "t", "u", "w0", "w1", "w2", "w3"}, MonomialOrder::block(3));
  auto s = Polynomial::variable(r, 0);
  auto t = Polynomial::variable(r, 1);
  auto u = Polynomial::variable(r, 2);
  std::vector<Polynomial> par{s * s * s, s * s * t, s * t * t, t * t * t};
  std::vector<Polynomial> gens;
  for (int i = 0; i < 4; ++i)
    gens.push_back(Polynomial::variable(r, 3 + i) - u * par[i]);
  Ideal graph(r, gens);
  Ideal img = eliminate(graph, 3);
  REQUIRE(!img.is_zero_ideal());

  // catalecticant 2x2 minors of [[w0,w1,w2],[w1,w2,w3]]
  auto w = [&](int i) { return Polynomial::variable(r, 3 + i); };
  Ideal M(r, {w(0) * w(2) - w(1) * w(1), w(0) * w(3) - w(1) * w(2),
              w(1) * w(3) - w(2) * w(2)});
  // both inclusions via normal forms
  for (auto& g : M.gens()) CHECK(img.contains(g));
  for (auto& g : img.gens()) CHECK(M.contains(g));
}

TEST_CASE("graded dimension") {
  auto r6 = make_ring(32003, 6);
  Ideal zero = Ideal::zero(r6);
  CHECK(graded_dim(zero, 2) == 21); // binom(7,2)
  auto r = make_ring(32003, 3);
  auto x = Polynomial::variable(r, 0);
  Ideal I(r, {x * x});
  CHECK(graded_dim(I, 3) == 7); // 10 monomials, 3 divisible by x^2
}

TEST_CASE("graded_dim equals Macaulay corank on random small ideals") {
  Rng rng(97);
  int trials = 0;
  while (trials < 25) {
    int nv = 2 + static_cast<int>(rng.below(3)); // up to 4 vars
    auto r = make_ring(101, nv);
    std::vector<Polynomial> gens;
    int ng = 1 + static_cast<int>(rng.below(3));
    for (int g = 0; g < ng; ++g) {
      int d = 1 + static_cast<int>(rng.below(3));
      std::vector<Term> ts;
      for (auto& m : monomials_of_degree(r, d))
        if (rng.below(2)) ts.push_back({m, static_cast<uint32_t>(1 + rng.below(100))});
      gens.push_back(Polynomial::from_terms(r, ts));
    }
    Ideal I(r, gens);
    if (I.is_zero_ideal()) continue;
    ++trials;
    for (int d = 1; d <= 4; ++d) {
      // independent corank: number of degree-d monomials minus the rank of
      // the multiplication matrix of generator multiples
      auto mons = monomials_of_degree(r, d);
      std::unordered_map<Monomial, size_t, MonomialHash> col;
      for (size_t i = 0; i < mons.size(); ++i) col[mons[i]] = i;
      std::vector<Polynomial> rows;
      for (auto& g : I.gens()) {
        if (g.degree() > d) continue;
        for (auto& m : monomials_of_degree(r, d - g.degree()))
          rows.push_back(g.times_term(m, 1));
      }
      size_t rk = 0;
      if (!rows.empty()) {
        linalg::Mat mat(r->field, rows.size(), mons.size());
        for (size_t q = 0; q < rows.size(); ++q)
          for (auto& t : rows[q].terms()) mat.at(q, col.at(t.mono)) = t.coeff;
        rk = linalg::rank(mat);
      }
      CHECK(graded_dim(I, d) == static_cast<int>(mons.size() - rk));
    }
  }
}

TEST_CASE("saturate_variable matches iterated colon") {
  auto r = make_ring(32003, {"x", "y", "z"});
  auto x = Polynomial::variable(r, 0);
  auto y = Polynomial::variable(r, 1);
  auto z = Polynomial::variable(r, 2);
  Ideal I(r, {x * x * z, x * y * y});
  Ideal fast = saturate_variable(I, 2);
  Ideal slow = ideal_saturate(I, Ideal(r, {z}));
  CHECK(fast.equals(slow));
}

TEST_CASE("saturate_irrelevant removes the irrelevant component only") {
  auto r = make_ring(32003, {"x", "y", "z"});
  auto x = Polynomial::variable(r, 0);
  auto y = Polynomial::variable(r, 1);
  auto z = Polynomial::variable(r, 2);
  // a coordinate point (0:0:1) with an embedded irrelevant chunk
  Ideal pt(r, {x, y});
  Ideal fat = ideal_product(pt, Ideal(r, {x, y, z}));
  Ideal satd = saturate_irrelevant(fat);
  CHECK(satd.equals(pt));
}
