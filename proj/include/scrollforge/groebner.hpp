#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "poly.hpp"

namespace scrollforge::idealkit {

using polycore::Monomial;
using polycore::MonomialOrder;
using polycore::Polynomial;
using polycore::RingPtr;
using polycore::Term;

// Resource caps for Buchberger; hitting one raises BudgetError instead of
// hanging. The scroll elimination is the heaviest computation we run, so
// failures must be diagnosable.
struct Budget {
  size_t max_pairs = 500000;          // s-pairs processed
  size_t max_basis = 30000;           // intermediate basis size
  size_t max_reduction_steps = 400000000; // term-cancellation steps
};

struct BudgetError : std::runtime_error {
  size_t pairs, basis, steps;
  BudgetError(const std::string& what, size_t p, size_t b, size_t s)
      : std::runtime_error(what), pairs(p), basis(b), steps(s) {}
};

inline Budget& default_budget() {
  static Budget b;
  return b;
}

// Reduced Groebner basis: monic elements, no head term divides another,
// tails reduced, sorted ascending by head term. Unique for (ideal, order).
struct GroebnerBasis {
  RingPtr ring;        // ambient order equals `order`
  MonomialOrder order;
  std::vector<Polynomial> elems;

  bool is_unit() const {
    return elems.size() == 1 && elems[0].size() == 1 && elems[0].lead().mono.is_one();
  }
  bool is_zero() const { return elems.empty(); }
};

namespace detail {

// Full reduction of f by the (monic-lead) divisors. Counts cancellation work.
inline Polynomial reduce_full(Polynomial h, const std::vector<Polynomial>& basis,
                              size_t* steps, const Budget& budget, int* sugar = nullptr,
                              const std::vector<int>* basis_sugar = nullptr) {
  const RingPtr& ring = h.ring();
  Polynomial result(ring);
  std::vector<Term> out;
  while (!h.is_zero()) {
    const Term& lt = h.lead();
    const Polynomial* red = nullptr;
    size_t red_ix = 0;
    for (size_t k = 0; k < basis.size(); ++k)
      if (basis[k].lead().mono.divides(lt.mono)) {
        red = &basis[k];
        red_ix = k;
        break;
      }
    if (red) {
      Monomial q = polycore::mono_div(lt.mono, red->lead().mono);
      uint32_t c = ring->field.mul(lt.coeff, ring->field.inv(red->lead().coeff));
      h = h - red->times_term(q, c);
      *steps += red->size();
      if (sugar && basis_sugar)
        *sugar = std::max(*sugar, (*basis_sugar)[red_ix] + static_cast<int>(q.deg));
      if (*steps > budget.max_reduction_steps)
        throw BudgetError("groebner: reduction step budget exceeded", 0, basis.size(), *steps);
    } else {
      out.push_back(lt);
      h = h - Polynomial::monomial(ring, lt.mono, lt.coeff);
    }
  }
  return Polynomial::from_terms(ring, std::move(out));
}

struct SPair {
  int i, j;
  Monomial lcm;
  int sugar;
};

struct SPairCmp {
  const RingPtr* ring;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
    int c = polycore::mono_cmp(a.lcm, b.lcm, (*ring)->order, (*ring)->nvars);
    if (c) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

} // namespace detail

// Buchberger with normal selection refined by the sugar strategy and
// Gebauer-Moeller pair elimination. Input need not be homogeneous (the
// auxiliary-variable tricks are not), termination is unconditional.
inline GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                                MonomialOrder order, const Budget& budget = default_budget()) {
  RingPtr gring = polycore::with_order(ring, order);
  std::vector<Polynomial> G;
  std::vector<int> sugar;
  using detail::SPair;
  detail::SPairCmp cmp{&gring};
  std::set<SPair, detail::SPairCmp> pairs(cmp);

  auto add_element = [&](const Polynomial& h, int sug) {
    int t = static_cast<int>(G.size());
    const Monomial& L = h.lead().mono;
    // Gebauer-Moeller update: filter new pairs (i,t)
    std::vector<SPair> cand;
    for (int i = 0; i < t; ++i) {
      Monomial l = polycore::mono_lcm(G[i].lead().mono, L);
      int s = std::max(sugar[i] + l.deg - G[i].lead().mono.deg, sug + l.deg - L.deg);
      cand.push_back({i, t, l, s});
    }
    std::vector<SPair> keep;
    for (size_t a = 0; a < cand.size(); ++a) {
      bool coprime = polycore::mono_coprime(G[cand[a].i].lead().mono, L);
      bool covered = false;
      if (!coprime) {
        for (size_t b = a + 1; b < cand.size() && !covered; ++b)
          if (cand[b].lcm.divides(cand[a].lcm)) covered = true;
        for (size_t b = 0; b < keep.size() && !covered; ++b)
          if (keep[b].lcm.divides(cand[a].lcm) && !(keep[b].lcm == cand[a].lcm)) covered = true;
      }
      if (coprime || !covered) keep.push_back(cand[a]);
    }
    // drop coprime-lead survivors (product criterion)
    std::erase_if(keep, [&](const SPair& p) {
      return polycore::mono_coprime(G[p.i].lead().mono, L);
    });
    // filter old pairs via the new head term
    for (auto it = pairs.begin(); it != pairs.end();) {
      const SPair& p = *it;
      if (L.divides(p.lcm) &&
          !(polycore::mono_lcm(G[p.i].lead().mono, L) == p.lcm) &&
          !(polycore::mono_lcm(G[p.j].lead().mono, L) == p.lcm))
        it = pairs.erase(it);
      else
        ++it;
    }
    for (auto& p : keep) pairs.insert(p);
    G.push_back(h.monic());
    sugar.push_back(sug);
  };

  // seed with normalized, deduplicated generators (canonical order)
  std::vector<Polynomial> seed;
  for (auto& g : gens) {
    Polynomial h = polycore::map_poly(g, gring, polycore::identity_map(ring->nvars));
    if (!h.is_zero()) seed.push_back(h.monic());
  }
  std::sort(seed.begin(), seed.end(),
            [](const Polynomial& a, const Polynomial& b) { return Polynomial::compare(a, b) < 0; });
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());

  size_t steps = 0, processed = 0;
  for (auto& g : seed) {
    Polynomial r = detail::reduce_full(g, G, &steps, budget);
    if (!r.is_zero()) add_element(r, r.degree());
  }

  while (!pairs.empty()) {
    SPair p = *pairs.begin();
    pairs.erase(pairs.begin());
    if (++processed > budget.max_pairs)
      throw BudgetError("groebner: pair budget exceeded", processed, G.size(), steps);
    const Polynomial &f = G[p.i], &g = G[p.j];
    Monomial qi = polycore::mono_div(p.lcm, f.lead().mono);
    Monomial qj = polycore::mono_div(p.lcm, g.lead().mono);
    Polynomial s = f.times_term(qi, 1) - g.times_term(qj, 1);
    int sug = p.sugar;
    Polynomial r = detail::reduce_full(std::move(s), G, &steps, budget, &sug, &sugar);
    if (!r.is_zero()) {
      if (G.size() + 1 > budget.max_basis)
        throw BudgetError("groebner: basis size budget exceeded", processed, G.size(), steps);
      add_element(r, sug);
    }
  }

  // minimalize: drop elements whose head is divisible by another head
  std::vector<Polynomial> mins;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &mi = G[i].lead().mono, &mj = G[j].lead().mono;
      if (mj == mi ? j < i : mj.divides(mi)) redundant = true;
    }
    if (!redundant) mins.push_back(G[i]);
  }
  // tail-reduce until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < mins.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(mins.size() - 1);
      for (size_t j = 0; j < mins.size(); ++j)
        if (j != i) others.push_back(mins[j]);
      Polynomial r = detail::reduce_full(mins[i], others, &steps, budget);
      r = r.monic();
      if (!(r == mins[i])) {
        changed = true;
        if (r.is_zero()) {
          mins.erase(mins.begin() + i);
          --i;
        } else {
          mins[i] = r;
        }
      }
    }
  }
  std::sort(mins.begin(), mins.end(), [&](const Polynomial& a, const Polynomial& b) {
    return polycore::mono_cmp(a.lead().mono, b.lead().mono, gring->order, gring->nvars) < 0;
  });
  return GroebnerBasis{gring, order, std::move(mins)};
}

// Remainder of f on division by G: no term divisible by any head term,
// f minus the result lies in the ideal.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb,
                              const Budget& budget = default_budget()) {
  if (f.is_zero() || gb.elems.empty()) return f;
  Polynomial h = polycore::map_poly(f, gb.ring, polycore::identity_map(f.ring()->nvars));
  size_t steps = 0;
  Polynomial r = detail::reduce_full(std::move(h), gb.elems, &steps, budget);
  return polycore::map_poly(r, f.ring(), polycore::identity_map(f.ring()->nvars));
}

} // namespace scrollforge::idealkit
