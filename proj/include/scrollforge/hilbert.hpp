#pragma once

#include <optional>

#include "ideal_ops.hpp"
#include "rational.hpp"

namespace scrollforge::idealkit {

// ---------------------------------------------------------------------------
// Hilbert series numerator of a monomial ideal (pivot recursion)
// ---------------------------------------------------------------------------

namespace detail {

using Series = std::vector<int64_t>; // coefficients of a polynomial in t

inline void series_add(Series& a, const Series& b, int shift, int64_t scale) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += scale * b[i];
}

inline void series_trim(Series& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> m) {
  std::sort(m.begin(), m.end(),
            [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> out;
  for (auto& x : m) {
    bool divisible = false;
    for (auto& y : out)
      if (y.divides(x)) { divisible = true; break; }
    if (!divisible) out.push_back(x);
  }
  return out;
}

// numerator N(t) with HS_{S/I}(t) = N(t)/(1-t)^nvars
inline Series hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {1};
  if (gens[0].deg == 0) return {}; // unit ideal: zero numerator
  // base case: pairwise coprime generators -> product of (1 - t^deg)
  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!polycore::mono_coprime(gens[i], gens[j])) coprime = false;
  if (coprime) {
    Series acc{1};
    for (auto& g : gens) {
      Series next(acc.size() + g.deg, 0);
      for (size_t i = 0; i < acc.size(); ++i) {
        next[i] += acc[i];
        next[i + g.deg] -= acc[i];
      }
      acc = std::move(next);
    }
    series_trim(acc);
    return acc;
  }
  // pivot on the most frequent variable
  std::array<int, polycore::kMaxVars> freq{};
  for (auto& g : gens)
    for (int v = 0; v < nvars; ++v)
      if (g.e[v]) ++freq[v];
  int pv = 0;
  for (int v = 1; v < nvars; ++v)
    if (freq[v] > freq[pv]) pv = v;
  // I = (I + <x_pv>) union t * (I : x_pv)
  std::vector<Monomial> plus, colon;
  for (auto& g : gens) {
    if (g.e[pv] == 0) plus.push_back(g);
    Monomial c = g;
    if (c.e[pv]) { c.e[pv] -= 1; c.deg -= 1; }
    colon.push_back(c);
  }
  plus.push_back(polycore::mono_var(pv));
  Series a = hilbert_numerator(std::move(plus), nvars);
  Series b = hilbert_numerator(std::move(colon), nvars);
  Series out;
  series_add(out, a, 0, 1);
  series_add(out, b, 1, 1);
  series_trim(out);
  return out;
}

inline int64_t series_at_one(const Series& s) {
  int64_t v = 0;
  for (auto c : s) v += c;
  return v;
}

inline int64_t series_derivative_at_one(const Series& s) {
  int64_t v = 0;
  for (size_t i = 1; i < s.size(); ++i) v += static_cast<int64_t>(i) * s[i];
  return v;
}

} // namespace detail

// Projective dimension, degree, arithmetic genus (dimension-1 schemes), and
// the exact Hilbert polynomial. For a dim-1 scheme HP(t) = deg*t + (1 - pa).
struct HilbertData {
  int dim = -1;                 // projective dimension; -1 means empty
  int64_t degree = 0;
  std::optional<int64_t> pa;    // arithmetic genus, dim == 1 only
  std::vector<Rational> hp;     // HP coefficients, hp[i] * d^i

  bool same_polynomial(const HilbertData& o) const { return dim == o.dim && hp == o.hp; }

  Rational hp_at(int64_t d) const {
    Rational acc(0), pw(1);
    for (auto& c : hp) {
      acc = acc + c * Rational(1) * pw;
      pw = pw * Rational(d);
    }
    return acc;
  }

  std::string str() const {
    std::string s = "(dim " + std::to_string(dim) + ", deg " + std::to_string(degree);
    if (pa) s += ", pa " + std::to_string(*pa);
    return s + ")";
  }
};

// Pre: I saturated and homogeneous (callers saturate at module boundaries).
inline HilbertData hilbert_data(const Ideal& I, const Budget& budget = default_budget()) {
  const RingPtr& ring = I.ring();
  int n = ring->nvars;
  std::vector<Monomial> leads;
  if (!I.is_zero_ideal())
    for (auto& g : I.groebner(budget).elems) leads.push_back(g.lead().mono);
  detail::Series N = detail::hilbert_numerator(std::move(leads), n);
  HilbertData out;
  if (N.empty()) { // unit ideal, empty scheme
    out.dim = -1;
    out.degree = 0;
    return out;
  }
  int cancels = 0;
  while (detail::series_at_one(N) == 0) {
    // divide by (1 - t): partial sums
    detail::Series q(N.size(), 0);
    int64_t run = 0;
    for (size_t i = 0; i < N.size(); ++i) {
      run += N[i];
      q[i] = run;
    }
    if (!q.empty() && q.back() != 0) throw std::logic_error("hilbert: bad cancellation");
    q.pop_back();
    N = std::move(q);
    detail::series_trim(N);
    ++cancels;
    if (N.empty()) break;
  }
  int D = n - cancels;      // Krull dimension of S/I
  out.dim = D - 1;
  out.degree = detail::series_at_one(N);
  if (out.dim < 0) { out.degree = 0; return out; }
  // HP(d) = sum_i N_i * binom(d - i + D - 1, D - 1), expanded exactly
  std::vector<Rational> hp(std::max(D, 1), Rational(0));
  for (size_t i = 0; i < N.size(); ++i) {
    if (!N[i]) continue;
    // expand binom(d - i + D - 1, D - 1) as a polynomial in d
    std::vector<Rational> term{Rational(1)};
    for (int k = 1; k <= D - 1; ++k) {
      // multiply by (d - i + k)
      std::vector<Rational> next(term.size() + 1, Rational(0));
      Rational c(static_cast<int64_t>(k) - static_cast<int64_t>(i));
      for (size_t j = 0; j < term.size(); ++j) {
        next[j] = next[j] + term[j] * c;
        next[j + 1] = next[j + 1] + term[j];
      }
      term = std::move(next);
    }
    Rational fact(1);
    for (int k = 2; k <= D - 1; ++k) fact = fact * Rational(k);
    for (size_t j = 0; j < term.size() && j < hp.size(); ++j)
      hp[j] = hp[j] + term[j] / fact * Rational(N[i]);
  }
  while (hp.size() > 1 && hp.back() == Rational(0)) hp.pop_back();
  out.hp = hp;
  if (out.dim == 1)
    out.pa = 1 - detail::series_at_one(N) + detail::series_derivative_at_one(N);
  return out;
}

// expected Hilbert polynomial builders (certification targets)
inline HilbertData expect_curve(int64_t deg, int64_t pa) {
  HilbertData h;
  h.dim = 1;
  h.degree = deg;
  h.pa = pa;
  h.hp = {Rational(1 - pa), Rational(deg)};
  return h;
}

inline HilbertData expect_points(int64_t len) {
  HilbertData h;
  h.dim = 0;
  h.degree = len;
  h.hp = {Rational(len)};
  return h;
}

// surface with HP(t) = (deg/2) t^2 + b1 t + b0
inline HilbertData expect_surface(int64_t deg, Rational b1, Rational b0) {
  HilbertData h;
  h.dim = 2;
  h.degree = deg;
  h.hp = {b0, b1, Rational(deg, 2)};
  return h;
}

} // namespace scrollforge::idealkit
