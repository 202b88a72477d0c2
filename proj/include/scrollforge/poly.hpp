#pragma once

#include <algorithm>
#include <cstdlib>
#include <span>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ring.hpp"

namespace scrollforge::polycore {

struct Term {
  Monomial mono;
  uint32_t coeff = 0;
};

// Exact multivariate polynomial over F_p in canonical form: no zero
// coefficients, no duplicate monomials, terms sorted descending by the
// ring's ambient order.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial from_terms(RingPtr ring, std::vector<Term> ts) {
    Polynomial f(std::move(ring));
    for (auto& t : ts) t.coeff %= f.ring_->p();
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
      return mono_cmp(a.mono, b.mono, f.ring_->order, f.ring_->nvars) > 0;
    });
    auto& field = f.ring_->field;
    for (auto& t : ts) {
      if (!f.terms_.empty() && f.terms_.back().mono == t.mono)
        f.terms_.back().coeff = field.add(f.terms_.back().coeff, t.coeff);
      else
        f.terms_.push_back(t);
    }
    std::erase_if(f.terms_, [](const Term& t) { return t.coeff == 0; });
    return f;
  }

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, uint32_t c) {
    return from_terms(std::move(ring), {{mono_one(), c}});
  }

  static Polynomial variable(RingPtr ring, int i, int pow = 1) {
    if (i < 0 || i >= ring->nvars) throw std::invalid_argument("variable index");
    return from_terms(std::move(ring), {{mono_var(i, pow), 1}});
  }

  static Polynomial monomial(RingPtr ring, const Monomial& m, uint32_t c = 1) {
    return from_terms(std::move(ring), {{m, c}});
  }

  // linear form sum c_i x_i
  static Polynomial linear(RingPtr ring, std::span<const uint32_t> coeffs) {
    std::vector<Term> ts;
    for (int i = 0; i < ring->nvars && i < static_cast<int>(coeffs.size()); ++i)
      if (coeffs[i]) ts.push_back({mono_var(i), coeffs[i]});
    return from_terms(std::move(ring), std::move(ts));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Term& lead() const {
    if (terms_.empty()) throw std::domain_error("lead of zero polynomial");
    return terms_.front();
  }

  int degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.deg));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    auto d = terms_.front().mono.deg;
    for (auto& t : terms_)
      if (t.mono.deg != d) return false;
    return true;
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
        return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = ring_->field.neg(t.coeff);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
  Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

  Polynomial scaled(uint32_t c) const {
    auto& field = ring_->field;
    c %= ring_->p();
    if (c == 0) return zero(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field.mul(t.coeff, c);
    return r;
  }

  // this * (c * m)
  Polynomial times_term(const Monomial& m, uint32_t c) const {
    auto& field = ring_->field;
    c %= ring_->p();
    if (c == 0) return zero(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono * m, field.mul(t.coeff, c)});
    return r; // multiplying by a monomial preserves the term order
  }

  Polynomial operator*(const Polynomial& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return zero(ring_);
    if (o.terms_.size() == 1) return times_term(o.terms_[0].mono, o.terms_[0].coeff);
    if (terms_.size() == 1) return o.times_term(terms_[0].mono, terms_[0].coeff);
    std::unordered_map<Monomial, uint64_t, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size() / 2 + 8);
    uint32_t p = ring_->p();
    for (auto& a : terms_)
      for (auto& b : o.terms_) {
        uint64_t prod = static_cast<uint64_t>(a.coeff) * b.coeff % p;
        auto [it, fresh] = acc.try_emplace(a.mono * b.mono, prod);
        if (!fresh) {
          it->second += prod;
          if (it->second >= (uint64_t(1) << 63)) it->second %= p;
        }
      }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc) {
      uint32_t cc = static_cast<uint32_t>(c % p);
      if (cc) ts.push_back({m, cc});
    }
    return from_terms(ring_, std::move(ts));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field.inv(lead().coeff));
  }

  uint32_t evaluate(std::span<const uint32_t> pt) const {
    if (static_cast<int>(pt.size()) != ring_->nvars)
      throw std::invalid_argument("evaluate: point length mismatch");
    auto& field = ring_->field;
    // power tables per variable
    std::array<std::vector<uint32_t>, kMaxVars> pows;
    for (int i = 0; i < ring_->nvars; ++i) pows[i].push_back(1);
    uint32_t acc = 0;
    for (auto& t : terms_) {
      uint32_t v = t.coeff;
      for (int i = 0; i < ring_->nvars; ++i) {
        int e = t.mono.e[i];
        if (!e) continue;
        auto& tab = pows[i];
        while (static_cast<int>(tab.size()) <= e)
          tab.push_back(field.mul(tab.back(), pt[i] % ring_->p()));
        v = field.mul(v, tab[e]);
      }
      acc = field.add(acc, v);
    }
    return acc;
  }

  Polynomial derivative(int var) const {
    auto& field = ring_->field;
    std::vector<Term> ts;
    for (auto& t : terms_) {
      int e = t.mono.e[var];
      if (!e) continue;
      Monomial m = t.mono;
      m.e[var] -= 1;
      m.deg -= 1;
      ts.push_back({m, field.mul(t.coeff, field.reduce(e))});
    }
    return from_terms(ring_, std::move(ts));
  }

  // Substitute forms[i] (all in the same target ring) for variable i.
  Polynomial substitute(std::span<const Polynomial> forms) const {
    if (static_cast<int>(forms.size()) != ring_->nvars)
      throw std::invalid_argument("substitute: form count mismatch");
    RingPtr target = forms.empty() ? ring_ : forms[0].ring();
    std::array<std::vector<Polynomial>, kMaxVars> pows;
    for (int i = 0; i < ring_->nvars; ++i) pows[i].push_back(Polynomial::constant(target, 1));
    Polynomial acc = Polynomial::zero(target);
    for (auto& t : terms_) {
      Polynomial v = Polynomial::constant(target, t.coeff);
      for (int i = 0; i < ring_->nvars; ++i) {
        int e = t.mono.e[i];
        if (!e) continue;
        auto& tab = pows[i];
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * forms[i]);
        v = v * tab[e];
      }
      acc = acc + v;
    }
    return acc;
  }

  // canonical textual form: terms joined by '+', each `coeff*x<i>^<e>`
  // with positional variable names; used by the ideal file format.
  std::string to_string(bool display_names = false) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
      if (!first) os << '+';
      first = false;
      os << t.coeff;
      for (int i = 0; i < ring_->nvars; ++i)
        if (t.mono.e[i]) {
          os << '*' << (display_names ? ring_->names[i] : "x" + std::to_string(i)) << '^'
             << static_cast<int>(t.mono.e[i]);
        }
    }
    return os.str();
  }

  static Polynomial parse(RingPtr ring, const std::string& s);

  // deterministic total order on polynomials (used for sorting bases)
  static int compare(const Polynomial& a, const Polynomial& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
      int c = mono_cmp(a.terms_[i].mono, b.terms_[i].mono, a.ring_->order, a.ring_->nvars);
      if (c) return c;
      if (a.terms_[i].coeff != b.terms_[i].coeff)
        return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
  }

private:
  void check_same(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("ring mismatch");
  }

  Polynomial merged(const Polynomial& o, bool subtract) const {
    check_same(o);
    auto& field = ring_->field;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = mono_cmp(terms_[i].mono, o.terms_[j].mono, ring_->order, ring_->nvars);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        Term t = o.terms_[j++];
        if (subtract) t.coeff = field.neg(t.coeff);
        r.terms_.push_back(t);
      } else {
        uint32_t cc = subtract ? field.sub(terms_[i].coeff, o.terms_[j].coeff)
                               : field.add(terms_[i].coeff, o.terms_[j].coeff);
        if (cc) r.terms_.push_back({terms_[i].mono, cc});
        ++i; ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) {
      Term t = o.terms_[j];
      if (subtract) t.coeff = field.neg(t.coeff);
      r.terms_.push_back(t);
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Polynomial Polynomial::parse(RingPtr ring, const std::string& s) {
  std::vector<Term> ts;
  size_t pos = 0;
  auto fail = [&]() { throw std::invalid_argument("polynomial parse error: " + s); };
  if (s == "0") return Polynomial::zero(ring);
  while (pos < s.size()) {
    size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    std::string piece = s.substr(pos, end - pos);
    pos = end + 1;
    if (piece.empty()) fail();
    Term t;
    t.mono = mono_one();
    size_t q = 0;
    // coefficient
    size_t q0 = q;
    while (q < piece.size() && isdigit(static_cast<unsigned char>(piece[q]))) ++q;
    if (q == q0) fail();
    t.coeff = static_cast<uint32_t>(std::stoul(piece.substr(q0, q - q0)) % ring->p());
    while (q < piece.size()) {
      if (piece[q] != '*') fail();
      ++q;
      if (q >= piece.size() || piece[q] != 'x') fail();
      ++q;
      q0 = q;
      while (q < piece.size() && isdigit(static_cast<unsigned char>(piece[q]))) ++q;
      int var = std::stoi(piece.substr(q0, q - q0));
      if (var < 0 || var >= ring->nvars) fail();
      int e = 1;
      if (q < piece.size() && piece[q] == '^') {
        ++q;
        q0 = q;
        while (q < piece.size() && isdigit(static_cast<unsigned char>(piece[q]))) ++q;
        e = std::stoi(piece.substr(q0, q - q0));
      }
      t.mono = t.mono * mono_var(var, e);
    }
    ts.push_back(t);
  }
  return Polynomial::from_terms(std::move(ring), std::move(ts));
}

// Move a polynomial into another ring with a variable map:
// var i of f becomes var_map[i] of the target.
inline Polynomial map_poly(const Polynomial& f, const RingPtr& target,
                           std::span<const int> var_map) {
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (auto& t : f.terms()) {
    Monomial m;
    int d = 0;
    for (int i = 0; i < f.ring()->nvars; ++i)
      if (t.mono.e[i]) {
        int j = var_map[i];
        if (j < 0) throw std::invalid_argument("map_poly: variable not mapped");
        m.e[j] = static_cast<uint8_t>(m.e[j] + t.mono.e[i]);
        d += t.mono.e[i];
      }
    m.deg = static_cast<uint16_t>(d);
    ts.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(ts));
}

inline std::vector<int> identity_map(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

} // namespace scrollforge::polycore
