#pragma once

#include <cstdint>
#include <stdexcept>

namespace scrollforge::polycore {

// Arithmetic context for the prime field F_p.  Elements are canonical
// residues in [0, p) stored as uint32_t.  p must be an odd-or-2 prime
// below 2^31 so that products fit in uint64_t.
class PrimeField {
public:
  explicit PrimeField(uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::domain_error("PrimeField: modulus is not prime");
  }

  uint32_t modulus() const { return p_; }

  uint32_t reduce(uint64_t a) const { return static_cast<uint32_t>(a % p_); }
  uint32_t reduce_signed(int64_t a) const {
    int64_t r = a % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    if (s >= p_) s -= p_;
    return s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }

  uint32_t pow(uint32_t a, uint64_t e) const {
    uint64_t base = a % p_, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<uint32_t>(acc);
  }

  uint32_t inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("PrimeField: inversion of zero");
    // extended Euclid
    int64_t t = 0, nt = 1, r = p_, nr = a % p_;
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<uint32_t>(t);
  }

  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  bool is_square(uint32_t a) const {
    if (a == 0) return true;
    if (p_ == 2) return true;
    return pow(a, (p_ - 1) / 2) == 1;
  }

  // Tonelli-Shanks; requires is_square(a).
  uint32_t sqrt(uint32_t a) const {
    if (a == 0) return 0;
    if (p_ == 2) return a;
    if (!is_square(a)) throw std::domain_error("PrimeField: sqrt of non-residue");
    if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);
    uint32_t q = p_ - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    uint32_t z = 2;
    while (is_square(z)) ++z;
    uint32_t m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    while (t != 1) {
      uint32_t i = 0, tt = t;
      while (tt != 1) { tt = mul(tt, tt); ++i; }
      uint32_t b = pow(c, uint64_t(1) << (m - i - 1));
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
    return r;
  }

  static bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  uint32_t p_;
};

} // namespace scrollforge::polycore
