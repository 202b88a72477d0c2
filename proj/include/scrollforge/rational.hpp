#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace scrollforge {

// Exact rational arithmetic on int64 (plenty for lattice numerology and
// Hilbert polynomial coefficients).
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  Rational() = default;
  Rational(int64_t n) : num(n), den(1) {}
  Rational(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  Rational operator+(const Rational& o) const { return Rational(num * o.den + o.num * den, den * o.den); }
  Rational operator-(const Rational& o) const { return Rational(num * o.den - o.num * den, den * o.den); }
  Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
  Rational operator/(const Rational& o) const {
    if (o.num == 0) throw std::domain_error("Rational: division by zero");
    return Rational(num * o.den, den * o.num);
  }
  Rational operator-() const { return Rational(-num, den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
  bool operator>=(const Rational& o) const { return !(*this < o); }
  bool is_integer() const { return den == 1; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

} // namespace scrollforge
