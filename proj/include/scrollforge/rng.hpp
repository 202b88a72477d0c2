#pragma once

#include <cstdint>
#include <string_view>

namespace scrollforge {

// splitmix64: deterministic, seedable, good enough for genericity sampling.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

private:
  uint64_t state_;
};

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Derive a child stream from a seed and a label (stage name, attempt index).
inline Rng derived_rng(uint64_t seed, std::string_view label, uint64_t attempt) {
  uint64_t h = fnv1a64(label, 0xcbf29ce484222325ULL ^ seed);
  h ^= 0x9e3779b97f4a7c15ULL * (attempt + 1);
  return Rng(h);
}

} // namespace scrollforge
