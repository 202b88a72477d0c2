#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fp.hpp"
#include "monomial.hpp"

namespace scrollforge::polycore {

// Polynomial ring context: prime field, indexed variables with display
// names, and the ambient monomial order used for canonical term sorting.
struct Ring {
  PrimeField field;
  int nvars;
  std::vector<std::string> names;
  MonomialOrder order;

  Ring(uint32_t p, std::vector<std::string> nm, MonomialOrder ord)
      : field(p), nvars(static_cast<int>(nm.size())), names(std::move(nm)), order(ord) {
    if (nvars < 1 || nvars > kMaxVars)
      throw std::invalid_argument("Ring: variable count out of range");
  }

  uint32_t p() const { return field.modulus(); }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(uint32_t p, std::vector<std::string> names,
                         MonomialOrder ord = MonomialOrder::degrevlex()) {
  return std::make_shared<const Ring>(p, std::move(names), ord);
}

inline std::vector<std::string> default_names(int n, const std::string& stem = "x") {
  std::vector<std::string> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

inline RingPtr make_ring(uint32_t p, int nvars,
                         MonomialOrder ord = MonomialOrder::degrevlex()) {
  return make_ring(p, default_names(nvars), ord);
}

// Same ring with a different ambient order (shares field and names).
inline RingPtr with_order(const RingPtr& r, MonomialOrder ord) {
  if (r->order == ord) return r;
  return make_ring(r->p(), r->names, ord);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a->p() == b->p() && a->nvars == b->nvars && a->order == b->order);
}

} // namespace scrollforge::polycore
