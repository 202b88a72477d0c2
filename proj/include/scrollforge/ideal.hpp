#pragma once

#include <map>
#include <memory>

#include "groebner.hpp"

namespace scrollforge::idealkit {

// Homogeneous ideal with generators in canonical form and per-order cached
// reduced Groebner bases (compute-once, read-many).
class Ideal {
public:
  Ideal() = default;

  Ideal(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)),
        cache_(std::make_shared<std::map<std::string, std::shared_ptr<const GroebnerBasis>>>()) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      gens_.push_back(g.monic());
    }
    std::sort(gens_.begin(), gens_.end(),
              [](const Polynomial& a, const Polynomial& b) { return Polynomial::compare(a, b) < 0; });
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  }

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  bool homogeneous() const {
    for (auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  const GroebnerBasis& groebner(MonomialOrder order, const Budget& budget = default_budget()) const {
    std::string key = order.name();
    auto it = cache_->find(key);
    if (it != cache_->end()) return *it->second;
    auto gb = std::make_shared<GroebnerBasis>(buchberger(ring_, gens_, order, budget));
    // membership soundness: every input generator reduces to zero
    for (auto& g : gens_)
      if (!normal_form(g, *gb, budget).is_zero())
        throw std::logic_error("groebner: generator does not reduce to zero");
    (*cache_)[key] = gb;
    return *cache_->at(key);
  }

  const GroebnerBasis& groebner(const Budget& budget = default_budget()) const {
    return groebner(ring_->order, budget);
  }

  bool contains(const Polynomial& f, const Budget& budget = default_budget()) const {
    if (f.is_zero()) return true;
    if (gens_.empty()) return false;
    return normal_form(f, groebner(budget), budget).is_zero();
  }

  bool contains_ideal(const Ideal& other, const Budget& budget = default_budget()) const {
    for (auto& g : other.gens())
      if (!contains(g, budget)) return false;
    return true;
  }

  bool is_unit(const Budget& budget = default_budget()) const {
    if (gens_.empty()) return false;
    return groebner(budget).is_unit();
  }

  // reduced-GB equality under the ring's ambient order
  bool equals(const Ideal& other, const Budget& budget = default_budget()) const {
    const auto& a = groebner(budget).elems;
    const auto& b = other.groebner(budget).elems;
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == b[i])) return false;
    return true;
  }

private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<std::map<std::string, std::shared_ptr<const GroebnerBasis>>> cache_;
};

inline Ideal ideal_of(RingPtr ring, std::vector<Polynomial> gens) {
  return Ideal(std::move(ring), std::move(gens));
}

} // namespace scrollforge::idealkit
