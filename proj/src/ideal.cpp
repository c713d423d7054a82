#include "frobgen/ideal.hpp"

#include "frobgen/error.hpp"

namespace frobgen {

Ideal::Ideal(RingPtr ring, const std::vector<Polynomial>& generators)
    : ring_(std::move(ring)) {
  for (const auto& g : generators) add(g);
}

void Ideal::add(const Polynomial& g) {
  if (!g.ring()->compatible(*ring_)) {
    throw Error(ErrorKind::ContextMismatch, "generator from a different ring");
  }
  if (!g.is_zero()) gens_.push_back(g.in_order(ring_->order));
}

Ideal Ideal::frobenius_power(unsigned n) const {
  Ideal r(ring_);
  for (const auto& g : gens_) r.gens_.push_back(frobenius(g, n));
  return r;
}

Ideal Ideal::in_order(MonomialOrder order) const {
  Ideal r(with_order(ring_, order));
  for (const auto& g : gens_) r.gens_.push_back(g.in_order(order));
  return r;
}

}  // namespace frobgen
