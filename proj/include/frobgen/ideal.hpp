#pragma once

#include <vector>

#include "frobgen/polynomial.hpp"

namespace frobgen {

/// Finite list of nonzero generators, kept in insertion order.
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  /// Zero generators are dropped.
  Ideal(RingPtr ring, const std::vector<Polynomial>& generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }

  void add(const Polynomial& g);

  /// Generators raised to the q-th power, q = p^n.
  Ideal frobenius_power(unsigned n) const;
  Ideal in_order(MonomialOrder order) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

}  // namespace frobgen
