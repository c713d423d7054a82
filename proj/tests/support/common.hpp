#pragma once

#include <string_view>

#include "frobgen/polynomial.hpp"

namespace frobgen::testing {

inline Polynomial P(std::string_view text, const RingPtr& ring) { return parse_polynomial(text, ring); }

inline RingPtr R(std::uint32_t p, std::size_t d, MonomialOrder order = MonomialOrder::grevlex) {
  return make_ring(p, d, order);
}

}  // namespace frobgen::testing
