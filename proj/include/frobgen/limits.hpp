#pragma once

#include <cstddef>
#include <cstdint>

namespace frobgen {

/// Resource caps for the level search. f^(p^n - 1) grows exponentially in n,
/// so every pipeline stops loudly at these bounds.
struct Limits {
  unsigned max_level = 5;
  /// Upper bound on p^n * deg f for any level n that gets computed.
  std::uint64_t exponent_cap = 4096;
  /// Upper bound on the number of terms of any power of f we form.
  std::size_t term_cap = 5'000'000;
};

}  // namespace frobgen
