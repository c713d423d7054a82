#pragma once

#include <memory>
#include <vector>

#include "frobgen/error.hpp"
#include "frobgen/groebner.hpp"
#include "frobgen/ideal.hpp"
#include "frobgen/limits.hpp"
#include "frobgen/polynomial.hpp"

namespace frobgen {

struct ChainLevel {
  unsigned n;
  Ideal ideal;        // I_n(f^(p^n - 1))
  GroebnerBasis gb;   // reduced, grevlex
  std::size_t we_dim; // dim of the ideal's part of degree < deg f
};

/// The descending chain I_1(f^(p-1)) >= I_2(f^(p^2-1)) >= ... up to the first
/// n >= 2 where two consecutive members agree.
struct ChainResult {
  Polynomial f;
  std::vector<ChainLevel> levels;
  unsigned s = 0;
  Ideal stable_ideal;
};

/// Thrown when max_level is reached first; carries the chain computed so far.
class LevelExceededError : public Error {
 public:
  LevelExceededError(const std::string& what, std::shared_ptr<const ChainResult> partial)
      : Error(ErrorKind::LevelExceeded, what), partial_(std::move(partial)) {}

  const ChainResult& partial() const noexcept { return *partial_; }

 private:
  std::shared_ptr<const ChainResult> partial_;
};

/// I_n(f^(p^n - 1)). Throws ZeroInput, ConstantInput, or ResourceLimit when
/// p^n * deg f exceeds the exponent cap.
Ideal chain_ideal(const Polynomial& f, unsigned n, const Limits& limits = {});

/// Walks the chain until I_(n-1) == I_n (n >= 2) and reports s = n.
ChainResult stabilization(const Polynomial& f, const Limits& limits = {});

/// Dimension of the degree < e part of the ideal, by row reduction of the
/// multiples m * g (deg < e) of its reduced grevlex basis. Throws
/// DegreeBoundViolation when a generator has degree >= e.
std::size_t we_dimension(const Ideal& ideal, unsigned e);

}  // namespace frobgen
