#pragma once

#include <utility>
#include <vector>

#include "frobgen/ideal.hpp"
#include "frobgen/polynomial.hpp"

namespace frobgen {

/// f = sum over 0 <= alpha < p^n of frobenius(root_alpha, n) * x^alpha.
///
/// Parts hold the p^n-th roots; the piece that multiplies x^alpha is
/// frobenius(root, n). Parts are sorted by increasing alpha under the
/// ring's monomial order and never hold zero.
struct PnDecomposition {
  struct Part {
    MultiIndex alpha;
    Polynomial root;
  };

  RingPtr ring;
  unsigned n = 1;
  std::vector<Part> parts;

  /// Root for alpha, or nullptr when alpha is outside the support.
  const Polynomial* find(const MultiIndex& alpha) const;
};

/// Splits every exponent as p^n * q + r with 0 <= r < p^n componentwise.
/// Requires n >= 1; the zero polynomial yields no parts.
PnDecomposition decompose(const Polynomial& f, unsigned n);
Polynomial reconstruct(const PnDecomposition& dec);

/// I_n(f): the roots of the p^n-decomposition. Throws ZeroInput for f = 0.
Ideal ideal_I(const Polynomial& f, unsigned n);
/// J_n(f): the pieces frobenius(root, n), i.e. I_n(f)^[p^n].
Ideal ideal_J(const Polynomial& f, unsigned n);

}  // namespace frobgen
