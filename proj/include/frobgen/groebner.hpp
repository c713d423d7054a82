#pragma once

#include <optional>
#include <span>
#include <vector>

#include "frobgen/ideal.hpp"
#include "frobgen/polynomial.hpp"

namespace frobgen {

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

/// Multivariate division: f = sum q_i * d_i + r with no term of r divisible
/// by any leading term. The largest reducible term is always reduced by the
/// first divisor (in list order) whose leading term divides it.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      MonomialOrder order = MonomialOrder::grevlex);

/// S-polynomial of two nonzero polynomials (same order).
Polynomial spoly(const Polynomial& a, const Polynomial& b);

/// Reduced Groebner basis together with the expression of each basis
/// element in the original generators:
///   basis[i] == sum_j transform[i][j] * generators[j].
class GroebnerBasis {
 public:
  GroebnerBasis(Ideal generators, std::vector<Polynomial> basis,
                std::vector<std::vector<Polynomial>> transform);

  MonomialOrder order() const noexcept { return gens_.ring()->order; }
  const Ideal& generators() const noexcept { return gens_; }
  /// Monic, sorted by increasing leading monomial.
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  const std::vector<std::vector<Polynomial>>& transform() const noexcept {
    return transform_;
  }
  bool is_unit() const noexcept;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  /// Cofactors h_j over the original generators with f = sum h_j * g_j, or
  /// nullopt when f is not in the ideal. The identity is re-checked before
  /// returning (InternalError on mismatch).
  std::optional<std::vector<Polynomial>> cofactors(const Polynomial& f) const;

 private:
  Ideal gens_;
  std::vector<Polynomial> basis_;
  std::vector<std::vector<Polynomial>> transform_;
};

/// Throws ZeroInput when the ideal has no nonzero generator.
GroebnerBasis buchberger(const Ideal& ideal,
                         MonomialOrder order = MonomialOrder::grevlex);

std::optional<std::vector<Polynomial>> membership(
    const Polynomial& f, const Ideal& ideal,
    MonomialOrder order = MonomialOrder::grevlex);

/// Equality of ideals by comparison of reduced bases.
bool ideal_equal(const Ideal& a, const Ideal& b,
                 MonomialOrder order = MonomialOrder::grevlex);

/// Every generator of `small` lies in `big`.
bool ideal_contains(const Ideal& big, const Ideal& small,
                    MonomialOrder order = MonomialOrder::grevlex);

/// sum_j h_j * g_j, skipping zero cofactors.
Polynomial combine(std::span<const Polynomial> cofactors,
                   std::span<const Polynomial> generators);

}  // namespace frobgen
