#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "frobgen/fp.hpp"
#include "frobgen/multi_index.hpp"

namespace frobgen {

/// Total monomial orders; variables are ranked x1 > x2 > ... > xd.
enum class MonomialOrder { grevlex, lex };

std::strong_ordering compare(MonomialOrder order, const MultiIndex& a,
                             const MultiIndex& b) noexcept;
std::string_view to_string(MonomialOrder order) noexcept;
/// Accepts "grevlex" or "lex"; throws InvalidInput otherwise.
MonomialOrder parse_order(std::string_view name);

/// Coefficient field, number of variables and the active monomial order.
struct Ring {
  PrimeField field;
  std::size_t nvars;
  MonomialOrder order = MonomialOrder::grevlex;

  std::uint32_t p() const noexcept { return field.p(); }
  /// Same p and d; the order may differ.
  bool compatible(const Ring& o) const noexcept {
    return field == o.field && nvars == o.nvars;
  }
  friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t p, std::size_t nvars,
                  MonomialOrder order = MonomialOrder::grevlex);
/// Same field and variables under another order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

struct Term {
  MultiIndex exp;
  std::uint32_t coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p. Terms are kept sorted by the ring's order,
/// leading term first, with no zero coefficients and no repeated exponents.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial monomial(RingPtr ring, MultiIndex exp,
                             std::uint32_t coeff = 1);
  static Polynomial variable(RingPtr ring, std::size_t index);
  /// Merges repeated exponents, drops zeros and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const PrimeField& field() const noexcept { return ring_->field; }
  std::uint32_t p() const noexcept { return ring_->p(); }
  std::size_t nvars() const noexcept { return ring_->nvars; }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;

  /// Requires a nonzero polynomial.
  const Term& leading_term() const;
  const MultiIndex& leading_exp() const { return leading_term().exp; }
  std::uint32_t leading_coeff() const { return leading_term().coeff; }

  /// Coefficient of x^exp, zero if absent.
  std::uint32_t coeff(const MultiIndex& exp) const;
  /// Max |a| over the support; -1 for the zero polynomial.
  std::int64_t degree() const noexcept;
  /// Componentwise maximum exponent over the support.
  MultiIndex max_exponents() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(std::uint32_t c) const;
  /// c * x^shift * this.
  Polynomial mul_term(const MultiIndex& shift, std::uint32_t c) const;
  /// this + c * x^shift * g, in one merge pass.
  Polynomial add_scaled(const Polynomial& g, std::uint32_t c,
                        const MultiIndex& shift) const;
  /// Leading coefficient normalized to 1; zero stays zero.
  Polynomial monic() const;
  /// Re-sorted under another order.
  Polynomial in_order(MonomialOrder order) const;

  /// Equal term sets over compatible rings (the order is irrelevant).
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_context(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// f^m. Splits m into base-p digits and uses f^(c p^j) = frobenius(f^c, j).
Polynomial pow(const Polynomial& f, std::uint64_t m);
/// f^m by plain square-and-multiply; kept as an independent route.
Polynomial pow_binary(const Polynomial& f, std::uint64_t m);
/// f^(p^n): exponents scaled by p^n, coefficients fixed since c^p = c.
Polynomial frobenius(const Polynomial& f, unsigned n);
/// Inverse of frobenius; throws NotAPnPower when an exponent is not
/// divisible by p^n.
Polynomial pn_root(const Polynomial& f, unsigned n);
inline std::int64_t degree(const Polynomial& f) noexcept { return f.degree(); }

/// p^n, throwing ResourceLimit when it does not fit in 32 bits.
std::uint64_t checked_pow(std::uint64_t p, unsigned n);

/// Parses the ASCII grammar `2*x1^2*x2 + x3 - 1`. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);
/// Canonical text form, leading term first; "0" for zero.
std::string format(const Polynomial& f);

}  // namespace frobgen
