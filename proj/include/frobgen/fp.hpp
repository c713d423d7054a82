#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "frobgen/multi_index.hpp"

namespace frobgen {

class PrimeField;

/// An element of F_p. Carries its modulus so mixed-field arithmetic is
/// caught rather than silently reduced.
class Fp {
 public:
  Fp(std::uint32_t value, std::uint32_t modulus) noexcept
      : value_(value % modulus), modulus_(modulus) {}

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Fp operator+(Fp o) const;
  Fp operator-(Fp o) const;
  Fp operator*(Fp o) const;
  Fp operator-() const noexcept;
  /// Throws DivisionByZero for zero.
  Fp inv() const;
  Fp operator/(Fp o) const { return *this * o.inv(); }

  friend bool operator==(Fp, Fp) = default;

 private:
  void check_same(Fp o) const;

  std::uint32_t value_;
  std::uint32_t modulus_;
};

std::ostream& operator<<(std::ostream& os, Fp a);

/// The prime field F_p with p < 2^16. Validated once at construction.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxPrime = 1u << 16;

  /// Throws NotPrime if p is not a prime below kMaxPrime.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Fp operator()(std::int64_t v) const noexcept;

  // Raw arithmetic on reduced representatives.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept {
    return a == 0 ? 0 : p_ - a;
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  std::uint32_t reduce(std::int64_t v) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// C(a, b) mod p via Lucas' theorem on base-p digits. Zero when b > a.
std::uint32_t binom_mod_p(std::uint64_t a, std::uint64_t b, std::uint32_t p);
Fp binom_mod_p(std::uint64_t a, std::uint64_t b, const PrimeField& field);

/// Product over coordinates of C(a_i, b_i) mod p.
std::uint32_t multiindex_binom(const MultiIndex& a, const MultiIndex& b,
                               std::uint32_t p);
Fp multiindex_binom(const MultiIndex& a, const MultiIndex& b,
                    const PrimeField& field);

}  // namespace frobgen
