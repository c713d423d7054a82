#include "frobgen/fp.hpp"

#include <string>

#include "frobgen/error.hpp"

namespace frobgen {

void Fp::check_same(Fp o) const {
  if (modulus_ != o.modulus_) {
    throw Error(ErrorKind::ContextMismatch,
                "F_" + std::to_string(modulus_) + " vs F_" +
                    std::to_string(o.modulus_));
  }
}

Fp Fp::operator+(Fp o) const {
  check_same(o);
  return Fp(value_ + o.value_, modulus_);
}

Fp Fp::operator-(Fp o) const {
  check_same(o);
  return Fp(value_ + modulus_ - o.value_, modulus_);
}

Fp Fp::operator*(Fp o) const {
  check_same(o);
  return Fp(static_cast<std::uint32_t>(std::uint64_t{value_} * o.value_ % modulus_),
            modulus_);
}

Fp Fp::operator-() const noexcept {
  return Fp(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

Fp Fp::inv() const {
  if (value_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  // Extended Euclid on (value, p).
  std::int64_t r0 = modulus_, r1 = value_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  std::int64_t m = modulus_;
  return Fp(static_cast<std::uint32_t>(((s0 % m) + m) % m), modulus_);
}

std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.value(); }

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw Error(ErrorKind::NotPrime,
                std::to_string(p) + " is not a prime below 65536");
  }
}

Fp PrimeField::operator()(std::int64_t v) const noexcept {
  return Fp(reduce(v), p_);
}

std::uint32_t PrimeField::reduce(std::int64_t v) const noexcept {
  std::int64_t m = p_;
  return static_cast<std::uint32_t>(((v % m) + m) % m);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  return Fp(a, p_).inv().value();
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t r = 1 % p_;
  std::uint32_t b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

namespace {

// C(a, b) mod p for a, b < p, by the multiplicative formula.
std::uint32_t small_binom(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  std::uint64_t num = 1, den = 1;
  for (std::uint32_t i = 0; i < b; ++i) {
    num = num * (a - i) % p;
    den = den * (i + 1) % p;
  }
  return static_cast<std::uint32_t>(num * Fp(static_cast<std::uint32_t>(den), p).inv().value() % p);
}

}  // namespace

std::uint32_t binom_mod_p(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  if (b > a) return 0;
  std::uint64_t r = 1 % p;
  while (b > 0 || a > 0) {
    auto ad = static_cast<std::uint32_t>(a % p);
    auto bd = static_cast<std::uint32_t>(b % p);
    if (bd > ad) return 0;
    r = r * small_binom(ad, bd, p) % p;
    a /= p;
    b /= p;
  }
  return static_cast<std::uint32_t>(r);
}

Fp binom_mod_p(std::uint64_t a, std::uint64_t b, const PrimeField& field) {
  return Fp(binom_mod_p(a, b, field.p()), field.p());
}

std::uint32_t multiindex_binom(const MultiIndex& a, const MultiIndex& b,
                               std::uint32_t p) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::ContextMismatch, "multi-index dimension mismatch");
  }
  std::uint64_t r = 1 % p;
  for (std::size_t i = 0; i < a.size() && r != 0; ++i) {
    r = r * binom_mod_p(a[i], b[i], p) % p;
  }
  return static_cast<std::uint32_t>(r);
}

Fp multiindex_binom(const MultiIndex& a, const MultiIndex& b,
                    const PrimeField& field) {
  return Fp(multiindex_binom(a, b, field.p()), field.p());
}

}  // namespace frobgen
