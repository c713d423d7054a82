#include <random>

#include "doctest.h"
#include "frobgen/error.hpp"
#include "frobgen/fp.hpp"
#include "oracles.hpp"

using namespace frobgen;
using namespace frobgen::testing;

TEST_CASE("field examples") {
  CHECK(PrimeField(3)(2).inv() == PrimeField(3)(2));
  CHECK(PrimeField(5)(3) + PrimeField(5)(4) == PrimeField(5)(2));
  CHECK(PrimeField(7)(3).inv().value() == brute_inverse(3, 7));
  CHECK(PrimeField(7)(3).inv().value() == 5);
  CHECK(PrimeField(5)(-1).value() == 4);
}

TEST_CASE("field construction rejects composites and large moduli") {
  for (std::uint32_t n : {0u, 1u, 4u, 9u, 65535u}) {
    CHECK_THROWS_AS(PrimeField{n}, Error);
  }
  try {
    PrimeField f(4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
  CHECK_THROWS_AS(PrimeField{65537}, Error);
  CHECK(PrimeField(65521).p() == 65521);
}

TEST_CASE("division by zero and context mismatch") {
  const PrimeField f3(3), f5(5);
  CHECK_THROWS_AS(f3(0).inv(), Error);
  CHECK_THROWS_AS(f3(1) / f3(0), Error);
  try {
    (void)(f3(1) + f5(1));
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ContextMismatch);
  }
}

TEST_CASE("field axioms") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    const PrimeField F(p);
    std::uniform_int_distribution<std::uint32_t> u(0, p - 1);
    for (int k = 0; k < 1000; ++k) {
      const Fp a = F(u(rng)), b = F(u(rng)), c = F(u(rng));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + F(0) == a);
      CHECK(a * F(1) == a);
      CHECK(a + (-a) == F(0));
      CHECK(a - b == a + (-b));
      if (!a.is_zero()) {
        CHECK(a * a.inv() == F(1));
        CHECK(a.inv().value() == brute_inverse(a.value(), p));
      }
    }
  }
}

TEST_CASE("binomial examples") {
  CHECK(binom_mod_p(7, 2, 5) == 1);
  CHECK(binom_mod_p(5, 2, 3) == 1);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint64_t n = 0; n < 40; ++n) CHECK(binom_mod_p(n, 0, p) == 1);
  }
  CHECK(binom_mod_p(2, 5, 3) == 0);
  CHECK(multiindex_binom(MultiIndex{2, 2, 0, 0}, MultiIndex{2, 2, 0, 0}, 3) == 1);
  CHECK(multiindex_binom(MultiIndex{4, 0}, MultiIndex{2, 0}, 3) == 0);
  CHECK(multiindex_binom(MultiIndex{7, 2}, MultiIndex{2, 2}, 5) == 1);
  CHECK(multiindex_binom(MultiIndex{1, 2}, MultiIndex{2, 0}, 5) == 0);
}

TEST_CASE("Lucas agrees with Pascal") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    for (unsigned a = 0; a <= 60; ++a) {
      for (unsigned b = 0; b <= a; ++b) {
        CHECK(binom_mod_p(a, b, p) == exact_binom(a, b) % p);
      }
    }
  }
}

TEST_CASE("Vandermonde identity") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField F(p);
    for (unsigned m = 0; m < 12; ++m) {
      for (unsigned n = 0; n < 12; ++n) {
        for (unsigned k = 0; k <= m + n; ++k) {
          Fp sum = F(0);
          for (unsigned j = 0; j <= k; ++j) sum = sum + binom_mod_p(m, j, F) * binom_mod_p(n, k - j, F);
          CHECK(sum == binom_mod_p(m + n, k, F));
        }
      }
    }
  }
}

TEST_CASE("factorial oracle for the quadric coefficient") {
  // (p-1)!/((p-1)/4)!^4 for p = 5 and p = 13.
  CHECK(static_cast<unsigned>(exact_factorial(4) / 1 % 5) == 4);
  const auto a13 = exact_factorial(12) / (exact_factorial(3) * exact_factorial(3) *
                                          exact_factorial(3) * exact_factorial(3));
  CHECK(static_cast<unsigned>(a13 % 13) == 10);
  CHECK(multiindex_binom(MultiIndex{12}, MultiIndex{3}, 13) *
            binom_mod_p(9, 3, 13) % 13 * binom_mod_p(6, 3, 13) % 13 ==
        10);
}
