#include <random>

#include "common.hpp"
#include "doctest.h"
#include "frobgen/error.hpp"
#include "oracles.hpp"

using namespace frobgen;
using namespace frobgen::testing;

TEST_CASE("parse examples") {
  const auto r4 = R(3, 4);
  const Polynomial q = P("x1^2+x2^2+x3^2+x4^2", r4);
  CHECK(q.size() == 4);
  CHECK(q.degree() == 2);
  CHECK(P("3*x1", R(3, 1)).is_zero());
  CHECK(P("x1*x1", R(5, 1)) == P("x1^2", R(5, 1)));
  CHECK(format(P("2*x1^2*x2 + x3 - 1", R(3, 3))) == "2*x1^2*x2 + x3 + 2");
  CHECK(format(Polynomial(r4)) == "0");
}

TEST_CASE("parse errors carry positions") {
  const auto r = R(3, 2);
  for (const char* bad : {"x3", "x1^", "x1 +", "y", "x0", "2**x1", "x1^-1", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(P(bad, r), ParseError);
  }
  try {
    P("x1 + x9", r);
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(e.position() == 5);
  }
}

TEST_CASE("pow examples") {
  const auto r4 = R(3, 4);
  const Polynomial q = P("x1^2+x2^2+x3^2+x4^2", r4);
  CHECK(pow(q, 2).coeff(MultiIndex{2, 2, 0, 0}) == 2);
  const auto r2 = R(2, 2);
  CHECK(pow(P("x1+x2", r2), 2) == P("x1^2+x2^2", r2));
  const auto r45 = R(5, 4);
  CHECK(pow(P("x1^2+x2^2+x3^2+x4^2", r45), 4).coeff(MultiIndex{2, 2, 2, 2}) == 4);
  CHECK(pow(q, 0).is_one());
  CHECK(pow(Polynomial(r4), 0).is_one());
  CHECK(pow(Polynomial(r4), 3).is_zero());
}

TEST_CASE("frobenius and root examples") {
  const auto r = R(3, 2);
  CHECK(frobenius(P("x1+x2", r), 1) == P("x1^3+x2^3", r));
  CHECK(frobenius(P("2*x1", r), 1) == P("2*x1^3", r));
  CHECK(frobenius(P("x1+x2^2", r), 0) == P("x1+x2^2", r));
  CHECK(pn_root(P("x1^3+2*x2^3", r), 1) == P("x1+2*x2", r));
  CHECK(pn_root(P("x1+x2", r), 0) == P("x1+x2", r));
  CHECK(pn_root(P("x1^4", R(2, 1)), 2) == P("x1", R(2, 1)));
  try {
    pn_root(P("x1^2", r), 1);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPnPower);
  }
}

TEST_CASE("degree examples") {
  CHECK(P("x1^2+x2^2+x3^2+x4^2", R(3, 4)).degree() == 2);
  CHECK(Polynomial(R(3, 2)).degree() == -1);
  CHECK(P("x1^2*x2 + x3", R(3, 3)).degree() == 3);
}

TEST_CASE("context mismatch") {
  CHECK_THROWS_AS(P("x1", R(3, 2)) + P("x1", R(5, 2)), Error);
  CHECK_THROWS_AS(P("x1", R(3, 2)) * P("x1", R(3, 3)), Error);
}

TEST_CASE("orders") {
  using enum MonomialOrder;
  CHECK(compare(grevlex, MultiIndex{1, 1, 0}, MultiIndex{2, 0, 0}) == std::strong_ordering::less);
  CHECK(compare(lex, MultiIndex{1, 1, 0}, MultiIndex{2, 0, 0}) == std::strong_ordering::less);
  CHECK(compare(grevlex, MultiIndex{0, 0, 3}, MultiIndex{1, 0, 0}) == std::strong_ordering::greater);
  CHECK(compare(lex, MultiIndex{0, 0, 3}, MultiIndex{1, 0, 0}) == std::strong_ordering::less);
  // grevlex tie-break: smaller last exponent wins.
  CHECK(compare(grevlex, MultiIndex{1, 0, 1}, MultiIndex{0, 2, 0}) == std::strong_ordering::less);
  const auto r = R(5, 2, lex);
  CHECK(P("x2^5 + x1", r).leading_exp() == MultiIndex{1, 0});
  CHECK(P("x2^5 + x1", R(5, 2)).leading_exp() == MultiIndex{0, 5});
}

TEST_CASE("ring axioms against schoolbook expansion") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 500; ++k) {
    const std::uint32_t p = std::array{2u, 3u, 5u, 7u}[k % 4];
    const auto r = R(p, 1 + k % 3, k % 2 ? MonomialOrder::lex : MonomialOrder::grevlex);
    const Polynomial a = random_poly(rng, r, 4, 5), b = random_poly(rng, r, 4, 5),
                     c = random_poly(rng, r, 4, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial(r));
    CHECK(a + (-a) == Polynomial(r));
    CHECK(a * Polynomial::constant(r, 1) == a);
    const auto prod = a * b;
    const auto oracle = expand_product(a, b);
    CHECK(prod.size() == oracle.size());
    for (const auto& t : prod.terms()) CHECK(oracle.at(t.exp) == t.coeff);
    if (!a.is_zero() && !b.is_zero()) CHECK(prod.degree() == a.degree() + b.degree());
    for (std::size_t i = 1; i < prod.size(); ++i) {
      CHECK(compare(r->order, prod.terms()[i - 1].exp, prod.terms()[i].exp) == std::strong_ordering::greater);
    }
  }
}

TEST_CASE("pow agrees with repeated squaring, frobenius and root invert") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 200; ++k) {
    const std::uint32_t p = std::array{2u, 3u, 5u}[k % 3];
    const auto r = R(p, 1 + k % 3);
    const Polynomial f = random_poly(rng, r, 3, 4);
    const unsigned m = std::uniform_int_distribution<unsigned>(0, 30)(rng);
    CHECK(pow(f, m) == pow_binary(f, m));
    const unsigned n = 1 + k % 2;
    CHECK(frobenius(f, n) == pow_binary(f, checked_pow(p, n)));
    CHECK(pn_root(frobenius(f, n), n) == f);
  }
}

TEST_CASE("parse and format round trip") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const auto r = R(std::array{2u, 3u, 5u, 13u}[k % 4], 1 + k % 4);
    const Polynomial f = random_poly(rng, r, 6, 6);
    CHECK(P(format(f), r) == f);
  }
}

TEST_CASE("resource guard on exponent overflow") {
  const auto r = R(3, 1);
  CHECK_THROWS_AS(frobenius(P("x1^4000000000", r), 1), Error);
}
