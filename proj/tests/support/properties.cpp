#include "properties.hpp"

#include <random>

#include "frobgen/diffop.hpp"
#include "frobgen/error.hpp"
#include "frobgen/frobdecomp.hpp"
#include "frobgen/groebner.hpp"
#include "frobgen/ideal_chain.hpp"
#include "oracles.hpp"

namespace frobgen::testing {

namespace {

struct Setup {
  RingPtr ring;
  std::uint32_t p;
  std::size_t d;
};

Setup draw_ring(std::mt19937_64& rng) {
  static constexpr std::uint32_t kPrimes[] = {2, 3, 5};
  std::uint32_t p = kPrimes[std::uniform_int_distribution<int>(0, 2)(rng)];
  std::size_t d = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  return {make_ring(p, d), p, d};
}

std::string describe(const Setup& s, const Polynomial& f, unsigned n) {
  return "p=" + std::to_string(s.p) + " d=" + std::to_string(s.d) + " n=" + std::to_string(n) +
         " f=" + format(f);
}

unsigned draw(std::mt19937_64& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

}  // namespace

PropertyStats prop_commutation(std::uint64_t seed, unsigned cases) {
  std::mt19937_64 rng(seed);
  PropertyStats stats;
  while (stats.cases < cases) {
    const Setup s = draw_ring(rng);
    const unsigned n = draw(rng, 1, 2);
    const auto pn = static_cast<unsigned>(checked_pow(s.p, n));
    std::vector<OpTerm> terms;
    for (unsigned k = 0, nt = draw(rng, 1, 4); k < nt; ++k) {
      MultiIndex x(s.d), beta(s.d);
      for (std::size_t i = 0; i < s.d; ++i) {
        x[i] = draw(rng, 0, 2);
        beta[i] = draw(rng, 0, pn - 1);
      }
      terms.push_back({x, beta, draw(rng, 1, s.p - 1)});
    }
    const DiffOp q = DiffOp::from_terms(s.ring, terms);
    const Polynomial h = frobenius(random_poly(rng, s.ring, 2, 3), n);
    const Polynomial g = random_poly(rng, s.ring, 4, 4);
    stats.record(level(q) <= n && apply(q, h * g) == h * apply(q, g), describe(s, g, n));
  }
  return stats;
}

PropertyStats prop_product_inclusion(std::uint64_t seed, unsigned cases) {
  std::mt19937_64 rng(seed);
  PropertyStats stats;
  while (stats.cases < cases) {
    const Setup s = draw_ring(rng);
    const unsigned n = draw(rng, 1, 2);
    const Polynomial g = random_poly(rng, s.ring, 2, 3, false);
    const Polynomial h = random_poly(rng, s.ring, 2, 3, false);
    const Polynomial f = g * h;
    stats.record(ideal_contains(ideal_J(g, n), ideal_J(f, n)), describe(s, f, n));
  }
  return stats;
}

PropertyStats prop_frobenius_power(std::uint64_t seed, unsigned cases) {
  std::mt19937_64 rng(seed);
  PropertyStats stats;
  while (stats.cases < cases) {
    const Setup s = draw_ring(rng);
    const unsigned n = draw(rng, 1, 2);
    const Polynomial g = random_poly(rng, s.ring, 4, 4, false);
    // J_0(g) is (g) itself: the only piece of the p^0-decomposition.
    const Ideal lower = n == 1 ? Ideal(s.ring, {g}) : ideal_J(g, n - 1);
    const Ideal lhs = ideal_J(pow_binary(g, s.p), n);
    stats.record(ideal_equal(lhs, lower.frobenius_power(1)), describe(s, g, n));
  }
  return stats;
}

PropertyStats prop_operator_ideal(std::uint64_t seed, unsigned cases) {
  std::mt19937_64 rng(seed);
  PropertyStats stats;
  while (stats.cases < cases) {
    const Setup s = draw_ring(rng);
    const unsigned n = draw(rng, 1, 2);
    const auto pn = static_cast<unsigned>(checked_pow(s.p, n));
    const Polynomial f = random_poly(rng, s.ring, 4, 4, false);
    const PnDecomposition dec = decompose(f, n);
    bool ok = true;
    // Constructed direction: every generator of J_n(f) is some Q_alpha(f).
    const auto witnesses = witness_generators(f, n);
    ok = ok && witnesses.size() == dec.parts.size();
    for (std::size_t k = 0; ok && k < witnesses.size(); ++k) {
      ok = witnesses[k].alpha == dec.parts[k].alpha && level(witnesses[k].op) <= n &&
           apply(witnesses[k].op, f) == frobenius(dec.parts[k].root, n);
    }
    // Membership direction: D_beta(f) lies in J_n(f) for beta < p^n.
    const GroebnerBasis gb = buchberger(ideal_J(f, n));
    for (unsigned t = 0; ok && t < 4; ++t) {
      MultiIndex beta(s.d);
      for (std::size_t i = 0; i < s.d; ++i) beta[i] = draw(rng, 0, std::min(pn - 1, 4u));
      ok = gb.contains(apply_derivation(beta, f));
    }
    stats.record(ok, describe(s, f, n));
  }
  return stats;
}

PropertyStats prop_chain_descent(std::uint64_t seed, unsigned cases) {
  std::mt19937_64 rng(seed);
  PropertyStats stats;
  while (stats.cases < cases) {
    const Setup s = draw_ring(rng);
    const Polynomial f = random_nonconstant(rng, s.ring, 4, 3);
    const unsigned top = s.p == 2 ? 3 : 2;
    bool ok = true;
    Ideal prev = chain_ideal(f, 1);
    for (unsigned n = 2; ok && n <= top; ++n) {
      Ideal cur = chain_ideal(f, n);
      const GroebnerBasis gb = buchberger(prev);
      for (const auto& g : cur.generators()) ok = ok && membership(g, prev).has_value() && gb.contains(g);
      prev = std::move(cur);
    }
    stats.record(ok, describe(s, f, top));
  }
  return stats;
}

PropertyStats prop_chain_mechanism(std::uint64_t seed, unsigned cases) {
  std::mt19937_64 rng(seed);
  PropertyStats stats;
  while (stats.cases < cases) {
    const Setup s = draw_ring(rng);
    const Polynomial f = random_nonconstant(rng, s.ring, 4, 3);
    const auto e = static_cast<unsigned>(f.degree());
    const unsigned top = s.p == 2 ? 3 : 2;
    bool ok = true;
    std::size_t prev_dim = SIZE_MAX;
    for (unsigned n = 1; ok && n <= top; ++n) {
      const Ideal I = ideal_I(pow_binary(f, checked_pow(s.p, n) - 1), n);
      for (const auto& g : I.generators()) ok = ok && g.degree() < static_cast<std::int64_t>(e);
      if (!ok) break;
      const std::size_t dim = we_dimension(I, e);
      ok = dim <= prev_dim;
      prev_dim = dim;
    }
    stats.record(ok, describe(s, f, top));
  }
  return stats;
}

PropertyStats decomposition_round_trip(std::uint64_t seed, unsigned cases) {
  std::mt19937_64 rng(seed);
  PropertyStats stats;
  while (stats.cases < cases) {
    const Setup s = draw_ring(rng);
    const unsigned n = draw(rng, 1, 3);
    const Polynomial f = random_poly(rng, s.ring, 12, 6);
    const PnDecomposition dec = decompose(f, n);
    const auto pn = checked_pow(s.p, n);
    bool ok = reconstruct(dec) == f;
    for (const auto& part : dec.parts) ok = ok && part.alpha.all_below(pn) && !part.root.is_zero();
    stats.record(ok, describe(s, f, n));
  }
  return stats;
}

PropertyStats freshmans_dream(std::uint64_t seed, unsigned cases) {
  std::mt19937_64 rng(seed);
  PropertyStats stats;
  while (stats.cases < cases) {
    const Setup s = draw_ring(rng);
    const unsigned n = s.p == 5 ? 1 : draw(rng, 1, 2);
    const Polynomial f = random_poly(rng, s.ring, 4, 4);
    const Polynomial g = random_poly(rng, s.ring, 4, 4);
    const bool ok = frobenius(f + g, n) == frobenius(f, n) + frobenius(g, n) &&
                    frobenius(f, n) == pow_binary(f, checked_pow(s.p, n)) &&
                    pn_root(frobenius(f, n), n) == f;
    stats.record(ok, describe(s, f, n));
  }
  return stats;
}

PropertyStats groebner_oracle(std::uint64_t seed, unsigned cases) {
  std::mt19937_64 rng(seed);
  PropertyStats stats;
  while (stats.cases < cases) {
    const Setup s = draw_ring(rng);
    std::vector<Polynomial> gens;
    for (unsigned k = 0, ng = draw(rng, 1, 3); k < ng; ++k) {
      gens.push_back(random_nonconstant(rng, s.ring, 3, 3));
    }
    const Ideal I(s.ring, gens);
    // Half the targets are built inside the ideal, half are arbitrary.
    Polynomial f = random_poly(rng, s.ring, 3, 3, false);
    if (stats.cases % 2 == 0) {
      std::vector<Polynomial> mult;
      for (std::size_t k = 0; k < gens.size(); ++k) mult.push_back(random_poly(rng, s.ring, 1, 2));
      f = combine(mult, gens);
      if (f.is_zero()) continue;
    }
    unsigned pad = 0;
    for (const auto& g : gens) pad = std::max(pad, static_cast<unsigned>(g.degree()));
    const auto gb_answer = membership(f, I);
    // Certificates can need degree above deg f + pad, so the oracle bound
    // grows until it finds one; a miss at the top bound counts as "absent".
    const auto low = static_cast<unsigned>(f.degree()) + pad;
    const unsigned top = low + pad + 2;
    unsigned bound = low;
    auto oracle = linear_membership(f, gens, bound);
    while (!oracle && bound < top) oracle = linear_membership(f, gens, ++bound);
    bool ok = gb_answer.has_value() == oracle.has_value();
    if (gb_answer) ok = ok && oracle_combine(*gb_answer, gens) == f;
    if (oracle) ok = ok && oracle_combine(*oracle, gens) == f;
    if (!gb_answer) ok = ok && !buchberger(I).normal_form(f).is_zero();
    stats.record(ok, describe(s, f, bound));
  }
  return stats;
}

}  // namespace frobgen::testing
