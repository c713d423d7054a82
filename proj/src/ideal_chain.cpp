#include "frobgen/ideal_chain.hpp"

#include <map>
#include <string>

#include "frobgen/frobdecomp.hpp"

namespace frobgen {

namespace {

void check_chain_input(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "chain of the zero polynomial");
  if (f.is_constant()) {
    throw Error(ErrorKind::ConstantInput, "chain of a constant polynomial");
  }
}

// All exponent vectors of total degree <= max_degree, grouped by nothing in
// particular; order is deterministic.
void monomials(std::size_t d, std::uint64_t remaining, MultiIndex& cur, std::size_t i,
               std::vector<MultiIndex>& out) {
  if (i == d) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t e = 0; e <= remaining; ++e) {
    cur[i] = static_cast<MultiIndex::value_type>(e);
    monomials(d, remaining - e, cur, i + 1, out);
  }
  cur[i] = 0;
}

}  // namespace

Ideal chain_ideal(const Polynomial& f, unsigned n, const Limits& limits) {
  check_chain_input(f);
  if (n == 0) throw Error(ErrorKind::InvalidInput, "chain level must be >= 1");
  const auto deg = static_cast<std::uint64_t>(f.degree());
  const std::uint64_t pn = checked_pow(f.p(), n);
  if (pn * deg > limits.exponent_cap) {
    throw Error(ErrorKind::ResourceLimit,
                "p^" + std::to_string(n) + " * deg f = " + std::to_string(pn * deg) +
                    " exceeds the exponent cap " + std::to_string(limits.exponent_cap));
  }
  Polynomial power = pow(f, pn - 1);
  if (power.size() > limits.term_cap) {
    throw Error(ErrorKind::ResourceLimit, "f^(p^n-1) exceeds the term cap");
  }
  Ideal I = ideal_I(power, n);
  for (const auto& g : I.generators()) {
    if (g.degree() >= static_cast<std::int64_t>(deg)) {
      throw Error(ErrorKind::InternalError, "chain generator violates the degree bound");
    }
  }
  return I;
}

ChainResult stabilization(const Polynomial& f, const Limits& limits) {
  check_chain_input(f);
  if (limits.max_level < 2) throw Error(ErrorKind::InvalidInput, "max_level must be >= 2");
  const auto e = static_cast<unsigned>(f.degree());
  const RingPtr grevlex = with_order(f.ring(), MonomialOrder::grevlex);

  ChainResult result{f, {}, 0, Ideal(f.ring())};
  for (unsigned n = 1; n <= limits.max_level; ++n) {
    Ideal I = chain_ideal(f, n, limits);
    GroebnerBasis gb = buchberger(I, MonomialOrder::grevlex);
    std::size_t dim = we_dimension(I, e);
    if (!result.levels.empty()) {
      const auto& prev = result.levels.back();
      for (const auto& g : I.generators()) {
        if (!prev.gb.contains(g)) {
          throw Error(ErrorKind::InternalError, "chain is not descending");
        }
      }
      if (dim > prev.we_dim) {
        throw Error(ErrorKind::InternalError, "W_e dimension increased along the chain");
      }
    }
    bool stable = !result.levels.empty() && result.levels.back().gb.basis() == gb.basis();
    result.levels.push_back({n, std::move(I), std::move(gb), dim});
    if (stable) {
      result.s = n;
      result.stable_ideal = result.levels[n - 2].ideal;
      return result;
    }
  }
  throw LevelExceededError(
      "chain did not stabilize by level " + std::to_string(limits.max_level),
      std::make_shared<const ChainResult>(std::move(result)));
}

std::size_t we_dimension(const Ideal& ideal, unsigned e) {
  for (const auto& g : ideal.generators()) {
    if (g.degree() >= static_cast<std::int64_t>(e)) {
      throw Error(ErrorKind::DegreeBoundViolation,
                  "generator of degree " + std::to_string(g.degree()) +
                      " is not below " + std::to_string(e));
    }
  }
  if (ideal.empty() || e == 0) return 0;
  const RingPtr& ring = ideal.ring();
  const auto& field = ring->field;
  const std::size_t d = ring->nvars;

  std::vector<MultiIndex> basis;
  MultiIndex cur(d);
  monomials(d, e - 1, cur, 0, basis);
  std::map<MultiIndex, std::size_t> column;
  for (std::size_t k = 0; k < basis.size(); ++k) column.emplace(basis[k], k);

  // Rows are the multiples m * g with deg < e; eliminate incrementally.
  std::map<std::size_t, std::vector<std::uint32_t>> pivots;
  const auto gb = buchberger(ideal, MonomialOrder::grevlex);
  for (const auto& g : gb.basis()) {
    const auto dg = static_cast<std::uint64_t>(g.degree());
    if (dg >= e) continue;
    std::vector<MultiIndex> shifts;
    MultiIndex s(d);
    monomials(d, e - 1 - dg, s, 0, shifts);
    for (const auto& m : shifts) {
      std::vector<std::uint32_t> row(basis.size(), 0);
      for (const auto& t : g.terms()) row[column.at(t.exp + m)] = t.coeff;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] == 0) continue;
        auto it = pivots.find(c);
        if (it == pivots.end()) {
          std::uint32_t inv = field.inv(row[c]);
          for (auto& v : row) v = field.mul(v, inv);
          pivots.emplace(c, std::move(row));
          break;
        }
        std::uint32_t factor = field.neg(row[c]);
        for (std::size_t k = c; k < row.size(); ++k) {
          row[k] = field.add(row[k], field.mul(factor, it->second[k]));
        }
      }
    }
  }
  return pivots.size();
}

}  // namespace frobgen
