#include "frobgen/diffop.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "frobgen/error.hpp"
#include "frobgen/frobdecomp.hpp"

namespace frobgen {

DiffOp::DiffOp(RingPtr ring) : ring_(std::move(ring)) {}

DiffOp DiffOp::identity(RingPtr ring) {
  return derivation(ring, MultiIndex(ring->nvars), 1);
}

DiffOp DiffOp::derivation(RingPtr ring, MultiIndex beta, std::uint32_t c) {
  DiffOp q(ring);
  q.add_component(beta, Polynomial::constant(ring, c));
  return q;
}

DiffOp DiffOp::multiplication(const Polynomial& g) {
  DiffOp q(g.ring());
  q.add_component(MultiIndex(g.nvars()), g);
  return q;
}

DiffOp DiffOp::from_terms(RingPtr ring, const std::vector<OpTerm>& terms) {
  std::map<MultiIndex, std::vector<Term>> grouped;
  for (const auto& t : terms) {
    if (t.x.size() != ring->nvars || t.d.size() != ring->nvars) {
      throw Error(ErrorKind::ContextMismatch, "operator term has wrong dimension");
    }
    grouped[t.d].push_back({t.x, t.c});
  }
  DiffOp q(ring);
  for (auto& [beta, ts] : grouped) {
    q.add_component(beta, Polynomial::from_terms(ring, std::move(ts)));
  }
  return q;
}

std::vector<OpTerm> DiffOp::terms() const {
  std::vector<OpTerm> out;
  for (const auto& [beta, coeff] : comps_) {
    for (const auto& t : coeff.terms()) out.push_back({t.exp, beta, t.coeff});
  }
  return out;
}

std::size_t DiffOp::num_terms() const noexcept {
  std::size_t n = 0;
  for (const auto& [beta, coeff] : comps_) n += coeff.size();
  return n;
}

void DiffOp::add_component(const MultiIndex& beta, const Polynomial& coeff) {
  if (beta.size() != ring_->nvars || !coeff.ring()->compatible(*ring_)) {
    throw Error(ErrorKind::ContextMismatch, "operator component from a different ring");
  }
  if (coeff.is_zero()) return;
  auto it = comps_.find(beta);
  if (it == comps_.end()) {
    comps_.emplace(beta, coeff.in_order(ring_->order));
    return;
  }
  it->second += coeff.in_order(ring_->order);
  if (it->second.is_zero()) comps_.erase(it);
}

void DiffOp::check_context(const DiffOp& o) const {
  if (!ring_->compatible(*o.ring_)) {
    throw Error(ErrorKind::ContextMismatch, "operators live over different rings");
  }
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  check_context(o);
  DiffOp r = *this;
  for (const auto& [beta, coeff] : o.comps_) r.add_component(beta, coeff);
  return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + o.scaled(ring_->p() - 1); }

DiffOp DiffOp::scaled(std::uint32_t c) const {
  DiffOp r(ring_);
  for (const auto& [beta, coeff] : comps_) r.add_component(beta, coeff.scaled(c));
  return r;
}

DiffOp DiffOp::left_multiply(const Polynomial& h) const {
  DiffOp r(ring_);
  const Polynomial hh = h.in_order(ring_->order);
  for (const auto& [beta, coeff] : comps_) r.add_component(beta, hh * coeff);
  return r;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  if (!a.ring_->compatible(*b.ring_) || a.comps_.size() != b.comps_.size()) return false;
  auto ia = a.comps_.begin();
  auto ib = b.comps_.begin();
  for (; ia != a.comps_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

Polynomial apply_derivation(const MultiIndex& beta, const Polynomial& g) {
  if (beta.size() != g.nvars()) {
    throw Error(ErrorKind::ContextMismatch, "derivation has wrong dimension");
  }
  if (beta.is_zero()) return g;
  const std::uint32_t p = g.p();
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    if (!beta.divides(t.exp)) continue;
    std::uint32_t b = multiindex_binom(t.exp, beta, p);
    if (b == 0) continue;
    out.push_back({t.exp - beta, g.field().mul(t.coeff, b)});
  }
  return Polynomial::from_terms(g.ring(), std::move(out));
}

Polynomial apply(const DiffOp& q, const Polynomial& g) {
  if (!q.ring()->compatible(*g.ring())) {
    throw Error(ErrorKind::ContextMismatch, "operator and polynomial over different rings");
  }
  Polynomial result(g.ring());
  for (const auto& [beta, coeff] : q.components()) {
    Polynomial dg = apply_derivation(beta, g);
    if (dg.is_zero()) continue;
    result += coeff.in_order(g.ring()->order) * dg;
  }
  return result;
}

namespace {

// Calls fn(j) for every j with 0 <= j <= bound componentwise.
template <class Fn>
void for_each_below(const MultiIndex& bound, Fn&& fn) {
  MultiIndex j(bound.size());
  for (;;) {
    fn(j);
    std::size_t i = 0;
    for (; i < j.size(); ++i) {
      if (j[i] < bound[i]) {
        ++j[i];
        break;
      }
      j[i] = 0;
    }
    if (i == j.size()) return;
  }
}

}  // namespace

DiffOp compose(const DiffOp& q2, const DiffOp& q1) {
  if (!q2.ring()->compatible(*q1.ring())) {
    throw Error(ErrorKind::ContextMismatch, "operators live over different rings");
  }
  const RingPtr& ring = q2.ring();
  const std::uint32_t p = ring->p();
  DiffOp result(ring);
  for (const auto& [gamma, a] : q2.components()) {
    for (const auto& [beta, c] : q1.components()) {
      // D_gamma o (c *) = sum_j D_j(c) * D_{gamma-j}.
      const MultiIndex bound = MultiIndex::min(gamma, c.max_exponents());
      for_each_below(bound, [&](const MultiIndex& j) {
        Polynomial dc = apply_derivation(j, c);
        if (dc.is_zero()) return;
        const MultiIndex rest = gamma - j;
        const MultiIndex total = rest + beta;
        std::uint32_t b = multiindex_binom(total, beta, p);
        if (b == 0) return;
        result.add_component(total, (a * dc).scaled(b));
      });
    }
  }
  return result;
}

unsigned level(const DiffOp& q) {
  std::uint64_t top = 0;
  bool any = false;
  for (const auto& [beta, coeff] : q.components()) {
    for (auto v : beta) {
      top = std::max<std::uint64_t>(top, v);
      any = true;
    }
  }
  if (!any) return 0;
  const std::uint64_t p = q.ring()->p();
  unsigned n = 0;
  for (std::uint64_t bound = 1; top >= bound; bound *= p) ++n;
  return n;
}

std::vector<WitnessOperator> witness_generators(const Polynomial& f, unsigned n) {
  std::vector<MultiIndex> all;
  for (const auto& part : decompose(f, n).parts) all.push_back(part.alpha);
  return witness_generators(f, n, all);
}

std::vector<WitnessOperator> witness_generators(const Polynomial& f, unsigned n,
                                                std::span<const MultiIndex> wanted) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "witnesses for the zero polynomial");
  const PnDecomposition dec = decompose(f, n);
  const RingPtr& ring = f.ring();
  const auto& field = ring->field;
  const std::uint32_t p = ring->p();
  const std::size_t m = dec.parts.size();

  std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> index;
  for (std::size_t k = 0; k < m; ++k) index.emplace(dec.parts[k].alpha, k);

  // Upward edges: gamma above alpha in the support with C(gamma, alpha) != 0.
  // These are exactly the support terms that D_alpha does not kill.
  auto above = [&](std::size_t a) {
    std::vector<std::pair<std::size_t, std::uint32_t>> out;
    const MultiIndex& alpha = dec.parts[a].alpha;
    for (std::size_t g = 0; g < m; ++g) {
      if (g == a) continue;
      const MultiIndex& gamma = dec.parts[g].alpha;
      if (!alpha.divides(gamma)) continue;
      if (auto b = multiindex_binom(gamma, alpha, p); b != 0) out.emplace_back(g, b);
    }
    return out;
  };

  // Upward closure of the requested alphas.
  std::vector<char> needed(m, 0);
  std::vector<std::size_t> stack;
  for (const auto& alpha : wanted) {
    auto it = index.find(alpha);
    if (it == index.end()) {
      throw Error(ErrorKind::InvalidInput, "alpha is not in the decomposition support");
    }
    if (!needed[it->second]) {
      needed[it->second] = 1;
      stack.push_back(it->second);
    }
  }
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> edges(m);
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    edges[a] = above(a);
    for (auto [g, b] : edges[a]) {
      if (!needed[g]) {
        needed[g] = 1;
        stack.push_back(g);
      }
    }
  }

  // Q_alpha = sum_beta c[alpha][beta] x^(beta - alpha) D_beta with
  // c[alpha] = e_alpha - sum_gamma C(gamma, alpha) c[gamma]. Larger total
  // degree first, so every gamma is ready before alpha.
  std::vector<std::size_t> todo;
  for (std::size_t k = 0; k < m; ++k) {
    if (needed[k]) todo.push_back(k);
  }
  std::sort(todo.begin(), todo.end(), [&](std::size_t a, std::size_t b) {
    return dec.parts[a].alpha.total() > dec.parts[b].alpha.total();
  });
  std::vector<std::map<std::size_t, std::uint32_t>> coeffs(m);
  for (std::size_t a : todo) {
    auto& row = coeffs[a];
    row[a] = 1;
    for (auto [g, b] : edges[a]) {
      const std::uint32_t scale = field.neg(b);
      for (auto [beta, c] : coeffs[g]) {
        auto& slot = row[beta];
        slot = field.add(slot, field.mul(scale, c));
      }
    }
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
  }

  std::vector<WitnessOperator> out;
  for (const auto& alpha : wanted) {
    const std::size_t a = index.at(alpha);
    DiffOp op(ring);
    for (auto [bk, c] : coeffs[a]) {
      const MultiIndex& beta = dec.parts[bk].alpha;
      op.add_component(beta, Polynomial::monomial(ring, beta - alpha, c));
    }
    if (!(apply(op, f) == frobenius(dec.parts[a].root, n))) {
      throw Error(ErrorKind::InternalError, "witness operator does not reproduce its piece");
    }
    out.push_back({alpha, std::move(op)});
  }
  return out;
}

namespace {

void monomials_up_to(std::size_t d, unsigned max_degree, MultiIndex& cur, std::size_t i,
                     unsigned remaining, std::vector<MultiIndex>& out) {
  if (i == d) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    cur[i] = e;
    monomials_up_to(d, max_degree, cur, i + 1, remaining - e, out);
  }
  cur[i] = 0;
}

}  // namespace

bool commutes_with_pn(const DiffOp& q, const Polynomial& h, unsigned n,
                      const ProbeOptions& probes) {
  const std::uint64_t pn = checked_pow(h.p(), n);
  for (const auto& t : h.terms()) {
    for (auto v : t.exp) {
      if (v % pn != 0) {
        throw Error(ErrorKind::InvalidInput, "multiplier is not a p^n-th power");
      }
    }
  }
  if (level(q) > n) {
    throw Error(ErrorKind::InvalidInput, "operator level exceeds n");
  }
  const RingPtr& ring = h.ring();
  const unsigned max_degree = probes.max_degree ? probes.max_degree : static_cast<unsigned>(pn);

  std::vector<Polynomial> battery;
  std::vector<MultiIndex> monos;
  MultiIndex cur(ring->nvars);
  monomials_up_to(ring->nvars, max_degree, cur, 0, max_degree, monos);
  for (auto& mono : monos) battery.push_back(Polynomial::monomial(ring, mono, 1));

  std::mt19937_64 rng(probes.seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, ring->p() - 1);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  for (unsigned s = 0; s < probes.random_samples; ++s) {
    std::vector<Term> ts;
    for (int k = 0; k < 5; ++k) ts.push_back({monos[pick(rng)], coeff(rng)});
    battery.push_back(Polynomial::from_terms(ring, std::move(ts)));
  }

  return std::all_of(battery.begin(), battery.end(), [&](const Polynomial& g) {
    return apply(q, h * g) == h * apply(q, g);
  });
}

}  // namespace frobgen
