#include "frobgen/groebner.hpp"

#include <algorithm>
#include <map>

#include "frobgen/error.hpp"

namespace frobgen {

namespace {

// Sparse row of cofactors, keyed by original generator index.
using Rep = std::map<std::size_t, Polynomial>;

void rep_add_scaled(Rep& dst, const Rep& src, std::uint32_t c,
                    const MultiIndex& shift, const RingPtr& ring) {
  for (const auto& [j, poly] : src) {
    auto it = dst.find(j);
    if (it == dst.end()) it = dst.emplace(j, Polynomial(ring)).first;
    it->second = it->second.add_scaled(poly, c, shift);
    if (it->second.is_zero()) dst.erase(it);
  }
}

void rep_scale(Rep& r, std::uint32_t c) {
  for (auto& [j, poly] : r) poly = poly.scaled(c);
}

struct Element {
  Polynomial poly;
  Rep rep;
  bool active = true;
};

struct Pair {
  std::size_t i, j;
  MultiIndex lcm;
};

class Buchberger {
 public:
  explicit Buchberger(const Ideal& ideal) : ring_(ideal.ring()) {}

  void add_generator(std::size_t index, const Polynomial& g) {
    Rep rep;
    rep.emplace(index, Polynomial::constant(ring_, 1));
    Polynomial h = reduce(g, rep);
    if (h.is_zero()) return;
    insert(std::move(h), std::move(rep));
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(),
                                 [this](const Pair& a, const Pair& b) {
                                   auto c = compare(ring_->order, a.lcm, b.lcm);
                                   if (c != 0) return c < 0;
                                   return std::tie(a.i, a.j) < std::tie(b.i, b.j);
                                 });
      Pair pr = *it;
      pairs_.erase(it);
      process(pr);
    }
  }

  bool has_unit() const noexcept { return unit_; }

  // Minimal basis from the active elements, then tail-reduced.
  std::vector<Element> finish() {
    std::vector<Element> basis;
    for (auto& e : elems_) {
      if (e.active) basis.push_back(e);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Term lt = basis[i].poly.leading_term();
      Polynomial tail = basis[i].poly.add_scaled(
          Polynomial::monomial(ring_, lt.exp, 1), ring_->field.neg(lt.coeff),
          MultiIndex(ring_->nvars));
      Rep rep = basis[i].rep;
      // Reduce the tail by every other element; the rep follows.
      Polynomial reduced_tail = reduce_by(tail, rep, basis, i);
      basis[i].poly = Polynomial::monomial(ring_, lt.exp, lt.coeff) + reduced_tail;
      basis[i].rep = std::move(rep);
    }
    std::sort(basis.begin(), basis.end(), [this](const Element& a, const Element& b) {
      return compare(ring_->order, a.poly.leading_exp(), b.poly.leading_exp()) < 0;
    });
    return basis;
  }

 private:
  // Full reduction of f by the active elements.
  Polynomial reduce(const Polynomial& f, Rep& rep) const {
    return reduce_by(f, rep, elems_, static_cast<std::size_t>(-1), true);
  }

  // Reduces f against `pool` (skipping `skip`, and inactive entries when
  // `active_only`). Leading terms that no element divides move to the
  // remainder. `rep` tracks f's expression in the original generators.
  Polynomial reduce_by(const Polynomial& f, Rep& rep, const std::vector<Element>& pool,
                       std::size_t skip, bool active_only = false) const {
    const auto& field = ring_->field;
    std::vector<Term> rem;
    Polynomial h = f;
    const MultiIndex zero(ring_->nvars);
    while (!h.is_zero()) {
      const Term lt = h.leading_term();
      const Element* div = nullptr;
      for (std::size_t k = 0; k < pool.size(); ++k) {
        if (k == skip || (active_only && !pool[k].active)) continue;
        if (pool[k].poly.leading_exp().divides(lt.exp)) {
          div = &pool[k];
          break;
        }
      }
      if (div) {
        std::uint32_t c = field.neg(field.mul(lt.coeff, field.inv(div->poly.leading_coeff())));
        MultiIndex shift = lt.exp - div->poly.leading_exp();
        h = h.add_scaled(div->poly, c, shift);
        rep_add_scaled(rep, div->rep, c, shift, ring_);
      } else {
        rem.push_back(lt);
        h = h.add_scaled(Polynomial::monomial(ring_, lt.exp, 1), field.neg(lt.coeff), zero);
      }
    }
    return Polynomial::from_terms(ring_, std::move(rem));
  }

  void insert(Polynomial h, Rep rep) {
    std::uint32_t inv = ring_->field.inv(h.leading_coeff());
    h = h.scaled(inv);
    rep_scale(rep, inv);
    if (h.leading_exp().is_zero()) unit_ = true;
    elems_.push_back({std::move(h), std::move(rep), true});
    update(elems_.size() - 1);
  }

  // Gebauer-Moeller pair update for the newly inserted element `hi`.
  void update(std::size_t hi) {
    const MultiIndex& lh = elems_[hi].poly.leading_exp();
    std::vector<Pair> cand;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!elems_[g].active) continue;
      cand.push_back({g, hi, MultiIndex::lcm(elems_[g].poly.leading_exp(), lh)});
    }

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      const auto& lg = elems_[cand[k].i].poly.leading_exp();
      bool keep = MultiIndex::coprime(lg, lh);
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < cand.size() && keep; ++m) {
          if (cand[m].lcm.divides(cand[k].lcm)) keep = false;
        }
        for (const auto& d : kept) {
          if (d.lcm.divides(cand[k].lcm)) {
            keep = false;
            break;
          }
        }
      }
      if (keep) kept.push_back(cand[k]);
    }

    std::vector<Pair> next;
    for (auto& pr : pairs_) {
      const auto& la = elems_[pr.i].poly.leading_exp();
      const auto& lb = elems_[pr.j].poly.leading_exp();
      bool drop = lh.divides(pr.lcm) && MultiIndex::lcm(la, lh) != pr.lcm &&
                  MultiIndex::lcm(lb, lh) != pr.lcm;
      if (!drop) next.push_back(std::move(pr));
    }
    for (auto& pr : kept) {
      // Coprime leading terms: the S-polynomial reduces to zero.
      if (!MultiIndex::coprime(elems_[pr.i].poly.leading_exp(), lh)) {
        next.push_back(std::move(pr));
      }
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < hi; ++g) {
      if (elems_[g].active && lh.divides(elems_[g].poly.leading_exp())) {
        elems_[g].active = false;
      }
    }
  }

  void process(const Pair& pr) {
    const auto& a = elems_[pr.i];
    const auto& b = elems_[pr.j];
    const MultiIndex sa = pr.lcm - a.poly.leading_exp();
    const MultiIndex sb = pr.lcm - b.poly.leading_exp();
    const std::uint32_t minus_one = ring_->p() - 1;
    Polynomial s = a.poly.mul_term(sa, 1).add_scaled(b.poly, minus_one, sb);
    Rep rep;
    rep_add_scaled(rep, a.rep, 1, sa, ring_);
    rep_add_scaled(rep, b.rep, minus_one, sb, ring_);
    Polynomial h = reduce(s, rep);
    if (!h.is_zero()) insert(std::move(h), std::move(rep));
  }

  RingPtr ring_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      MonomialOrder order) {
  const RingPtr ring = with_order(f.ring(), order);
  const auto& field = ring->field;
  std::vector<Polynomial> divs;
  divs.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) throw Error(ErrorKind::ZeroInput, "division by the zero polynomial");
    if (!d.ring()->compatible(*ring)) {
      throw Error(ErrorKind::ContextMismatch, "divisor from a different ring");
    }
    divs.push_back(d.in_order(order));
  }

  std::vector<std::vector<Term>> quot(divs.size());
  std::vector<Term> rem;
  Polynomial h = f.in_order(order);
  const MultiIndex zero(ring->nvars);
  while (!h.is_zero()) {
    const Term lt = h.leading_term();
    bool reduced = false;
    for (std::size_t k = 0; k < divs.size(); ++k) {
      const Term& dl = divs[k].leading_term();
      if (!dl.exp.divides(lt.exp)) continue;
      std::uint32_t c = field.mul(lt.coeff, field.inv(dl.coeff));
      MultiIndex shift = lt.exp - dl.exp;
      h = h.add_scaled(divs[k], field.neg(c), shift);
      quot[k].push_back({std::move(shift), c});
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      h = h.add_scaled(Polynomial::monomial(ring, lt.exp, 1), field.neg(lt.coeff), zero);
    }
  }

  DivisionResult out{Polynomial::from_terms(ring, std::move(rem)), {}};
  out.quotients.reserve(divs.size());
  for (auto& q : quot) out.quotients.push_back(Polynomial::from_terms(ring, std::move(q)));
  return out;
}

Polynomial spoly(const Polynomial& a, const Polynomial& b) {
  const auto& field = a.field();
  MultiIndex l = MultiIndex::lcm(a.leading_exp(), b.leading_exp());
  Polynomial left = a.mul_term(l - a.leading_exp(), field.inv(a.leading_coeff()));
  return left.add_scaled(b, field.neg(field.inv(b.leading_coeff())), l - b.leading_exp());
}

GroebnerBasis::GroebnerBasis(Ideal generators, std::vector<Polynomial> basis,
                             std::vector<std::vector<Polynomial>> transform)
    : gens_(std::move(generators)),
      basis_(std::move(basis)),
      transform_(std::move(transform)) {}

bool GroebnerBasis::is_unit() const noexcept {
  return basis_.size() == 1 && basis_[0].is_one();
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  return divide(f, basis_, order()).remainder;
}

std::optional<std::vector<Polynomial>> GroebnerBasis::cofactors(const Polynomial& f) const {
  auto div = divide(f, basis_, order());
  if (!div.remainder.is_zero()) return std::nullopt;
  const auto& ring = gens_.ring();
  std::vector<Polynomial> h(gens_.size(), Polynomial(ring));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (div.quotients[i].is_zero()) continue;
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      if (transform_[i][j].is_zero()) continue;
      h[j] += div.quotients[i] * transform_[i][j];
    }
  }
  if (!(combine(h, gens_.generators()) == f)) {
    throw Error(ErrorKind::InternalError, "cofactors do not re-expand to the input");
  }
  return h;
}

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order) {
  Ideal gens = ideal.in_order(order);
  if (gens.empty()) {
    throw Error(ErrorKind::ZeroInput, "Groebner basis of the zero ideal");
  }
  const auto& ring = gens.ring();
  Buchberger bb(gens);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    bb.add_generator(j, gens.generators()[j]);
    if (bb.has_unit()) break;
  }
  auto elems = bb.finish();

  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> transform;
  for (auto& e : elems) {
    std::vector<Polynomial> row(gens.size(), Polynomial(ring));
    for (auto& [j, poly] : e.rep) row[j] = std::move(poly);
    basis.push_back(std::move(e.poly));
    transform.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!(combine(transform[i], gens.generators()) == basis[i])) {
      throw Error(ErrorKind::InternalError, "basis transform does not re-expand");
    }
  }
  return GroebnerBasis(std::move(gens), std::move(basis), std::move(transform));
}

std::optional<std::vector<Polynomial>> membership(const Polynomial& f, const Ideal& ideal,
                                                  MonomialOrder order) {
  return buchberger(ideal, order).cofactors(f);
}

bool ideal_equal(const Ideal& a, const Ideal& b, MonomialOrder order) {
  const auto ga = buchberger(a, order);
  const auto gb = buchberger(b, order);
  return ga.basis() == gb.basis();
}

bool ideal_contains(const Ideal& big, const Ideal& small, MonomialOrder order) {
  const auto gb = buchberger(big, order);
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Polynomial& g) { return gb.contains(g); });
}

Polynomial combine(std::span<const Polynomial> cofactors,
                   std::span<const Polynomial> generators) {
  if (cofactors.size() != generators.size()) {
    throw Error(ErrorKind::ContextMismatch, "cofactor count does not match generators");
  }
  if (generators.empty()) throw Error(ErrorKind::ZeroInput, "no generators");
  Polynomial sum(generators[0].ring());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (!cofactors[j].is_zero()) sum += cofactors[j] * generators[j];
  }
  return sum;
}

}  // namespace frobgen
