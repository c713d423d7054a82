#include "frobgen/frobdecomp.hpp"

#include <algorithm>
#include <map>

#include "frobgen/error.hpp"

namespace frobgen {

const Polynomial* PnDecomposition::find(const MultiIndex& alpha) const {
  for (const auto& part : parts) {
    if (part.alpha == alpha) return &part.root;
  }
  return nullptr;
}

PnDecomposition decompose(const Polynomial& f, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "decomposition level must be >= 1");
  const std::uint64_t q = checked_pow(f.p(), n);
  const std::size_t d = f.nvars();

  std::map<MultiIndex, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    MultiIndex quot(d), rem(d);
    for (std::size_t i = 0; i < d; ++i) {
      quot[i] = static_cast<MultiIndex::value_type>(t.exp[i] / q);
      rem[i] = static_cast<MultiIndex::value_type>(t.exp[i] % q);
    }
    buckets[rem].push_back({std::move(quot), t.coeff});
  }

  PnDecomposition dec{f.ring(), n, {}};
  dec.parts.reserve(buckets.size());
  for (auto& [alpha, terms] : buckets) {
    dec.parts.push_back({alpha, Polynomial::from_terms(f.ring(), std::move(terms))});
  }
  const auto order = f.ring()->order;
  std::sort(dec.parts.begin(), dec.parts.end(), [order](const auto& a, const auto& b) {
    return compare(order, a.alpha, b.alpha) < 0;
  });
  return dec;
}

Polynomial reconstruct(const PnDecomposition& dec) {
  Polynomial f(dec.ring);
  for (const auto& part : dec.parts) {
    f = f.add_scaled(frobenius(part.root, dec.n), 1, part.alpha);
  }
  return f;
}

Ideal ideal_I(const Polynomial& f, unsigned n) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "ideal of the zero polynomial");
  Ideal I(f.ring());
  for (auto& part : decompose(f, n).parts) I.add(part.root);
  return I;
}

Ideal ideal_J(const Polynomial& f, unsigned n) {
  return ideal_I(f, n).frobenius_power(n);
}

}  // namespace frobgen
