#include "frobgen/json_io.hpp"

#include <limits>

#include "frobgen/error.hpp"

namespace frobgen::json_io {

namespace {

Json exponents(const MultiIndex& m) {
  Json arr = Json::array();
  for (auto v : m) arr.push_back(v);
  return arr;
}

MultiIndex read_exponents(const Json& j, std::size_t d) {
  if (!j.is_array() || j.size() != d) {
    throw Error(ErrorKind::InvalidInput, "exponent vector must have length " + std::to_string(d));
  }
  MultiIndex m(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto v = j[i].get<std::int64_t>();
    if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorKind::InvalidInput, "exponent out of range");
    }
    m[i] = static_cast<MultiIndex::value_type>(v);
  }
  return m;
}

std::uint32_t read_coeff(const Json& j, std::uint32_t p) {
  const auto c = j.get<std::int64_t>();
  if (c < 1 || c >= static_cast<std::int64_t>(p)) {
    throw Error(ErrorKind::InvalidInput, "coefficient must lie in [1, p)");
  }
  return static_cast<std::uint32_t>(c);
}

void check_ring(const Json& j, const RingPtr& ring) {
  if (j.at("p").get<std::int64_t>() != ring->p() ||
      j.at("d").get<std::int64_t>() != static_cast<std::int64_t>(ring->nvars)) {
    throw Error(ErrorKind::ContextMismatch, "JSON data is over a different ring");
  }
}

// nlohmann errors surface as InvalidInput.
template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    terms.push_back(Json{{"e", exponents(t.exp)}, {"c", t.coeff}});
  }
  return Json{{"p", f.p()}, {"d", f.nvars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j, MonomialOrder order) {
  return guarded([&] {
    const auto p = j.at("p").get<std::int64_t>();
    const auto d = j.at("d").get<std::int64_t>();
    if (p < 2 || p > std::numeric_limits<std::uint32_t>::max() || d < 1) {
      throw Error(ErrorKind::InvalidInput, "bad ring parameters");
    }
    return polynomial_from_json(
        j, make_ring(static_cast<std::uint32_t>(p), static_cast<std::size_t>(d), order));
  });
}

Polynomial polynomial_from_json(const Json& j, const RingPtr& ring) {
  return guarded([&] {
    check_ring(j, ring);
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      terms.push_back({read_exponents(t.at("e"), ring->nvars), read_coeff(t.at("c"), ring->p())});
    }
    std::size_t n = terms.size();
    Polynomial f = Polynomial::from_terms(ring, std::move(terms));
    if (f.size() != n) throw Error(ErrorKind::InvalidInput, "repeated exponent in polynomial");
    return f;
  });
}

Json to_json(const PnDecomposition& dec) {
  Json parts = Json::array();
  for (const auto& part : dec.parts) {
    parts.push_back(Json{{"alpha", exponents(part.alpha)}, {"root", to_json(part.root)}});
  }
  return Json{{"n", dec.n}, {"parts", std::move(parts)}};
}

Json to_json(const ChainResult& chain) {
  Json levels = Json::array();
  for (const auto& level : chain.levels) {
    Json gens = Json::array();
    for (const auto& g : level.ideal.generators()) gens.push_back(to_json(g));
    levels.push_back(Json{{"n", level.n}, {"generators", std::move(gens)}, {"we_dim", level.we_dim}});
  }
  return Json{{"s", chain.s}, {"levels", std::move(levels)}};
}

Json to_json(const DiffOp& q) {
  Json terms = Json::array();
  for (const auto& t : q.terms()) {
    terms.push_back(Json{{"x", exponents(t.x)}, {"d", exponents(t.d)}, {"c", t.c}});
  }
  return Json{{"p", q.ring()->p()}, {"d", q.ring()->nvars}, {"terms", std::move(terms)}};
}

DiffOp diffop_from_json(const Json& j, const RingPtr& ring) {
  return guarded([&] {
    check_ring(j, ring);
    std::vector<OpTerm> terms;
    for (const auto& t : j.at("terms")) {
      terms.push_back({read_exponents(t.at("x"), ring->nvars), read_exponents(t.at("d"), ring->nvars),
                       read_coeff(t.at("c"), ring->p())});
    }
    return DiffOp::from_terms(ring, terms);
  });
}

Json to_json(const FactoredOp& q) {
  Json comps = Json::array();
  for (const auto& c : q.components()) {
    Json item;
    if (c.alpha) item["alpha"] = exponents(*c.alpha);
    item["h"] = to_json(c.h);
    item["q"] = to_json(c.q);
    comps.push_back(std::move(item));
  }
  return Json{{"factored", std::move(comps)}};
}

FactoredOp operator_from_json(const Json& j, const RingPtr& ring) {
  return guarded([&] {
    if (j.contains("operator")) return operator_from_json(j.at("operator"), ring);
    FactoredOp op(ring);
    if (!j.contains("factored")) {
      op.add(std::nullopt, Polynomial::constant(ring, 1), diffop_from_json(j, ring));
      return op;
    }
    for (const auto& c : j.at("factored")) {
      std::optional<MultiIndex> alpha;
      if (c.contains("alpha")) alpha = read_exponents(c.at("alpha"), ring->nvars);
      op.add(std::move(alpha), polynomial_from_json(c.at("h"), ring), diffop_from_json(c.at("q"), ring));
    }
    return op;
  });
}

Json to_json(const std::vector<CheckResult>& transcript) {
  Json arr = Json::array();
  for (const auto& c : transcript) arr.push_back(Json{{"check", c.check}, {"ok", c.ok}});
  return arr;
}

Json to_json(const GenerationCertificate& cert, bool expand_operator) {
  Json stable = Json::array();
  for (const auto& g : cert.stable_ideal) stable.push_back(to_json(g));
  Json cofactors = Json::array();
  for (const auto& c : cert.cofactors) {
    cofactors.push_back(Json{{"alpha", exponents(c.alpha)}, {"h", to_json(c.h)}});
  }
  return Json{{"p", cert.f.p()},
              {"d", cert.f.nvars()},
              {"f", to_json(cert.f)},
              {"s", cert.s},
              {"stable_ideal", std::move(stable)},
              {"cofactors", std::move(cofactors)},
              {"operator", expand_operator ? to_json(cert.op.expand()) : to_json(cert.op)},
              {"verified", cert.verified},
              {"transcript", to_json(cert.transcript)}};
}

GenerationCertificate certificate_from_json(const Json& j, MonomialOrder order) {
  return guarded([&] {
    Polynomial f = polynomial_from_json(j.at("f"), order);
    const RingPtr& ring = f.ring();
    const auto s = j.at("s").get<std::int64_t>();
    if (s < 0 || s > 64) throw Error(ErrorKind::InvalidInput, "bad level s");
    GenerationCertificate cert{f, static_cast<unsigned>(s), {}, {}, FactoredOp(ring), false, {}};
    for (const auto& g : j.at("stable_ideal")) cert.stable_ideal.push_back(polynomial_from_json(g, ring));
    for (const auto& c : j.at("cofactors")) {
      cert.cofactors.push_back(
          {read_exponents(c.at("alpha"), ring->nvars), polynomial_from_json(c.at("h"), ring)});
    }
    cert.op = operator_from_json(j.at("operator"), ring);
    return cert;
  });
}

Json to_json(const LocalizationElement& u) {
  return Json{{"f", to_json(u.ambient())}, {"num", to_json(u.numerator())}, {"denom_level", u.level()}};
}

}  // namespace frobgen::json_io
