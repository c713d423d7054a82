#pragma once

#include "json.hpp"

#include "frobgen/diffop.hpp"
#include "frobgen/frobdecomp.hpp"
#include "frobgen/generation.hpp"
#include "frobgen/ideal_chain.hpp"
#include "frobgen/polynomial.hpp"

namespace frobgen::json_io {

using Json = nlohmann::ordered_json;

// Polynomial: {"p", "d", "terms": [{"e": [...], "c": int}, ...]}
Json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j, MonomialOrder order = MonomialOrder::grevlex);
/// Rejects data whose p or d differs from the ring's.
Polynomial polynomial_from_json(const Json& j, const RingPtr& ring);

// {"n", "parts": [{"alpha": [...], "root": <poly>}, ...]}
Json to_json(const PnDecomposition& dec);

// {"s", "levels": [{"n", "generators": [<poly>...], "we_dim"}, ...]}
Json to_json(const ChainResult& chain);

// {"p", "d", "terms": [{"x": [...], "d": [...], "c": int}, ...]}
Json to_json(const DiffOp& q);
DiffOp diffop_from_json(const Json& j, const RingPtr& ring);

// {"factored": [{"alpha": [...], "h": <poly>, "q": <op>}, ...]}
Json to_json(const FactoredOp& q);
/// Accepts a factored form, a plain operator, or a certificate (its
/// "operator" field). A plain operator becomes one component with h = 1.
FactoredOp operator_from_json(const Json& j, const RingPtr& ring);

Json to_json(const GenerationCertificate& cert, bool expand_operator = false);
/// Reads the data fields only; "verified" and "transcript" are ignored.
GenerationCertificate certificate_from_json(const Json& j,
                                            MonomialOrder order = MonomialOrder::grevlex);

// {"f": <poly>, "num": <poly>, "denom_level": t}
Json to_json(const LocalizationElement& u);

Json to_json(const std::vector<CheckResult>& transcript);

}  // namespace frobgen::json_io
