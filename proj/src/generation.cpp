#include "frobgen/generation.hpp"

#include <algorithm>

#include "frobgen/error.hpp"
#include "frobgen/frobdecomp.hpp"
#include "frobgen/groebner.hpp"
#include "frobgen/ideal_chain.hpp"

namespace frobgen {

LocalizationElement::LocalizationElement(Polynomial f, Polynomial numerator, unsigned level)
    : f_(std::move(f)), num_(std::move(numerator)), level_(level) {
  if (f_.is_zero()) throw Error(ErrorKind::ZeroInput, "cannot invert the zero polynomial");
  if (!f_.ring()->compatible(*num_.ring())) {
    throw Error(ErrorKind::ContextMismatch, "numerator and denominator over different rings");
  }
}

LocalizationElement LocalizationElement::inverse(const Polynomial& f) {
  return inverse_power(f, 0);
}

LocalizationElement LocalizationElement::inverse_power(const Polynomial& f, unsigned t) {
  return LocalizationElement(f, Polynomial::constant(f.ring(), 1), t);
}

LocalizationElement LocalizationElement::lifted(unsigned t, const Limits& limits) const {
  if (t < level_) throw Error(ErrorKind::InvalidInput, "cannot lower the level");
  if (t == level_) return *this;
  const std::uint64_t pt = checked_pow(f_.p(), t);
  const auto deg = static_cast<std::uint64_t>(std::max<std::int64_t>(f_.degree(), 0));
  if (pt * deg > limits.exponent_cap) {
    throw Error(ErrorKind::ResourceLimit, "lifting exceeds the exponent cap");
  }
  Polynomial factor = pow(f_, pt - checked_pow(f_.p(), level_));
  if (factor.size() > limits.term_cap) {
    throw Error(ErrorKind::ResourceLimit, "lifting exceeds the term cap");
  }
  return LocalizationElement(f_, num_ * factor, t);
}

bool operator==(const LocalizationElement& u, const LocalizationElement& v) {
  if (!u.f_.ring()->compatible(*v.f_.ring())) return false;
  if (u.level_ == v.level_ && u.f_ == v.f_) return u.num_ == v.num_;
  return u.num_ * frobenius(v.f_, v.level_) == v.num_ * frobenius(u.f_, u.level_);
}

void FactoredOp::add(std::optional<MultiIndex> alpha, Polynomial h, DiffOp q) {
  if (!h.ring()->compatible(*ring_) || !q.ring()->compatible(*ring_)) {
    throw Error(ErrorKind::ContextMismatch, "component from a different ring");
  }
  comps_.push_back({std::move(alpha), std::move(h), std::move(q)});
}

Polynomial FactoredOp::apply(const Polynomial& g) const {
  Polynomial sum(g.ring());
  for (const auto& c : comps_) {
    if (c.h.is_zero()) continue;
    sum += c.h.in_order(g.ring()->order) * frobgen::apply(c.q, g);
  }
  return sum;
}

unsigned FactoredOp::level() const {
  unsigned n = 0;
  for (const auto& c : comps_) {
    if (!c.h.is_zero()) n = std::max(n, frobgen::level(c.q));
  }
  return n;
}

DiffOp FactoredOp::expand() const {
  DiffOp sum(ring_);
  for (const auto& c : comps_) sum = sum + c.q.left_multiply(c.h);
  return sum;
}

LocalizationElement apply_to_localization(const DiffOp& q, const LocalizationElement& u,
                                          const Limits& limits) {
  const auto v = u.lifted(std::max(u.level(), level(q)), limits);
  return LocalizationElement(v.ambient(), apply(q, v.numerator()), v.level());
}

LocalizationElement apply_to_localization(const FactoredOp& q, const LocalizationElement& u,
                                          const Limits& limits) {
  const auto v = u.lifted(std::max(u.level(), q.level()), limits);
  return LocalizationElement(v.ambient(), q.apply(v.numerator()), v.level());
}

namespace {

template <class Fn>
CheckResult run_check(std::string name, Fn&& fn) {
  try {
    return {std::move(name), fn()};
  } catch (const Error&) {
    return {std::move(name), false};
  }
}

void check_term_cap(const Polynomial& g, const Limits& limits) {
  if (g.size() > limits.term_cap) {
    throw Error(ErrorKind::ResourceLimit, "power of f exceeds the term cap");
  }
}

}  // namespace

std::vector<CheckResult> verify_certificate(const GenerationCertificate& cert,
                                            const Limits& limits) {
  const Polynomial& f = cert.f;
  const std::uint64_t p = f.p();
  const unsigned s = cert.s;
  std::vector<CheckResult> out;
  if (f.is_zero() || s == 0) {
    out.push_back({"well_formed", false});
    return out;
  }
  const std::uint64_t ps = checked_pow(p, s);
  const Polynomial power = pow(f, ps - 1);
  const Polynomial target = pow(f, ps - p);
  check_term_cap(power, limits);
  const PnDecomposition dec = decompose(power, s);

  out.push_back(run_check("cofactor_identity", [&] {
    Polynomial sum(f.ring());
    for (const auto& c : cert.cofactors) {
      const Polynomial* root = dec.find(c.alpha);
      if (!root) return false;
      sum += c.h * frobenius(*root, s);
    }
    return sum == target;
  }));
  out.push_back(run_check("witness_generators", [&] {
    for (const auto& c : cert.op.components()) {
      if (!c.alpha) continue;
      const Polynomial* root = dec.find(*c.alpha);
      if (!root || !(apply(c.q, power) == frobenius(*root, s))) return false;
    }
    return true;
  }));
  out.push_back(run_check("Q_on_f_power", [&] { return cert.op.apply(power) == target; }));
  out.push_back(run_check("level_bound", [&] { return cert.op.level() <= s; }));
  out.push_back(run_check("localization_action", [&] {
    return apply_to_localization(cert.op, LocalizationElement::inverse(f), limits) ==
           LocalizationElement::inverse_power(f, 1);
  }));
  out.push_back(run_check("stable_ideal", [&] {
    Ideal stable(f.ring(), cert.stable_ideal);
    if (stable.empty()) return false;
    if (f.is_constant()) return buchberger(stable).is_unit();
    if (s < 2) return false;
    return ideal_equal(stable, chain_ideal(f, s - 1, limits)) &&
           ideal_equal(stable, chain_ideal(f, s, limits));
  }));
  return out;
}

GenerationCertificate frobenius_descent(const Polynomial& f, const Limits& limits) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "1/0 is not defined");
  const RingPtr& ring = f.ring();
  GenerationCertificate cert{f, 1, {}, {}, FactoredOp(ring), false, {}};
  if (f.is_constant()) {
    cert.stable_ideal.push_back(Polynomial::constant(ring, 1));
  } else {
    ChainResult chain = stabilization(f, limits);
    cert.s = chain.s;
    cert.stable_ideal = chain.stable_ideal.generators();
  }

  const unsigned s = cert.s;
  const std::uint64_t ps = checked_pow(f.p(), s);
  const Polynomial power = pow(f, ps - 1);
  const Polynomial target = pow(f, ps - f.p());
  check_term_cap(power, limits);

  const PnDecomposition dec = decompose(power, s);
  Ideal J(ring);
  for (const auto& part : dec.parts) J.add(frobenius(part.root, s));
  const auto h = buchberger(J).cofactors(target);
  if (!h) throw Error(ErrorKind::InternalError, "f^(p^s-p) is not in J_s(f^(p^s-1))");

  std::vector<MultiIndex> wanted;
  for (std::size_t k = 0; k < dec.parts.size(); ++k) {
    if (!(*h)[k].is_zero()) {
      wanted.push_back(dec.parts[k].alpha);
      cert.cofactors.push_back({dec.parts[k].alpha, (*h)[k].in_order(ring->order)});
    }
  }
  auto witnesses = witness_generators(power, s, wanted);
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    cert.op.add(witnesses[k].alpha, cert.cofactors[k].h, std::move(witnesses[k].op));
  }

  cert.transcript = verify_certificate(cert, limits);
  cert.verified = std::all_of(cert.transcript.begin(), cert.transcript.end(),
                              [](const CheckResult& c) { return c.ok; });
  if (!cert.verified) {
    std::string failed;
    for (const auto& c : cert.transcript) {
      if (!c.ok) failed += " " + c.check;
    }
    throw Error(ErrorKind::InternalError, "certificate checks failed:" + failed);
  }
  return cert;
}

DiffOp power_witness(const Polynomial& f, unsigned e, const Limits& limits) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "1/0 is not defined");
  DiffOp result = DiffOp::identity(f.ring());
  for (unsigned j = 1; j <= e; ++j) {
    const auto cert = frobenius_descent(frobenius(f, j - 1), limits);
    result = compose(cert.op.expand(), result);
  }
  if (!(apply_to_localization(result, LocalizationElement::inverse(f), limits) ==
        LocalizationElement::inverse_power(f, e))) {
    throw Error(ErrorKind::InternalError, "power witness does not reach 1/f^(p^e)");
  }
  return result;
}

DiffOp generator_witness(const Polynomial& f, std::uint64_t k, const Limits& limits) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "1/0 is not defined");
  if (k == 0) throw Error(ErrorKind::InvalidInput, "k must be >= 1");
  unsigned e = 0;
  std::uint64_t pe = 1;
  while (pe < k) {
    pe = checked_pow(f.p(), ++e);
  }
  const Polynomial multiplier = pow(f, pe - k);
  DiffOp op = power_witness(f, e, limits).left_multiply(multiplier);
  if (!(apply_to_localization(op, LocalizationElement::inverse(f), limits) ==
        LocalizationElement(f, multiplier, e))) {
    throw Error(ErrorKind::InternalError, "generator witness does not reach 1/f^k");
  }
  return op;
}

QuadricWitness example_quadric_witness(std::uint32_t p) {
  const RingPtr ring = make_ring(p, 4);
  if (p == 2) {
    throw Error(ErrorKind::UnsupportedPrime, "the quadric example needs an odd prime");
  }
  // Exponents of the x_i^2 in the chosen term of f^(p-1).
  std::vector<std::uint32_t> k;
  if ((p - 1) % 4 == 0) {
    k.assign(4, (p - 1) / 4);
  } else {
    k = {(p + 1) / 4, (p + 1) / 4, (p - 3) / 4, (p - 3) / 4};
  }
  MultiIndex alpha(4);
  for (std::size_t i = 0; i < 4; ++i) alpha[i] = 2 * k[i];

  // Multinomial (p-1)! / prod k_i! as a product of binomials.
  std::uint64_t rest = p - 1;
  Fp a = ring->field(1);
  for (std::size_t i = 0; i < 4; ++i) {
    a = a * binom_mod_p(rest, k[i], ring->field);
    rest -= k[i];
  }

  Polynomial f(ring);
  for (std::size_t i = 0; i < 4; ++i) {
    MultiIndex e(4);
    e[i] = 2;
    f += Polynomial::monomial(ring, e, 1);
  }
  const Polynomial power = pow(f, p - 1);
  if (power.coeff(alpha) != a.value()) {
    throw Error(ErrorKind::InternalError, "quadric coefficient mismatch");
  }
  DiffOp q = DiffOp::derivation(ring, alpha, a.inv().value());
  if (!apply(q, power).is_one()) {
    throw Error(ErrorKind::InternalError, "D_alpha(f^(p-1)) / a is not 1");
  }
  if (!(apply_to_localization(q, LocalizationElement::inverse(f)) ==
        LocalizationElement::inverse_power(f, 1))) {
    throw Error(ErrorKind::InternalError, "quadric operator does not send 1/f to 1/f^p");
  }
  return {alpha, a, std::move(q)};
}

}  // namespace frobgen
