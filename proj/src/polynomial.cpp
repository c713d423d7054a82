#include "frobgen/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>
#include <utility>

#include "frobgen/error.hpp"

namespace frobgen {

std::strong_ordering compare(MonomialOrder order, const MultiIndex& a,
                             const MultiIndex& b) noexcept {
  const std::size_t n = a.size();
  if (order == MonomialOrder::lex) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::string_view to_string(MonomialOrder order) noexcept {
  return order == MonomialOrder::lex ? "lex" : "grevlex";
}

MonomialOrder parse_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::grevlex;
  if (name == "lex") return MonomialOrder::lex;
  throw Error(ErrorKind::InvalidInput,
              "unknown monomial order '" + std::string(name) + "'");
}

RingPtr make_ring(std::uint32_t p, std::size_t nvars, MonomialOrder order) {
  if (nvars == 0) throw Error(ErrorKind::InvalidInput, "need at least one variable");
  return std::make_shared<const Ring>(Ring{PrimeField(p), nvars, order});
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order == order) return ring;
  return std::make_shared<const Ring>(Ring{ring->field, ring->nvars, order});
}

namespace {

struct Descending {
  MonomialOrder order;
  bool operator()(const Term& a, const Term& b) const noexcept {
    return compare(order, a.exp, b.exp) > 0;
  }
};

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial r(std::move(ring));
  std::uint32_t v = r.field().reduce(c);
  if (v != 0) r.terms_.push_back({MultiIndex(r.nvars()), v});
  return r;
}

Polynomial Polynomial::monomial(RingPtr ring, MultiIndex exp, std::uint32_t coeff) {
  Polynomial r(std::move(ring));
  if (exp.size() != r.nvars()) {
    throw Error(ErrorKind::ContextMismatch, "exponent vector has wrong length");
  }
  coeff %= r.p();
  if (coeff != 0) r.terms_.push_back({std::move(exp), coeff});
  return r;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  MultiIndex e(ring->nvars);
  e[index] = 1;
  return monomial(std::move(ring), std::move(e), 1);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial r(std::move(ring));
  for (auto& t : terms) {
    if (t.exp.size() != r.nvars()) {
      throw Error(ErrorKind::ContextMismatch, "exponent vector has wrong length");
    }
    t.coeff %= r.p();
  }
  std::sort(terms.begin(), terms.end(), Descending{r.ring_->order});
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().exp == t.exp) {
      r.terms_.back().coeff = r.field().add(r.terms_.back().coeff, t.coeff);
      if (r.terms_.back().coeff == 0) r.terms_.pop_back();
    } else if (t.coeff != 0) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

bool Polynomial::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].exp.is_zero();
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) {
    throw Error(ErrorKind::ZeroInput, "leading term of the zero polynomial");
  }
  return terms_.front();
}

std::uint32_t Polynomial::coeff(const MultiIndex& exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{exp, 0},
                             Descending{ring_->order});
  return it != terms_.end() && it->exp == exp ? it->coeff : 0;
}

std::int64_t Polynomial::degree() const noexcept {
  std::int64_t d = -1;
  for (const auto& t : terms_) {
    d = std::max<std::int64_t>(d, static_cast<std::int64_t>(t.exp.total()));
  }
  return d;
}

MultiIndex Polynomial::max_exponents() const {
  MultiIndex m(nvars());
  for (const auto& t : terms_) m = MultiIndex::lcm(m, t.exp);
  return m;
}

void Polynomial::check_context(const Polynomial& o) const {
  if (ring_ != o.ring_ && !ring_->compatible(*o.ring_)) {
    throw Error(ErrorKind::ContextMismatch,
                "polynomials live in different rings");
  }
}

Polynomial Polynomial::add_scaled(const Polynomial& g, std::uint32_t c,
                                  const MultiIndex& shift) const {
  check_context(g);
  if (g.ring_->order != ring_->order) return add_scaled(g.in_order(ring_->order), c, shift);
  c %= p();
  if (c == 0 || g.is_zero()) return *this;
  const auto& f = field();
  const bool no_shift = shift.is_zero();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      r.terms_.push_back(*a++);
      continue;
    }
    MultiIndex be = no_shift ? b->exp : b->exp + shift;
    std::uint32_t bc = f.mul(b->coeff, c);
    auto cmp = a == terms_.end() ? std::strong_ordering::less
                                 : compare(ring_->order, a->exp, be);
    if (cmp > 0) {
      r.terms_.push_back(*a++);
    } else if (cmp < 0) {
      r.terms_.push_back({std::move(be), bc});
      ++b;
    } else {
      std::uint32_t s = f.add(a->coeff, bc);
      if (s != 0) r.terms_.push_back({std::move(be), s});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  return add_scaled(o, 1, MultiIndex(nvars()));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return add_scaled(o, p() - 1, MultiIndex(nvars()));
}

Polynomial Polynomial::operator-() const { return scaled(p() - 1); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
  c %= p();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::mul_term(const MultiIndex& shift, std::uint32_t c) const {
  c %= p();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    r.terms_.push_back({t.exp + shift, field().mul(t.coeff, c)});
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_context(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.size() == 1) return mul_term(o.terms_[0].exp, o.terms_[0].coeff);
  if (size() == 1) return o.mul_term(terms_[0].exp, terms_[0].coeff);
  const std::uint64_t p64 = p();
  std::unordered_map<MultiIndex, std::uint64_t, MultiIndexHash> acc;
  acc.reserve(terms_.size() * o.terms_.size() / 2 + 16);
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto& slot = acc[a.exp + b.exp];
      slot = (slot + std::uint64_t{a.coeff} * b.coeff) % p64;
    }
  }
  Polynomial r(ring_);
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) r.terms_.push_back({e, static_cast<std::uint32_t>(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), Descending{ring_->order});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(leading_coeff()));
}

Polynomial Polynomial::in_order(MonomialOrder order) const {
  if (order == ring_->order) return *this;
  Polynomial r(with_order(ring_, order));
  r.terms_ = terms_;
  std::sort(r.terms_.begin(), r.terms_.end(), Descending{order});
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->compatible(*b.ring_)) return false;
  if (a.size() != b.size()) return false;
  if (a.ring_->order == b.ring_->order) return a.terms_ == b.terms_;
  return a.terms_ == b.in_order(a.ring_->order).terms_;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    r *= p;
    if (r > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorKind::ResourceLimit, "p^n exceeds 32 bits");
    }
  }
  return r;
}

Polynomial pow_binary(const Polynomial& f, std::uint64_t m) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (m) {
    if (m & 1) result *= base;
    m >>= 1;
    if (m) base *= base;
  }
  return result;
}

Polynomial pow(const Polynomial& f, std::uint64_t m) {
  const std::uint64_t p = f.p();
  Polynomial result = Polynomial::constant(f.ring(), 1);
  for (unsigned j = 0; m != 0; ++j, m /= p) {
    if (auto digit = m % p; digit != 0) {
      result *= frobenius(pow_binary(f, digit), j);
    }
  }
  return result;
}

Polynomial frobenius(const Polynomial& f, unsigned n) {
  if (n == 0) return f;
  const std::uint64_t q = checked_pow(f.p(), n);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.exp.scaled(q), t.coeff});
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial pn_root(const Polynomial& f, unsigned n) {
  if (n == 0) return f;
  const std::uint64_t q = checked_pow(f.p(), n);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    MultiIndex e(t.exp.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (t.exp[i] % q != 0) {
        throw Error(ErrorKind::NotAPnPower,
                    "exponent " + std::to_string(t.exp[i]) +
                        " is not divisible by " + std::to_string(q));
      }
      e[i] = static_cast<MultiIndex::value_type>(t.exp[i] / q);
    }
    terms.push_back({std::move(e), t.coeff});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty polynomial");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Term t = term();
      if (negate) t.coeff = ring_->field.neg(t.coeff);
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == s_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(pos_, std::string("unexpected '") + c + "'");
      negate = c == '-';
      ++pos_;
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // Decimal natural; reduced mod `modulus` when nonzero, else range-checked.
  std::uint64_t natural(std::uint64_t modulus) {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(s_[pos_] - '0');
      if (modulus) {
        v = (v * 10 + digit) % modulus;
      } else {
        v = v * 10 + digit;
        if (v > std::numeric_limits<std::uint32_t>::max()) {
          throw ParseError(start, "number too large");
        }
      }
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, "expected a number");
    return v;
  }

  Term term() {
    Term t{MultiIndex(ring_->nvars), 1};
    for (;;) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff = ring_->field.mul(t.coeff, static_cast<std::uint32_t>(natural(ring_->p())));
      } else if (c == 'x') {
        std::size_t at = pos_++;
        std::uint64_t idx = natural(0);
        if (idx < 1 || idx > ring_->nvars) {
          throw ParseError(at, "unknown variable x" + std::to_string(idx));
        }
        std::uint64_t e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          e = natural(0);
        }
        std::uint64_t total = t.exp[idx - 1] + e;
        if (total > std::numeric_limits<std::uint32_t>::max()) {
          throw ParseError(at, "exponent too large");
        }
        t.exp[idx - 1] = static_cast<MultiIndex::value_type>(total);
      } else {
        throw ParseError(pos_, c ? std::string("unexpected '") + c + "'"
                                 : std::string("unexpected end of input"));
      }
      skip_ws();
      if (peek() != '*') return t;
      ++pos_;
    }
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

std::string format(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'x' + std::to_string(i + 1);
      if (t.exp[i] != 1) mono += '^' + std::to_string(t.exp[i]);
    }
    if (mono.empty()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += mono;
    } else {
      out += std::to_string(t.coeff) + '*' + mono;
    }
  }
  return out;
}

}  // namespace frobgen
