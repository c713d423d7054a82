#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "frobgen/multi_index.hpp"
#include "frobgen/polynomial.hpp"

namespace frobgen {

/// One term c * x^alpha * D_beta.
struct OpTerm {
  MultiIndex x;
  MultiIndex d;
  std::uint32_t c;

  friend bool operator==(const OpTerm&, const OpTerm&) = default;
};

/// Divided-power differential operator in right normal form,
///   Q = sum_beta c_beta(x) * D_beta,
/// where D_beta = D_{beta_1,1} ... D_{beta_d,d} and D_{t,i}(x_i^s) =
/// C(s, t) x_i^(s-t). Stored as beta -> coefficient polynomial, so every
/// multiplication stands left of every derivation by construction.
class DiffOp {
 public:
  explicit DiffOp(RingPtr ring);

  static DiffOp identity(RingPtr ring);
  /// c * D_beta.
  static DiffOp derivation(RingPtr ring, MultiIndex beta, std::uint32_t c = 1);
  /// Multiplication by g.
  static DiffOp multiplication(const Polynomial& g);
  static DiffOp from_terms(RingPtr ring, const std::vector<OpTerm>& terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::map<MultiIndex, Polynomial>& components() const noexcept { return comps_; }
  /// Terms ordered by beta (lexicographically), then x^alpha as in the
  /// coefficient polynomial.
  std::vector<OpTerm> terms() const;
  std::size_t num_terms() const noexcept;
  bool is_zero() const noexcept { return comps_.empty(); }

  /// Adds coeff * D_beta to this operator.
  void add_component(const MultiIndex& beta, const Polynomial& coeff);

  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator-(const DiffOp& o) const;
  DiffOp scaled(std::uint32_t c) const;
  /// (h *) o Q, i.e. every coefficient multiplied by h.
  DiffOp left_multiply(const Polynomial& h) const;

  friend bool operator==(const DiffOp& a, const DiffOp& b);

 private:
  void check_context(const DiffOp& o) const;

  RingPtr ring_;
  std::map<MultiIndex, Polynomial> comps_;
};

/// D_beta(g).
Polynomial apply_derivation(const MultiIndex& beta, const Polynomial& g);
Polynomial apply(const DiffOp& q, const Polynomial& g);

/// Q2 o Q1 rewritten into right normal form with the divided-power Leibniz
/// rule D_t (u v) = sum_{j<=t} D_j(u) D_{t-j}(v) and
/// D_a o D_b = C(a+b, a) D_{a+b}.
DiffOp compose(const DiffOp& q2, const DiffOp& q1);

/// Smallest n with every beta componentwise below p^n.
unsigned level(const DiffOp& q);

struct WitnessOperator {
  MultiIndex alpha;
  DiffOp op;
};

/// For each alpha in the support of decompose(f, n), an operator Q_alpha of
/// level <= n with Q_alpha(f) = frobenius(root_alpha, n). Every result is
/// checked by direct application (InternalError on mismatch).
std::vector<WitnessOperator> witness_generators(const Polynomial& f, unsigned n);
/// Same, restricted to the requested alphas (each must be in the support).
std::vector<WitnessOperator> witness_generators(const Polynomial& f, unsigned n,
                                                std::span<const MultiIndex> wanted);

struct ProbeOptions {
  /// Probe every monomial up to this total degree; 0 means p^n.
  unsigned max_degree = 0;
  unsigned random_samples = 16;
  std::uint64_t seed = 0x5eed;
};

/// Checks Q(h g) == h Q(g) over a battery of probes g. Requires h to be a
/// p^n-th power (all exponents divisible by p^n) and level(Q) <= n, else
/// InvalidInput.
bool commutes_with_pn(const DiffOp& q, const Polynomial& h, unsigned n,
                      const ProbeOptions& probes = {});

}  // namespace frobgen
