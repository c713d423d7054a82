#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobgen/diffop.hpp"
#include "frobgen/fp.hpp"
#include "frobgen/limits.hpp"
#include "frobgen/polynomial.hpp"

namespace frobgen {

/// num / f^(p^t), an element of R[1/f].
class LocalizationElement {
 public:
  /// Throws ZeroInput when f is zero.
  LocalizationElement(Polynomial f, Polynomial numerator, unsigned level);

  /// 1/f, i.e. 1 / f^(p^0).
  static LocalizationElement inverse(const Polynomial& f);
  /// 1/f^(p^t).
  static LocalizationElement inverse_power(const Polynomial& f, unsigned t);

  const Polynomial& ambient() const noexcept { return f_; }
  const Polynomial& numerator() const noexcept { return num_; }
  unsigned level() const noexcept { return level_; }

  /// Same element written over f^(p^t), t >= level().
  LocalizationElement lifted(unsigned t, const Limits& limits = {}) const;

  /// Cross-multiplication: g_u f_v^(p^t_v) == g_v f_u^(p^t_u).
  friend bool operator==(const LocalizationElement& u, const LocalizationElement& v);

 private:
  Polynomial f_;
  Polynomial num_;
  unsigned level_;
};

/// sum_i (h_i *) o Q_i, kept unexpanded. `alpha` records which piece of the
/// decomposition Q_i reproduces, when known.
class FactoredOp {
 public:
  struct Component {
    std::optional<MultiIndex> alpha;
    Polynomial h;
    DiffOp q;
  };

  explicit FactoredOp(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Component>& components() const noexcept { return comps_; }
  void add(std::optional<MultiIndex> alpha, Polynomial h, DiffOp q);

  Polynomial apply(const Polynomial& g) const;
  unsigned level() const;
  /// Single normal-form operator sum_i h_i Q_i.
  DiffOp expand() const;

 private:
  RingPtr ring_;
  std::vector<Component> comps_;
};

/// Lifts u to a level t >= level(Q) and applies Q to the numerator; valid
/// because an operator of level <= t commutes with f^(p^t).
LocalizationElement apply_to_localization(const DiffOp& q, const LocalizationElement& u,
                                          const Limits& limits = {});
LocalizationElement apply_to_localization(const FactoredOp& q, const LocalizationElement& u,
                                          const Limits& limits = {});

struct CheckResult {
  std::string check;
  bool ok;
};

struct CofactorEntry {
  MultiIndex alpha;
  Polynomial h;
};

/// Everything needed to re-check Q(f^(p^s - 1)) == f^(p^s - p).
struct GenerationCertificate {
  Polynomial f;
  unsigned s = 0;
  std::vector<Polynomial> stable_ideal;
  /// Nonzero cofactors only: f^(p^s - p) = sum h_alpha frobenius(root_alpha, s).
  std::vector<CofactorEntry> cofactors;
  FactoredOp op;
  bool verified = false;
  std::vector<CheckResult> transcript;
};

/// Builds Q with Q(1/f) = 1/f^p. Constant f gives the identity (s = 1).
/// Throws ZeroInput, LevelExceeded/ResourceLimit from the chain, and
/// InternalError if any certificate check fails.
GenerationCertificate frobenius_descent(const Polynomial& f, const Limits& limits = {});

/// Re-runs every certificate check from the stored data, ignoring any
/// stored outcome. The level s is taken as given, not searched for.
std::vector<CheckResult> verify_certificate(const GenerationCertificate& cert,
                                            const Limits& limits = {});

/// P_e with P_e(1/f) = 1/f^(p^e): the composite Q_e o ... o Q_1 where Q_j
/// is the descent operator of f^(p^(j-1)). e = 0 gives the identity.
DiffOp power_witness(const Polynomial& f, unsigned e, const Limits& limits = {});

/// Operator sending 1/f to 1/f^k (k >= 1): (f^(p^e - k) *) o P_e for the
/// least e with p^e >= k.
DiffOp generator_witness(const Polynomial& f, std::uint64_t k, const Limits& limits = {});

struct QuadricWitness {
  MultiIndex alpha;
  Fp a;
  DiffOp q;
};

/// f = x1^2 + x2^2 + x3^2 + x4^2 over F_p, p odd: the term a x^alpha of
/// f^(p-1) with alpha < p in every coordinate and Q = a^-1 D_alpha, so that
/// Q(f^(p-1)) = 1 and Q(1/f) = 1/f^p. Throws UnsupportedPrime for p = 2.
QuadricWitness example_quadric_witness(std::uint32_t p);

}  // namespace frobgen
