// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "frobgen/error.hpp"
#include "frobgen/generation.hpp"
#include "frobgen/json_io.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace frobgen;
using namespace frobgen::testing;
using frobgen::json_io::Json;

namespace {

struct CorpusEntry {
  const char* text;
  std::size_t d;
};

constexpr CorpusEntry kCorpus[] = {
    {"x1", 1},
    {"x1*x2", 2},
    {"x1^2+x2^2", 2},
    {"x1^2+x2^3", 2},
    {"x1^3+x2^3+x3^3", 3},
    {"x1^2+x2^2+x3^2+x4^2", 4},
};
constexpr std::uint32_t kPrimes[] = {2, 3, 5};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> base_args(std::uint32_t p, std::size_t d) {
  return {"--prime", std::to_string(p), "--vars", std::to_string(d)};
}

std::vector<std::string> with(std::vector<std::string> a, std::initializer_list<std::string> more) {
  a.insert(a.end(), more);
  return a;
}

class Report {
 public:
  void line(int id, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << detail << std::endl;
    all_ok_ = all_ok_ && ok;
  }
  bool all_ok() const { return all_ok_; }

 private:
  bool all_ok_ = true;
};

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("frobgen_acceptance_" + name)).string();
}

// Criterion 1: witness + independent verify over the corpus.
void end_to_end(Report& report) {
  unsigned certified = 0, skipped = 0;
  std::string failure;
  double slowest = 0;
  for (std::uint32_t p : kPrimes) {
    for (const auto& entry : kCorpus) {
      const std::string tag = std::string(entry.text) + " p=" + std::to_string(p);
      const std::string path = temp_path("cert.json");
      const auto start = std::chrono::steady_clock::now();
      const auto w = invoke(with(base_args(p, entry.d), {"--json", "witness", "-f", entry.text, "-o", path}));
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      slowest = std::max(slowest, secs);
      if (w.code == cli::kResource && w.err.find("E_RESOURCE") != std::string::npos) {
        ++skipped;
        continue;
      }
      if (w.code != 0 || Json::parse(w.out)["verified"] != true) {
        if (failure.empty()) failure = "witness failed for " + tag + ": " + w.err;
        continue;
      }
      const auto v = invoke(with(base_args(p, entry.d), {"verify", "-c", path}));
      if (v.code != 0) {
        if (failure.empty()) failure = "verify rejected " + tag;
        continue;
      }
      // Recompute both sides of Q(f^(p^s-1)) = f^(p^s-p) from the stored file.
      std::ifstream in(path);
      const auto cert = json_io::certificate_from_json(Json::parse(in));
      const std::uint64_t ps = checked_pow(p, cert.s);
      const bool exact = apply(cert.op.expand(), pow_binary(cert.f, ps - 1)) == pow_binary(cert.f, ps - p);
      if (!exact) {
        if (failure.empty()) failure = "operator identity mismatch for " + tag;
        continue;
      }
      ++certified;
      std::remove(path.c_str());
    }
  }
  std::ostringstream msg;
  msg << "end-to-end corpus: " << certified << " certified and verified, " << skipped
      << " skipped by exponent cap, slowest " << slowest << " s";
  if (!failure.empty()) msg << "; " << failure;
  report.line(1, failure.empty() && certified + skipped == 18 && skipped <= 1, msg.str());
}

// Criterion 2: the quadric witnesses.
void quadric(Report& report) {
  struct Expect {
    std::uint32_t p;
    MultiIndex alpha;
    std::uint32_t a;
  };
  const auto oracle13 = exact_factorial(12) / (exact_factorial(3) * exact_factorial(3) * exact_factorial(3) *
                                               exact_factorial(3));
  const Expect cases[] = {
      {3, MultiIndex{2, 2, 0, 0}, static_cast<std::uint32_t>(exact_factorial(2) % 3)},
      {5, MultiIndex{2, 2, 2, 2}, static_cast<std::uint32_t>(exact_factorial(4) % 5)},
      {13, MultiIndex{6, 6, 6, 6}, static_cast<std::uint32_t>(oracle13 % 13)},
  };
  bool ok = true;
  std::ostringstream msg;
  msg << "quadric example:";
  for (const auto& c : cases) {
    const auto ring = make_ring(c.p, 4);
    const Polynomial f = parse_polynomial("x1^2+x2^2+x3^2+x4^2", ring);
    const auto w = example_quadric_witness(c.p);
    const bool alpha_ok = w.alpha == c.alpha && w.a.value() == c.a;
    const bool q_ok = w.q == DiffOp::derivation(ring, c.alpha, PrimeField(c.p).inv(c.a));
    const bool unit = apply(w.q, pow_binary(f, c.p - 1)).is_one();
    const bool loc = apply_to_localization(w.q, LocalizationElement::inverse(f)) ==
                     LocalizationElement(f, Polynomial::constant(ring, 1), 1);
    ok = ok && alpha_ok && q_ok && unit && loc;
    msg << " p=" << c.p << " a=" << w.a.value() << (alpha_ok && q_ok && unit && loc ? " ok" : " BAD") << ";";
  }
  report.line(2, ok, msg.str());
}

// Criterion 3: f = x.
void single_variable(Report& report) {
  bool ok = true;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto ring = make_ring(p, 1);
    const Polynomial x = Polynomial::variable(ring, 0);
    const auto u = apply_to_localization(DiffOp::derivation(ring, MultiIndex{p - 1}), LocalizationElement::inverse(x));
    ok = ok && u == LocalizationElement(x, Polynomial::constant(ring, 1), 1);
    const auto cert = frobenius_descent(x);
    for (const auto& c : verify_certificate(cert)) ok = ok && c.ok;
  }
  report.line(3, ok, "D_(p-1) maps 1/x to 1/x^p and the pipeline certificate verifies, p in {2,3,5,7}");
}

// Criterion 4: property suites.
void property_suites(Report& report) {
  using Suite = std::function<PropertyStats(std::uint64_t, unsigned)>;
  const std::pair<const char*, Suite> suites[] = {
      {"commutation", prop_commutation},
      {"product inclusion", prop_product_inclusion},
      {"frobenius power", prop_frobenius_power},
      {"operator ideal", prop_operator_ideal},
      {"chain descent", prop_chain_descent},
      {"chain mechanism", prop_chain_mechanism},
      {"decomposition round trip", decomposition_round_trip},
      {"freshman's dream", freshmans_dream},
  };
  bool ok = true;
  std::ostringstream msg;
  msg << "property suites:";
  std::uint64_t seed = 1000;
  for (const auto& [name, suite] : suites) {
    const auto stats = suite(seed++, 100);
    ok = ok && stats.failures == 0 && stats.cases >= 100;
    msg << " " << name << " " << stats.cases - stats.failures << "/" << stats.cases << ";";
    if (stats.failures) msg << " first failure " << stats.first_failure << ";";
  }
  report.line(4, ok, msg.str());
}

// Criterion 5: Groebner membership vs linear algebra.
void groebner(Report& report) {
  const auto stats = groebner_oracle(2000, 60);
  std::ostringstream msg;
  msg << "membership oracle agreement " << stats.cases - stats.failures << "/" << stats.cases;
  if (stats.failures) msg << "; first failure " << stats.first_failure;
  report.line(5, stats.failures == 0 && stats.cases >= 50, msg.str());
}

// Criterion 6: power and generator witnesses.
void iterated(Report& report) {
  bool ok = true;
  unsigned checked = 0;
  for (std::uint32_t p : {2u, 3u}) {
    for (const char* text : {"x1", "x1*x2", "x1^2+x2^3"}) {
      const auto ring = make_ring(p, 2);
      const Polynomial f = parse_polynomial(text, ring);
      const Polynomial one = Polynomial::constant(ring, 1);
      const auto u = LocalizationElement::inverse(f);
      ok = ok && apply_to_localization(power_witness(f, 2), u) == LocalizationElement(f, one, 2);
      ++checked;
      for (std::uint64_t k = 1; k <= std::uint64_t{p} * p; ++k) {
        ok = ok && apply_to_localization(generator_witness(f, k), u) ==
                       LocalizationElement(pow_binary(f, k), one, 0);
        ++checked;
      }
    }
  }
  report.line(6, ok, "power_witness(f,2) and generator_witness(f,k) for k <= p^2: " + std::to_string(checked) +
                         " identities checked");
}

// Criterion 7: byte-identical repeated runs.
void determinism(Report& report) {
  unsigned runs = 0;
  std::string failure;
  const std::string path = temp_path("det.json");
  for (std::uint32_t p : kPrimes) {
    for (const auto& entry : kCorpus) {
      const auto base = with(base_args(p, entry.d), {"--json"});
      std::vector<std::vector<std::string>> cmds = {
          with(base, {"decompose", "-f", entry.text, "-n", "1"}),
          with(base, {"decompose", "-f", entry.text, "-n", "2"}),
          with(base, {"chain", "-f", entry.text}),
          with(base, {"witness", "-f", entry.text}),
          with(base, {"witness", "-f", entry.text, "--expand"}),
          with(base, {"power-witness", "-f", entry.text, "-e", "1"}),
          with(base, {"gen-witness", "-f", entry.text, "-k", "2"}),
      };
      if (entry.d == 4 && p != 2) cmds.push_back(with(base, {"example-quadric"}));
      if (invoke(with(base, {"witness", "-f", entry.text, "-o", path})).code == 0) {
        cmds.push_back(with(base, {"verify", "-c", path}));
        cmds.push_back(with(base, {"apply", "--op", path, "--num", "1", "--denom-level", "0", "-f", entry.text}));
      }
      for (const auto& c : cmds) {
        const auto a = invoke(c), b = invoke(c);
        ++runs;
        if ((a.out != b.out || a.err != b.err || a.code != b.code) && failure.empty()) {
          std::string joined;
          for (const auto& s : c) joined += s + " ";
          failure = "output differs for: " + joined;
        }
      }
    }
  }
  std::remove(path.c_str());
  report.line(7, failure.empty(), std::to_string(runs) + " commands run twice, byte-identical" +
                                      (failure.empty() ? "" : "; " + failure));
}

}  // namespace

int main() {
  Report report;
  const std::pair<int, std::function<void(Report&)>> criteria[] = {
      {1, end_to_end}, {2, quadric}, {3, single_variable}, {4, property_suites},
      {5, groebner},   {6, iterated}, {7, determinism},
  };
  for (const auto& [id, run] : criteria) {
    try {
      run(report);
    } catch (const std::exception& e) {
      report.line(id, false, std::string("exception: ") + e.what());
    }
  }
  return report.all_ok() ? 0 : 1;
}
