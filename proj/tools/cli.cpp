#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "frobgen/error.hpp"
#include "frobgen/frobdecomp.hpp"
#include "frobgen/generation.hpp"
#include "frobgen/ideal_chain.hpp"
#include "frobgen/json_io.hpp"
#include "frobgen/polynomial.hpp"

namespace frobgen::cli {

namespace {

using json_io::Json;
using json_io::to_json;

struct Config {
  std::uint32_t prime = 0;
  std::size_t vars = 0;
  std::string order = "grevlex";
  bool json = false;
  Limits limits;

  std::string poly;
  unsigned level = 1;
  bool expand = false;
  std::string output_path;
  unsigned e = 1;
  std::uint64_t k = 1;
  std::string cert_path;
  std::string op_path;
  std::string numerator;
  unsigned denom_level = 0;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ResourceLimit:
    case ErrorKind::LevelExceeded:
      return kResource;
    case ErrorKind::InternalError:
      return kInternal;
    case ErrorKind::VerificationFailed:
      return kVerificationFailed;
    default:
      return kUsage;
  }
}

std::string tuple_text(const MultiIndex& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + ")";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

class Runner {
 public:
  Runner(const Config& cfg, std::ostream& out, std::ostream& err)
      : cfg_(cfg), out_(out), err_(err) {}

  RingPtr ring() const {
    if (cfg_.prime == 0) throw Error(ErrorKind::InvalidInput, "--prime is required");
    if (cfg_.vars == 0) throw Error(ErrorKind::InvalidInput, "--vars is required");
    return make_ring(cfg_.prime, cfg_.vars, parse_order(cfg_.order));
  }

  Polynomial input(const std::string& text) const { return parse_polynomial(text, ring()); }

  int decompose_cmd() {
    const auto dec = decompose(input(cfg_.poly), cfg_.level);
    if (cfg_.json) {
      emit(out_, to_json(dec));
    } else {
      out_ << "p^n-decomposition, n = " << dec.n << '\n';
      for (const auto& part : dec.parts) {
        out_ << "  alpha " << tuple_text(part.alpha) << ": " << format(part.root) << '\n';
      }
    }
    return kOk;
  }

  void print_chain(const ChainResult& chain) {
    if (cfg_.json) {
      emit(out_, to_json(chain));
      return;
    }
    for (const auto& level : chain.levels) {
      out_ << "n = " << level.n << "  we_dim = " << level.we_dim << "  I = (";
      const auto& gens = level.ideal.generators();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        out_ << (i ? ", " : "") << format(gens[i]);
      }
      out_ << ")\n";
    }
    if (chain.s) out_ << "s = " << chain.s << '\n';
  }

  int chain_cmd() {
    try {
      print_chain(stabilization(input(cfg_.poly), cfg_.limits));
    } catch (const LevelExceededError& e) {
      print_chain(e.partial());
      throw;
    }
    return kOk;
  }

  int witness_cmd() {
    const auto cert = frobenius_descent(input(cfg_.poly), cfg_.limits);
    const Json j = to_json(cert, cfg_.expand);
    if (!cfg_.output_path.empty()) {
      std::ofstream file(cfg_.output_path);
      if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + cfg_.output_path);
      emit(file, j);
    }
    if (cfg_.json) {
      emit(out_, j);
    } else {
      out_ << "f = " << format(cert.f) << "\ns = " << cert.s << "\nstable ideal: (";
      for (std::size_t i = 0; i < cert.stable_ideal.size(); ++i) {
        out_ << (i ? ", " : "") << format(cert.stable_ideal[i]);
      }
      out_ << ")\n";
      for (const auto& c : cert.cofactors) {
        out_ << "h" << tuple_text(c.alpha) << " = " << format(c.h) << '\n';
      }
      std::size_t terms = 0;
      for (const auto& c : cert.op.components()) terms += c.q.num_terms();
      out_ << "operator: " << cert.op.components().size() << " components, " << terms
           << " terms, level " << cert.op.level() << '\n';
      print_transcript(cert.transcript);
      out_ << "verified: Q(1/f) = 1/f^" << cert.f.p() << '\n';
    }
    return kOk;
  }

  int power_witness_cmd() {
    const Polynomial f = input(cfg_.poly);
    const DiffOp op = power_witness(f, cfg_.e, cfg_.limits);
    const std::string claim = "P(1/f) = 1/f^(" + std::to_string(f.p()) + "^" + std::to_string(cfg_.e) + ")";
    return report_operator(op, claim, Json{{"e", cfg_.e}});
  }

  int gen_witness_cmd() {
    const Polynomial f = input(cfg_.poly);
    const DiffOp op = generator_witness(f, cfg_.k, cfg_.limits);
    const std::string claim = "P(1/f) = 1/f^" + std::to_string(cfg_.k);
    return report_operator(op, claim, Json{{"k", cfg_.k}});
  }

  int report_operator(const DiffOp& op, const std::string& claim, Json head) {
    if (cfg_.json) {
      head["operator"] = to_json(op);
      head["verified"] = true;
      head["check"] = claim;
      emit(out_, head);
    } else {
      out_ << "operator: " << op.num_terms() << " terms, level " << level(op) << '\n'
           << "verified: " << claim << '\n';
    }
    return kOk;
  }

  int verify_cmd() {
    const Json j = read_json_file(cfg_.cert_path);
    const auto cert = json_io::certificate_from_json(j, parse_order(cfg_.order));
    if (cfg_.prime && cfg_.prime != cert.f.p()) {
      throw Error(ErrorKind::ContextMismatch, "--prime disagrees with the certificate");
    }
    if (cfg_.vars && cfg_.vars != cert.f.nvars()) {
      throw Error(ErrorKind::ContextMismatch, "--vars disagrees with the certificate");
    }
    const auto transcript = verify_certificate(cert, cfg_.limits);
    const bool ok = std::all_of(transcript.begin(), transcript.end(),
                                [](const CheckResult& c) { return c.ok; });
    if (cfg_.json) {
      emit(out_, Json{{"verified", ok}, {"transcript", to_json(transcript)}});
    } else {
      print_transcript(transcript);
      out_ << (ok ? "certificate verified" : "certificate REJECTED") << '\n';
    }
    if (!ok) err_ << "error[" << error_tag(ErrorKind::VerificationFailed) << "]: certificate rejected\n";
    return ok ? kOk : kVerificationFailed;
  }

  int apply_cmd() {
    const RingPtr r = ring();
    const FactoredOp op = json_io::operator_from_json(read_json_file(cfg_.op_path), r);
    const LocalizationElement u(input(cfg_.poly), input(cfg_.numerator), cfg_.denom_level);
    const auto v = apply_to_localization(op, u, cfg_.limits);
    if (cfg_.json) {
      emit(out_, to_json(v));
    } else {
      out_ << "(" << format(v.numerator()) << ") / (" << format(v.ambient()) << ")^("
           << v.ambient().p() << "^" << v.level() << ")\n";
    }
    return kOk;
  }

  int example_quadric_cmd() {
    if (cfg_.prime == 0) throw Error(ErrorKind::InvalidInput, "--prime is required");
    if (cfg_.vars != 0 && cfg_.vars != 4) {
      throw Error(ErrorKind::InvalidInput, "the quadric example lives in 4 variables");
    }
    const auto w = example_quadric_witness(cfg_.prime);
    if (cfg_.json) {
      Json alpha = Json::array();
      for (auto v : w.alpha) alpha.push_back(v);
      emit(out_, Json{{"p", cfg_.prime}, {"alpha", alpha}, {"a", w.a.value()},
                      {"operator", to_json(w.q)}, {"verified", true}});
    } else {
      out_ << "alpha = " << tuple_text(w.alpha) << "\na = " << w.a << "\nQ = "
           << w.a.inv() << " * D" << tuple_text(w.alpha) << "\nverified: Q(f^(p-1)) = 1, Q(1/f) = 1/f^"
           << cfg_.prime << '\n';
    }
    return kOk;
  }

 private:
  void print_transcript(const std::vector<CheckResult>& transcript) {
    for (const auto& c : transcript) {
      out_ << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.check << '\n';
    }
  }

  const Config& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Differential operators sending 1/f to 1/f^p over F_p", "frobgen"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--prime,-p", cfg.prime, "Characteristic p (prime < 65536)");
  app.add_option("--vars,-d", cfg.vars, "Number of variables x1..xd");
  app.add_option("--order", cfg.order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_option("--max-level", cfg.limits.max_level, "Largest chain level to try");
  app.add_option("--exponent-cap", cfg.limits.exponent_cap, "Cap on p^n * deg f");
  app.add_option("--term-cap", cfg.limits.term_cap, "Cap on terms of f^(p^n-1)");

  auto* decompose_cmd = app.add_subcommand("decompose", "p^n-decomposition of f");
  decompose_cmd->add_option("-f", cfg.poly, "Polynomial")->required();
  decompose_cmd->add_option("-n", cfg.level, "Level n >= 1")->required()->check(CLI::PositiveNumber);

  auto* chain_cmd = app.add_subcommand("chain", "Descending chain I_n(f^(p^n-1)) and its level s");
  chain_cmd->add_option("-f", cfg.poly, "Polynomial")->required();

  auto* witness_cmd = app.add_subcommand("witness", "Certificate for Q(1/f) = 1/f^p");
  witness_cmd->add_option("-f", cfg.poly, "Polynomial")->required();
  witness_cmd->add_flag("--expand", cfg.expand, "Write Q as a single normal-form operator");
  witness_cmd->add_option("-o", cfg.output_path, "Write the certificate JSON to a file");

  auto* power_cmd = app.add_subcommand("power-witness", "Operator with P(1/f) = 1/f^(p^e)");
  power_cmd->add_option("-f", cfg.poly, "Polynomial")->required();
  power_cmd->add_option("-e", cfg.e, "Exponent e >= 1")->required()->check(CLI::PositiveNumber);

  auto* gen_cmd = app.add_subcommand("gen-witness", "Operator with P(1/f) = 1/f^k");
  gen_cmd->add_option("-f", cfg.poly, "Polynomial")->required();
  gen_cmd->add_option("-k", cfg.k, "Power k >= 1")->required()->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate from its data");
  verify_cmd->add_option("-c", cfg.cert_path, "Certificate JSON")->required();

  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to num / f^(p^t)");
  apply_cmd->add_option("--op", cfg.op_path, "Operator or certificate JSON")->required();
  apply_cmd->add_option("--num", cfg.numerator, "Numerator")->required();
  apply_cmd->add_option("--denom-level", cfg.denom_level, "t in f^(p^t)")->required();
  apply_cmd->add_option("-f", cfg.poly, "Denominator base f")->required();

  auto* quadric_cmd = app.add_subcommand("example-quadric", "Worked example x1^2+x2^2+x3^2+x4^2");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error[E_USAGE]: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Runner runner(cfg, out, err);
    if (cfg.limits.max_level < 2) throw Error(ErrorKind::InvalidInput, "--max-level must be >= 2");
    if (cfg.prime) PrimeField{cfg.prime};
    if (*decompose_cmd) return runner.decompose_cmd();
    if (*chain_cmd) return runner.chain_cmd();
    if (*witness_cmd) return runner.witness_cmd();
    if (*power_cmd) return runner.power_witness_cmd();
    if (*gen_cmd) return runner.gen_witness_cmd();
    if (*verify_cmd) return runner.verify_cmd();
    if (*apply_cmd) return runner.apply_cmd();
    if (*quadric_cmd) return runner.example_quadric_cmd();
  } catch (const Error& e) {
    err << "error[" << error_tag(e.kind()) << "]: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error[E_INTERNAL]: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace frobgen::cli
