// Thin bindings: inputs are (p, d, text) triples, structured outputs are
// JSON strings decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobgen/error.hpp"
#include "frobgen/frobdecomp.hpp"
#include "frobgen/generation.hpp"
#include "frobgen/ideal_chain.hpp"
#include "frobgen/json_io.hpp"

namespace py = pybind11;
using namespace frobgen;
using json_io::Json;

namespace {

struct Context {
  RingPtr ring;

  Context(std::uint32_t p, std::size_t d, const std::string& order)
      : ring(make_ring(p, d, parse_order(order))) {}

  Polynomial parse(const std::string& text) const { return parse_polynomial(text, ring); }
};

Limits make_limits(unsigned max_level, unsigned exponent_cap, std::uint64_t term_cap) {
  return Limits{max_level, exponent_cap, term_cap};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, e.what());
  }
}

std::string operator_json(const DiffOp& op) { return json_io::to_json(op).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Frobenius descent operators over F_p[x1..xd]";

  static py::exception<Error> error_type(m, "FrobgenError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::object args = py::make_tuple(std::string(error_tag(e.kind())), std::string(e.what()));
      PyErr_SetObject(error_type.ptr(), args.ptr());
    }
  });

  const Limits defaults;

  m.def(
      "normalize",
      [](std::uint32_t p, std::size_t d, const std::string& text, const std::string& order) {
        return format(Context(p, d, order).parse(text));
      },
      py::arg("p"), py::arg("d"), py::arg("text"), py::arg("order") = "grevlex");

  m.def(
      "power",
      [](std::uint32_t p, std::size_t d, const std::string& text, std::uint64_t m) {
        return format(pow(Context(p, d, "grevlex").parse(text), m));
      },
      py::arg("p"), py::arg("d"), py::arg("text"), py::arg("m"));

  m.def(
      "frobenius",
      [](std::uint32_t p, std::size_t d, const std::string& text, unsigned n) {
        return format(frobenius(Context(p, d, "grevlex").parse(text), n));
      },
      py::arg("p"), py::arg("d"), py::arg("text"), py::arg("n"));

  m.def(
      "decompose",
      [](std::uint32_t p, std::size_t d, const std::string& text, unsigned n) {
        return json_io::to_json(decompose(Context(p, d, "grevlex").parse(text), n)).dump();
      },
      py::arg("p"), py::arg("d"), py::arg("text"), py::arg("n"));

  m.def(
      "chain",
      [](std::uint32_t p, std::size_t d, const std::string& text, unsigned max_level,
         unsigned exponent_cap, std::uint64_t term_cap) {
        const auto f = Context(p, d, "grevlex").parse(text);
        return json_io::to_json(stabilization(f, make_limits(max_level, exponent_cap, term_cap))).dump();
      },
      py::arg("p"), py::arg("d"), py::arg("text"), py::arg("max_level") = defaults.max_level,
      py::arg("exponent_cap") = defaults.exponent_cap, py::arg("term_cap") = defaults.term_cap);

  m.def(
      "witness",
      [](std::uint32_t p, std::size_t d, const std::string& text, bool expand, unsigned max_level,
         unsigned exponent_cap, std::uint64_t term_cap) {
        const auto f = Context(p, d, "grevlex").parse(text);
        const auto cert = frobenius_descent(f, make_limits(max_level, exponent_cap, term_cap));
        return json_io::to_json(cert, expand).dump();
      },
      py::arg("p"), py::arg("d"), py::arg("text"), py::arg("expand") = false,
      py::arg("max_level") = defaults.max_level, py::arg("exponent_cap") = defaults.exponent_cap,
      py::arg("term_cap") = defaults.term_cap);

  m.def(
      "verify",
      [](const std::string& certificate) {
        const auto cert = json_io::certificate_from_json(parse_json(certificate));
        const auto transcript = verify_certificate(cert);
        bool ok = !transcript.empty();
        for (const auto& c : transcript) ok = ok && c.ok;
        return Json{{"verified", ok}, {"transcript", json_io::to_json(transcript)}}.dump();
      },
      py::arg("certificate"));

  m.def(
      "power_witness",
      [](std::uint32_t p, std::size_t d, const std::string& text, unsigned e) {
        return operator_json(power_witness(Context(p, d, "grevlex").parse(text), e));
      },
      py::arg("p"), py::arg("d"), py::arg("text"), py::arg("e"));

  m.def(
      "generator_witness",
      [](std::uint32_t p, std::size_t d, const std::string& text, std::uint64_t k) {
        return operator_json(generator_witness(Context(p, d, "grevlex").parse(text), k));
      },
      py::arg("p"), py::arg("d"), py::arg("text"), py::arg("k"));

  m.def(
      "apply",
      [](const std::string& op, std::uint32_t p, std::size_t d, const std::string& numerator,
         unsigned denom_level, const std::string& f) {
        const Context ctx(p, d, "grevlex");
        const FactoredOp q = json_io::operator_from_json(parse_json(op), ctx.ring);
        const LocalizationElement u(ctx.parse(f), ctx.parse(numerator), denom_level);
        return json_io::to_json(apply_to_localization(q, u)).dump();
      },
      py::arg("op"), py::arg("p"), py::arg("d"), py::arg("numerator"), py::arg("denom_level"),
      py::arg("f"));

  m.def(
      "example_quadric",
      [](std::uint32_t p) {
        const auto w = example_quadric_witness(p);
        Json alpha = Json::array();
        for (auto v : w.alpha) alpha.push_back(v);
        return Json{{"p", p}, {"alpha", alpha}, {"a", w.a.value()}, {"operator", json_io::to_json(w.q)}}.dump();
      },
      py::arg("p"));
}
