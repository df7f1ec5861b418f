// Copyright 2026 The prcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "prc/channel.hpp"
#include "prc/code.hpp"
#include "prc/decode.hpp"
#include "prc/field.hpp"
#include "prc/oracle.hpp"
#include "prc/poly.hpp"

namespace py = pybind11;
using namespace prc;

namespace {

DecoderChoice choice_from(const std::string& approach, const std::string& recovery, const std::string& stop,
                          bool verify) {
  static const std::map<std::string, DecoderKind> kinds{{"1", DecoderKind::kApproachI},
                                                        {"2", DecoderKind::kApproachII},
                                                        {"modified", DecoderKind::kModified},
                                                        {"oracle", DecoderKind::kOracle}};
  const auto it = kinds.find(approach);
  if (it == kinds.end()) throw py::value_error("approach must be 1, 2, modified or oracle");
  if (recovery != "remainder" && recovery != "quotient") throw py::value_error("recovery must be remainder or quotient");
  if (stop != "adaptive" && stop != "threshold") throw py::value_error("stop must be adaptive or threshold");
  return {it->second, recovery == "remainder" ? Recovery::kRemainder : Recovery::kQuotient,
          stop == "threshold" ? StopStyle::kThreshold : StopStyle::kAdaptive, verify};
}

std::vector<std::uint64_t> coeff_list(const Polynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Polynomial remainder codes over finite fields";

  py::register_exception<FieldMismatch>(m, "FieldMismatch", PyExc_ValueError);
  py::register_exception<CodeError>(m, "CodeError", PyExc_ValueError);

  py::class_<Field>(m, "Field")
      .def(py::init<>())
      .def_static("parse", &Field::parse, py::arg("descriptor"))
      .def_static("prime", &Field::prime, py::arg("p"))
      .def_static("extension", py::overload_cast<std::uint32_t, unsigned>(&Field::extension), py::arg("p"),
                  py::arg("m"))
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("descriptor", &Field::descriptor)
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("mul", &Field::mul)
      .def("div", &Field::div)
      .def("inv", &Field::inv)
      .def(py::self == py::self)
      .def("__repr__", [](const Field& f) { return "Field('" + f.descriptor() + "')"; });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<Field, std::vector<std::uint64_t>>(), py::arg("field"), py::arg("coeffs"))
      .def_static("parse", &parse_polynomial, py::arg("field"), py::arg("text"))
      .def_property_readonly("field", &Polynomial::field)
      .def_property_readonly("coeffs", &coeff_list)
      .def_property_readonly("degree",
                             [](const Polynomial& p) -> py::object {
                               if (p.is_zero()) return py::none();
                               return py::int_(p.degree().value());
                             })
      .def("is_zero", &Polynomial::is_zero)
      .def("monic", &Polynomial::monic)
      .def("evaluate", &Polynomial::evaluate)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self % py::self)
      .def(py::self == py::self)
      .def("__str__", [](const Polynomial& p) { return to_string(p); })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + to_string(p) + "')"; });

  m.def("is_irreducible", &is_irreducible, py::arg("poly"));

  py::class_<CodeSpec>(m, "CodeSpec")
      .def(py::init<Field, std::vector<Polynomial>, std::size_t>(), py::arg("field"), py::arg("moduli"), py::arg("k"))
      .def_static(
          "reed_solomon",
          [](const Field& f, const std::vector<std::uint64_t>& points, std::size_t k) { return rs_code(f, points, k); },
          py::arg("field"), py::arg("points"), py::arg("k"))
      .def_static("from_text", &parse_code_spec, py::arg("text"))
      .def("to_text", &format_code_spec)
      .def_property_readonly("field", &CodeSpec::field)
      .def_property_readonly("n", &CodeSpec::n)
      .def_property_readonly("k", &CodeSpec::k)
      .def_property_readonly("N", &CodeSpec::N)
      .def_property_readonly("K", &CodeSpec::K)
      .def_property_readonly("moduli", &CodeSpec::moduli)
      .def(py::self == py::self);

  py::class_<ReceivedWord>(m, "Word")
      .def(py::init<>())
      .def_readwrite("symbols", &ReceivedWord::symbols)
      .def_readwrite("erased", &ReceivedWord::erased)
      .def_static("from_text", &parse_word, py::arg("code"), py::arg("text"))
      .def("to_text", &format_word)
      .def(py::self == py::self);

  m.def("encode", &encode, py::arg("code"), py::arg("message"));
  m.def(
      "corrupt",
      [](const CodeSpec& code, const ReceivedWord& word, const PositionSet& erasures,
         const std::map<std::size_t, Polynomial>& errors) {
        CorruptionPlan plan;
        plan.erasures = erasures;
        plan.errors = errors;
        return corrupt(code, word, plan);
      },
      py::arg("code"), py::arg("word"), py::arg("erasures") = PositionSet{},
      py::arg("errors") = std::map<std::size_t, Polynomial>{});

  py::class_<DecodeOutcome>(m, "DecodeOutcome")
      .def_property_readonly("ok", &DecodeOutcome::ok)
      .def_property_readonly("failure", [](const DecodeOutcome& o) { return failure_name(o.failure); })
      .def_readonly("message", &DecodeOutcome::message)
      .def_readonly("locator_tau", &DecodeOutcome::locator_tau)
      .def_readonly("corrected", &DecodeOutcome::corrected)
      .def_property_readonly("iterations", [](const DecodeOutcome& o) { return o.stats.iterations; })
      .def_property_readonly("gcd_mults", [](const DecodeOutcome& o) { return o.stats.gcd_mults; });

  m.def(
      "decode",
      [](const CodeSpec& code, const ReceivedWord& word, const std::string& approach, const std::string& recovery,
         const std::string& stop, bool verify) {
        return run_decoder(code, word, choice_from(approach, recovery, stop, verify));
      },
      py::arg("code"), py::arg("word"), py::arg("approach") = "2", py::arg("recovery") = "quotient",
      py::arg("stop") = "adaptive", py::arg("verify") = false);

  m.def(
      "simulate",
      [](const CodeSpec& code, std::uint64_t trials, std::size_t erasures, int error_degree, std::uint64_t seed,
         unsigned threads) {
        py::gil_scoped_release release;
        return format_tsv(simulate(code, trials, Budget{erasures, error_degree}, all_gcd_choices(), seed, threads));
      },
      py::arg("code"), py::arg("trials"), py::arg("erasures") = 0, py::arg("error_degree") = 0, py::arg("seed") = 1,
      py::arg("threads") = 1);
}
