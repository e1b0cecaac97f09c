/* Copyright 2026 The psyq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "psyq/errors.hpp"
#include "psyq/invariants.hpp"
#include "psyq/suite.hpp"

namespace py = pybind11;
using namespace psyq;

namespace {

py::dict axiom_report(const AxiomReport& r) {
  py::list violations;
  for (const auto& v : r.violations) violations.append(describe(v));
  py::dict d;
  d["valid"] = r.valid;
  d["pI_adequate"] = r.pI_adequate;
  d["violations"] = violations;
  return d;
}

py::dict weight_report(const WeightReport& r) {
  py::list violations;
  for (const auto& v : r.violations) violations.append(describe(v));
  py::dict d;
  d["satisfies_core"] = r.satisfies_core;
  d["pI_adequate"] = r.pI_adequate;
  d["strongly_compatible"] = r.strongly_compatible;
  d["violations"] = violations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_psyq, m) {
  m.doc() = "Psyquandle colorings and Boltzmann weight invariants";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidPsyquandleError>(m, "InvalidPsyquandleError", base.ptr());
  py::register_exception<InvalidWeightError>(m, "InvalidWeightError", base.ptr());
  py::register_exception<CompatibilityError>(m, "CompatibilityError", base.ptr());
  py::register_exception<AdequacyError>(m, "AdequacyError", base.ptr());
  py::register_exception<UnknownDiagramError>(m, "UnknownDiagramError", base.ptr());

  py::class_<Psyquandle>(m, "Psyquandle")
      .def_static("from_matrix", &parse_psyquandle_matrix, py::arg("text"))
      .def_static(
          "alexander",
          [](int n, int t, int s, int a, int b) { return alexander_psyquandle({n, t, s, a, b}); },
          py::arg("n"), py::arg("t"), py::arg("s"), py::arg("a"), py::arg("b"))
      .def_property_readonly("order", &Psyquandle::order)
      .def_property_readonly("pI_adequate", &Psyquandle::pI_adequate)
      .def("fingerprint", [](const Psyquandle& x) { return fingerprint(x.tables()); })
      .def("to_matrix", [](const Psyquandle& x) { return serialize_psyquandle_matrix(x.tables()); })
      .def("under_tri", &Psyquandle::under_tri)
      .def("over_tri", &Psyquandle::over_tri)
      .def("under_dot", &Psyquandle::under_dot)
      .def("over_dot", &Psyquandle::over_dot);

  py::class_<WeightPair>(m, "WeightPair")
      .def_static("from_text", &parse_weight_pair, py::arg("text"))
      .def_property_readonly("modulus", &WeightPair::modulus)
      .def_property_readonly("order", &WeightPair::order)
      .def_property_readonly("phi", [](const WeightPair& w) { return w.phi.to_rows(); })
      .def_property_readonly("psi", [](const WeightPair& w) { return w.psi.to_rows(); })
      .def("to_text", &serialize_weight_pair)
      .def(py::self == py::self);

  py::class_<DiagramCode>(m, "Diagram")
      .def_static("from_text", &parse_diagram, py::arg("text"))
      .def_static("catalog", &catalog, py::arg("name"))
      .def_static(
          "braid_closure",
          [](int strands, const std::string& word) { return braid_closure(strands, parse_braid_word(word)); },
          py::arg("strands"), py::arg("word"))
      .def_property_readonly("semiarcs", &DiagramCode::semiarc_count)
      .def_property_readonly("components", [](const DiagramCode& d) { return d.components().size(); })
      .def("to_text", &serialize_diagram)
      .def("summary", &summarize);

  m.def("check_axioms", [](const std::string& text) { return axiom_report(check_axioms(parse_operation_tables(text))); },
        py::arg("matrix_text"), "Axiom report for a block-matrix text");
  m.def("validate_weight_pair",
        [](const Psyquandle& x, const WeightPair& w) { return weight_report(validate_weight_pair(x, w)); });
  m.def(
      "weight_space_count",
      [](const Psyquandle& x, Residue modulus, bool pI, bool strong) {
        return weight_solution_space(x, modulus, {pI, strong}).count.str();
      },
      py::arg("x"), py::arg("modulus"), py::arg("pI") = false, py::arg("strong") = false,
      "Size of the weight-pair module, as a decimal string");
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog_entries()) names.push_back(e.name);
    return names;
  });
  m.def("counting_invariant", &counting_invariant, py::arg("diagram"), py::arg("x"));
  m.def("colorings", &enumerate_colorings, py::arg("diagram"), py::arg("x"));
  m.def(
      "enhanced_polynomial",
      [](const DiagramCode& d, const Psyquandle& x, const WeightPair& w, bool two_variable, bool pseudoknot) {
        const auto p = enhanced_polynomial(d, x, w,
                                           two_variable ? PolynomialMode::TwoVariable : PolynomialMode::SingleVariable,
                                           pseudoknot ? Interpretation::Pseudoknot : Interpretation::SingularLink);
        py::dict terms;
        for (const auto& [exp, coeff] : p.terms) {
          if (two_variable) terms[py::make_tuple(exp.first, exp.second)] = coeff;
          else terms[py::int_(exp.first)] = coeff;
        }
        py::dict out;
        out["terms"] = terms;
        out["rendered"] = polynomial_to_string(p);
        return out;
      },
      py::arg("diagram"), py::arg("x"), py::arg("weights"), py::arg("two_variable") = false,
      py::arg("pseudoknot") = false);
  m.def(
      "invariant_json",
      [](const std::string& name, const DiagramCode& d, const Psyquandle& x, const WeightPair& w, bool two_variable) {
        const auto mode = two_variable ? PolynomialMode::TwoVariable : PolynomialMode::SingleVariable;
        return to_json(InvariantResult{name, fingerprint(x.tables()), counting_invariant(d, x),
                                       enhanced_polynomial(d, x, w, mode)});
      },
      py::arg("name"), py::arg("diagram"), py::arg("x"), py::arg("weights"), py::arg("two_variable") = false);
  m.def(
      "suite_table",
      [](const std::string& dir, bool with_catalog, bool two_variable) {
        return format_suite(run_suite(dir, with_catalog,
                                      two_variable ? PolynomialMode::TwoVariable : PolynomialMode::SingleVariable));
      },
      py::arg("dir"), py::arg("with_catalog") = false, py::arg("two_variable") = false);
}
