// Copyright 2026 The ipskit Authors
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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ipskit/io.hpp"

namespace py = pybind11;
using namespace ipskit;

namespace {

QuantumChannel channel_from_kraus(const std::vector<Operator>& kraus) {
  QuantumChannel ch = make_channel(kraus);
  if (!ch.trace_preserving) throw InputError("Kraus operators are not trace preserving");
  return ch;
}

Code code_from_states(const std::vector<Operator>& states) { return make_code(states); }

StochasticChannel stochastic_from_matrix(const RealMatrix& m) {
  StochasticChannel sc{static_cast<int>(m.cols()), static_cast<int>(m.rows()), m};
  validate(sc);
  return sc;
}

std::string report(const FixedPointStructure& s) { return structure_report(s, ToleranceConfig{}).dump(); }

}  // namespace

PYBIND11_MODULE(_ipskit, m) {
  m.doc() = "Zero-error information-preserving structures of quantum channels";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<QuantumChannel>(m, "Channel")
      .def(py::init(&channel_from_kraus), py::arg("kraus"))
      .def_readonly("dim_in", &QuantumChannel::dim_in)
      .def_readonly("dim_out", &QuantumChannel::dim_out)
      .def_readonly("kraus", &QuantumChannel::kraus)
      .def_readonly("trace_preserving", &QuantumChannel::trace_preserving)
      .def("to_json", [](const QuantumChannel& ch) { return format_json(channel_to_json(ch)); })
      .def_static("from_json", [](const std::string& text) { return channel_from_json(Json::parse(text)); });

  m.def("apply", py::overload_cast<const QuantumChannel&, const Operator&>(&apply), py::arg("channel"), py::arg("x"));
  m.def("superoperator", [](const QuantumChannel& ch) { return to_superoperator(ch).matrix; });
  m.def("adjoint", py::overload_cast<const QuantumChannel&>(&adjoint));
  m.def("compose", py::overload_cast<const QuantumChannel&, const QuantumChannel&>(&compose));
  m.def("is_cptp", [](const QuantumChannel& ch) {
    CptpReport r = is_cptp(ch);
    py::dict d;
    d["tp_residual"] = r.tp_residual;
    d["choi_min_eigenvalue"] = r.choi_min_eigenvalue;
    d["unital_residual"] = r.unital_residual;
    d["cptp"] = r.cptp();
    d["unital"] = r.unital;
    return d;
  });
  m.def("embed_classical", [](const RealMatrix& s) { return embed_classical(stochastic_from_matrix(s)); });
  m.def("transpose_channel", [](const QuantumChannel& ch, const Operator& p) { return transpose_channel(ch, p); });

  m.def("fixed_space", [](const QuantumChannel& ch) { return fixed_space(ch).basis(); });
  m.def("asymptotic_projector", [](const QuantumChannel& ch) { return asymptotic_projector(ch).matrix(); });

  m.def("shape", [](const std::vector<Operator>& basis, std::uint64_t seed) {
    if (basis.empty()) throw InputError("empty operator list");
    OperatorSpace s = make_space(static_cast<int>(basis.front().rows()), basis);
    IpsShape sh = shape_of(canonical_decompose(s, seed));
    return std::make_pair(sh.dims, sh.cofactor_dims);
  }, py::arg("basis"), py::arg("seed") = 0);

  m.def("noiseless_ips", [](const QuantumChannel& ch, std::uint64_t seed) { return report(noiseless_ips(ch, seed)); },
        py::arg("channel"), py::arg("seed") = 0);
  m.def("unitarily_noiseless_ips",
        [](const QuantumChannel& ch, std::uint64_t seed) { return report(unitarily_noiseless_ips(ch, seed)); },
        py::arg("channel"), py::arg("seed") = 0);
  m.def("unconditional_ips",
        [](const QuantumChannel& ch, std::uint64_t seed) { return report(unconditional_ips(ch, seed)); },
        py::arg("channel"), py::arg("seed") = 0);

  m.def("trace_norm", &trace_norm);
  m.def("helstrom_probability", &helstrom_probability, py::arg("rho"), py::arg("sigma"), py::arg("p"));
  m.def("is_fixed", [](const std::vector<Operator>& states, const QuantumChannel& ch) {
    return is_fixed(code_from_states(states), ch);
  });
  m.def("is_preserved", [](const std::vector<Operator>& states, const QuantumChannel& ch) {
    return preservation_to_json(is_preserved(code_from_states(states), ch)).dump();
  });
  m.def("is_noiseless", [](const std::vector<Operator>& states, const QuantumChannel& ch) {
    return is_noiseless(code_from_states(states), ch).verdict;
  });
  m.def("is_correctable", [](const std::vector<Operator>& states, const QuantumChannel& ch) {
    return is_correctable_via_transpose(code_from_states(states), ch).verdict;
  });

  m.def("max_zero_error_code", [](const RealMatrix& s) { return max_zero_error_code(stochastic_from_matrix(s)); });
  m.def("adjacency_edges", [](const RealMatrix& s) { return adjacency_graph(stochastic_from_matrix(s)).edges; });
  m.def("graph_to_channel", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return graph_to_channel(make_graph(n, edges)).matrix;
  });

  m.def("fixture_names", &fixture_names);
  m.def("fixture", &quantum_fixture);
  m.def("code_fixture_names", &code_fixture_names);
  m.def("code_fixture", [](const std::string& name) { return code_fixture(name).states; });
}
