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

#include "ipskit/io.hpp"

#include <fstream>
#include <sstream>

namespace ipskit {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

int json_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) throw InputError(std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

}  // namespace

Json matrix_to_json(const Operator& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

Operator matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j.at(0).size());
    Operator m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      const Json& row = j.at(static_cast<std::size_t>(i));
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw InputError("matrix rows differ in length");
      for (Eigen::Index k = 0; k < cols; ++k) {
        const Json& e = row.at(static_cast<std::size_t>(k));
        if (e.is_number()) {
          m(i, k) = Complex(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e.at(0).is_number() && e.at(1).is_number()) {
          m(i, k) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
        } else {
          throw InputError("matrix entries must be numbers or [re, im] pairs");
        }
      }
    }
    return m;
  });
}

Json channel_to_json(const QuantumChannel& ch) {
  Json j;
  j["dim_in"] = ch.dim_in;
  j["dim_out"] = ch.dim_out;
  Json ks = Json::array();
  for (const auto& k : ch.kraus) ks.push_back(matrix_to_json(k));
  j["kraus"] = ks;
  return j;
}

QuantumChannel channel_from_json(const Json& j) {
  return guarded("channel", [&] {
    if (!j.is_object()) throw InputError("channel document must be an object");
    const int din = json_int(j, "dim_in");
    const int dout = json_int(j, "dim_out");
    if (!j.contains("kraus") || !j.at("kraus").is_array()) throw InputError("missing 'kraus' list");
    std::vector<Operator> ks;
    for (const auto& m : j.at("kraus")) ks.push_back(matrix_from_json(m));
    if (ks.empty()) throw InputError("channel needs at least one Kraus operator");
    QuantumChannel ch;
    ch.dim_in = din;
    ch.dim_out = dout;
    ch.kraus = std::move(ks);
    validate(ch);
    ch.trace_preserving = tp_residual(ch) <= 1e-9;
    return ch;
  });
}

Json stochastic_to_json(const StochasticChannel& sc) {
  Json j;
  j["n_in"] = sc.n_in;
  j["n_out"] = sc.n_out;
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < sc.matrix.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < sc.matrix.cols(); ++k) row.push_back(sc.matrix(i, k));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

StochasticChannel stochastic_from_json(const Json& j) {
  return guarded("stochastic map", [&] {
    if (!j.is_object()) throw InputError("stochastic document must be an object");
    StochasticChannel sc;
    sc.n_in = json_int(j, "n_in");
    sc.n_out = json_int(j, "n_out");
    if (sc.n_in <= 0 || sc.n_out <= 0) throw InputError("stochastic dimensions must be positive");
    const Json& m = j.at("matrix");
    if (!m.is_array() || static_cast<int>(m.size()) != sc.n_out) throw InputError("stochastic matrix needs n_out rows");
    sc.matrix = RealMatrix(sc.n_out, sc.n_in);
    for (int i = 0; i < sc.n_out; ++i) {
      const Json& row = m.at(static_cast<std::size_t>(i));
      if (!row.is_array() || static_cast<int>(row.size()) != sc.n_in) throw InputError("stochastic rows need n_in entries");
      for (int k = 0; k < sc.n_in; ++k) sc.matrix(i, k) = row.at(static_cast<std::size_t>(k)).get<double>();
    }
    validate(sc);
    return sc;
  });
}

Json code_to_json(const Code& code) {
  Json states = Json::array();
  for (const auto& rho : code.states) states.push_back(matrix_to_json(rho));
  return Json{{"states", states}};
}

Code code_from_json(const Json& j) {
  return guarded("code", [&] {
    if (!j.is_object() || !j.contains("states") || !j.at("states").is_array()) throw InputError("code needs a 'states' list");
    Code c;
    for (const auto& m : j.at("states")) c.states.push_back(matrix_from_json(m));
    validate(c);
    return c;
  });
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  return Json{{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return make_graph(json_int(j, "n"), std::move(edges));
  });
}

Json shape_to_json(const IpsShape& s) {
  Json secs = Json::array();
  for (std::size_t i = 0; i < s.dims.size(); ++i) secs.push_back(Json{{"d", s.dims[i]}, {"n", s.cofactor_dims[i]}});
  return Json{{"sectors", secs}};
}

IpsShape shape_from_json(const Json& j) {
  return guarded("shape", [&] {
    IpsShape s;
    for (const auto& sec : j.at("sectors")) {
      s.dims.push_back(sec.at("d").get<int>());
      s.cofactor_dims.push_back(sec.at("n").get<int>());
    }
    return s;
  });
}

Json projector_to_json(const Operator& p) { return Json{{"projector", matrix_to_json(p)}}; }

Operator projector_from_json(const Json& j) {
  return guarded("projector", [&] {
    if (!j.is_object() || !j.contains("projector")) throw InputError("projector file needs a 'projector' matrix");
    return matrix_from_json(j.at("projector"));
  });
}

Json tolerance_to_json(const ToleranceConfig& tol) {
  return Json{{"equality", tol.equality},       {"rank", tol.rank},
              {"support", tol.support},         {"projector", tol.projector},
              {"peripheral", tol.peripheral},   {"cluster", tol.cluster},
              {"structure", tol.structure},     {"preservation", tol.preservation},
              {"integer_guard", tol.integer_guard}, {"max_retries", tol.max_retries}};
}

Json structure_report(const FixedPointStructure& s, const ToleranceConfig& tol) {
  Json j;
  const IpsShape sh = s.shape();
  j["kind"] = to_string(s.kind);
  j["support_rank"] = s.support_rank();
  j["invariant_dim"] = s.invariant_dim;
  j["shape"] = sh.dims;
  j["cofactors"] = sh.cofactor_dims;
  Json res = Json::object();
  for (const auto& [k, v] : s.residuals) res[k] = v;
  j["residuals"] = res;
  j["tolerance"] = tolerance_to_json(tol);
  j["seed"] = s.seed;
  return j;
}

Json preservation_to_json(const PreservationReport& r) {
  return Json{{"verdict", r.verdict},
              {"sampling_passed", r.sampling_passed},
              {"structural_passed", r.structural_passed},
              {"worst_pair", Json{{"first", r.first.weights}, {"second", r.second.weights}, {"p", r.p}}},
              {"distance_before", r.distance_before},
              {"distance_after", r.distance_after},
              {"pairs_checked", r.pairs_checked}};
}

namespace {

int depth(const Json& j) {
  if (!j.is_array()) return 0;
  int d = 0;
  for (const auto& e : j) d = std::max(d, depth(e));
  return d + 1;
}

void emit(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << Json(it.key()).dump() << ": ";
      emit(os, it.value(), indent + 2);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array() && depth(j) > 2) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    os << "[\n";
    bool first = true;
    for (const auto& e : j) {
      if (!first) os << ",\n";
      first = false;
      os << inner;
      emit(os, e, indent + 2);
    }
    os << "\n" << pad << "]";
  } else if (j.is_array()) {
    os << "[";
    bool first = true;
    for (const auto& e : j) {
      if (!first) os << ", ";
      first = false;
      os << e.dump();
    }
    os << "]";
  } else {
    os << j.dump();
  }
}

}  // namespace

std::string format_json(const Json& j) {
  std::ostringstream os;
  emit(os, j, 0);
  os << "\n";
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::variant<QuantumChannel, StochasticChannel> parse_channel_document(const Json& j) {
  if (j.is_object() && j.contains("kraus")) return channel_from_json(j);
  if (j.is_object() && j.contains("matrix")) return stochastic_from_json(j);
  throw InputError("document is neither a Kraus channel nor a stochastic map");
}

QuantumChannel load_channel(const std::string& path) {
  auto doc = parse_channel_document(read_json_file(path));
  if (auto* q = std::get_if<QuantumChannel>(&doc)) return *q;
  return embed_classical(std::get<StochasticChannel>(doc));
}

StochasticChannel load_stochastic(const std::string& path) {
  auto doc = parse_channel_document(read_json_file(path));
  if (auto* s = std::get_if<StochasticChannel>(&doc)) return *s;
  throw InputError(path + " is not a stochastic map");
}

Code load_code(const std::string& path) { return code_from_json(read_json_file(path)); }

Json catalog_to_json() {
  Json out = Json::object();
  auto expect = [](const std::optional<ExpectedShape>& e) -> Json {
    if (!e) return nullptr;
    return Json{{"shape", e->dims}, {"cofactors", e->cofactors}, {"source", to_string(e->source)}};
  };
  for (const auto& f : fixture_catalog()) {
    Json entry{{"kind", f.kind}, {"summary", f.summary}};
    if (f.noiseless) entry["noiseless"] = expect(f.noiseless);
    if (f.unitarily_noiseless) entry["unitarily_noiseless"] = expect(f.unitarily_noiseless);
    if (f.unconditional) entry["unconditional"] = expect(f.unconditional);
    out[f.name] = entry;
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> fixture_documents() {
  std::vector<std::pair<std::string, std::string>> docs;
  for (const auto& f : fixture_catalog()) {
    if (f.kind == "code") continue;
    Fixture fx = fixture(f.name);
    Json j = f.kind == "stochastic" ? stochastic_to_json(std::get<StochasticChannel>(fx))
                                    : channel_to_json(std::get<QuantumChannel>(fx));
    docs.emplace_back(f.name + ".json", format_json(j));
  }
  for (const auto& name : code_fixture_names())
    docs.emplace_back("codes/" + name + ".json", format_json(code_to_json(code_fixture(name))));
  docs.emplace_back("five_qubit_code_projector.json", format_json(projector_to_json(five_qubit_code_projector())));
  docs.emplace_back("catalog.json", format_json(catalog_to_json()));
  return docs;
}

}  // namespace ipskit
