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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"

namespace ipskit {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Io, ChannelRoundTripIsBitExact) {
  QuantumChannel ch = random_cptp(3, 2, 5);
  const std::string text = format_json(channel_to_json(ch));
  QuantumChannel back = channel_from_json(Json::parse(text));
  ASSERT_EQ(back.kraus.size(), ch.kraus.size());
  for (std::size_t i = 0; i < ch.kraus.size(); ++i) EXPECT_EQ(back.kraus[i], ch.kraus[i]);
  EXPECT_EQ(format_json(channel_to_json(back)), text);
}

TEST(Io, StochasticRoundTrip) {
  StochasticChannel sc = graph_to_channel(make_graph(3, {{0, 1}}));
  StochasticChannel back = stochastic_from_json(Json::parse(format_json(stochastic_to_json(sc))));
  EXPECT_EQ(back.matrix, sc.matrix);
  EXPECT_EQ(back.n_in, 3);
  EXPECT_EQ(back.n_out, 9);
}

TEST(Io, CodeGraphShapeProjectorRoundTrip) {
  Code c = code_fixture("five_qubit_code");
  Code cb = code_from_json(Json::parse(code_to_json(c).dump()));
  for (std::size_t i = 0; i < c.states.size(); ++i) EXPECT_EQ(cb.states[i], c.states[i]);
  Graph g = make_graph(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
  EXPECT_EQ(graph_to_json(g).dump(), "{\"edges\":[[0,1],[2,3]],\"n\":4}");
  IpsShape s = make_shape({2, 1}, {2, 3});
  EXPECT_EQ(shape_from_json(shape_to_json(s)), s);
  EXPECT_EQ(shape_to_json(s).dump(), "{\"sectors\":[{\"d\":2,\"n\":2},{\"d\":1,\"n\":3}]}");
  Operator p = five_qubit_code_projector();
  EXPECT_EQ(projector_from_json(projector_to_json(p)), p);
}

TEST(Io, RealEntriesAccepted) {
  Json j = Json::parse(R"({"dim_in": 2, "dim_out": 2, "kraus": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]})");
  QuantumChannel ch = channel_from_json(j);
  EXPECT_EQ(ch.kraus[1](1, 1), Complex(1.0));
}

TEST(Io, MalformedInputsAreInputErrors) {
  EXPECT_THROW(channel_from_json(Json::parse(R"({"dim_in": 2})")), InputError);
  EXPECT_THROW(channel_from_json(Json::parse(R"({"dim_in": 2, "dim_out": 2, "kraus": [[[1, 0]]]})")), InputError);
  EXPECT_THROW(channel_from_json(Json::parse(R"({"dim_in": 2, "dim_out": 2, "kraus": [[["a", 0], [0, 1]]]})")),
               InputError);
  EXPECT_THROW(stochastic_from_json(Json::parse(R"({"n_in": 2, "n_out": 2, "matrix": [[1, 0], [1, 0]]})")),
               InputError);
  EXPECT_THROW(read_json_file(testing::source_path("tests/cli/malformed.json")), InputError);
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), InputError);
}

TEST(Io, NonTpDocumentIsFlagged) {
  QuantumChannel ch = channel_from_json(Json::parse(R"({"dim_in": 2, "dim_out": 2, "kraus": [[[0.5, 0], [0, 0.5]]]})"));
  EXPECT_FALSE(ch.trace_preserving);
}

TEST(Io, ParseChannelDocumentDetectsKind) {
  auto q = parse_channel_document(channel_to_json(quantum_fixture("dephasing_qubit")));
  EXPECT_TRUE(std::holds_alternative<QuantumChannel>(q));
  auto s = parse_channel_document(stochastic_to_json(stochastic_fixture("cyclic_four")));
  EXPECT_TRUE(std::holds_alternative<StochasticChannel>(s));
  EXPECT_THROW(parse_channel_document(Json::parse("[1, 2]")), InputError);
}

TEST(Io, FormatJsonLayout) {
  Json j = Json{{"b", Json::array({1, 2})}, {"a", Json{{"x", 1.5}}}};
  EXPECT_EQ(format_json(j), "{\n  \"a\": {\n    \"x\": 1.5\n  },\n  \"b\": [1, 2]\n}\n");
}

TEST(Io, ShippedFixturesMatchGenerator) {
  for (const auto& [rel, text] : fixture_documents()) {
    const std::string path = testing::source_path("fixtures/" + rel);
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(slurp(path), text) << rel;
  }
}

TEST(Io, ShippedFixturesLoad) {
  for (const auto& name : fixture_names()) {
    if (describe(name).kind == "code") {
      EXPECT_NO_THROW(load_code(testing::source_path("fixtures/codes/" + name + ".json")));
      continue;
    }
    QuantumChannel ch = load_channel(testing::source_path("fixtures/" + name + ".json"));
    EXPECT_TRUE(is_cptp(ch).cptp()) << name;
  }
  EXPECT_EQ(load_stochastic(testing::source_path("fixtures/cyclic_four.json")).matrix,
            stochastic_fixture("cyclic_four").matrix);
}

TEST(Io, StructureReportSchema) {
  FixedPointStructure s = noiseless_ips(quantum_fixture("depolarize_B"), 3);
  Json j = structure_report(s, ToleranceConfig{});
  for (const char* key : {"kind", "support_rank", "shape", "cofactors", "residuals", "tolerance", "seed"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["shape"], Json::array({2}));
  EXPECT_EQ(j["cofactors"], Json::array({2}));
  EXPECT_EQ(j["support_rank"], 4);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["tolerance"]["equality"], 1e-9);
}

TEST(Io, ReportsAreByteReproducible) {
  for (const char* name : {"depolarize_B", "if_control", "uncond_classical"}) {
    QuantumChannel ch = quantum_fixture(name);
    const std::string a = format_json(structure_report(noiseless_ips(ch, 21), ToleranceConfig{}));
    const std::string b = format_json(structure_report(noiseless_ips(ch, 21), ToleranceConfig{}));
    EXPECT_EQ(a, b) << name;
  }
}

TEST(Io, WriteTextFile) {
  const auto dir = std::filesystem::temp_directory_path() / "ipskit_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "x.json").string();
  write_text_file(path, "{}\n");
  EXPECT_EQ(slurp(path), "{}\n");
  EXPECT_THROW(write_text_file("/nonexistent/dir/x.json", "{}"), InputError);
}

}  // namespace
}  // namespace ipskit
