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

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ipskit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fx(const std::string& rel) { return testing::source_path("fixtures/" + rel); }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "ipskit_cli_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / name).string();
  write_text_file(path, text);
  return path;
}

TEST(Cli, AnalyzeDephasing) {
  Result r = run({"analyze", "--channel", fx("dephasing_qubit.json"), "--mode", "noiseless"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["shape"], Json::array({1, 1}));
  EXPECT_EQ(j["kind"], "noiseless");
}

TEST(Cli, AnalyzeDepolarizeB) {
  Result r = run({"analyze", "--channel", fx("depolarize_B.json")});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["shape"], Json::array({2}));
  EXPECT_EQ(j["cofactors"], Json::array({2}));
}

TEST(Cli, AnalyzeModesAndText) {
  Result u = run({"analyze", "--channel", fx("unitary_A_depolarize_B.json"), "--mode", "unitarily-noiseless", "--text"});
  ASSERT_EQ(u.code, 0);
  EXPECT_NE(u.out.find("shape: [2]"), std::string::npos);
  EXPECT_NE(u.out.find("kind: \"unitarily-noiseless\""), std::string::npos);
  Result c = run({"analyze", "--channel", fx("uncond_classical.json"), "--mode", "unconditional"});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(Json::parse(c.out)["shape"], Json::array({1, 1}));
  Result f = run({"analyze", "--channel", fx("if_control.json"), "--mode", "fixed-structure"});
  ASSERT_EQ(f.code, 0);
  Json fj = Json::parse(f.out);
  EXPECT_EQ(fj["initialization_free"], Json::array({true, false}));
  EXPECT_TRUE(fj["triangular"]["ok"].get<bool>());
}

TEST(Cli, AnalyzeStochasticFileIsEmbedded) {
  Result r = run({"analyze", "--channel", fx("cyclic_four.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["cofactors"], Json::array({4}));
}

TEST(Cli, TolAndSeedAreRecorded) {
  Result r = run({"analyze", "--channel", fx("dephasing_qubit.json"), "--tol", "1e-7", "--seed", "5"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["tolerance"]["equality"], 1e-7);
  EXPECT_EQ(j["tolerance"]["structure"], 1e-7);
  EXPECT_EQ(j["seed"], 5);
}

TEST(Cli, AnalyzeIsByteReproducible) {
  std::vector<std::string> args = {"analyze", "--channel", fx("if_control.json"), "--mode", "fixed-structure",
                                   "--seed", "9"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({"analyze", "--channel", testing::source_path("tests/cli/malformed.json")}).code, 2);
  EXPECT_EQ(run({"analyze", "--channel", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"analyze", "--channel", fx("dephasing_qubit.json"), "--mode", "bogus"}).code, 2);
  EXPECT_EQ(run({"bogus-verb"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  const std::string not_tp = temp_file("not_tp.json", R"({"dim_in": 1, "dim_out": 1, "kraus": [[[0.5]]]})");
  Result r = run({"analyze", "--channel", not_tp});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("input error"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, VerifyCodeLevels) {
  Result p = run({"verify-code", "--channel", fx("cyclic_four.json"), "--code", fx("codes/cyclic_four_02.json"),
                  "--level", "preserved"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out.rfind("verdict: pass\n", 0), 0u);
  Result n = run({"verify-code", "--channel", fx("cyclic_four.json"), "--code", fx("codes/cyclic_four_02.json"),
                  "--level", "noiseless"});
  EXPECT_EQ(n.code, 1);
  EXPECT_EQ(n.out.rfind("verdict: fail\n", 0), 0u);
  Result pm = run({"verify-code", "--channel", fx("dephasing_qubit.json"), "--code",
                   fx("codes/dephasing_plusminus.json")});
  EXPECT_EQ(pm.code, 1);
  Result fixed = run({"verify-code", "--channel", fx("dephasing_qubit.json"), "--code", fx("codes/dephasing_cbit.json"),
                      "--level", "fixed"});
  EXPECT_EQ(fixed.code, 0);
  Result mismatch = run({"verify-code", "--channel", fx("dephasing_qubit.json"), "--code",
                         fx("codes/cyclic_four_02.json")});
  EXPECT_EQ(mismatch.code, 2);
}

TEST(Cli, VerifyCodeReportJson) {
  Result p = run({"verify-code", "--channel", fx("qutrit_half_fail.json"), "--code",
                  fx("codes/qutrit_half_fail_code.json")});
  ASSERT_EQ(p.code, 1);
  Json j = Json::parse(p.out.substr(p.out.find('\n') + 1));
  EXPECT_EQ(j["level"], "preserved");
  EXPECT_FALSE(j["verdict"].get<bool>());
  EXPECT_LT(j["distance_after"].get<double>(), j["distance_before"].get<double>());
}

TEST(Cli, TransposeFullDephasing) {
  Result r = run({"transpose", "--channel", fx("dephasing_qubit.json"), "--full"});
  ASSERT_EQ(r.code, 0);
  QuantumChannel hat = channel_from_json(Json::parse(r.out));
  EXPECT_TRUE(testing::near(to_superoperator(hat).matrix, to_superoperator(quantum_fixture("dephasing_qubit")).matrix,
                            1e-12));
  EXPECT_NE(r.err.find("tp_residual"), std::string::npos);
}

TEST(Cli, TransposeUnitaryGivesInverse) {
  Rng rng(4);
  Operator u = random_unitary(2, rng);
  const std::string path = temp_file("unitary.json", format_json(channel_to_json(unitary_channel(u))));
  Result r = run({"transpose", "--channel", path, "--full"});
  ASSERT_EQ(r.code, 0);
  QuantumChannel hat = channel_from_json(Json::parse(r.out));
  ASSERT_EQ(hat.kraus.size(), 1u);
  Operator k = hat.kraus[0];
  Complex phase = (k * u).trace() / 2.0;
  EXPECT_NEAR(std::abs(phase), 1.0, 1e-12);
  EXPECT_TRUE(testing::near(k, Operator(phase * u.adjoint()), 1e-12));
}

TEST(Cli, TransposeProjectorFile) {
  Result r = run({"transpose", "--channel", fx("five_qubit_depolarize_one.json"), "--projector",
                  fx("five_qubit_code_projector.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["dim_out"], 32);
}

TEST(Cli, TransposeErrors) {
  EXPECT_EQ(run({"transpose", "--channel", fx("dephasing_qubit.json"), "--projector",
                 testing::source_path("tests/cli/zero_projector.json")})
                .code,
            3);
  EXPECT_EQ(run({"transpose", "--channel", fx("dephasing_qubit.json")}).code, 2);
  const std::string half = temp_file("half.json", R"({"projector": [[0.5, 0], [0, 0.5]]})");
  EXPECT_EQ(run({"transpose", "--channel", fx("dephasing_qubit.json"), "--projector", half}).code, 2);
}

TEST(Cli, ClassicalMaxcode) {
  Result r = run({"classical-maxcode", "--stochastic", fx("cyclic_four.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "code: [0, 2]\nsize: 2\n");
  Result j = run({"classical-maxcode", "--stochastic", fx("two_code_classical.json"), "--json"});
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(Json::parse(j.out)["code"], Json::array({0, 1}));
  std::vector<std::vector<double>> cols(31, std::vector<double>(31, 0.0));
  for (int i = 0; i < 31; ++i) cols[i][i] = 1.0;
  const std::string big = temp_file("big.json", format_json(stochastic_to_json(stochastic_from_columns(cols))));
  EXPECT_EQ(run({"classical-maxcode", "--stochastic", big}).code, 2);
  EXPECT_EQ(run({"classical-maxcode", "--stochastic", fx("dephasing_qubit.json")}).code, 2);
}

TEST(Cli, FixturesListAndWrite) {
  Result l = run({"fixtures", "--list"});
  ASSERT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("five_qubit_depolarize_one\n"), std::string::npos);
  const auto dir = std::filesystem::temp_directory_path() / "ipskit_cli_fixtures";
  std::filesystem::remove_all(dir);
  Result w = run({"fixtures", "--out", dir.string()});
  ASSERT_EQ(w.code, 0);
  for (const auto& [rel, text] : fixture_documents()) {
    std::ifstream in(dir / rel);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), text) << rel;
  }
}

}  // namespace
}  // namespace ipskit
