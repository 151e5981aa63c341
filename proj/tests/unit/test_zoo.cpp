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

#include <set>

#include "test_support.hpp"

namespace ipskit {
namespace {

using testing::near;

TEST(Zoo, CyclicFourMatrix) {
  RealMatrix want(4, 4);
  want << 0.5, 0, 0, 0.5,
          0.5, 0.5, 0, 0,
          0, 0.5, 0.5, 0,
          0, 0, 0.5, 0.5;
  EXPECT_EQ(stochastic_fixture("cyclic_four").matrix, want);
}

TEST(Zoo, UncondClassicalMatrix) {
  RealMatrix want(4, 4);
  want << 1, 1, 0, 0,
          0, 0, 0.5, 0,
          0, 0, 0.5, 0.5,
          0, 0, 0, 0.5;
  EXPECT_EQ(stochastic_fixture("uncond_classical").matrix, want);
}

TEST(Zoo, DephasingKraus) {
  QuantumChannel ch = quantum_fixture("dephasing_qubit");
  ASSERT_EQ(ch.kraus.size(), 2u);
  EXPECT_EQ(ch.kraus[0], ket_bra(2, 0, 0));
  EXPECT_EQ(ch.kraus[1], ket_bra(2, 1, 1));
}

TEST(Zoo, EveryFixtureValidates) {
  for (const auto& name : fixture_names()) {
    const FixtureDescriptor& d = describe(name);
    if (d.kind == "code") {
      EXPECT_NO_THROW(validate(code_fixture(name))) << name;
      continue;
    }
    if (d.kind == "stochastic") EXPECT_NO_THROW(validate(stochastic_fixture(name))) << name;
    EXPECT_TRUE(is_cptp(quantum_fixture(name)).cptp()) << name;
  }
  for (const auto& name : code_fixture_names()) {
    Code c = code_fixture(name);
    EXPECT_EQ(c.dim(), quantum_fixture(code_fixture_channel(name)).dim_in) << name;
  }
}

TEST(Zoo, ExpectedShapesMatchPipelines) {
  for (const auto& d : fixture_catalog()) {
    if (d.kind == "code") continue;
    QuantumChannel ch = quantum_fixture(d.name);
    auto check = [&](const std::optional<ExpectedShape>& e, auto pipeline, const char* label) {
      if (!e) return;
      IpsShape got = pipeline(ch);
      EXPECT_EQ(got, make_shape(e->dims, e->cofactors)) << d.name << " " << label;
    };
    check(d.noiseless, [](const QuantumChannel& c) { return noiseless_ips(c).shape(); }, "noiseless");
    check(d.unitarily_noiseless, [](const QuantumChannel& c) { return unitarily_noiseless_ips(c).shape(); },
          "unitarily-noiseless");
    check(d.unconditional, [](const QuantumChannel& c) { return unconditional_ips(c).shape(); }, "unconditional");
  }
}

TEST(Zoo, UnknownNamesThrow) {
  EXPECT_THROW(fixture("nope"), InputError);
  EXPECT_THROW(describe("nope"), InputError);
  EXPECT_THROW(code_fixture("nope"), InputError);
}

TEST(Zoo, NamesAreUnique) {
  auto names = fixture_names();
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
}

TEST(Zoo, FiveQubitProjector) {
  Operator p = five_qubit_code_projector();
  EXPECT_TRUE(is_projector(p, 1e-12));
  EXPECT_NEAR(p.trace().real(), 2.0, 1e-12);
  for (const char* g : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) EXPECT_TRUE(near(Operator(pauli_string(g) * p), p, 1e-12));
  // Logical X commutes with the stabilizers.
  Operator lx = pauli_string("XXXXX");
  EXPECT_TRUE(near(Operator(lx * p), Operator(p * lx), 1e-12));
}

TEST(Zoo, FiveQubitChannelIsUniformMixture) {
  QuantumChannel ch = quantum_fixture("five_qubit_depolarize_one");
  EXPECT_EQ(ch.dim_in, 32);
  EXPECT_EQ(ch.kraus.size(), 16u);
  // One qubit chosen with probability 1/5, then fully depolarized.
  Operator oracle = Operator::Zero(1024, 1024);
  for (int q = 0; q < 5; ++q)
    for (char c : std::string("IXYZ")) {
      std::string word(5, 'I');
      word[static_cast<std::size_t>(q)] = c;
      Operator k = pauli_string(word);
      oracle += (1.0 / 20.0) * kron(Operator(k.conjugate()), k);
    }
  EXPECT_LT(max_abs(to_superoperator(ch).matrix - oracle), 1e-14);
  EXPECT_TRUE(is_unital(ch));
}

TEST(Zoo, ExampleUnitary) {
  Operator u = example_unitary();
  EXPECT_NEAR(std::arg(u(0, 0)), -0.7, 1e-15);
  EXPECT_NEAR(std::arg(u(1, 1)), 0.7, 1e-15);
}

TEST(Zoo, RandomCptpIsExact) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    QuantumChannel ch = random_cptp(3, 2, seed);
    CptpReport r = is_cptp(ch, 1e-12);
    EXPECT_TRUE(r.cptp());
    EXPECT_LT(r.tp_residual, 1e-12);
  }
}

TEST(Zoo, RandomDfsHasPlantedSector) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    FixedPointStructure s = noiseless_ips(random_dfs_channel(4, 2, seed));
    int best = 0;
    for (int d : s.shape().dims) best = std::max(best, d);
    EXPECT_GE(best, 2) << seed;
    Operator p = random_dfs_projector(4, 2, seed);
    EXPECT_NEAR(p.trace().real(), 2.0, 1e-12);
  }
}

TEST(Zoo, PlantedStructureIsRecovered) {
  PlantedChannel pc = random_structured_channel({{2, 1}, {1, 3}, {2, 2}}, 2, 3, 12);
  EXPECT_EQ(noiseless_ips(pc.channel).shape(), pc.shape);
  EXPECT_EQ(pc.shape, make_shape({2, 2, 1}, {2, 1, 3}));
}

TEST(Zoo, SeedsReproduceChannels) {
  QuantumChannel a = random_cptp(3, 3, 7), b = random_cptp(3, 3, 7);
  for (std::size_t i = 0; i < a.kraus.size(); ++i) EXPECT_EQ(a.kraus[i], b.kraus[i]);
  QuantumChannel c = random_qubit_channel(13), d = random_qubit_channel(13);
  ASSERT_EQ(c.kraus.size(), d.kraus.size());
  for (std::size_t i = 0; i < c.kraus.size(); ++i) EXPECT_EQ(c.kraus[i], d.kraus[i]);
  EXPECT_NE(random_cptp(3, 3, 8).kraus[0], a.kraus[0]);
}

TEST(Zoo, SourcesNamed) {
  EXPECT_EQ(to_string(Source::kExample), "example");
  EXPECT_EQ(to_string(Source::kConstruction), "construction");
  EXPECT_EQ(to_string(Source::kComputed), "computed");
}

}  // namespace
}  // namespace ipskit
