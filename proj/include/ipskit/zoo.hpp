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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ipskit/codes.hpp"

namespace ipskit {

using Fixture = std::variant<QuantumChannel, StochasticChannel, Code>;

enum class Source { kExample, kConstruction, kComputed };
std::string to_string(Source s);

struct ExpectedShape {
  std::vector<int> dims;
  std::vector<int> cofactors;
  Source source = Source::kComputed;
};

struct FixtureDescriptor {
  std::string name;
  std::string kind;  // "channel", "stochastic" or "code"
  std::string summary;
  std::optional<ExpectedShape> noiseless;
  std::optional<ExpectedShape> unitarily_noiseless;
  std::optional<ExpectedShape> unconditional;
};

const std::vector<FixtureDescriptor>& fixture_catalog();
const FixtureDescriptor& describe(const std::string& name);
std::vector<std::string> fixture_names();
Fixture fixture(const std::string& name);
// Channel fixtures, with stochastic maps embedded.
QuantumChannel quantum_fixture(const std::string& name);
StochasticChannel stochastic_fixture(const std::string& name);

std::vector<std::string> code_fixture_names();
Code code_fixture(const std::string& name);
// Channel each shipped code is meant to be checked against.
std::string code_fixture_channel(const std::string& name);

// Building blocks shared by fixtures and tests.
Operator pauli(int i);
Operator pauli_string(const std::string& word);
Operator five_qubit_code_projector();
Operator example_unitary();  // exp(-0.7 i sigma_z)
QuantumChannel amplitude_damping(double gamma);
QuantumChannel dephasing(const Operator& basis, double strength);

QuantumChannel random_cptp(int d, int kraus_count, std::uint64_t seed);
QuantumChannel random_unital_channel(int d, int unitaries, std::uint64_t seed);

struct PlantedChannel {
  QuantumChannel channel;
  Operator code_projector;  // support of the planted sectors
  std::vector<Operator> sector_isometries;
  IpsShape shape;
};

struct PlantedSector {
  int d = 1;
  int n = 1;
};

// Kraus operators W [[(+)_k 1 kron K_ik, D_i], [0, C_i]] W^dagger with
// random K, D, C and a random unitary W.
PlantedChannel random_structured_channel(const std::vector<PlantedSector>& sectors, int complement_dim,
                                         int kraus_count, std::uint64_t seed);
QuantumChannel random_dfs_channel(int d, int dfs_dim, std::uint64_t seed);
Operator random_dfs_projector(int d, int dfs_dim, std::uint64_t seed);

// Qubit channels of several families, chosen by seed.
QuantumChannel random_qubit_channel(std::uint64_t seed);

}  // namespace ipskit
