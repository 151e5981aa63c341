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

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ipskit/classical.hpp"
#include "ipskit/codes.hpp"
#include "ipskit/ips.hpp"
#include "ipskit/zoo.hpp"

namespace ipskit {

using Json = nlohmann::json;

// Matrices are row lists of [re, im] pairs; plain numbers parse as reals.
Json matrix_to_json(const Operator& m);
Operator matrix_from_json(const Json& j);

Json channel_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const Json& j);
Json stochastic_to_json(const StochasticChannel& sc);
StochasticChannel stochastic_from_json(const Json& j);
Json code_to_json(const Code& code);
Code code_from_json(const Json& j);
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json shape_to_json(const IpsShape& s);
IpsShape shape_from_json(const Json& j);
Json projector_to_json(const Operator& p);
Operator projector_from_json(const Json& j);

Json tolerance_to_json(const ToleranceConfig& tol);
Json structure_report(const FixedPointStructure& s, const ToleranceConfig& tol);
Json preservation_to_json(const PreservationReport& r);

// Stable layout: objects indented, numeric rows inline.
std::string format_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Channel file in either the Kraus or the stochastic format.
std::variant<QuantumChannel, StochasticChannel> parse_channel_document(const Json& j);
QuantumChannel load_channel(const std::string& path);
StochasticChannel load_stochastic(const std::string& path);
Code load_code(const std::string& path);

// Relative path and contents of every shipped fixture file.
std::vector<std::pair<std::string, std::string>> fixture_documents();
Json catalog_to_json();

}  // namespace ipskit
