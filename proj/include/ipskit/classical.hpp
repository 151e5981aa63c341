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
#include <utility>
#include <vector>

#include "ipskit/channel.hpp"

namespace ipskit {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
  bool operator==(const Graph&) const = default;
};

Graph make_graph(int n, std::vector<std::pair<int, int>> edges);
bool adjacent(const Graph& g, int i, int j);

Graph adjacency_graph(const StochasticChannel& sc, double threshold = 1e-12);

constexpr int kMaxSearchVertices = 30;

// Maximum independent set, lexicographically smallest among the maximum ones.
std::vector<int> maximum_independent_set(const Graph& g);
std::vector<int> max_zero_error_code(const StochasticChannel& sc);

std::vector<std::vector<int>> all_maximum_independent_sets(const Graph& g);
std::vector<std::vector<int>> all_maximal_independent_sets(const Graph& g);

bool is_independent(const Graph& g, const std::vector<int>& set);
bool is_maximal_independent(const Graph& g, const std::vector<int>& set);

// n inputs, n^2 outputs; output (a, b) has index a * n + b. Input v is spread
// uniformly over (v, x) for all x and over (u, v) for each neighbour u.
StochasticChannel graph_to_channel(const Graph& h);

}  // namespace ipskit
