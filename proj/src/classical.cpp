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

#include "ipskit/classical.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ipskit {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw InputError("graph vertex count must be nonnegative");
  for (auto& e : edges) {
    if (e.first == e.second) throw InputError("graph has a self-loop");
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n) throw InputError("edge vertex out of range");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{n, std::move(edges)};
}

bool adjacent(const Graph& g, int i, int j) {
  if (i > j) std::swap(i, j);
  return std::binary_search(g.edges.begin(), g.edges.end(), std::make_pair(i, j));
}

Graph adjacency_graph(const StochasticChannel& sc, double threshold) {
  validate(sc);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < sc.n_in; ++i)
    for (int j = i + 1; j < sc.n_in; ++j)
      for (int k = 0; k < sc.n_out; ++k)
        if (sc.matrix(k, i) > threshold && sc.matrix(k, j) > threshold) {
          edges.emplace_back(i, j);
          break;
        }
  return make_graph(sc.n_in, std::move(edges));
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> neighbour_masks(const Graph& g) {
  if (g.n > kMaxSearchVertices)
    throw InputError("independent-set search is limited to " + std::to_string(kMaxSearchVertices) + " vertices");
  std::vector<Mask> nb(static_cast<std::size_t>(g.n), 0);
  for (auto [i, j] : g.edges) {
    nb[i] |= Mask{1} << j;
    nb[j] |= Mask{1} << i;
  }
  return nb;
}

// Greedy clique cover of the candidate set: an upper bound on the
// independence number of the induced subgraph.
int clique_cover_bound(Mask cand, const std::vector<Mask>& nb) {
  int cliques = 0;
  while (cand) {
    Mask clique = 0;
    Mask pool = cand;
    while (pool) {
      const int v = std::countr_zero(pool);
      pool &= ~(Mask{1} << v);
      if ((nb[v] & clique) == clique) clique |= Mask{1} << v;
    }
    cand &= ~clique;
    ++cliques;
  }
  return cliques;
}

struct Search {
  const std::vector<Mask>& nb;
  bool collect_all;
  int best_size = -1;
  std::vector<Mask> found;

  void run(Mask current, int size, Mask cand) {
    if (!cand) {
      if (size > best_size) {
        best_size = size;
        found.assign(1, current);
      } else if (collect_all && size == best_size) {
        found.push_back(current);
      }
      return;
    }
    const int bound = size + clique_cover_bound(cand, nb);
    if (collect_all ? bound < best_size : bound <= best_size) return;
    const int v = std::countr_zero(cand);
    const Mask bit = Mask{1} << v;
    run(current | bit, size + 1, cand & ~bit & ~nb[v]);
    run(current, size, cand & ~bit);
  }
};

std::vector<int> to_list(Mask m) {
  std::vector<int> out;
  while (m) {
    const int v = std::countr_zero(m);
    out.push_back(v);
    m &= m - 1;
  }
  return out;
}

Mask all_vertices(int n) { return n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }

}  // namespace

std::vector<int> maximum_independent_set(const Graph& g) {
  auto nb = neighbour_masks(g);
  if (g.n == 0) return {};
  Search s{nb, false};
  s.run(0, 0, all_vertices(g.n));
  return to_list(s.found.front());
}

std::vector<int> max_zero_error_code(const StochasticChannel& sc) {
  return maximum_independent_set(adjacency_graph(sc));
}

std::vector<std::vector<int>> all_maximum_independent_sets(const Graph& g) {
  auto nb = neighbour_masks(g);
  if (g.n == 0) return {{}};
  Search s{nb, true};
  s.run(0, 0, all_vertices(g.n));
  std::vector<std::vector<int>> out;
  for (Mask m : s.found) out.push_back(to_list(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> all_maximal_independent_sets(const Graph& g) {
  auto nb = neighbour_masks(g);
  std::vector<std::vector<int>> out;
  // Bron-Kerbosch on the complement graph.
  const Mask all = all_vertices(g.n);
  std::vector<Mask> cnb(nb.size());
  for (int v = 0; v < g.n; ++v) cnb[v] = all & ~nb[v] & ~(Mask{1} << v);
  auto rec = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
    if (!p && !x) {
      out.push_back(to_list(r));
      return;
    }
    while (p) {
      const int v = std::countr_zero(p);
      const Mask bit = Mask{1} << v;
      self(self, r | bit, p & cnb[v], x & cnb[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  rec(rec, 0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_independent(const Graph& g, const std::vector<int>& set) {
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      if (set[a] == set[b] || adjacent(g, set[a], set[b])) return false;
  return true;
}

bool is_maximal_independent(const Graph& g, const std::vector<int>& set) {
  if (!is_independent(g, set)) return false;
  for (int v = 0; v < g.n; ++v) {
    if (std::find(set.begin(), set.end(), v) != set.end()) continue;
    std::vector<int> bigger = set;
    bigger.push_back(v);
    if (is_independent(g, bigger)) return false;
  }
  return true;
}

StochasticChannel graph_to_channel(const Graph& h) {
  const int n = h.n;
  if (n <= 0) throw InputError("graph must have at least one vertex");
  StochasticChannel sc;
  sc.n_in = n;
  sc.n_out = n * n;
  sc.matrix = RealMatrix::Zero(sc.n_out, n);
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  for (auto [i, j] : h.edges) {
    nbrs[i].push_back(j);
    nbrs[j].push_back(i);
  }
  for (int v = 0; v < n; ++v) {
    const double w = 1.0 / static_cast<double>(n + nbrs[v].size());
    for (int x = 0; x < n; ++x) sc.matrix(v * n + x, v) = w;
    for (int u : nbrs[v]) sc.matrix(u * n + v, v) = w;
  }
  return sc;
}

}  // namespace ipskit
