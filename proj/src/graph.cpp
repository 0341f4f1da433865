// Copyright 2026 The Authors.
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

#include "vnum/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace vnum {

Graph::Graph(std::size_t n) : adj_(n, 0) {
  if (n > 64) throw Error("graphs are limited to 64 vertices");
}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : Graph(n) {
  for (const auto& [i, j] : edges) {
    if (i >= n || j >= n) throw Error("edge endpoint out of range");
    if (i == j) throw Error("loop at vertex " + std::to_string(i + 1));
    if (adjacent(i, j)) {
      throw Error("duplicate edge " + std::to_string(i + 1) + " " + std::to_string(j + 1));
    }
    add_edge(i, j);
  }
}

void Graph::add_edge(std::size_t i, std::size_t j) {
  adj_[i] |= std::uint64_t{1} << j;
  adj_[j] |= std::uint64_t{1} << i;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw Error("a cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto a : adj_) twice += std::popcount(a);
  return twice / 2;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph relabel(const Graph& g, const std::vector<std::size_t>& perm) {
  if (perm.size() != g.size()) throw Error("relabeling has the wrong length");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [i, j] : g.edges()) edges.emplace_back(perm[i], perm[j]);
  return Graph(g.size(), edges);
}

MonomialIdeal edge_ideal(const Graph& g, const VarContext& ctx) {
  if (ctx.size() != g.size()) throw Error("context size does not match vertex count");
  std::vector<Exponents> gens;
  for (const auto& [i, j] : g.edges()) {
    Exponents e(g.size(), 0);
    e[i] = 1;
    e[j] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(ctx, std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& g) {
  return edge_ideal(g, VarContext::numbered("x", g.size()));
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.size();
  if (order.size() != n) return false;
  std::uint64_t later = 0;
  for (auto v : order) later |= std::uint64_t{1} << v;
  for (auto v : order) {
    later &= ~(std::uint64_t{1} << v);
    const auto nb = g.neighbors(v) & later;
    for (std::size_t a = 0; a < n; ++a) {
      if (!(nb >> a & 1U)) continue;
      // Every other later neighbour must be adjacent to a.
      if ((nb & ~(std::uint64_t{1} << a) & ~g.neighbors(a)) != 0) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> find_peo(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<std::size_t> visit;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!visited[v] && (best == n || weight[v] > weight[best])) best = v;
    }
    visited[best] = 1;
    visit.push_back(best);
    for (std::size_t u = 0; u < n; ++u) {
      if (!visited[u] && g.adjacent(best, u)) ++weight[u];
    }
  }
  std::reverse(visit.begin(), visit.end());
  if (!is_perfect_elimination_order(g, visit)) return std::nullopt;
  return visit;
}

bool has_long_induced_cycle(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 20) throw Error("induced cycle scan is limited to 20 vertices");
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (std::popcount(s) < 4) continue;
    bool two_regular = true;
    for (std::size_t v = 0; v < n && two_regular; ++v) {
      if (s >> v & 1U) two_regular = std::popcount(g.neighbors(v) & s) == 2;
    }
    if (!two_regular) continue;
    // A connected 2-regular graph is a cycle.
    const auto start = static_cast<std::size_t>(std::countr_zero(s));
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (frontier >> v & 1U) next |= g.neighbors(v) & s;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == s) return true;
  }
  return false;
}

bool froberg_linear_resolution(const Graph& g) {
  if (g.edge_count() == 0) throw Error("edgeless graph has the zero edge ideal");
  return find_peo(complement(g)).has_value();
}

NeighborhoodColon neighborhood_colon_check(const Graph& g) {
  if (g.edge_count() == 0) throw Error("edgeless graph has the zero edge ideal");
  const auto peo = find_peo(complement(g));
  if (!peo) throw Error("graph is not cochordal");
  const auto ctx = VarContext::numbered("x", g.size());
  const auto ideal = edge_ideal(g, ctx);
  const auto first = peo->front();
  std::vector<Exponents> nb;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (!g.adjacent(first, j)) continue;
    Exponents e(g.size(), 0);
    e[j] = 1;
    nb.push_back(std::move(e));
  }
  NeighborhoodColon out{first, colon(ideal, Monomial::variable(ctx, first)),
                        MonomialIdeal(ctx, std::move(nb)), false};
  out.holds = !out.neighborhood.is_zero() && out.colon == out.neighborhood;
  return out;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> pair_list(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

Graph from_mask(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                std::uint64_t mask) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if (mask >> e & 1U) edges.push_back(pairs[e]);
  }
  return Graph(n, edges);
}

}  // namespace

std::vector<Graph> all_labeled_graphs(std::size_t n) {
  if (n > 6) throw Error("labeled graph enumeration is limited to 6 vertices");
  const auto pairs = pair_list(n);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    out.push_back(from_mask(n, pairs, mask));
  }
  return out;
}

std::vector<Graph> graphs_up_to_isomorphism(std::size_t n) {
  if (n > 6) throw Error("isomorphism class enumeration is limited to 6 vertices");
  const auto pairs = pair_list(n);
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    index[pairs[e].first][pairs[e].second] = e;
    index[pairs[e].second][pairs[e].first] = e;
  }
  // edge_maps[p][e]: image of edge e under vertex permutation p.
  std::vector<std::vector<std::size_t>> edge_maps;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> m(pairs.size());
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      m[e] = index[perm[pairs[e].first]][perm[pairs[e].second]];
    }
    edge_maps.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    bool minimal = true;
    for (const auto& m : edge_maps) {
      std::uint64_t img = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mask >> e & 1U) img |= std::uint64_t{1} << m[e];
      }
      if (img < mask) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(from_mask(n, pairs, mask));
  }
  return out;
}

}  // namespace vnum
