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

// Simple graphs, edge ideals and chordality.

#ifndef VNUM_GRAPH_HPP_
#define VNUM_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vnum/core.hpp"

namespace vnum {

// Vertices 0..n-1 (printed 1-based). At most 64 vertices.
class Graph {
 public:
  explicit Graph(std::size_t n);
  // Throws on loops, duplicate edges or out-of-range vertices.
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);

  std::size_t size() const { return adj_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i] >> j & 1U; }
  std::uint64_t neighbors(std::size_t i) const { return adj_[i]; }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // i < j, sorted
  std::size_t edge_count() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  void add_edge(std::size_t i, std::size_t j);
  std::vector<std::uint64_t> adj_;
};

// Same vertex set, complementary edges.
Graph complement(const Graph& g);
// Graph relabeled so that vertex v becomes perm[v].
Graph relabel(const Graph& g, const std::vector<std::size_t>& perm);

// (x_i x_j : {i,j} an edge) over x1..xn, or over the given context.
MonomialIdeal edge_ideal(const Graph& g);
MonomialIdeal edge_ideal(const Graph& g, const VarContext& ctx);

// Every later neighbour set along the order is a clique.
bool is_perfect_elimination_order(const Graph& g, const std::vector<std::size_t>& order);

// Maximum cardinality search (ties to the smallest index); the reversed
// visit order is verified as a perfect elimination order. Empty iff g is not
// chordal.
std::optional<std::vector<std::size_t>> find_peo(const Graph& g);

// Independent chordality test: scans vertex subsets for an induced cycle of
// length >= 4. Exponential; meant for small graphs.
bool has_long_induced_cycle(const Graph& g);

// find_peo(complement(g)) succeeds. Throws for an edgeless graph.
bool froberg_linear_resolution(const Graph& g);

struct NeighborhoodColon {
  std::size_t first_vertex = 0;      // first vertex of a PEO of the complement
  MonomialIdeal colon;               // (I(G) : x_first)
  MonomialIdeal neighborhood;        // (x_j : j in N_G(first))
  bool holds = false;
};

// (I(G) : x_1) = (x_j : j in N_G(1)) where 1 starts a perfect elimination
// order of the complement. Throws unless g is cochordal with an edge.
NeighborhoodColon neighborhood_colon_check(const Graph& g);

// All graphs on n vertices up to isomorphism (n <= 6), canonical
// representatives in a fixed order.
std::vector<Graph> graphs_up_to_isomorphism(std::size_t n);
// Every labeled graph on n vertices (n <= 6).
std::vector<Graph> all_labeled_graphs(std::size_t n);

}  // namespace vnum

#endif  // VNUM_GRAPH_HPP_
