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

#ifndef SBREP_GRAPHS_HPP_
#define SBREP_GRAPHS_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sbrep/field.hpp"
#include "sbrep/hereditary.hpp"
#include "sbrep/matrix.hpp"

namespace sbrep {

// Undirected multigraph; self-loops allowed. Edge order is significant: the
// edge index labels the matroid ground element, so parallel edges stay
// distinguishable even though their incidence columns coincide.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based endpoints

  int edge_count() const { return static_cast<int>(edges.size()); }
};

struct BipartiteGraph {
  int left = 0;   // rows
  int right = 0;  // columns
  std::vector<std::pair<int, int>> edges;  // (left, right), 0-based
};

// |V| x |E| boolean incidence matrix; a self-loop contributes a zero column.
SbMatrix incidence_matrix(const Graph& g);

// The cycle matroid on the edges: independent = forest. Computed as the
// vector matroid of the incidence matrix over GF(2).
Hereditary graphic_matroid(const Graph& g);

// Acyclicity of an edge subset via union-find.
bool is_forest(const Graph& g, Subset edge_set);

bool is_connected(const Graph& g);

// Executable form of the claim that the boolean and GF(2) readings of the
// incidence matrix produce the same matroid on a connected graph.
bool boolean_graphic_equals_gf2(const Graph& g);

// Rows become left vertices, columns right vertices, edges at the 1-entries.
BipartiteGraph bipartite_of(const SbMatrix& a);

// Exactly one perfect matching of the right subset x onto the left subset y.
bool has_unique_matching_onto(const BipartiteGraph& b, Subset x, Subset y);

// Counts perfect matchings of x onto y, stopping at `limit`.
int count_matchings_onto(const BipartiteGraph& b, Subset x, Subset y,
                         int limit);

// Graph file format:
//   line 1: "graph <nv> <ne>"
//   then ne lines "e <u> <v>", 1-based; u == v is a self-loop.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

}  // namespace sbrep

#endif  // SBREP_GRAPHS_HPP_
