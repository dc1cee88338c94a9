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

#include "sbrep/graphs.hpp"

#include <numeric>
#include <sstream>

#include "sbrep/represent.hpp"
#include "sbrep/text.hpp"

namespace sbrep {

namespace {

void check_edges(const Graph& g) {
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices)
      fail(ErrorCode::kElementOutOfRange, "edge endpoint out of range");
  }
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false if x and y were already connected.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

}  // namespace

SbMatrix incidence_matrix(const Graph& g) {
  check_edges(g);
  SbMatrix a(g.vertices, g.edge_count(), SbElem::kZero);
  for (int j = 0; j < g.edge_count(); ++j) {
    auto [u, v] = g.edges[j];
    if (u == v) continue;  // self-loop column stays zero
    a.set(u, j, SbElem::kOne);
    a.set(v, j, SbElem::kOne);
  }
  return a;
}

Hereditary graphic_matroid(const Graph& g) {
  check_edges(g);
  SbMatrix inc = incidence_matrix(g);
  GfMatrix f2(2, inc.rows(), inc.cols());
  for (int r = 0; r < inc.rows(); ++r)
    for (int c = 0; c < inc.cols(); ++c)
      f2.set(r, c, inc.at(r, c) == SbElem::kOne ? 1 : 0);
  return vector_matroid(f2);
}

bool is_forest(const Graph& g, Subset edge_set) {
  check_edges(g);
  if (!is_subset_of(edge_set, full_set(g.edge_count())))
    fail(ErrorCode::kElementOutOfRange, "edge subset out of range");
  UnionFind uf(g.vertices);
  for (int j : elements_of(edge_set)) {
    auto [u, v] = g.edges[j];
    if (u == v) return false;  // a loop is a cycle
    if (!uf.unite(u, v)) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.vertices <= 1) return true;
  UnionFind uf(g.vertices);
  int components = g.vertices;
  for (auto [u, v] : g.edges)
    if (u != v && uf.unite(u, v)) --components;
  return components == 1;
}

bool boolean_graphic_equals_gf2(const Graph& g) {
  check_edges(g);
  if (!is_connected(g))
    fail(ErrorCode::kDisconnected, "graph must be connected");
  return vector_hc(incidence_matrix(g)) == graphic_matroid(g);
}

BipartiteGraph bipartite_of(const SbMatrix& a) {
  if (!a.is_boolean())
    fail(ErrorCode::kGhostEntry, "bipartite view requires a boolean matrix");
  BipartiteGraph b{a.rows(), a.cols(), {}};
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (a.at(r, c) == SbElem::kOne) b.edges.emplace_back(r, c);
  return b;
}

namespace {

int count_matchings_rec(const std::vector<Subset>& neighbors_of_right,
                        const std::vector<int>& right_vertices,
                        std::size_t index, Subset used_left, int limit) {
  if (index == right_vertices.size()) return 1;
  int total = 0;
  Subset options = neighbors_of_right[right_vertices[index]] & ~used_left;
  for (int l : elements_of(options)) {
    total += count_matchings_rec(neighbors_of_right, right_vertices,
                                 index + 1, used_left | (Subset{1} << l),
                                 limit - total);
    if (total >= limit) return total;
  }
  return total;
}

}  // namespace

int count_matchings_onto(const BipartiteGraph& b, Subset x, Subset y,
                         int limit) {
  if (!is_subset_of(x, full_set(b.right)) || !is_subset_of(y, full_set(b.left)))
    fail(ErrorCode::kElementOutOfRange, "vertex subset out of range");
  std::vector<Subset> neighbors(b.right, 0);
  for (auto [l, r] : b.edges)
    if (contains(y, l)) neighbors[r] |= Subset{1} << l;
  return count_matchings_rec(neighbors, elements_of(x), 0, 0, limit);
}

bool has_unique_matching_onto(const BipartiteGraph& b, Subset x, Subset y) {
  if (subset_size(x) != subset_size(y))
    fail(ErrorCode::kSizeMismatch, "matching requires |X| == |Y|");
  return count_matchings_onto(b, x, y, 2) == 1;
}

Graph parse_graph(std::string_view text) {
  std::vector<std::vector<std::string>> lines = split_lines_tokens(text);
  if (lines.empty()) fail(ErrorCode::kParse, "empty graph file");
  const auto& header = lines[0];
  if (header.size() != 3 || header[0] != "graph")
    fail(ErrorCode::kParse, "graph file must start with 'graph <nv> <ne>'");
  int nv = parse_count(header[1], "vertex count");
  int ne = parse_count(header[2], "edge count");
  if (static_cast<int>(lines.size()) != ne + 1)
    fail(ErrorCode::kParse, "expected " + std::to_string(ne) + " edge lines");
  Graph g{nv, {}};
  for (int i = 0; i < ne; ++i) {
    const auto& line = lines[i + 1];
    if (line.size() != 3 || line[0] != "e")
      fail(ErrorCode::kParse, "edge lines must be 'e <u> <v>'");
    int u = parse_count(line[1], "endpoint");
    int v = parse_count(line[2], "endpoint");
    if (u < 1 || u > nv || v < 1 || v > nv)
      fail(ErrorCode::kParse, "endpoint outside 1.." + std::to_string(nv));
    g.edges.emplace_back(u - 1, v - 1);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.vertices << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
  return out.str();
}

}  // namespace sbrep
