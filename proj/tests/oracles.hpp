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

// Test-only brute-force oracles, kept independent of the library's
// production code paths.

#ifndef SBREP_TESTS_ORACLES_HPP_
#define SBREP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sbrep/graphs.hpp"
#include "sbrep/hereditary.hpp"
#include "sbrep/matrix.hpp"
#include "sbrep/semiring.hpp"

namespace sbrep::oracle {

// Literal permutation sum: per(A) = sum over pi of prod_i a(pi(i), i).
inline SbElem per_brute(const SbMatrix& a) {
  int n = a.rows();
  if (n == 0) return SbElem::kOne;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SbElem acc = SbElem::kZero;
  do {
    SbElem term = SbElem::kOne;
    for (int col = 0; col < n; ++col) term = sb_mul(term, a.at(perm[col], col));
    acc = sb_add(acc, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Dependence by the definition: some 0/1 coefficients, not all zero, send
// the combination into the ghost ideal coordinatewise.
inline bool alpha_dependent_rows(const SbMatrix& a) {
  int m = a.rows(), n = a.cols();
  for (Subset alpha = 1; alpha < (Subset{1} << m); ++alpha) {
    bool all_ghost = true;
    for (int c = 0; c < n && all_ghost; ++c) {
      SbElem sum = SbElem::kZero;
      for (int r = 0; r < m; ++r)
        if (contains(alpha, r)) sum = sb_add(sum, a.at(r, c));
      if (sum == SbElem::kOne) all_ghost = false;
    }
    if (all_ghost) return true;
  }
  return false;
}

// Column independence by witness enumeration: some equicardinal row subset
// has brute-force permanent 1.
inline bool witness_independent_cols(const SbMatrix& a, Subset cols) {
  int k = subset_size(cols);
  if (k == 0) return true;
  if (k > a.rows()) return false;
  Subset row_limit = Subset{1} << a.rows();
  for (Subset rows = 0; rows < row_limit; ++rows) {
    if (subset_size(rows) != k) continue;
    if (per_brute(a.submatrix(rows, cols)) == SbElem::kOne) return true;
  }
  return false;
}

// The augmentation axiom checked verbatim, with no shortcuts.
inline bool mt_oracle(const Hereditary& h) {
  int n = h.ground_size();
  std::vector<Subset> ind;
  for (Subset s = 0; s < (Subset{1} << n); ++s)
    if (h.is_independent(s)) ind.push_back(s);
  for (Subset i : ind)
    for (Subset j : ind) {
      if (subset_size(i) != subset_size(j) + 1) continue;
      bool ok = false;
      for (int e : elements_of(i & ~j))
        if (h.is_independent(j | (Subset{1} << e))) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  return true;
}

// Spanning-tree test by direct reachability, independent of union-find and
// of the incidence-matrix route.
inline bool is_spanning_tree(const Graph& g, Subset edge_set) {
  if (subset_size(edge_set) != g.vertices - 1) return false;
  std::vector<std::vector<int>> adj(g.vertices);
  for (int j : elements_of(edge_set)) {
    auto [u, v] = g.edges[j];
    if (u == v) return false;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(g.vertices, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.vertices;  // n-1 edges + connected = acyclic
}

inline SbMatrix random_sb_matrix(std::mt19937& rng, int m, int n) {
  std::uniform_int_distribution<int> dist(0, 2);
  SbMatrix a(m, n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) a.set(r, c, static_cast<SbElem>(dist(rng)));
  return a;
}

inline SbMatrix random_boolean_matrix(std::mt19937& rng, int m, int n) {
  std::uniform_int_distribution<int> dist(0, 1);
  SbMatrix a(m, n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) a.set(r, c, static_cast<SbElem>(dist(rng)));
  return a;
}

inline Hereditary random_collection(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> count_dist(1, 6);
  std::uniform_int_distribution<Subset> set_dist(0, full_set(n));
  std::vector<Subset> sets;
  int k = count_dist(rng);
  for (int i = 0; i < k; ++i) sets.push_back(set_dist(rng));
  return Hereditary::from_independents(n, sets);
}

}  // namespace sbrep::oracle

#endif  // SBREP_TESTS_ORACLES_HPP_
