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

#include "sbrep/catalog.hpp"

#include <algorithm>

#include "sbrep/represent.hpp"

namespace sbrep {

namespace {

// All k-subsets of 1..n except the listed exclusions (1-based element lists).
Hereditary except_k_subsets(int n, int k,
                            const std::vector<std::vector<int>>& excluded) {
  std::vector<Subset> out;
  std::vector<Subset> excluded_masks;
  for (const auto& e : excluded) {
    Subset m = 0;
    for (int x : e) m |= Subset{1} << (x - 1);
    excluded_masks.push_back(m);
  }
  Subset limit = Subset{1} << n;
  for (Subset s = 0; s < limit; ++s) {
    if (subset_size(s) != k) continue;
    if (std::find(excluded_masks.begin(), excluded_masks.end(), s) ==
        excluded_masks.end())
      out.push_back(s);
  }
  return Hereditary::from_bases(n, std::move(out));
}

void self_check(const CatalogEntry& e) {
  if (e.sb_reference &&
      !verify(Representation(*e.sb_reference), e.collection))
    fail(ErrorCode::kInvalidArgument,
         "catalog entry '" + e.name + "' has a bad matrix reference");
  if (e.gf_reference && !(vector_matroid(*e.gf_reference) == e.collection))
    fail(ErrorCode::kInvalidArgument,
         "catalog entry '" + e.name + "' has a bad field reference");
  if (e.graph && !(graphic_matroid(*e.graph) == e.collection))
    fail(ErrorCode::kInvalidArgument,
         "catalog entry '" + e.name + "' has a bad graph reference");
}

CatalogEntry checked(CatalogEntry e) {
  self_check(e);
  return e;
}

}  // namespace

GfMatrix a7_matrix(int p) {
  return GfMatrix::from_rows(p, {{1, 0, 0, 1, 1, 0, 1},
                                 {0, 1, 0, 1, 0, 1, 1},
                                 {0, 0, 1, 0, 1, 1, 1}});
}

SbMatrix fano_boolean_matrix() {
  return SbMatrix::from_rows({"1 0 0 1 1 0 1",
                              "0 1 0 1 0 1 1",
                              "0 0 1 0 1 1 1",
                              "0 1 1 1 1 0 0",
                              "1 0 1 1 0 1 0"});
}

SbMatrix nonfano_boolean_matrix() {
  return SbMatrix::from_rows({"1 0 0 1 1 0 1",
                              "0 1 0 1 0 1 1",
                              "0 0 1 0 1 1 1",
                              "0 1 1 1 1 0 0",
                              "1 0 1 1 0 1 0",
                              "1 1 1 1 0 0 1"});
}

std::vector<std::string> catalog_names() {
  return {"fano", "nonfano", "fano-sum", "mk4", "w3", "k4"};
}

CatalogEntry catalog_entry(const std::string& name) {
  if (name == "fano") {
    return checked(CatalogEntry{
        name,
        except_k_subsets(7, 3,
                         {{1, 2, 4},
                          {1, 3, 5},
                          {1, 6, 7},
                          {2, 3, 6},
                          {2, 5, 7},
                          {3, 4, 7},
                          {4, 5, 6}}),
        fano_boolean_matrix(), a7_matrix(2), std::nullopt,
        "Fano matroid: seven points, seven lines, GF(2) only"});
  }
  if (name == "nonfano") {
    return checked(CatalogEntry{
        name,
        except_k_subsets(7, 3,
                         {{1, 2, 4},
                          {1, 3, 5},
                          {1, 6, 7},
                          {2, 3, 6},
                          {2, 5, 7},
                          {3, 4, 7}}),
        nonfano_boolean_matrix(), a7_matrix(3), std::nullopt,
        "non-Fano matroid: the Fano configuration with one line broken"});
  }
  if (name == "fano-sum") {
    CatalogEntry fano = catalog_entry("fano");
    CatalogEntry nonfano = catalog_entry("nonfano");
    Representation sum = direct_sum_rep({Representation(*fano.sb_reference, true),
                                         Representation(*nonfano.sb_reference, true)});
    return checked(CatalogEntry{
        name, fano.collection.direct_sum(nonfano.collection), sum.matrix(),
        std::nullopt, std::nullopt,
        "direct sum of the Fano and non-Fano matroids, representable over "
        "no field but boolean-representable"});
  }
  if (name == "mk4") {
    return checked(CatalogEntry{
        name,
        except_k_subsets(6, 3, {{1, 2, 4}, {1, 3, 5}, {2, 5, 6}, {3, 4, 6}}),
        SbMatrix::from_rows({"v v v 0 0 1",
                             "1 0 0 1 1 1",
                             "0 1 0 1 0 1",
                             "0 0 1 0 1 1"}),
        std::nullopt, std::nullopt,
        "cycle matroid of the complete graph on four vertices"});
  }
  if (name == "w3") {
    // The collection is derived from the reference matrix itself; the
    // diagram source lists no triples explicitly.
    SbMatrix w3 = SbMatrix::from_rows({"v v v 0 0 1",
                                       "1 0 0 1 1 0",
                                       "0 1 0 1 0 1",
                                       "0 0 1 0 1 1"});
    return checked(CatalogEntry{name, vector_hc(w3), w3, std::nullopt,
                                std::nullopt,
                                "rank-3 whirl, derived from its matrix"});
  }
  if (name == "k4") {
    Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    return checked(CatalogEntry{name, graphic_matroid(k4), std::nullopt,
                                std::nullopt, k4,
                                "graphic matroid of the complete graph K4"});
  }
  fail(ErrorCode::kInvalidArgument, "unknown catalog entry '" + name + "'");
}

CatalogEntry catalog_uniform(int m, int n) {
  Hereditary u = Hereditary::uniform(m, n);
  SbMatrix reference;
  if (m == 2 && n >= 2) {
    // (n-1) x n boolean matrix with 0 on the stair positions and 1
    // elsewhere; every column pair has a 2x2 witness, no triple does.
    SbMatrix a(n - 1, n, SbElem::kOne);
    for (int i = 0; i < n - 1; ++i) a.set(i, i, SbElem::kZero);
    reference = a;
  } else {
    reference = represent_from_bases(u).matrix();
  }
  CatalogEntry e{"u_" + std::to_string(m) + "_" + std::to_string(n), u,
                 reference, std::nullopt, std::nullopt,
                 "uniform collection: independent = size at most " +
                     std::to_string(m)};
  self_check(e);
  return e;
}

}  // namespace sbrep
