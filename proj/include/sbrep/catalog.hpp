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

#ifndef SBREP_CATALOG_HPP_
#define SBREP_CATALOG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sbrep/field.hpp"
#include "sbrep/graphs.hpp"
#include "sbrep/hereditary.hpp"
#include "sbrep/matrix.hpp"

namespace sbrep {

// A named worked example: a collection plus reference artifacts that must
// verify against it. Entries self-check on construction.
struct CatalogEntry {
  std::string name;
  Hereditary collection;
  std::optional<SbMatrix> sb_reference;
  std::optional<GfMatrix> gf_reference;
  std::optional<Graph> graph;
  std::string note;
};

// Names: fano, nonfano, fano-sum, mk4, w3, k4. Uniform collections come
// from catalog_uniform. Unknown names raise kInvalidArgument.
CatalogEntry catalog_entry(const std::string& name);
CatalogEntry catalog_uniform(int m, int n);
std::vector<std::string> catalog_names();

// The 3x7 matrix whose columns are the nonzero vectors of a 3-dimensional
// space; over GF(2) its vector matroid is the Fano matroid, over GF(3) the
// non-Fano matroid.
GfMatrix a7_matrix(int p);

// Reference boolean representations of the Fano and non-Fano matroids.
SbMatrix fano_boolean_matrix();
SbMatrix nonfano_boolean_matrix();

}  // namespace sbrep

#endif  // SBREP_CATALOG_HPP_
