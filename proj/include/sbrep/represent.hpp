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

#ifndef SBREP_REPRESENT_HPP_
#define SBREP_REPRESENT_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "sbrep/field.hpp"
#include "sbrep/graphs.hpp"
#include "sbrep/hereditary.hpp"
#include "sbrep/matrix.hpp"

namespace sbrep {

// A matrix whose columns are labeled 1..n by the ground set. A boolean
// representation additionally contains no ghost entries.
class Representation {
 public:
  explicit Representation(SbMatrix matrix, bool boolean = false);

  const SbMatrix& matrix() const { return matrix_; }
  bool is_boolean() const { return boolean_; }
  int ground_size() const { return matrix_.cols(); }

  friend bool operator==(const Representation& a,
                         const Representation& b) = default;

 private:
  SbMatrix matrix_;
  bool boolean_;
};

// The hereditary collection of the matrix columns under the witness
// condition: a column subset is independent iff some equicardinal row
// subset cuts out a nonsingular square submatrix.
Hereditary vector_hc(const SbMatrix& a);

// One block per basis, stacked: the basis columns carry a lower-triangular
// square with 1 on the diagonal, 0 above and ghosts below; everything else
// is ghost. The result always represents the input collection.
Representation represent_from_bases(const Hereditary& h);

// One block per circuit: the circuit columns carry the cyclic near-identity
// with ghosts on the superdiagonal and in the lower-left corner; everything
// else is ghost. Requires every basis to lie inside some circuit.
Representation represent_from_circuits(const Hereditary& h, bool force = false);

// The m x m circuit block by itself (1 on the diagonal, ghosts on the
// superdiagonal and at position (m,1), 0 elsewhere). It is singular while
// each diagonal minor is nonsingular, so it represents U_{m-1,m}.
SbMatrix circuit_block(int m);

// Boolean representation of the vector matroid of a field matrix: for each
// matroid basis, row-reduce so those columns form the identity, replace
// nonzero entries by 1, and stack the results.
Representation boolean_from_field(const GfMatrix& a);

// Block-diagonal stacking of boolean representations; represents the direct
// sum of the represented collections.
Representation direct_sum_rep(const std::vector<Representation>& reps);

// Removes repeated rows and ghost rows (keeping one row if every row is
// ghost). Never changes the represented collection, but is not a minimizer.
Representation reduce_rows(const Representation& r);

// True iff the matrix represents exactly the given collection.
bool verify(const Representation& r, const Hereditary& h);

enum class Alphabet { kBoolean, kSuperboolean };

// Smallest row count m <= cap admitting a representing matrix over the
// alphabet, with a witness; nullopt when none fits the cap. Brute force,
// guarded at ground size <= 5 and cap <= 4.
std::optional<std::pair<int, Representation>> min_rows(const Hereditary& h,
                                                       Alphabet alphabet,
                                                       int cap);

// Row-count bound from the constructions: sum of basis sizes, and when
// every basis lies inside a circuit, the better of that and the sum of
// circuit sizes.
int upper_bound_rows(const Hereditary& h);

// Independence by unique matchings: a right-vertex subset is independent
// iff some left subset of equal size admits exactly one perfect matching
// onto it. Coincides with vector_hc of the underlying boolean matrix.
Hereditary unique_matching_hc(const BipartiteGraph& b);

}  // namespace sbrep

#endif  // SBREP_REPRESENT_HPP_
