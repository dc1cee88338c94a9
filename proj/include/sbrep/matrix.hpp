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

#ifndef SBREP_MATRIX_HPP_
#define SBREP_MATRIX_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbrep/error.hpp"
#include "sbrep/semiring.hpp"
#include "sbrep/subset.hpp"

namespace sbrep {

// Dense matrix over the superboolean scalars. The 0x0 matrix is legal and
// stands for the empty ground set.
class SbMatrix {
 public:
  SbMatrix() : rows_(0), cols_(0) {}
  SbMatrix(int rows, int cols, SbElem fill = SbElem::kZero);

  static SbMatrix identity(int n);
  // Each string holds one row of whitespace-separated scalar tokens.
  static SbMatrix from_rows(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  SbElem at(int r, int c) const { return entries_[r * cols_ + c]; }
  void set(int r, int c, SbElem v) { entries_[r * cols_ + c] = v; }

  bool is_boolean() const;
  bool is_ghost_row(int r) const;

  SbMatrix transpose() const;
  SbMatrix submatrix(Subset row_set, Subset col_set) const;
  SbMatrix minor_at(int row, int col) const;

  // Bitmask of columns where row r holds a tangible 1 / a 0.
  Subset row_ones(int r) const;
  Subset row_zeros(int r) const;

  friend bool operator==(const SbMatrix& a, const SbMatrix& b) = default;

 private:
  int rows_;
  int cols_;
  std::vector<SbElem> entries_;
};

// A subrow with a single 1 and all other entries 0.
struct Marker {
  int row = 0;
  Subset cols = 0;  // columns spanned by the subrow
  int one_col = 0;  // position of the single 1
};

// A square selection of rows and columns whose submatrix has permanent 1.
struct Witness {
  Subset rows = 0;
  Subset cols = 0;
};

struct Triangularization {
  // B(i, j) = A(row_perm[i], col_perm[j]) has 1 on the diagonal and 0
  // strictly above it.
  std::vector<int> row_perm;
  std::vector<int> col_perm;
};

struct RankDefectCertificate {
  int k = 0;          // number of selected rows
  Subset rows = 0;    // the k rows
  Subset columns = 0; // their common all-zero columns, at least n+1-k of them
};

// Permanent of a square matrix, the signless permutation sum evaluated in
// superboolean arithmetic. The 0x0 permanent is 1 by the empty product
// convention.
SbElem permanent(const SbMatrix& a);

// Expansion along row i: sum_j a(i,j) * per(minor(i,j)). Agrees with
// permanent(a) for every row.
SbElem permanent_minor_expansion(const SbMatrix& a, int row);

// True iff permanent == 1, decided by greedy marker elimination: repeatedly
// remove a row that is a marker on the remaining columns together with the
// column of its 1. Expansion along a marker row shows each step preserves
// the permanent, and a nonsingular matrix always has a full-width marker.
bool is_nonsingular(const SbMatrix& a);

std::optional<Triangularization> triangularize(const SbMatrix& a);

// Full-width marker of a nonsingular matrix, lowest row index first.
Marker find_n_marker(const SbMatrix& a);

// Column subset independence under the witness condition: some equicardinal
// row subset makes the square submatrix nonsingular. Decided by the same
// marker elimination run on the rectangular column selection.
bool columns_independent(const SbMatrix& a, Subset cols);

// A concrete witness for an independent column subset, or nullopt when the
// columns are dependent.
std::optional<Witness> find_witness(const SbMatrix& a, Subset cols);

// Dependence of a list of equal-length vectors over the superboolean
// scalars: some 0/1 combination, not all zero, lands in the ghost ideal
// coordinatewise.
bool vectors_dependent(const std::vector<std::vector<SbElem>>& vectors);

// Size of a maximal nonsingular square submatrix; equals row rank and
// column rank.
int rank(const SbMatrix& a);

// Certificate of permanent 0: k rows sharing at least n+1-k all-zero
// columns. Present iff permanent(a) == 0.
std::optional<RankDefectCertificate> rank_defect_condition(const SbMatrix& a);

// Matrix file format, bit exact:
//   line 1: "sb <m> <n>"
//   then m lines of n tokens from {0, 1, v}; trailing newline optional.
SbMatrix parse_sb_matrix(std::string_view text);
std::string format_sb_matrix(const SbMatrix& a);

}  // namespace sbrep

#endif  // SBREP_MATRIX_HPP_
