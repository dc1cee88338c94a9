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

#ifndef SBREP_FIELD_HPP_
#define SBREP_FIELD_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "sbrep/error.hpp"
#include "sbrep/hereditary.hpp"
#include "sbrep/subset.hpp"

namespace sbrep {

// Residues modulo a small prime p, 2 <= p <= 97. All arithmetic is exact.
struct GfElem {
  int residue = 0;
  int p = 2;

  GfElem() = default;
  GfElem(int value, int modulus);

  GfElem operator+(GfElem o) const;
  GfElem operator-(GfElem o) const;
  GfElem operator*(GfElem o) const;
  GfElem inverse() const;  // residue must be nonzero

  friend bool operator==(GfElem a, GfElem b) = default;
};

bool is_supported_prime(int p);

// Dense matrix over GF(p).
class GfMatrix {
 public:
  GfMatrix() : p_(2), rows_(0), cols_(0) {}
  GfMatrix(int p, int rows, int cols);
  static GfMatrix from_rows(int p, const std::vector<std::vector<int>>& rows);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int at(int r, int c) const { return entries_[r * cols_ + c]; }
  void set(int r, int c, int v);

  GfMatrix columns(Subset col_set) const;

  friend bool operator==(const GfMatrix& a, const GfMatrix& b) = default;

 private:
  int p_;
  int rows_;
  int cols_;
  std::vector<int> entries_;
};

// Rank by Gaussian elimination; pivots are the first nonzero entries in a
// row-major scan.
int gf_rank(const GfMatrix& a);

// The classical vector matroid of the columns: a ground element per column,
// independence = linear independence over GF(p).
Hereditary vector_matroid(const GfMatrix& a);

// Row-reduces so the columns listed in `basis_cols` form the identity
// matrix; every column subset keeps its rank. Requires |basis_cols| == the
// row count and those columns independent.
GfMatrix reduce_basis_to_identity(const GfMatrix& a, Subset basis_cols);

// Row-reduces and drops zero rows, leaving row rank == row count with the
// same column dependence relations.
GfMatrix drop_dependent_rows(const GfMatrix& a);

// Field matrix file format:
//   line 1: "gf <p> <m> <n>"
//   then m lines of n integers in 0..p-1.
GfMatrix parse_gf_matrix(std::string_view text);
std::string format_gf_matrix(const GfMatrix& a);

}  // namespace sbrep

#endif  // SBREP_FIELD_HPP_
