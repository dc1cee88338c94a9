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

#include "sbrep/field.hpp"

#include <algorithm>
#include <sstream>

#include "sbrep/text.hpp"

namespace sbrep {

bool is_supported_prime(int p) {
  if (p < 2 || p > 97) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

void check_prime(int p) {
  if (!is_supported_prime(p))
    fail(ErrorCode::kInvalidArgument,
         std::to_string(p) + " is not a prime in 2..97");
}

int mod_inverse(int a, int p) {
  // Fermat: a^(p-2) mod p.
  long long result = 1, base = a % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

}  // namespace

GfElem::GfElem(int value, int modulus) : p(modulus) {
  check_prime(modulus);
  residue = ((value % p) + p) % p;
}

GfElem GfElem::operator+(GfElem o) const {
  if (p != o.p) fail(ErrorCode::kInvalidArgument, "mixed moduli");
  return GfElem(residue + o.residue, p);
}

GfElem GfElem::operator-(GfElem o) const {
  if (p != o.p) fail(ErrorCode::kInvalidArgument, "mixed moduli");
  return GfElem(residue - o.residue, p);
}

GfElem GfElem::operator*(GfElem o) const {
  if (p != o.p) fail(ErrorCode::kInvalidArgument, "mixed moduli");
  return GfElem(residue * o.residue, p);
}

GfElem GfElem::inverse() const {
  if (residue == 0)
    fail(ErrorCode::kInvalidArgument, "zero has no inverse");
  return GfElem(mod_inverse(residue, p), p);
}

GfMatrix::GfMatrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols) {
  check_prime(p);
  if (rows < 0 || cols < 0)
    fail(ErrorCode::kInvalidArgument, "negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

GfMatrix GfMatrix::from_rows(int p, const std::vector<std::vector<int>>& rows) {
  int m = static_cast<int>(rows.size());
  int n = m == 0 ? 0 : static_cast<int>(rows.front().size());
  GfMatrix a(p, m, n);
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(rows[r].size()) != n)
      fail(ErrorCode::kInvalidArgument, "ragged matrix rows");
    for (int c = 0; c < n; ++c) a.set(r, c, rows[r][c]);
  }
  return a;
}

void GfMatrix::set(int r, int c, int v) {
  entries_[r * cols_ + c] = ((v % p_) + p_) % p_;
}

GfMatrix GfMatrix::columns(Subset col_set) const {
  std::vector<int> cs = elements_of(col_set);
  GfMatrix s(p_, rows_, static_cast<int>(cs.size()));
  for (int r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cs.size(); ++j)
      s.set(r, static_cast<int>(j), at(r, cs[j]));
  return s;
}

namespace {

// Row echelon form in place; returns the pivot columns in order.
std::vector<int> echelon(GfMatrix& a) {
  int p = a.p();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < a.cols(); ++c) {
        int tmp = a.at(row, c);
        a.set(row, c, a.at(pivot, c));
        a.set(pivot, c, tmp);
      }
    int inv = mod_inverse(a.at(row, col), p);
    for (int c = 0; c < a.cols(); ++c) a.set(row, c, a.at(row, c) * inv % p);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      int factor = a.at(r, col);
      for (int c = 0; c < a.cols(); ++c)
        a.set(r, c, (a.at(r, c) - factor * a.at(row, c)) % p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int gf_rank(const GfMatrix& a) {
  GfMatrix work = a;
  return static_cast<int>(echelon(work).size());
}

Hereditary vector_matroid(const GfMatrix& a) {
  int n = a.cols();
  if (n > 20)
    fail(ErrorCode::kGroundTooLarge,
         "vector matroid enumeration limited to 20 columns");
  Subset limit = Subset{1} << n;
  std::vector<char> independent(limit, 0);
  independent[0] = 1;
  std::vector<Subset> all_independent = {0};
  for (Subset s = 1; s < limit; ++s) {
    // All subsets of an independent set are independent, so any dependent
    // proper subset settles s.
    bool candidate = true;
    for (Subset t = s; t != 0; t &= t - 1) {
      Subset without = s & ~(t & (~t + 1));
      if (!independent[without]) {
        candidate = false;
        break;
      }
    }
    if (candidate && gf_rank(a.columns(s)) == subset_size(s)) {
      independent[s] = 1;
      all_independent.push_back(s);
    }
  }
  return Hereditary::from_independents(n, all_independent);
}

GfMatrix reduce_basis_to_identity(const GfMatrix& a, Subset basis_cols) {
  std::vector<int> cols = elements_of(basis_cols);
  if (static_cast<int>(cols.size()) != a.rows())
    fail(ErrorCode::kNotABasis,
         "need as many basis columns as rows (row rank)");
  GfMatrix work = a;
  int p = a.p();
  for (int t = 0; t < static_cast<int>(cols.size()); ++t) {
    int col = cols[t];
    int pivot = -1;
    for (int r = t; r < work.rows(); ++r) {
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0)
      fail(ErrorCode::kNotABasis, "selected columns are dependent");
    if (pivot != t)
      for (int c = 0; c < work.cols(); ++c) {
        int tmp = work.at(t, c);
        work.set(t, c, work.at(pivot, c));
        work.set(pivot, c, tmp);
      }
    int inv = mod_inverse(work.at(t, col), p);
    for (int c = 0; c < work.cols(); ++c)
      work.set(t, c, work.at(t, c) * inv % p);
    for (int r = 0; r < work.rows(); ++r) {
      if (r == t || work.at(r, col) == 0) continue;
      int factor = work.at(r, col);
      for (int c = 0; c < work.cols(); ++c)
        work.set(r, c, (work.at(r, c) - factor * work.at(t, c)) % p);
    }
  }
  return work;
}

GfMatrix drop_dependent_rows(const GfMatrix& a) {
  GfMatrix work = a;
  int r = static_cast<int>(echelon(work).size());
  GfMatrix out(a.p(), r, a.cols());
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < a.cols(); ++c) out.set(i, c, work.at(i, c));
  return out;
}

GfMatrix parse_gf_matrix(std::string_view text) {
  std::vector<std::vector<std::string>> lines = split_lines_tokens(text);
  if (lines.empty()) fail(ErrorCode::kParse, "empty field matrix file");
  const auto& header = lines[0];
  if (header.size() != 4 || header[0] != "gf")
    fail(ErrorCode::kParse, "field matrix file must start with 'gf <p> <m> <n>'");
  int p = parse_count(header[1], "modulus");
  if (!is_supported_prime(p))
    fail(ErrorCode::kParse, "modulus must be a prime in 2..97");
  int m = parse_count(header[2], "row count");
  int n = parse_count(header[3], "column count");
  if (static_cast<int>(lines.size()) != m + 1)
    fail(ErrorCode::kParse, "expected " + std::to_string(m) + " matrix rows");
  GfMatrix a(p, m, n);
  for (int r = 0; r < m; ++r) {
    const auto& row = lines[r + 1];
    if (static_cast<int>(row.size()) != n)
      fail(ErrorCode::kParse, "row " + std::to_string(r + 1) + " has " +
                                  std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(n));
    for (int c = 0; c < n; ++c) {
      int v = parse_count(row[c], "matrix entry");
      if (v >= p)
        fail(ErrorCode::kParse, "entry " + std::to_string(v) +
                                    " not a residue mod " + std::to_string(p));
      a.set(r, c, v);
    }
  }
  return a;
}

std::string format_gf_matrix(const GfMatrix& a) {
  std::ostringstream out;
  out << "gf " << a.p() << ' ' << a.rows() << ' ' << a.cols() << '\n';
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (c) out << ' ';
      out << a.at(r, c);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sbrep
