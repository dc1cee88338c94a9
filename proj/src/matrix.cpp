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

#include "sbrep/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "sbrep/text.hpp"

namespace sbrep {

namespace {

constexpr int kPermanentLimit = 22;  // subset table of 2^n entries

void require_square(const SbMatrix& a) {
  if (a.rows() != a.cols())
    fail(ErrorCode::kNonSquare, "matrix is " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) +
                                    ", expected square");
}

}  // namespace

SbMatrix::SbMatrix(int rows, int cols, SbElem fill)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    fail(ErrorCode::kInvalidArgument, "negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

SbMatrix SbMatrix::identity(int n) {
  SbMatrix a(n, n, SbElem::kZero);
  for (int i = 0; i < n; ++i) a.set(i, i, SbElem::kOne);
  return a;
}

SbMatrix SbMatrix::from_rows(const std::vector<std::string>& rows) {
  std::vector<std::vector<SbElem>> parsed;
  std::size_t width = 0;
  for (const std::string& line : rows) {
    std::vector<SbElem> row;
    for (const std::string& tok : split_tokens(line)) {
      row.push_back(sb_from_token(tok));
    }
    if (!parsed.empty() && row.size() != width)
      fail(ErrorCode::kParse, "ragged matrix rows");
    width = row.size();
    parsed.push_back(std::move(row));
  }
  SbMatrix a(static_cast<int>(parsed.size()), static_cast<int>(width));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) a.set(r, c, parsed[r][c]);
  return a;
}

bool SbMatrix::is_boolean() const {
  for (SbElem e : entries_)
    if (e == SbElem::kGhost) return false;
  return true;
}

bool SbMatrix::is_ghost_row(int r) const {
  for (int c = 0; c < cols_; ++c)
    if (at(r, c) == SbElem::kOne) return false;
  return true;
}

SbMatrix SbMatrix::transpose() const {
  SbMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

SbMatrix SbMatrix::submatrix(Subset row_set, Subset col_set) const {
  std::vector<int> rs = elements_of(row_set);
  std::vector<int> cs = elements_of(col_set);
  SbMatrix s(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j)
      s.set(static_cast<int>(i), static_cast<int>(j), at(rs[i], cs[j]));
  return s;
}

SbMatrix SbMatrix::minor_at(int row, int col) const {
  return submatrix(full_set(rows_) & ~(Subset{1} << row),
                   full_set(cols_) & ~(Subset{1} << col));
}

Subset SbMatrix::row_ones(int r) const {
  Subset s = 0;
  for (int c = 0; c < cols_; ++c)
    if (at(r, c) == SbElem::kOne) s |= Subset{1} << c;
  return s;
}

Subset SbMatrix::row_zeros(int r) const {
  Subset s = 0;
  for (int c = 0; c < cols_; ++c)
    if (at(r, c) == SbElem::kZero) s |= Subset{1} << c;
  return s;
}

SbElem permanent(const SbMatrix& a) {
  require_square(a);
  int n = a.rows();
  if (n == 0) return SbElem::kOne;
  if (n > kPermanentLimit)
    fail(ErrorCode::kGroundTooLarge, "permanent limited to order <= " +
                                         std::to_string(kPermanentLimit));
  // f[s] = permanent of the first |s| rows restricted to the columns in s.
  std::vector<SbElem> f(std::size_t{1} << n, SbElem::kZero);
  f[0] = SbElem::kOne;
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    int r = subset_size(s) - 1;
    SbElem acc = SbElem::kZero;
    for (Subset t = s; t != 0; t &= t - 1) {
      int c = std::countr_zero(t);
      acc = sb_add(acc, sb_mul(a.at(r, c), f[s & ~(Subset{1} << c)]));
    }
    f[s] = acc;
  }
  return f[(Subset{1} << n) - 1];
}

SbElem permanent_minor_expansion(const SbMatrix& a, int row) {
  require_square(a);
  if (row < 0 || row >= a.rows())
    fail(ErrorCode::kInvalidArgument, "expansion row out of range");
  SbElem acc = SbElem::kZero;
  for (int c = 0; c < a.cols(); ++c) {
    acc = sb_add(acc, sb_mul(a.at(row, c), permanent(a.minor_at(row, c))));
  }
  return acc;
}

namespace {

// Shared elimination loop. Consumes the columns of `cols` by repeated marker
// rows; on success optionally records the (row, column) elimination order.
bool marker_eliminate(const SbMatrix& a, Subset cols,
                      std::vector<std::pair<int, int>>* order) {
  int m = a.rows();
  std::vector<Subset> ones(m), zeros(m);
  for (int r = 0; r < m; ++r) {
    ones[r] = a.row_ones(r);
    zeros[r] = a.row_zeros(r);
  }
  Subset alive_rows = full_set(m);
  Subset remaining = cols;
  while (remaining != 0) {
    int marker_row = -1;
    for (Subset t = alive_rows; t != 0; t &= t - 1) {
      int r = std::countr_zero(t);
      Subset one_here = ones[r] & remaining;
      if (subset_size(one_here) == 1 &&
          (remaining & ~ones[r] & ~zeros[r]) == 0) {
        marker_row = r;
        break;
      }
    }
    if (marker_row < 0) return false;
    int col = std::countr_zero(ones[marker_row] & remaining);
    if (order) order->emplace_back(marker_row, col);
    alive_rows &= ~(Subset{1} << marker_row);
    remaining &= ~(Subset{1} << col);
  }
  return true;
}

}  // namespace

bool is_nonsingular(const SbMatrix& a) {
  require_square(a);
  return marker_eliminate(a, full_set(a.cols()), nullptr);
}

std::optional<Triangularization> triangularize(const SbMatrix& a) {
  require_square(a);
  std::vector<std::pair<int, int>> order;
  if (!marker_eliminate(a, full_set(a.cols()), &order)) return std::nullopt;
  Triangularization t;
  for (auto [r, c] : order) {
    t.row_perm.push_back(r);
    t.col_perm.push_back(c);
  }
  return t;
}

Marker find_n_marker(const SbMatrix& a) {
  require_square(a);
  if (!is_nonsingular(a))
    fail(ErrorCode::kSingular, "matrix is singular, no full-width marker");
  Subset all = full_set(a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    Subset one_here = a.row_ones(r);
    if (subset_size(one_here) == 1 && (a.row_zeros(r) | one_here) == all) {
      return Marker{r, all, std::countr_zero(one_here)};
    }
  }
  // Unreachable: a nonsingular matrix has an n-marker.
  fail(ErrorCode::kSingular, "no full-width marker found");
}

bool columns_independent(const SbMatrix& a, Subset cols) {
  if (!is_subset_of(cols, full_set(a.cols())))
    fail(ErrorCode::kElementOutOfRange, "column subset out of range");
  if (subset_size(cols) > a.rows()) return false;
  return marker_eliminate(a, cols, nullptr);
}

std::optional<Witness> find_witness(const SbMatrix& a, Subset cols) {
  if (!is_subset_of(cols, full_set(a.cols())))
    fail(ErrorCode::kElementOutOfRange, "column subset out of range");
  if (subset_size(cols) > a.rows()) return std::nullopt;
  std::vector<std::pair<int, int>> order;
  if (!marker_eliminate(a, cols, &order)) return std::nullopt;
  Witness w{0, cols};
  for (auto [r, c] : order) {
    (void)c;
    w.rows |= Subset{1} << r;
  }
  return w;
}

bool vectors_dependent(const std::vector<std::vector<SbElem>>& vectors) {
  if (vectors.empty()) return false;
  std::size_t n = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != n)
      fail(ErrorCode::kLengthMismatch, "vectors have different lengths");
  int m = static_cast<int>(vectors.size());
  if (m > static_cast<int>(n)) return true;
  SbMatrix a(m, static_cast<int>(n));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < static_cast<int>(n); ++c) a.set(r, c, vectors[r][c]);
  // Rows of a are independent iff the columns of the transpose are.
  return !columns_independent(a.transpose(), full_set(m));
}

int rank(const SbMatrix& a) {
  const SbMatrix* m = &a;
  SbMatrix t;
  if (a.cols() > a.rows()) {
    t = a.transpose();  // rank is invariant under transposition
    m = &t;
  }
  int n = m->cols();
  if (n > 22)
    fail(ErrorCode::kGroundTooLarge, "rank limited to min dimension <= 22");
  if (n == 0) return 0;
  // Independence is closed under subsets, so search top-down by size: the
  // first independent k-subset of columns gives the rank.
  for (int k = std::min(n, m->rows()); k >= 1; --k) {
    Subset s = full_set(k);
    Subset limit = Subset{1} << n;
    while (s < limit) {
      if (columns_independent(*m, s)) return k;
      // next k-subset in colex order
      Subset low = s & (~s + 1);
      Subset ripple = s + low;
      s = ripple | (((s ^ ripple) >> 2) / low);
    }
  }
  return 0;
}

std::optional<RankDefectCertificate> rank_defect_condition(const SbMatrix& a) {
  require_square(a);
  int n = a.rows();
  if (permanent(a) != SbElem::kZero) return std::nullopt;
  std::vector<Subset> nonzero(n);
  for (int r = 0; r < n; ++r) nonzero[r] = full_set(n) & ~a.row_zeros(r);
  for (int k = 1; k <= n; ++k) {
    for (Subset rows = 0; rows < (Subset{1} << n); ++rows) {
      if (subset_size(rows) != k) continue;
      Subset common_zero = full_set(n);
      for (Subset t = rows; t != 0; t &= t - 1)
        common_zero &= ~nonzero[std::countr_zero(t)];
      if (subset_size(common_zero) >= n + 1 - k)
        return RankDefectCertificate{k, rows, common_zero};
    }
  }
  // Unreachable by the defect characterization of permanent 0.
  return std::nullopt;
}

SbMatrix parse_sb_matrix(std::string_view text) {
  std::vector<std::vector<std::string>> lines = split_lines_tokens(text);
  if (lines.empty()) fail(ErrorCode::kParse, "empty matrix file");
  const auto& header = lines[0];
  if (header.size() != 3 || header[0] != "sb")
    fail(ErrorCode::kParse, "matrix file must start with 'sb <m> <n>'");
  int m = parse_count(header[1], "row count");
  int n = parse_count(header[2], "column count");
  if (static_cast<int>(lines.size()) != m + 1)
    fail(ErrorCode::kParse, "expected " + std::to_string(m) + " matrix rows");
  SbMatrix a(m, n);
  for (int r = 0; r < m; ++r) {
    const auto& row = lines[r + 1];
    if (static_cast<int>(row.size()) != n)
      fail(ErrorCode::kParse, "row " + std::to_string(r + 1) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(n));
    for (int c = 0; c < n; ++c) a.set(r, c, sb_from_token(row[c]));
  }
  return a;
}

std::string format_sb_matrix(const SbMatrix& a) {
  std::ostringstream out;
  out << "sb " << a.rows() << ' ' << a.cols() << '\n';
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (c) out << ' ';
      out << sb_to_char(a.at(r, c));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sbrep
