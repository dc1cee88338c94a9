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

#include "sbrep/represent.hpp"

#include <algorithm>

namespace sbrep {

namespace {

constexpr int kVectorHcLimit = 20;

}  // namespace

Representation::Representation(SbMatrix matrix, bool boolean)
    : matrix_(std::move(matrix)), boolean_(boolean) {
  if (boolean_ && !matrix_.is_boolean())
    fail(ErrorCode::kGhostEntry,
         "boolean-flagged representation contains a ghost entry");
}

Hereditary vector_hc(const SbMatrix& a) {
  int n = a.cols();
  if (n > kVectorHcLimit)
    fail(ErrorCode::kGroundTooLarge,
         "column subset sweep limited to " + std::to_string(kVectorHcLimit) +
             " columns");
  Subset limit = Subset{1} << n;
  std::vector<char> independent(limit, 0);
  independent[0] = 1;
  for (Subset s = 1; s < limit; ++s) {
    bool candidate = true;
    for (Subset t = s; t != 0; t &= t - 1) {
      Subset without = s & ~(t & (~t + 1));
      if (!independent[without]) {
        candidate = false;
        break;
      }
    }
    if (candidate && columns_independent(a, s)) independent[s] = 1;
  }
  // Maximal independents are the bases.
  std::vector<Subset> bases;
  for (Subset s = 0; s < limit; ++s) {
    if (!independent[s]) continue;
    bool maximal = true;
    for (int e = 0; e < n && maximal; ++e)
      if (!contains(s, e) && independent[s | (Subset{1} << e)]) maximal = false;
    if (maximal) bases.push_back(s);
  }
  return Hereditary::from_bases(n, std::move(bases));
}

Representation represent_from_bases(const Hereditary& h) {
  int n = h.ground_size();
  if (n == 0) return Representation(SbMatrix(0, 0));
  if (h.rank() == 0)
    return Representation(SbMatrix(1, n, SbElem::kGhost));
  int total_rows = 0;
  for (Subset b : h.bases()) total_rows += subset_size(b);
  SbMatrix a(total_rows, n, SbElem::kGhost);
  int row = 0;
  for (Subset b : h.bases()) {  // bases are stored in lexicographic order
    std::vector<int> elems = elements_of(b);  // ascending
    for (std::size_t t = 0; t < elems.size(); ++t) {
      a.set(row, elems[t], SbElem::kOne);
      for (std::size_t u = t + 1; u < elems.size(); ++u)
        a.set(row, elems[u], SbElem::kZero);
      ++row;
    }
  }
  return Representation(std::move(a));
}

SbMatrix circuit_block(int m) {
  if (m < 1) fail(ErrorCode::kInvalidArgument, "circuit block needs m >= 1");
  if (m == 1) {
    // Diagonal and corner coincide; the ghost entry is the one choice that
    // keeps the single column dependent.
    SbMatrix a(1, 1, SbElem::kGhost);
    return a;
  }
  SbMatrix a(m, m, SbElem::kZero);
  for (int i = 0; i < m; ++i) a.set(i, i, SbElem::kOne);
  for (int i = 0; i + 1 < m; ++i) a.set(i, i + 1, SbElem::kGhost);
  a.set(m - 1, 0, SbElem::kGhost);
  return a;
}

Representation represent_from_circuits(const Hereditary& h, bool force) {
  int n = h.ground_size();
  std::vector<Subset> circuits = h.circuits(force);
  for (Subset b : h.bases()) {
    bool covered = false;
    for (Subset c : circuits)
      if (is_subset_of(b, c)) {
        covered = true;
        break;
      }
    if (!covered)
      fail(ErrorCode::kBasisNotInCircuit,
           "basis " + subset_to_string(b) + " lies in no circuit");
  }
  int total_rows = 0;
  for (Subset c : circuits) total_rows += subset_size(c);
  SbMatrix a(total_rows, n, SbElem::kGhost);
  int row = 0;
  for (Subset c : circuits) {  // lexicographic order
    std::vector<int> elems = elements_of(c);
    SbMatrix block = circuit_block(static_cast<int>(elems.size()));
    for (int i = 0; i < block.rows(); ++i) {
      for (std::size_t j = 0; j < elems.size(); ++j)
        a.set(row, elems[j], block.at(i, static_cast<int>(j)));
      ++row;
    }
  }
  return Representation(std::move(a));
}

Representation boolean_from_field(const GfMatrix& input) {
  int n = input.cols();
  GfMatrix a = drop_dependent_rows(input);
  int r = a.rows();
  if (r == 0) return Representation(SbMatrix(0, n), /*boolean=*/true);
  if (n > 12)
    fail(ErrorCode::kGroundTooLarge,
         "basis enumeration limited to 12 columns");
  // Matroid bases: independent column subsets of full rank, ascending lex.
  std::vector<Subset> bases;
  Subset limit = Subset{1} << n;
  for (Subset s = 0; s < limit; ++s)
    if (subset_size(s) == r && gf_rank(a.columns(s)) == r) bases.push_back(s);
  std::sort(bases.begin(), bases.end(), subset_lex_less);
  SbMatrix out(r * static_cast<int>(bases.size()), n, SbElem::kZero);
  int row = 0;
  for (Subset basis : bases) {
    GfMatrix reduced = reduce_basis_to_identity(a, basis);
    for (int i = 0; i < r; ++i) {
      for (int c = 0; c < n; ++c)
        if (reduced.at(i, c) != 0) out.set(row, c, SbElem::kOne);
      ++row;
    }
  }
  return Representation(std::move(out), /*boolean=*/true);
}

Representation direct_sum_rep(const std::vector<Representation>& reps) {
  if (reps.empty())
    fail(ErrorCode::kInvalidArgument, "direct sum of nothing");
  int rows = 0, cols = 0;
  for (const Representation& r : reps) {
    if (!r.is_boolean())
      fail(ErrorCode::kGhostEntry, "direct sum requires boolean inputs");
    rows += r.matrix().rows();
    cols += r.matrix().cols();
  }
  SbMatrix out(rows, cols, SbElem::kZero);
  int row0 = 0, col0 = 0;
  for (const Representation& r : reps) {
    const SbMatrix& m = r.matrix();
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out.set(row0 + i, col0 + j, m.at(i, j));
    row0 += m.rows();
    col0 += m.cols();
  }
  return Representation(std::move(out), /*boolean=*/true);
}

Representation reduce_rows(const Representation& r) {
  const SbMatrix& a = r.matrix();
  std::vector<int> keep;
  std::vector<std::vector<SbElem>> seen;
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<SbElem> row(a.cols());
    for (int c = 0; c < a.cols(); ++c) row[c] = a.at(i, c);
    if (std::find(seen.begin(), seen.end(), row) != seen.end()) continue;
    seen.push_back(std::move(row));
    keep.push_back(i);
  }
  std::vector<int> tangible;
  for (int i : keep)
    if (!a.is_ghost_row(i)) tangible.push_back(i);
  if (tangible.empty() && !keep.empty()) tangible.push_back(keep.front());
  SbMatrix out(static_cast<int>(tangible.size()), a.cols());
  for (std::size_t i = 0; i < tangible.size(); ++i)
    for (int c = 0; c < a.cols(); ++c)
      out.set(static_cast<int>(i), c, a.at(tangible[i], c));
  return Representation(std::move(out), r.is_boolean());
}

bool verify(const Representation& r, const Hereditary& h) {
  if (r.ground_size() != h.ground_size())
    fail(ErrorCode::kGroundSizeMismatch,
         "matrix has " + std::to_string(r.ground_size()) +
             " columns but the collection has ground size " +
             std::to_string(h.ground_size()));
  return vector_hc(r.matrix()) == h;
}

namespace {

SbElem alphabet_digit(Alphabet alphabet, int digit) {
  if (alphabet == Alphabet::kBoolean)
    return digit == 0 ? SbElem::kZero : SbElem::kOne;
  return static_cast<SbElem>(digit);
}

// Enumerates rows as digit strings over the alphabet, skipping ghost rows
// (rows with no tangible 1): a minimal representing matrix never contains
// one, since dropping it preserves the represented collection.
std::vector<std::vector<SbElem>> candidate_rows(Alphabet alphabet, int n) {
  int base = alphabet == Alphabet::kBoolean ? 2 : 3;
  long long count = 1;
  for (int i = 0; i < n; ++i) count *= base;
  std::vector<std::vector<SbElem>> rows;
  for (long long code = 0; code < count; ++code) {
    long long c = code;
    std::vector<SbElem> row(n);
    bool has_one = false;
    for (int i = n - 1; i >= 0; --i) {
      row[i] = alphabet_digit(alphabet, static_cast<int>(c % base));
      has_one = has_one || row[i] == SbElem::kOne;
      c /= base;
    }
    if (has_one) rows.push_back(std::move(row));
  }
  return rows;
}

// Rows only ever add witnesses, so once a circuit of h turns independent in
// a partial matrix no extension can represent h; the branch dies. Unfilled
// rows stay zero and contribute no witness.
bool search_row_sets(const std::vector<std::vector<SbElem>>& pool,
                     const Hereditary& h, const std::vector<Subset>& circuits,
                     int m, std::size_t start, SbMatrix& work, int next_row) {
  if (next_row == m) {
    return vector_hc(work) == h;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    for (int c = 0; c < work.cols(); ++c) work.set(next_row, c, pool[i][c]);
    bool viable = true;
    for (Subset circuit : circuits) {
      if (columns_independent(work, circuit)) {
        viable = false;
        break;
      }
    }
    if (viable &&
        search_row_sets(pool, h, circuits, m, i + 1, work, next_row + 1))
      return true;
  }
  // restore the zero row for the caller's next attempt
  for (int c = 0; c < work.cols(); ++c) work.set(next_row, c, SbElem::kZero);
  return false;
}

}  // namespace

std::optional<std::pair<int, Representation>> min_rows(const Hereditary& h,
                                                       Alphabet alphabet,
                                                       int cap) {
  int n = h.ground_size();
  if (n > 5 || cap > 4)
    fail(ErrorCode::kGroundTooLarge,
         "row-minimum search limited to n <= 5 and cap <= 4");
  bool boolean = alphabet == Alphabet::kBoolean;
  if (h.rank() == 0) {
    // The empty-row matrix already represents the rank-0 collection.
    Representation r(SbMatrix(0, n), boolean);
    return std::make_pair(0, std::move(r));
  }
  std::vector<std::vector<SbElem>> pool = candidate_rows(alphabet, n);
  std::vector<Subset> circuits = h.circuits();
  for (int m = h.rank(); m <= cap; ++m) {
    SbMatrix work(m, n);
    if (search_row_sets(pool, h, circuits, m, 0, work, 0))
      return std::make_pair(m, Representation(std::move(work), boolean));
  }
  return std::nullopt;
}

int upper_bound_rows(const Hereditary& h) {
  int basis_bound = 0;
  for (Subset b : h.bases()) basis_bound += subset_size(b);
  std::vector<Subset> circuits = h.circuits();
  bool hypothesis = true;
  for (Subset b : h.bases()) {
    bool covered = false;
    for (Subset c : circuits)
      if (is_subset_of(b, c)) {
        covered = true;
        break;
      }
    if (!covered) {
      hypothesis = false;
      break;
    }
  }
  if (!hypothesis) return basis_bound;
  int circuit_bound = 0;
  for (Subset c : circuits) circuit_bound += subset_size(c);
  return std::min(basis_bound, circuit_bound);
}

Hereditary unique_matching_hc(const BipartiteGraph& b) {
  int n = b.right;
  if (n > kVectorHcLimit || b.left > kVectorHcLimit)
    fail(ErrorCode::kGroundTooLarge, "matching sweep limited to " +
                                         std::to_string(kVectorHcLimit) +
                                         " vertices per side");
  std::vector<Subset> independent = {0};
  Subset limit = Subset{1} << n;
  Subset left_limit = Subset{1} << b.left;
  for (Subset x = 1; x < limit; ++x) {
    int k = subset_size(x);
    if (k > b.left) continue;
    bool found = false;
    for (Subset y = 0; y < left_limit && !found; ++y) {
      if (subset_size(y) != k) continue;
      if (count_matchings_onto(b, x, y, 2) == 1) found = true;
    }
    if (found) independent.push_back(x);
  }
  return Hereditary::from_independents(n, independent);
}

}  // namespace sbrep
