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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sbrep/field.hpp"
#include "sbrep/matrix.hpp"

using namespace sbrep;

namespace {

constexpr SbElem Z = SbElem::kZero;
constexpr SbElem I = SbElem::kOne;
constexpr SbElem G = SbElem::kGhost;

SbMatrix sbm(const std::vector<std::string>& rows) {
  return SbMatrix::from_rows(rows);
}

// Every matrix of a given shape over the three scalars, by counting.
void for_all_matrices(int m, int n, const std::function<void(const SbMatrix&)>& f) {
  long long total = 1;
  for (int i = 0; i < m * n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    SbMatrix a(m, n);
    for (int r = 0; r < m; ++r)
      for (int col = 0; col < n; ++col) {
        a.set(r, col, static_cast<SbElem>(c % 3));
        c /= 3;
      }
    f(a);
  }
}

}  // namespace

TEST_CASE("permanent on the worked 2x2 matrices") {
  CHECK(permanent(sbm({"1 1", "0 1"})) == I);
  CHECK(permanent(SbMatrix::identity(4)) == I);
  // two summands both 1, so the permanent is 1 + 1 = 1^nu
  CHECK(permanent(sbm({"1 1", "1 1"})) == G);
  CHECK(permanent(SbMatrix()) == I);  // empty product convention
  CHECK_THROWS_AS(permanent(sbm({"1 0 1"})), Error);
}

TEST_CASE("minor expansion examples") {
  CHECK(permanent_minor_expansion(SbMatrix::identity(3), 0) == I);
  CHECK(permanent_minor_expansion(sbm({"v v", "v v"}), 0) == G);
  CHECK(permanent_minor_expansion(sbm({"1 0", "v 1"}), 0) == I);
}

TEST_CASE("nonsingularity examples") {
  CHECK(is_nonsingular(sbm({"1 v", "0 1"})));
  CHECK(is_nonsingular(sbm({"1 0", "0 1"})));
  CHECK(is_nonsingular(sbm({"1 1", "0 1"})));
  // an all-ghost row kills every summand
  CHECK_FALSE(is_nonsingular(sbm({"v v", "1 1"})));
  SbMatrix circulant = sbm({"0 1 1", "1 0 1", "1 1 0"});
  CHECK(oracle::per_brute(circulant) == G);
  CHECK_FALSE(is_nonsingular(circulant));
}

TEST_CASE("triangularization") {
  SbMatrix triangular = sbm({"1 0 0", "v 1 0", "1 v 1"});
  auto t = triangularize(triangular);
  REQUIRE(t.has_value());
  // any returned pair must yield the triangular shape
  auto check_shape = [](const SbMatrix& a, const Triangularization& tr) {
    for (int i = 0; i < a.rows(); ++i) {
      CHECK(a.at(tr.row_perm[i], tr.col_perm[i]) == I);
      for (int j = i + 1; j < a.cols(); ++j)
        CHECK(a.at(tr.row_perm[i], tr.col_perm[j]) == Z);
    }
  };
  check_shape(triangular, *t);

  SbMatrix swapped = sbm({"0 1", "1 v"});
  auto t2 = triangularize(swapped);
  REQUIRE(t2.has_value());
  check_shape(swapped, *t2);

  CHECK_FALSE(triangularize(sbm({"v 0", "0 1"})).has_value());
}

TEST_CASE("full-width markers") {
  Marker m = find_n_marker(SbMatrix::identity(2));
  CHECK(m.row == 0);  // lowest row index wins
  SbMatrix triangular = sbm({"1 0 0", "v 1 0", "1 v 1"});
  CHECK(find_n_marker(triangular).row == 0);  // the top row
  Marker m2 = find_n_marker(sbm({"0 1", "1 v"}));
  CHECK(m2.row == 0);
  CHECK(m2.one_col == 1);
  CHECK_THROWS_AS(find_n_marker(sbm({"v v", "v v"})), Error);
}

TEST_CASE("vector dependence") {
  auto vec = [](std::initializer_list<int> xs) {
    std::vector<SbElem> v;
    for (int x : xs) v.push_back(static_cast<SbElem>(x));
    return v;
  };
  // boolean vectors can be dependent: the sum is all-ghost
  CHECK(vectors_dependent({vec({0, 1, 1}), vec({1, 0, 1}), vec({1, 1, 0})}));
  CHECK(vectors_dependent({vec({1, 1, 0}), vec({2, 2, 2})}));  // ghost member
  CHECK_FALSE(vectors_dependent({vec({1, 0}), vec({0, 1})}));
  // more vectors than coordinates
  CHECK(vectors_dependent({vec({1, 0}), vec({0, 1}), vec({1, 1})}));
  CHECK_THROWS_AS(vectors_dependent({vec({1, 0}), vec({1})}), Error);
}

TEST_CASE("rank examples") {
  CHECK(rank(sbm({"1 v", "0 1"})) == 2);
  CHECK(rank(sbm({"v v", "v 0"})) == 0);     // nonzero ghost matrix
  SbMatrix circulant = sbm({"1 1 0", "0 1 1", "1 0 1"});
  CHECK(rank(circulant) == 2);
  CHECK(rank(circulant.transpose()) == 2);
  CHECK(rank(SbMatrix()) == 0);
  CHECK(rank(sbm({"1 0 1 1"})) == 1);
}

TEST_CASE("rank defect certificates") {
  SbMatrix zero_col = sbm({"0 1 1", "0 1 0", "0 v 1"});
  auto cert = rank_defect_condition(zero_col);
  REQUIRE(cert.has_value());
  CHECK(subset_size(cert->columns) >= zero_col.rows() + 1 - cert->k);

  SbMatrix a = sbm({"0 0 1", "0 0 1", "1 1 1"});
  CHECK(oracle::per_brute(a) == Z);
  auto cert2 = rank_defect_condition(a);
  REQUIRE(cert2.has_value());
  CHECK(cert2->k == 2);
  CHECK(cert2->rows == 0b011u);
  CHECK(subset_size(cert2->columns) >= 2);

  CHECK_FALSE(rank_defect_condition(SbMatrix::identity(3)).has_value());
}

TEST_CASE("transpose preserves the permanent") {
  CHECK(SbMatrix::identity(3).transpose() == SbMatrix::identity(3));
  SbMatrix a = sbm({"1 v", "0 1"});
  CHECK(permanent(a.transpose()) == I);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    SbMatrix b = oracle::random_sb_matrix(rng, 3, 3);
    CHECK(permanent(b) == permanent(b.transpose()));
  }
}

TEST_CASE("exhaustive 2x2 oracle agreement") {
  for_all_matrices(2, 2, [](const SbMatrix& a) {
    SbElem expected = oracle::per_brute(a);
    CHECK(permanent(a) == expected);
    CHECK(permanent_minor_expansion(a, 0) == expected);
    CHECK(permanent_minor_expansion(a, 1) == expected);
    CHECK(is_nonsingular(a) == (expected == I));
    CHECK(oracle::alpha_dependent_rows(a) == (expected != I));
    CHECK(rank_defect_condition(a).has_value() == (expected == Z));
  });
}

TEST_CASE("sampled 3x3 and 4x4 oracle agreement") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    int n = trial % 2 == 0 ? 3 : 4;
    SbMatrix a = oracle::random_sb_matrix(rng, n, n);
    SbElem expected = oracle::per_brute(a);
    CHECK(permanent(a) == expected);
    for (int i = 0; i < n; ++i)
      CHECK(permanent_minor_expansion(a, i) == expected);
    CHECK(is_nonsingular(a) == (expected == I));
    // permuting rows and columns leaves the permanent unchanged
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SbMatrix shuffled(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) shuffled.set(r, c, a.at(perm[r], c));
    CHECK(permanent(shuffled) == expected);
  }
}

TEST_CASE("column independence matches witness enumeration") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    SbMatrix a = oracle::random_sb_matrix(rng, 3, 4);
    for (Subset cols = 0; cols < (Subset{1} << 4); ++cols)
      CHECK(columns_independent(a, cols) ==
            oracle::witness_independent_cols(a, cols));
  }
}

TEST_CASE("found witnesses really are witnesses") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    SbMatrix a = oracle::random_sb_matrix(rng, 4, 4);
    for (Subset cols = 0; cols < (Subset{1} << 4); ++cols) {
      auto w = find_witness(a, cols);
      CHECK(w.has_value() == columns_independent(a, cols));
      if (w) {
        CHECK(subset_size(w->rows) == subset_size(cols));
        CHECK(oracle::per_brute(a.submatrix(w->rows, w->cols)) == I);
      }
    }
  }
}

TEST_CASE("more vectors than coordinates are always dependent") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 4;
    int m = n + 1 + trial % 2;
    SbMatrix a = oracle::random_sb_matrix(rng, m, n);
    std::vector<std::vector<SbElem>> rows(m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) rows[r].push_back(a.at(r, c));
    CHECK(vectors_dependent(rows));
  }
}

TEST_CASE("markers of every length sit in distinct rows of the triangular form") {
  std::mt19937 rng(17);
  int nonsingular_seen = 0;
  while (nonsingular_seen < 50) {
    SbMatrix a = oracle::random_sb_matrix(rng, 4, 4);
    auto t = triangularize(a);
    if (!t) continue;
    ++nonsingular_seen;
    // row i of the triangular form is a marker of length n - i
    for (int i = 0; i < 4; ++i) {
      int ones = 0, zeros = 0;
      for (int j = i; j < 4; ++j) {
        SbElem e = a.at(t->row_perm[i], t->col_perm[j]);
        if (e == I) ++ones;
        if (e == Z) ++zeros;
      }
      CHECK(ones == 1);
      CHECK(zeros == 4 - i - 1);
    }
  }
}

TEST_CASE("superboolean rank is at most any field rank for boolean matrices") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 150; ++trial) {
    int m = 1 + trial % 5, n = 1 + (trial / 5) % 5;
    SbMatrix a = oracle::random_boolean_matrix(rng, m, n);
    int sb_rank = rank(a);
    for (int p : {2, 3, 5}) {
      GfMatrix f(p, m, n);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
          f.set(r, c, a.at(r, c) == SbElem::kOne ? 1 : 0);
      CHECK(sb_rank <= gf_rank(f));
    }
  }
}
