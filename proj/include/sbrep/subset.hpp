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

#ifndef SBREP_SUBSET_HPP_
#define SBREP_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace sbrep {

// Subsets of a ground set {0, ..., n-1} as bitmasks. Ground elements are
// 0-based internally; the text formats are 1-based.
using Subset = std::uint32_t;

constexpr int kMaxGroundSize = 31;

inline int subset_size(Subset s) { return std::popcount(s); }

inline Subset full_set(int n) {
  return n == 0 ? 0u : (Subset{1} << n) - 1u;
}

inline bool contains(Subset s, int element) {
  return (s >> element) & 1u;
}

inline bool is_subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

inline std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  for (Subset t = s; t != 0; t &= t - 1) {
    out.push_back(std::countr_zero(t));
  }
  return out;
}

inline Subset subset_from(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) s |= Subset{1} << e;
  return s;
}

// Lexicographic order on the ascending element sequences, so {1,4} < {2,3}.
// This is the canonical order used for stored bases and printed output.
inline bool subset_lex_less(Subset a, Subset b) {
  while (a != 0 && b != 0) {
    int ea = std::countr_zero(a);
    int eb = std::countr_zero(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// Size first, then lexicographic. Used when reporting the first subset on
// which two collections disagree.
inline bool subset_size_lex_less(Subset a, Subset b) {
  int sa = subset_size(a), sb = subset_size(b);
  if (sa != sb) return sa < sb;
  return subset_lex_less(a, b);
}

// Renders a subset with 1-based elements, e.g. "{1,3,4}".
inline std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out += ",";
    out += std::to_string(e + 1);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace sbrep

#endif  // SBREP_SUBSET_HPP_
