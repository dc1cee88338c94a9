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

#include "sbrep/hereditary.hpp"

#include <algorithm>
#include <sstream>

#include "sbrep/text.hpp"

namespace sbrep {

namespace {

constexpr int kExhaustiveGuard = 16;

void check_desk_scale(int n, bool force) {
  if (n > kExhaustiveGuard && !force)
    fail(ErrorCode::kGroundTooLarge,
         "exhaustive check refused for ground size " + std::to_string(n) +
             " > " + std::to_string(kExhaustiveGuard) +
             "; pass force to override");
}

std::vector<Subset> maximal_members(std::vector<Subset> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Subset> out;
  for (Subset s : sets) {
    bool covered = false;
    for (Subset t : sets) {
      if (t != s && is_subset_of(s, t)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), subset_lex_less);
  return out;
}

void check_in_ground(int n, Subset x, const char* what) {
  if (!is_subset_of(x, full_set(n)))
    fail(ErrorCode::kElementOutOfRange,
         std::string(what) + " " + subset_to_string(x) +
             " leaves the ground set of size " + std::to_string(n));
}

}  // namespace

Hereditary Hereditary::from_bases(int n, std::vector<Subset> bases) {
  if (n < 0 || n > kMaxGroundSize)
    fail(ErrorCode::kGroundTooLarge, "ground size out of range");
  if (bases.empty())
    fail(ErrorCode::kInvalidArgument, "a hereditary collection is nonempty");
  for (Subset b : bases) check_in_ground(n, b, "basis");
  std::vector<Subset> sorted = bases;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::kAntichainViolation, "duplicate basis");
  for (Subset a : sorted)
    for (Subset b : sorted)
      if (a != b && is_subset_of(a, b))
        fail(ErrorCode::kAntichainViolation,
             "basis " + subset_to_string(a) + " is contained in " +
                 subset_to_string(b));
  std::sort(sorted.begin(), sorted.end(), subset_lex_less);
  return Hereditary(n, std::move(sorted));
}

Hereditary Hereditary::from_independents(int n,
                                         const std::vector<Subset>& sets) {
  if (n < 0 || n > kMaxGroundSize)
    fail(ErrorCode::kGroundTooLarge, "ground size out of range");
  if (sets.empty())
    fail(ErrorCode::kInvalidArgument, "a hereditary collection is nonempty");
  for (Subset s : sets) check_in_ground(n, s, "independent set");
  return Hereditary(n, maximal_members(sets));
}

Hereditary Hereditary::uniform(int m, int n) {
  if (m < 0 || m > n) fail(ErrorCode::kInvalidArgument, "need 0 <= m <= n");
  std::vector<Subset> bases;
  Subset limit = Subset{1} << n;
  for (Subset s = 0; s < limit; ++s)
    if (subset_size(s) == m) bases.push_back(s);
  if (bases.empty()) bases.push_back(0);
  return from_bases(n, std::move(bases));
}

Hereditary Hereditary::trivial(int n) { return from_bases(n, {Subset{0}}); }

bool Hereditary::is_independent(Subset x) const {
  check_in_ground(n_, x, "subset");
  for (Subset b : bases_)
    if (is_subset_of(x, b)) return true;
  return false;
}

int Hereditary::rank() const {
  int r = 0;
  for (Subset b : bases_) r = std::max(r, subset_size(b));
  return r;
}

std::vector<Subset> Hereditary::circuits(bool force) const {
  check_desk_scale(n_, force);
  std::vector<Subset> out;
  Subset limit = Subset{1} << n_;
  for (Subset s = 1; s < limit; ++s) {
    if (is_independent(s)) continue;
    bool minimal = true;
    for (Subset t = s; t != 0 && minimal; t &= t - 1) {
      Subset without = s & ~(t & (~t + 1));
      if (!is_independent(without)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), subset_lex_less);
  return out;
}

Hereditary Hereditary::dual() const {
  std::vector<Subset> dual_bases;
  dual_bases.reserve(bases_.size());
  Subset all = full_set(n_);
  for (Subset b : bases_) dual_bases.push_back(all & ~b);
  return from_bases(n_, std::move(dual_bases));
}

namespace {

// Relabels subsets of the survivor mask to a contiguous 0..k-1 ground set.
RelabeledHereditary relabel(int k, const std::vector<int>& old_labels,
                              const std::vector<Subset>& bases_in_old) {
  std::vector<int> new_of_old(kMaxGroundSize + 1, -1);
  for (int i = 0; i < k; ++i) new_of_old[old_labels[i]] = i;
  std::vector<Subset> relabeled;
  relabeled.reserve(bases_in_old.size());
  for (Subset b : bases_in_old) {
    Subset r = 0;
    for (int e : elements_of(b)) r |= Subset{1} << new_of_old[e];
    relabeled.push_back(r);
  }
  return {Hereditary::from_bases(k, std::move(relabeled)), old_labels};
}

}  // namespace

RelabeledHereditary Hereditary::delete_elements(Subset x) const {
  check_in_ground(n_, x, "deleted set");
  Subset survivors = full_set(n_) & ~x;
  std::vector<Subset> traces;
  traces.reserve(bases_.size());
  for (Subset b : bases_) traces.push_back(b & survivors);
  return relabel(subset_size(survivors), elements_of(survivors),
                 maximal_members(std::move(traces)));
}

RelabeledHereditary Hereditary::contract(Subset x) const {
  check_in_ground(n_, x, "contracted set");
  Subset survivors = full_set(n_) & ~x;
  // Maximal independent subsets of x are the maximal basis traces on x.
  std::vector<Subset> max_in_x;
  {
    std::vector<Subset> traces;
    for (Subset b : bases_) traces.push_back(b & x);
    max_in_x = maximal_members(std::move(traces));
  }
  // Y is independent in the contraction iff Y ∪ B_x fits in a basis for some
  // maximal B_x; such a basis necessarily has a maximal trace on x.
  std::vector<Subset> candidates;
  for (Subset b : bases_) {
    Subset trace = b & x;
    if (std::find(max_in_x.begin(), max_in_x.end(), trace) != max_in_x.end())
      candidates.push_back(b & survivors);
  }
  if (candidates.empty()) candidates.push_back(0);
  return relabel(subset_size(survivors), elements_of(survivors),
                 maximal_members(std::move(candidates)));
}

RelabeledHereditary Hereditary::minor(Subset delete_x,
                                        Subset contract_y) const {
  if ((delete_x & contract_y) != 0)
    fail(ErrorCode::kOverlappingSets,
         "deleted and contracted sets must be disjoint");
  RelabeledHereditary contracted = contract(contract_y);
  // Map the deletions into the contracted labels.
  Subset del_new = 0;
  for (int i = 0; i < contracted.collection.ground_size(); ++i)
    if (contains(delete_x, contracted.old_labels[i])) del_new |= Subset{1} << i;
  RelabeledHereditary result = contracted.collection.delete_elements(del_new);
  std::vector<int> labels;
  labels.reserve(result.old_labels.size());
  for (int i : result.old_labels) labels.push_back(contracted.old_labels[i]);
  return {std::move(result.collection), std::move(labels)};
}

Hereditary Hereditary::direct_sum(const Hereditary& other) const {
  std::vector<Subset> bases;
  bases.reserve(bases_.size() * other.bases_.size());
  for (Subset a : bases_)
    for (Subset b : other.bases_) bases.push_back(a | (b << n_));
  return from_bases(n_ + other.n_, std::move(bases));
}

bool Hereditary::satisfies_pr(bool force) const {
  check_desk_scale(n_, force);
  for (int p = 0; p < n_; ++p) {
    Subset pm = Subset{1} << p;
    if (!is_independent(pm)) continue;
    for (Subset b : bases_) {
      if (contains(b, p)) continue;
      bool ok = false;
      for (int e : elements_of(b)) {
        if (is_independent((b & ~(Subset{1} << e)) | pm)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
  }
  return true;
}

bool Hereditary::satisfies_br(bool force) const {
  check_desk_scale(n_, force);
  auto is_basis = [&](Subset s) {
    return std::find(bases_.begin(), bases_.end(), s) != bases_.end();
  };
  for (int p = 0; p < n_; ++p) {
    Subset pm = Subset{1} << p;
    if (!is_independent(pm)) continue;
    for (Subset b : bases_) {
      if (contains(b, p)) continue;  // b - p + p = b is already a basis
      bool ok = false;
      for (int e : elements_of(b)) {
        if (is_basis((b & ~(Subset{1} << e)) | pm)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
  }
  return true;
}

std::vector<Subset> Hereditary::independent_sets(bool force) const {
  check_desk_scale(n_, force);
  std::vector<Subset> out;
  Subset limit = Subset{1} << n_;
  for (Subset s = 0; s < limit; ++s)
    if (is_independent(s)) out.push_back(s);
  std::sort(out.begin(), out.end(), subset_size_lex_less);
  return out;
}

bool Hereditary::is_matroid(bool force) const {
  check_desk_scale(n_, force);
  // Fast pre-filter: matroid bases all share one cardinality.
  int r = rank();
  for (Subset b : bases_)
    if (subset_size(b) != r) return false;
  std::vector<Subset> ind = independent_sets(force);
  for (Subset i : ind) {
    for (Subset j : ind) {
      if (subset_size(i) != subset_size(j) + 1) continue;
      bool ok = false;
      for (int e : elements_of(i & ~j)) {
        if (is_independent(j | (Subset{1} << e))) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
  }
  return true;
}

Hereditary::ExchangeReport Hereditary::exchange_properties(bool force) const {
  check_desk_scale(n_, force);
  auto is_basis = [&](Subset s) {
    return std::find(bases_.begin(), bases_.end(), s) != bases_.end();
  };
  ExchangeReport report{true, true, true};
  for (Subset a : bases_) {
    for (Subset b : bases_) {
      for (int x : elements_of(a & ~b)) {
        Subset xm = Subset{1} << x;
        bool ep = false, dep = false, sep = false;
        for (int y : elements_of(b & ~a)) {
          Subset ym = Subset{1} << y;
          bool a_side = is_basis((a & ~xm) | ym);
          bool b_side = is_basis((b & ~ym) | xm);
          ep = ep || a_side;
          dep = dep || b_side;
          sep = sep || (a_side && b_side);
        }
        report.ep = report.ep && ep;
        report.dep = report.dep && dep;
        report.sep = report.sep && sep;
        if (!report.ep && !report.dep && !report.sep) return report;
      }
    }
  }
  return report;
}

std::optional<std::vector<int>> Hereditary::isomorphism_to(
    const Hereditary& other, bool force) const {
  if (n_ != other.n_) return std::nullopt;
  if (n_ > 8 && !force)
    fail(ErrorCode::kGroundTooLarge,
         "isomorphism search over n! maps refused for n > 8");
  if (bases_.size() != other.bases_.size()) return std::nullopt;
  std::vector<int> perm(n_);
  for (int i = 0; i < n_; ++i) perm[i] = i;
  std::vector<Subset> target = other.bases_;
  do {
    bool match = true;
    for (Subset b : bases_) {
      Subset image = 0;
      for (int e : elements_of(b)) image |= Subset{1} << perm[e];
      if (std::find(target.begin(), target.end(), image) == target.end()) {
        match = false;
        break;
      }
    }
    if (match) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::vector<Hereditary> enumerate_collections(int n) {
  if (n < 0 || n > 4)
    fail(ErrorCode::kGroundTooLarge,
         "anti-chain enumeration supported for n <= 4");
  int subsets = 1 << n;
  std::vector<Hereditary> out;
  // Families of subsets are masks over the 2^n subsets; keep anti-chains.
  for (std::uint32_t family = 1; family < (1u << subsets); ++family) {
    std::vector<Subset> members;
    for (int s = 0; s < subsets; ++s)
      if ((family >> s) & 1u) members.push_back(static_cast<Subset>(s));
    bool antichain = true;
    for (std::size_t i = 0; i < members.size() && antichain; ++i)
      for (std::size_t j = 0; j < members.size() && antichain; ++j)
        if (i != j && is_subset_of(members[i], members[j])) antichain = false;
    if (antichain) out.push_back(Hereditary::from_bases(n, members));
  }
  return out;
}

Hereditary parse_hc(std::string_view text) {
  std::vector<std::vector<std::string>> lines = split_lines_tokens(text);
  if (lines.empty()) fail(ErrorCode::kParse, "empty collection file");
  const auto& header = lines[0];
  if (header.size() != 2 || header[0] != "hc")
    fail(ErrorCode::kParse, "collection file must start with 'hc <n>'");
  int n = parse_count(header[1], "ground size");
  if (lines.size() < 2)
    fail(ErrorCode::kParse, "collection file lists no bases");
  std::vector<Subset> bases;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.empty() || line[0] != "b")
      fail(ErrorCode::kParse, "basis lines must start with 'b'");
    Subset b = 0;
    for (std::size_t j = 1; j < line.size(); ++j) {
      int e = parse_count(line[j], "element");
      if (e < 1 || e > n)
        fail(ErrorCode::kParse,
             "element " + std::to_string(e) + " outside 1.." + std::to_string(n));
      Subset bit = Subset{1} << (e - 1);
      if (b & bit)
        fail(ErrorCode::kParse, "repeated element " + std::to_string(e));
      b |= bit;
    }
    bases.push_back(b);
  }
  try {
    return Hereditary::from_bases(n, std::move(bases));
  } catch (const Error& e) {
    fail(ErrorCode::kParse, std::string("invalid collection: ") + e.what());
  }
}

std::string format_hc(const Hereditary& h) {
  std::ostringstream out;
  out << "hc " << h.ground_size() << '\n';
  for (Subset b : h.bases()) {
    out << 'b';
    for (int e : elements_of(b)) out << ' ' << (e + 1);
    out << '\n';
  }
  return out.str();
}

}  // namespace sbrep
