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

#ifndef SBREP_HEREDITARY_HPP_
#define SBREP_HEREDITARY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbrep/error.hpp"
#include "sbrep/subset.hpp"

namespace sbrep {

struct RelabeledHereditary;

// A hereditary collection (abstract simplicial complex) on ground set
// {1..n}, stored by its basis anti-chain. Downward closure is implicit:
// a subset is independent iff it lies inside some basis. Values are
// immutable once built.
class Hereditary {
 public:
  // Validates the anti-chain property and element ranges; canonicalizes
  // basis order.
  static Hereditary from_bases(int n, std::vector<Subset> bases);

  // Downward-closes an arbitrary nonempty family: the inclusion-maximal
  // members become the bases.
  static Hereditary from_independents(int n, const std::vector<Subset>& sets);

  static Hereditary uniform(int m, int n);  // U_{m,n}
  static Hereditary trivial(int n);         // bases {∅}, rank 0

  int ground_size() const { return n_; }
  const std::vector<Subset>& bases() const { return bases_; }

  bool is_independent(Subset x) const;
  int rank() const;

  // All inclusion-minimal dependent subsets.
  std::vector<Subset> circuits(bool force = false) const;

  Hereditary dual() const;

  // Deletions and contractions relabel the surviving elements to 1..k,
  // keeping the order; the result carries the label map back.
  RelabeledHereditary delete_elements(Subset x) const;
  RelabeledHereditary contract(Subset x) const;
  // H / contract_y \ delete_x; the two application orders agree.
  RelabeledHereditary minor(Subset delete_x, Subset contract_y) const;

  // Disjoint union; the right ground set is shifted past the left one.
  Hereditary direct_sum(const Hereditary& other) const;

  // Point replacement: every independent singleton can replace some element
  // of every basis not containing it, staying independent.
  bool satisfies_pr(bool force = false) const;

  // Basis replacement: as PR but the replacement must again be a basis.
  bool satisfies_br(bool force = false) const;

  // The augmentation axiom over all independent pairs |I| = |J| + 1.
  bool is_matroid(bool force = false) const;

  struct ExchangeReport {
    bool ep = false;
    bool dep = false;
    bool sep = false;
  };
  // The three basis-exchange conditions, evaluated verbatim.
  ExchangeReport exchange_properties(bool force = false) const;

  // Ground bijection respecting independence, or nullopt. Brute force over
  // permutations; guarded at n <= 8.
  std::optional<std::vector<int>> isomorphism_to(const Hereditary& other,
                                                 bool force = false) const;

  // Every independent subset, in (size, lex) order.
  std::vector<Subset> independent_sets(bool force = false) const;

  friend bool operator==(const Hereditary& a, const Hereditary& b) = default;

 private:
  Hereditary(int n, std::vector<Subset> bases)
      : n_(n), bases_(std::move(bases)) {}

  int n_ = 0;
  std::vector<Subset> bases_;
};

// old_labels maps new 0-based indices back to the original elements.
struct RelabeledHereditary {
  Hereditary collection;
  std::vector<int> old_labels;
};

// Every hereditary collection on ground size n, i.e. every nonempty
// anti-chain of the subset lattice, each exactly once. Guarded at n <= 4.
std::vector<Hereditary> enumerate_collections(int n);

// Collection file format, bit exact:
//   line 1: "hc <n>"
//   one line per basis: "b" followed by distinct 1-based elements
//     (a bare "b" is the empty basis)
// The listed bases must form an anti-chain.
Hereditary parse_hc(std::string_view text);
std::string format_hc(const Hereditary& h);

}  // namespace sbrep

#endif  // SBREP_HEREDITARY_HPP_
