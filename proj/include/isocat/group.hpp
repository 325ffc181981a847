// Copyright 2026 The isocat Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace isocat {

// Dense element id in [0, n).
using Element = std::int32_t;

/// A finite group stored as its full Cayley table.
///
/// Tables are validated once at construction (closure, two-sided identity,
/// inverses and all n^3 associativity triples) and are immutable afterwards,
/// so a GroupTable can be shared freely between threads.
class GroupTable {
 public:
  /// Builds a group from an n x n multiplication table.
  /// Throws NotAGroup naming the first violated axiom.
  static GroupTable from_cayley(std::string name,
                                const std::vector<std::vector<Element>>& mul,
                                std::vector<Element> gen_ids = {});

  /// Same as from_cayley, for a row-major table of n*n entries.
  static GroupTable from_flat(std::string name, int n, std::vector<Element> mul,
                              std::vector<Element> gen_ids = {});

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const {
    return mul_[static_cast<std::size_t>(a) * n_ + b];
  }
  Element inv(Element a) const { return inv_[a]; }
  std::span<const Element> gen_ids() const { return gen_ids_; }
  std::span<const Element> flat_table() const { return mul_; }

  bool is_abelian() const;
  Element power(Element x, long long k) const;

  /// Copy with another display name.
  GroupTable renamed(std::string name) const;

 private:
  GroupTable() = default;

  std::string name_;
  int n_ = 0;
  std::vector<Element> mul_;
  Element identity_ = 0;
  std::vector<Element> inv_;
  std::vector<Element> gen_ids_;
};

class Subgroup {
 public:
  /// `members` need not be sorted; `gens` must generate exactly `members`.
  Subgroup(const GroupTable& parent, std::vector<Element> members,
           std::vector<Element> gens);

  const GroupTable& parent() const { return *parent_; }
  std::span<const Element> members() const { return members_; }
  std::span<const Element> gens() const { return gens_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(Element x) const { return mask_[x] != 0; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const GroupTable* parent_;
  std::vector<Element> members_;
  std::vector<char> mask_;
  std::vector<Element> gens_;
};

/// Invariant factors in ascending order, each dividing the next.
struct AbelianType {
  std::vector<int> factors;

  int order() const;
  /// "C4xC2xC2" style (largest factor first); "1" for the trivial group.
  std::string to_string() const;
  auto operator<=>(const AbelianType&) const = default;
};

/// Counts of elements of each order d, for the sorted divisors d of |G|.
struct OrderList {
  std::vector<int> divisors;
  std::vector<int> counts;

  /// "[1,19,44,0,0,0,0]"
  std::string to_string() const;
  /// "1-19-44-0-0-0-0", the corpus file-name form.
  std::string to_stem() const;
  auto operator<=>(const OrderList&) const = default;
};

/// Isomorphism invariants. Equal fingerprints are necessary, not sufficient.
struct Fingerprint {
  OrderList order_list;
  int center_order = 0;
  int derived_order = 0;
  AbelianType abelianization;
  std::vector<int> class_sizes;
  std::vector<std::pair<int, int>> order_centralizer;

  bool operator==(const Fingerprint&) const = default;
};

struct CandidateSubgroup {
  Subgroup subgroup;
  AbelianType type;
};

int element_order(const GroupTable& g, Element x);
std::vector<int> element_orders(const GroupTable& g);
OrderList order_list(const GroupTable& g);

Element conjugate(const GroupTable& g, Element by, Element x);
Element commutator(const GroupTable& g, Element a, Element b);

/// Smallest subgroup containing `gens`; the stored generator list keeps
/// only the generators that enlarged the subgroup.
Subgroup generated_subgroup(const GroupTable& g, std::span<const Element> gens);

/// Abelian type from the multiset of element orders of an abelian group.
AbelianType abelian_type_from_orders(std::span<const int> orders);
/// nullopt when `h` is not abelian.
std::optional<AbelianType> abelian_type(const Subgroup& h);

bool is_normal(const GroupTable& g, const Subgroup& h);

Subgroup center(const GroupTable& g);
Subgroup derived_subgroup(const GroupTable& g);
int centralizer_order(const GroupTable& g, Element x);
/// class_of[x] = index of the conjugacy class of x, numbered by least member.
std::vector<int> conjugacy_classes(const GroupTable& g);

/// Normal subgroups isomorphic to C2xC2, C4xC4 or C2^4, sorted by member set.
std::vector<CandidateSubgroup> enumerate_candidate_subgroups(
    const GroupTable& g);

Fingerprint fingerprint(const GroupTable& g);

/// Copy of `g` where old element x gets the new id perm[x].
GroupTable relabel(const GroupTable& g, std::span<const Element> perm);

}  // namespace isocat
