// Copyright 2026 The blocktool Authors
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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "blocktool/group.hpp"

namespace blocktool {

/// A subgroup of a parent Group, stored as sorted parent element indices.
class Subgroup {
 public:
  /// `elements` must be closed under the parent's product; throws InputError
  /// otherwise.
  Subgroup(GroupPtr parent, std::vector<int> elements);

  static Subgroup generated(GroupPtr parent, std::span<const int> generators);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(int g) const { return member_[g]; }
  bool contains(const Subgroup& other) const;

  /// Total order: by order, then element list.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements_ < b.elements_;
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  GroupPtr parent_;
  std::vector<int> elements_;
  std::vector<bool> member_;
};

/// Subgroup {g : g x = x g}. Throws InputError if x is not in G.
Subgroup centralizer(const GroupPtr& g, const Permutation& x);
Subgroup centralizer(const GroupPtr& g, int x);
/// C_G(S): elements commuting with every element of S.
Subgroup centralizer(const GroupPtr& g, const Subgroup& s);
Subgroup normalizer(const GroupPtr& g, const Subgroup& s);
/// ^x S = x S x^{-1}
Subgroup conjugate(const Subgroup& s, int x);
bool is_p_group(const Subgroup& s, std::int64_t p);

/// One Sylow p-subgroup found by normalizer growth from the trivial group,
/// scanning candidate elements in index order. Throws InputError when the
/// Sylow order exceeds `cap`.
Subgroup sylow_subgroup(const GroupPtr& g, std::int64_t p, std::size_t cap = 256);

/// Every subgroup of `s` (as subgroups of the parent), sorted.
std::vector<Subgroup> all_subgroups(const Subgroup& s);

/// Representatives of G-conjugacy classes of p-subgroups, sorted, including
/// the trivial subgroup.
std::vector<Subgroup> p_subgroups_up_to_conjugacy(const GroupPtr& g, std::int64_t p,
                                                  std::size_t sylow_cap = 256);

/// Whether a is G-conjugate to a subgroup of b; on success returns x with
/// x a x^{-1} <= b.
std::optional<int> conjugate_into(const Subgroup& a, const Subgroup& b);

struct CyclicSubgroup {
  Subgroup subgroup;
  std::vector<int> generators;  ///< all x with <x> = subgroup, sorted
};

/// Every cyclic subgroup of P exactly once, sorted, with its generator set.
std::vector<CyclicSubgroup> cyclic_subgroups_with_generators(const Subgroup& p);

/// A subgroup realized as a standalone Group plus the index map into the
/// parent.
struct EmbeddedGroup {
  GroupPtr group;
  std::vector<int> to_parent;    ///< subgroup index -> parent index
  std::vector<int> from_parent;  ///< parent index -> subgroup index or -1
};

EmbeddedGroup embed_subgroup(const Subgroup& s, const std::string& name,
                             const GroupLimits& limits = {});

}  // namespace blocktool
