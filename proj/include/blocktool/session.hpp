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
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "blocktool/blocks.hpp"
#include "blocktool/chartab.hpp"
#include "blocktool/finite_field.hpp"
#include "blocktool/localfield.hpp"
#include "blocktool/subgroups.hpp"

namespace blocktool {

struct SessionOptions {
  std::optional<std::filesystem::path> cache_dir;
  std::int64_t precision = 0;  ///< 0: default initial precision
  std::uint64_t modulus_seed = 0;
  std::size_t sylow_cap = 256;
  std::size_t fusion_cap = 16;
};

/// A subgroup X of G (G itself or a centralizer) with its table over the
/// global conductor and its p-blocks.
struct GroupData {
  GroupPtr group;
  std::vector<int> to_parent;    ///< X index -> G index
  std::vector<int> from_parent;  ///< G index -> X index or -1
  CharacterTable table;
  BlockSystem blocks;
};

/// Everything fixed for one group and one prime: the conductor N = exp(G),
/// the residue field and prime above p, and memoized centralizer data.
class Session {
 public:
  Session(GroupPtr group, std::int64_t p, SessionOptions options = {});

  const GroupPtr& group() const { return group_; }
  std::int64_t p() const { return p_; }
  std::int64_t conductor() const { return conductor_; }
  const SessionOptions& options() const { return options_; }
  const ResidueField& residue_field() const { return local_->residue_field(); }
  const GaloisField& field() const { return *local_->residue_field().field; }
  const LocalField& local_field() const { return *local_; }

  const GroupData& whole() const { return *whole_; }
  /// Data for C_G(Q); the whole group when Q is central.
  const GroupData& centralizer(const Subgroup& q) const;
  /// G followed by every centralizer loaded so far, in a fixed order.
  std::vector<const GroupData*> loaded() const;
  /// p-subgroups of G up to conjugacy (computed once).
  const std::vector<Subgroup>& p_subgroups() const;

 private:
  std::unique_ptr<GroupData> make_data(const Subgroup& s) const;

  GroupPtr group_;
  std::int64_t p_;
  std::int64_t conductor_;
  SessionOptions options_;
  std::unique_ptr<LocalField> local_;
  std::unique_ptr<GroupData> whole_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, std::unique_ptr<GroupData>> centralizers_;
  mutable std::optional<std::vector<Subgroup>> p_subgroups_;
};

}  // namespace blocktool
