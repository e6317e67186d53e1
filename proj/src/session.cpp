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

#include "blocktool/session.hpp"

#include <numeric>

#include "blocktool/errors.hpp"
#include "blocktool/number_theory.hpp"

namespace blocktool {

Session::Session(GroupPtr group, std::int64_t p, SessionOptions options)
    : group_(std::move(group)), p_(p), options_(std::move(options)) {
  if (p_ < 2 || !nt::is_prime(p_)) throw InputError("not a prime: " + std::to_string(p_));
  conductor_ = group_->exponent();
  auto rf = make_residue_field(p_, nt::p_prime_part(conductor_, p_), options_.modulus_seed);
  local_ = std::make_unique<LocalField>(std::move(rf), conductor_, static_cast<std::int64_t>(group_->order()),
                                        options_.precision);
  whole_ = make_data(Subgroup::whole(group_));
}

std::unique_ptr<GroupData> Session::make_data(const Subgroup& s) const {
  GroupPtr g;
  std::vector<int> to, from;
  if (s.order() == group_->order()) {
    g = group_;
    to.resize(group_->order());
    std::iota(to.begin(), to.end(), 0);
    from = to;
  } else {
    auto emb = embed_subgroup(s, group_->name() + ":C" + std::to_string(s.order()));
    g = emb.group;
    to = std::move(emb.to_parent);
    from = std::move(emb.from_parent);
  }
  CharacterTable table = character_table(g, options_.cache_dir).lift(conductor_);
  BlockSystem blocks(table, *local_);
  return std::make_unique<GroupData>(GroupData{g, std::move(to), std::move(from), std::move(table), std::move(blocks)});
}

const GroupData& Session::centralizer(const Subgroup& q) const {
  Subgroup c = blocktool::centralizer(group_, q);
  if (c.order() == group_->order()) return *whole_;
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = centralizers_[c.elements()];
  if (!slot) slot = make_data(c);
  return *slot;
}

std::vector<const GroupData*> Session::loaded() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<const GroupData*> out{whole_.get()};
  for (const auto& [key, data] : centralizers_) out.push_back(data.get());
  return out;
}

const std::vector<Subgroup>& Session::p_subgroups() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!p_subgroups_) p_subgroups_ = p_subgroups_up_to_conjugacy(group_, p_, options_.sylow_cap);
  return *p_subgroups_;
}

}  // namespace blocktool
