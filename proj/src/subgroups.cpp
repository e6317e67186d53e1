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

#include "blocktool/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "blocktool/errors.hpp"
#include "blocktool/number_theory.hpp"

namespace blocktool {

namespace {

std::vector<int> closure(const Group& g, std::vector<int> seed, std::span<const int> gens) {
  std::vector<bool> in(g.order(), false);
  std::deque<int> queue;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      queue.push_back(x);
    }
  };
  push(0);
  for (int x : seed) push(x);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int s : gens) push(g.mul(s, x));
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(static_cast<int>(i));
  return out;
}

bool is_p_power(std::size_t n, std::int64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// Least conjugate (as a sorted element vector); identifies G-classes.
std::vector<int> conjugacy_key(const Subgroup& s) {
  const Group& g = *s.parent();
  std::vector<int> best;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<int> c;
    c.reserve(s.order());
    for (int e : s.elements()) c.push_back(g.conj(static_cast<int>(x), e));
    std::sort(c.begin(), c.end());
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  member_.assign(parent_->order(), false);
  for (int e : elements_) {
    if (e < 0 || static_cast<std::size_t>(e) >= parent_->order()) throw InputError("subgroup element out of range");
    member_[e] = true;
  }
  if (elements_.empty() || elements_.front() != 0) throw InputError("subgroup must contain the identity");
  for (int a : elements_)
    for (int b : elements_)
      if (!member_[parent_->mul(a, b)]) throw InputError("subgroup element list is not closed");
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const int> generators) {
  auto elems = closure(*parent, {}, generators);
  return Subgroup(std::move(parent), std::move(elems));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return Subgroup(std::move(parent), std::move(all));
}

bool Subgroup::contains(const Subgroup& other) const {
  return std::all_of(other.elements_.begin(), other.elements_.end(), [&](int e) { return member_[e]; });
}

Subgroup centralizer(const GroupPtr& g, const Permutation& x) {
  int idx = g->index_of(x);
  if (idx < 0) throw InputError("centralizer: element is not in the group");
  return centralizer(g, idx);
}

Subgroup centralizer(const GroupPtr& g, int x) {
  std::vector<int> out;
  for (std::size_t y = 0; y < g->order(); ++y)
    if (g->mul(static_cast<int>(y), x) == g->mul(x, static_cast<int>(y))) out.push_back(static_cast<int>(y));
  return Subgroup(g, std::move(out));
}

Subgroup centralizer(const GroupPtr& g, const Subgroup& s) {
  std::vector<int> out;
  for (std::size_t y = 0; y < g->order(); ++y) {
    int yy = static_cast<int>(y);
    bool ok = std::all_of(s.elements().begin(), s.elements().end(),
                          [&](int x) { return g->mul(yy, x) == g->mul(x, yy); });
    if (ok) out.push_back(yy);
  }
  return Subgroup(g, std::move(out));
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& s) {
  std::vector<int> out;
  for (std::size_t y = 0; y < g->order(); ++y) {
    int yy = static_cast<int>(y);
    bool ok = std::all_of(s.elements().begin(), s.elements().end(),
                          [&](int x) { return s.contains(g->conj(yy, x)); });
    if (ok) out.push_back(yy);
  }
  return Subgroup(g, std::move(out));
}

Subgroup conjugate(const Subgroup& s, int x) {
  std::vector<int> out;
  for (int e : s.elements()) out.push_back(s.parent()->conj(x, e));
  return Subgroup(s.parent(), std::move(out));
}

bool is_p_group(const Subgroup& s, std::int64_t p) { return is_p_power(s.order(), p); }

Subgroup sylow_subgroup(const GroupPtr& g, std::int64_t p, std::size_t cap) {
  const auto target = static_cast<std::size_t>(nt::p_part(static_cast<std::int64_t>(g->order()), p));
  if (target > cap)
    throw InputError("Sylow " + std::to_string(p) + "-subgroup of order " + std::to_string(target) +
                     " exceeds cap " + std::to_string(cap));
  Subgroup s = Subgroup::trivial(g);
  while (s.order() < target) {
    Subgroup n = normalizer(g, s);
    bool grown = false;
    for (int x : n.elements()) {
      // x S has order p in N(S)/S.
      if (s.contains(x) || !s.contains(g->pow(x, p))) continue;
      std::vector<int> gens(s.elements());
      gens.push_back(x);
      s = Subgroup::generated(g, gens);
      grown = true;
      break;
    }
    if (!grown) throw InternalError("Sylow search stalled");
  }
  return s;
}

std::vector<Subgroup> all_subgroups(const Subgroup& s) {
  const GroupPtr& g = s.parent();
  std::map<std::vector<int>, std::vector<int>> found;  // elements -> generators
  std::deque<std::vector<int>> queue;
  found[{0}] = {};
  queue.push_back({0});
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    std::vector<bool> in(g->order(), false);
    for (int e : cur) in[e] = true;
    const std::vector<int> gens = found[cur];
    for (int x : s.elements()) {
      if (in[x]) continue;
      std::vector<int> ng(gens);
      ng.push_back(x);
      auto elems = closure(*g, cur, ng);
      if (found.emplace(elems, ng).second) queue.push_back(std::move(elems));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& [elems, gens] : found) out.emplace_back(g, elems);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> p_subgroups_up_to_conjugacy(const GroupPtr& g, std::int64_t p, std::size_t sylow_cap) {
  Subgroup sylow = sylow_subgroup(g, p, sylow_cap);
  std::vector<Subgroup> out;
  std::set<std::vector<int>> keys;
  for (const auto& s : all_subgroups(sylow))
    if (keys.insert(conjugacy_key(s)).second) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> conjugate_into(const Subgroup& a, const Subgroup& b) {
  const Group& g = *a.parent();
  if (b.order() % a.order() != 0) return std::nullopt;
  for (std::size_t x = 0; x < g.order(); ++x) {
    int xx = static_cast<int>(x);
    bool ok = std::all_of(a.elements().begin(), a.elements().end(),
                          [&](int e) { return b.contains(g.conj(xx, e)); });
    if (ok) return xx;
  }
  return std::nullopt;
}

std::vector<CyclicSubgroup> cyclic_subgroups_with_generators(const Subgroup& p) {
  const GroupPtr& g = p.parent();
  std::map<std::vector<int>, std::vector<int>> gens;
  for (int x : p.elements()) {
    std::vector<int> powers;
    int y = 0;
    do {
      powers.push_back(y);
      y = g->mul(y, x);
    } while (y != 0);
    std::sort(powers.begin(), powers.end());
    gens[powers].push_back(x);
  }
  std::vector<CyclicSubgroup> out;
  for (auto& [elems, xs] : gens) {
    std::sort(xs.begin(), xs.end());
    out.push_back({Subgroup(g, elems), xs});
  }
  std::sort(out.begin(), out.end(),
            [](const CyclicSubgroup& a, const CyclicSubgroup& b) { return a.subgroup < b.subgroup; });
  return out;
}

EmbeddedGroup embed_subgroup(const Subgroup& s, const std::string& name, const GroupLimits& limits) {
  const Group& parent = *s.parent();
  std::vector<Permutation> gens;
  for (int e : s.elements())
    if (e != 0) gens.push_back(parent.element(e));
  EmbeddedGroup out;
  out.group = std::make_shared<const Group>(name, parent.degree(), std::move(gens), limits);
  out.to_parent.resize(out.group->order());
  out.from_parent.assign(parent.order(), -1);
  for (std::size_t i = 0; i < out.group->order(); ++i) {
    int pi = parent.index_of(out.group->element(static_cast<int>(i)));
    out.to_parent[i] = pi;
    out.from_parent[pi] = static_cast<int>(i);
  }
  return out;
}

}  // namespace blocktool
