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

#include "blocktool/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "blocktool/digest.hpp"
#include "blocktool/errors.hpp"
#include "blocktool/number_theory.hpp"

namespace blocktool {

namespace {

constexpr int kMaxClassesForStructureConstants = 320;

}  // namespace

Group::Group(std::string name, int degree, std::vector<Permutation> generators,
             const GroupLimits& limits)
    : name_(std::move(name)), degree_(degree), generators_(std::move(generators)) {
  if (degree_ < 1) throw InputError("group degree must be positive");
  if (degree_ > limits.max_degree)
    throw InputError("group degree " + std::to_string(degree_) + " exceeds cap " +
                     std::to_string(limits.max_degree));
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw InputError("generator degree does not match group degree");

  // Closure by breadth-first multiplication with the generators.
  std::set<Permutation> seen{Permutation::identity(degree_)};
  std::deque<Permutation> queue{Permutation::identity(degree_)};
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators_) {
      Permutation y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > limits.max_order)
          throw InputError("group order exceeds cap " + std::to_string(limits.max_order));
        queue.push_back(std::move(y));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
  const std::size_t n = elements_.size();

  mult_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mult_[a * n + b] = index_of(elements_[a] * elements_[b]);
  inv_.resize(n);
  orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    inv_[a] = index_of(elements_[a].inverse());
    orders_[a] = blocktool::element_order(elements_[a]);
    exponent_ = std::lcm(exponent_, orders_[a]);
  }

  // Conjugacy classes by orbit enumeration.
  class_of_.assign(n, -1);
  std::vector<ConjugacyClass> raw;
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of_[x] != -1) continue;
    std::set<int> orbit;
    for (std::size_t g = 0; g < n; ++g) orbit.insert(conj(static_cast<int>(g), static_cast<int>(x)));
    ConjugacyClass c;
    c.members.assign(orbit.begin(), orbit.end());
    c.representative = c.members.front();
    c.size = c.members.size();
    c.rep_order = orders_[c.representative];
    for (int m : c.members) class_of_[m] = -2;
    raw.push_back(std::move(c));
  }
  std::sort(raw.begin(), raw.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return std::tie(a.rep_order, a.size, a.representative) <
           std::tie(b.rep_order, b.size, b.representative);
  });
  classes_ = std::move(raw);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (int m : classes_[c].members) class_of_[m] = static_cast<int>(c);
  const auto r = static_cast<std::size_t>(classes_.size());
  inverse_class_.resize(r);
  for (std::size_t c = 0; c < r; ++c) inverse_class_[c] = class_of_[inv_[classes_[c].representative]];

  if (r <= static_cast<std::size_t>(kMaxClassesForStructureConstants)) {
    class_mult_.assign(r * r * r, 0);
    for (std::size_t k = 0; k < r; ++k) {
      int gk = classes_[k].representative;
      for (std::size_t x = 0; x < n; ++x) {
        int y = mul(inv_[x], gk);
        std::size_t i = class_of_[x], j = class_of_[y];
        ++class_mult_[(i * r + j) * r + k];
      }
    }
  } else {
    throw InputError("group has too many conjugacy classes (" + std::to_string(r) + ")");
  }

  std::ostringstream canon;
  canon << "degree:" << degree_ << ";";
  for (const auto& e : elements_) {
    for (int v : e.one_based()) canon << v << ',';
    canon << ';';
  }
  hash_ = sha256_hex(canon.str());
}

int Group::index_of(const Permutation& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) return -1;
  return static_cast<int>(it - elements_.begin());
}

int Group::pow(int a, std::int64_t k) const {
  k = nt::mod(k, orders_[a]);
  int result = 0, base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int Group::power_class(int c, std::int64_t t) const {
  return class_of_[pow(classes_[c].representative, t)];
}

const std::vector<ConjugacyClass>& conjugacy_classes(const Group& g) { return g.classes(); }

}  // namespace blocktool
