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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "blocktool/errors.hpp"
#include "blocktool/group.hpp"
#include "blocktool/subgroups.hpp"
#include "support.hpp"

using namespace blocktool;
using testsupport::corpus;

namespace {

// Independent class computation: orbit of each element under conjugation,
// working on permutations directly rather than the multiplication table.
std::multiset<std::size_t> oracle_class_sizes(const Group& g) {
  std::set<Permutation> seen;
  std::multiset<std::size_t> sizes;
  for (const auto& x : g.elements()) {
    if (seen.count(x)) continue;
    std::set<Permutation> orbit;
    for (const auto& y : g.elements()) orbit.insert(y * x * y.inverse());
    seen.insert(orbit.begin(), orbit.end());
    sizes.insert(orbit.size());
  }
  return sizes;
}

// All subgroups generated by at most two elements, closed under joins.
std::set<std::vector<int>> oracle_subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> out;
  const int n = static_cast<int>(g->order());
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int gens[] = {a, b};
      out.insert(Subgroup::generated(g, gens).elements());
    }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(out.begin(), out.end());
    for (const auto& x : cur)
      for (const auto& y : cur) {
        std::vector<int> gens(x);
        gens.insert(gens.end(), y.begin(), y.end());
        auto s = Subgroup::generated(g, gens).elements();
        if (out.insert(s).second) grew = true;
      }
  }
  return out;
}

bool is_prime_power(std::size_t n, std::int64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

TEST_CASE("corpus groups have the expected orders") {
  std::vector<std::pair<std::string, std::size_t>> expected = {
      {"C6", 6}, {"S3", 6}, {"S4", 24}, {"A4", 12}, {"A5", 60}, {"D8", 8},
      {"D10", 10}, {"Q8", 8}, {"SL2_3", 24}, {"C7xC3", 21}, {"C5xC4", 20}};
  for (const auto& [name, order] : expected) CHECK(corpus(name)->order() == order);
}

TEST_CASE("identity is element 0 and elements are sorted") {
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    CHECK(g->element(0).is_identity());
    CHECK(std::is_sorted(g->elements().begin(), g->elements().end()));
  }
}

TEST_CASE("class equation and class sizes against the orbit oracle") {
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    std::size_t total = 0;
    std::multiset<std::size_t> sizes;
    for (const auto& c : g->classes()) {
      total += c.size;
      sizes.insert(c.size);
      CHECK(g->order() % c.size == 0);
      CHECK(c.size * centralizer(g, c.representative).order() == g->order());
    }
    CHECK(total == g->order());
    CHECK(sizes == oracle_class_sizes(*g));
  }
}

TEST_CASE("class ordering convention") {
  auto s3 = corpus("S3");
  REQUIRE(s3->num_classes() == 3);
  CHECK(s3->classes()[0].size == 1);
  CHECK(s3->classes()[1].size == 3);
  CHECK(s3->classes()[2].size == 2);
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    const auto& cl = g->classes();
    for (std::size_t i = 1; i < cl.size(); ++i) {
      auto key = [&](const ConjugacyClass& c) { return std::make_tuple(c.rep_order, c.size, c.representative); };
      CHECK(key(cl[i - 1]) < key(cl[i]));
      CHECK(cl[i].representative == cl[i].members.front());
    }
  }
  auto c6 = corpus("C6");
  CHECK(c6->num_classes() == 6);
  auto trivial = std::make_shared<const Group>("1", 1, std::vector<Permutation>{});
  CHECK(trivial->num_classes() == 1);
}

TEST_CASE("class multiplication coefficients match direct counting") {
  for (auto name : {"S3", "A4", "Q8", "D10"}) {
    auto g = corpus(name);
    const int r = g->num_classes();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
          std::int64_t count = 0;
          int z = g->classes()[k].representative;
          for (int x : g->classes()[i].members)
            if (g->class_of(g->mul(g->inv(x), z)) == j) ++count;
          CHECK(g->class_mult(i, j, k) == count);
        }
  }
}

TEST_CASE("centralizers") {
  auto s3 = corpus("S3");
  CHECK(centralizer(s3, 0).order() == 6);
  CHECK(centralizer(s3, testsupport::perm(3, {{1, 2}})).order() == 2);
  auto c6 = corpus("C6");
  for (int x = 0; x < 6; ++x) CHECK(centralizer(c6, x).order() == 6);
  CHECK_THROWS_AS(centralizer(s3, testsupport::perm(4, {{1, 2}})), InputError);
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    for (int x = 0; x < static_cast<int>(g->order()); ++x) {
      auto c = centralizer(g, x);
      for (std::int64_t k = 0; k < g->element_order(x); ++k) CHECK(c.contains(g->pow(x, k)));
    }
  }
}

TEST_CASE("p-subgroups up to conjugacy against brute force") {
  for (auto name : {"S4", "A4", "D8", "Q8", "SL2_3", "C6", "S3", "C5xC4"}) {
    auto g = corpus(name);
    for (std::int64_t p : {2, 3, 5}) {
      auto reps = p_subgroups_up_to_conjugacy(g, p);
      // oracle: conjugacy classes of p-subgroups among all subgroups
      std::set<std::vector<int>> classes;
      for (const auto& s : oracle_subgroups(g)) {
        if (!is_prime_power(s.size(), p)) continue;
        Subgroup sub(g, s);
        std::vector<int> least = s;
        for (int x = 0; x < static_cast<int>(g->order()); ++x) least = std::min(least, conjugate(sub, x).elements());
        classes.insert(least);
      }
      CHECK(reps.size() == classes.size());
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
          CHECK_FALSE((reps[i].order() == reps[j].order() && conjugate_into(reps[i], reps[j]).has_value()));
    }
  }
  CHECK(p_subgroups_up_to_conjugacy(corpus("S3"), 5).size() == 1);
  CHECK(p_subgroups_up_to_conjugacy(corpus("C6"), 2).size() == 2);
  CHECK(p_subgroups_up_to_conjugacy(corpus("S4"), 2).size() == 7);
}

TEST_CASE("Sylow subgroups have full p-part order") {
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    for (std::int64_t p : {2, 3, 5, 7}) {
      auto s = sylow_subgroup(g, p);
      std::size_t pp = 1, n = g->order();
      while (n % p == 0) {
        n /= p;
        pp *= p;
      }
      CHECK(s.order() == pp);
    }
  }
  CHECK_THROWS_AS(sylow_subgroup(corpus("S4"), 2, 4), InputError);
}

TEST_CASE("cyclic subgroups with generators") {
  auto g = corpus("C5xC4");
  auto p = sylow_subgroup(g, 2);
  auto cyc = cyclic_subgroups_with_generators(p);
  REQUIRE(cyc.size() == 3);
  CHECK(cyc[0].subgroup.order() == 1);
  CHECK(cyc[0].generators == std::vector<int>{0});
  CHECK(cyc[1].subgroup.order() == 2);
  CHECK(cyc[1].generators.size() == 1);
  CHECK(cyc[2].subgroup.order() == 4);
  CHECK(cyc[2].generators.size() == 2);
  auto q8 = corpus("Q8");
  // Q8: trivial, center, three cyclic subgroups of order 4
  CHECK(cyclic_subgroups_with_generators(Subgroup::whole(q8)).size() == 5);
}

TEST_CASE("group hash is stable and depends on the element set only") {
  auto a = corpus("S3");
  auto b = std::make_shared<const Group>(
      "other", 3, std::vector<Permutation>{testsupport::perm(3, {{1, 2, 3}}), testsupport::perm(3, {{2, 3}})});
  CHECK(a->hash() == b->hash());
  CHECK(a->hash().size() == 64);
  CHECK(a->hash() != corpus("C6")->hash());
}

TEST_CASE("order cap") {
  GroupLimits small;
  small.max_order = 10;
  CHECK_THROWS_AS(load_group(std::string(BLOCKTOOL_CORPUS_DIR) + "/S4.json", small), InputError);
}
