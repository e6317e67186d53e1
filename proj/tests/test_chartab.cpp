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

#include <filesystem>

#include "blocktool/chartab.hpp"
#include "blocktool/errors.hpp"
#include "blocktool/number_theory.hpp"
#include "blocktool/subgroups.hpp"
#include "support.hpp"

using namespace blocktool;
using testsupport::corpus;

namespace {

Cyclotomic q(std::int64_t n, long v) { return Cyclotomic(n, mpq_class(v)); }

bool is_nonnegative_integer(const Cyclotomic& a) {
  auto v = a.rational_value();
  return v && v->get_den() == 1 && *v >= 0;
}

ClassFunction permutation_character(const Group& g) {
  ClassFunction out;
  for (const auto& c : g.classes()) {
    long fixed = 0;
    const auto& x = g.element(c.representative);
    for (int i = 0; i < g.degree(); ++i) fixed += x[i] == i;
    out.push_back(q(g.exponent(), fixed));
  }
  return out;
}

}  // namespace

TEST_CASE("Dixon prime selection") {
  CHECK(dixon_prime(6, 6) == 7);
  CHECK(dixon_prime(30, 60) == 31);
  CHECK(dixon_prime(1, 1) == 3);
}

TEST_CASE("S3 table") {
  auto t = dixon_schneider(corpus("S3"));
  REQUIRE(t.size() == 3);
  CHECK(t.degree(0) == 1);
  CHECK(t.degree(1) == 1);
  CHECK(t.degree(2) == 2);
  // classes: identity, transpositions, 3-cycles
  CHECK(t.value(2, 1) == q(6, 0));
  CHECK(t.value(2, 2) == q(6, -1));
  CHECK(t.value(1, 1) == q(6, -1));
  CHECK(t.central_character(2, 2) == q(6, -1));
  CHECK(t.central_character(2, 0) == q(6, 1));
  CHECK(t.central_character(0, 1) == q(6, 3));
}

TEST_CASE("cyclic group C6 has six linear characters") {
  auto g = corpus("C6");
  auto t = dixon_schneider(g);
  REQUIRE(t.size() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(t.degree(i) == 1);
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y)
        CHECK(t.value(i, g->class_of(g->mul(x, y))) == t.value(i, g->class_of(x)) * t.value(i, g->class_of(y)));
  }
  auto trivial = std::make_shared<const Group>("1", 1, std::vector<Permutation>{});
  auto t1 = dixon_schneider(trivial);
  REQUIRE(t1.size() == 1);
  CHECK(t1.value(0, 0) == q(1, 1));
}

TEST_CASE("orthogonality and integrality across the corpus") {
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    auto t = dixon_schneider(g);
    CHECK(t.size() == g->num_classes());
    CHECK_NOTHROW(t.verify_orthogonality());
    CHECK_NOTHROW(t.verify_central_characters());
    std::int64_t squares = 0;
    for (int i = 0; i < t.size(); ++i) squares += t.degree(i) * t.degree(i);
    CHECK(squares == static_cast<std::int64_t>(g->order()));
    // permutation character and all tensor products decompose with
    // nonnegative integer multiplicities
    auto pi = permutation_character(*g);
    for (int i = 0; i < t.size(); ++i) {
      CHECK(is_nonnegative_integer(t.inner_product(pi, t.row(i))));
      for (int j = 0; j < t.size(); ++j) {
        ClassFunction prod;
        for (int c = 0; c < g->num_classes(); ++c) prod.push_back(t.value(i, c) * t.value(j, c));
        for (int k = 0; k < t.size(); ++k) CHECK(is_nonnegative_integer(t.inner_product(prod, t.row(k))));
      }
    }
  }
}

TEST_CASE("inner products") {
  auto g = corpus("A4");
  auto t = dixon_schneider(g);
  ClassFunction regular(g->num_classes(), q(t.conductor(), 0));
  regular[0] = q(t.conductor(), static_cast<long>(g->order()));
  for (int i = 0; i < t.size(); ++i) {
    CHECK(t.inner_product(regular, t.row(i)) == q(t.conductor(), t.degree(i)));
    for (int j = 0; j < t.size(); ++j) CHECK(t.inner_product(t.row(i), t.row(j)) == q(t.conductor(), i == j));
  }
}

TEST_CASE("restriction") {
  auto g = corpus("S3");
  auto t = dixon_schneider(g);
  auto c3 = sylow_subgroup(g, 3);
  auto h = embed_subgroup(c3, "C3");
  auto th = dixon_schneider(h.group).lift(t.conductor());
  auto res = restrict_to(t.row(2), *g, *h.group, h.to_parent);
  ClassFunction sum(res.size(), q(t.conductor(), 0));
  for (int i = 1; i < th.size(); ++i)
    for (std::size_t c = 0; c < res.size(); ++c) sum[c] += th.value(i, static_cast<int>(c));
  CHECK(res == sum);
  CHECK(restrict_to(t.row(0), *g, *h.group, h.to_parent) == th.row(0));
  auto triv = embed_subgroup(Subgroup::trivial(g), "1");
  CHECK(restrict_to(t.row(2), *g, *triv.group, triv.to_parent) == ClassFunction{q(t.conductor(), 2)});
}

TEST_CASE("Galois action on characters") {
  auto g = corpus("C6");
  auto t = dixon_schneider(g);
  int generator = -1;
  for (int x = 0; x < 6; ++x)
    if (g->element_order(x) == 6) generator = x;
  REQUIRE(generator >= 0);
  for (int i = 0; i < t.size(); ++i) {
    int j = t.sigma_character(i, 2);
    // I(chi)(g) = chi(g^5)
    CHECK(t.value(j, g->class_of(generator)) == t.value(i, g->class_of(g->pow(generator, 5))));
  }
  auto s4 = dixon_schneider(corpus("S4"));
  for (int i = 0; i < s4.size(); ++i) CHECK(s4.sigma_character(i, 2) == i);
  for (auto name : testsupport::kCorpus) {
    auto gg = corpus(name);
    auto tt = dixon_schneider(gg);
    for (auto p : nt::prime_divisors(static_cast<std::int64_t>(gg->order()))) {
      const auto m = nt::mult_order(p, nt::p_prime_part(gg->exponent(), p));
      for (int i = 0; i < tt.size(); ++i) {
        int cur = i;
        for (std::int64_t k = 0; k < m; ++k) cur = tt.sigma_character(cur, p);
        CHECK(cur == i);
      }
    }
  }
}

TEST_CASE("central scalars") {
  auto g = corpus("Q8");
  auto t = dixon_schneider(g);
  int z = -1;
  for (const auto& c : g->classes())
    if (c.size == 1 && c.representative != 0) z = c.representative;
  REQUIRE(z >= 0);
  for (int i = 0; i < t.size(); ++i) {
    CHECK(t.central_scalar(i, 0) == q(t.conductor(), 1));
    auto s = t.central_scalar(i, z);
    CHECK(s * s == q(t.conductor(), 1));
    CHECK(sigma_K0(2, t.conductor()).apply(s) == s);
  }
  CHECK(t.central_scalar(0, z) == q(t.conductor(), 1));
  CHECK(t.central_scalar(4, z) == q(t.conductor(), -1));
  CHECK_THROWS_AS(t.central_scalar(0, g->classes().back().representative), std::invalid_argument);
}

TEST_CASE("table cache round trip and tamper detection") {
  auto dir = std::filesystem::temp_directory_path() / "blocktool-test-cache";
  std::filesystem::remove_all(dir);
  for (auto name : {"C6", "A5", "SL2_3"}) {
    auto g = corpus(name);
    auto cold = character_table(g, dir);
    CHECK(std::filesystem::exists(dir / (g->hash() + ".json")));
    auto warm = character_table(g, dir);
    CHECK(table_to_json(cold).dump() == table_to_json(warm).dump());
    CHECK(cold.rows() == warm.rows());
    auto j = table_to_json(cold);
    auto tampered = j;
    tampered["values"][1][1] = cyclotomic_to_json(Cyclotomic(g->exponent(), mpq_class(7)));
    CHECK_THROWS_AS(table_from_json(g, tampered), InputError);
    auto swapped = j;
    std::swap(swapped["values"][0][0], swapped["values"][1][0]);
    if (swapped != j) CHECK_THROWS_AS(table_from_json(g, swapped), InputError);
  }
  CHECK_THROWS_AS(table_from_json(corpus("S3"), table_to_json(dixon_schneider(corpus("C6")))), InputError);
  std::filesystem::remove_all(dir);
}
