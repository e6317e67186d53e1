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

#include "blocktool/blocks.hpp"
#include "blocktool/errors.hpp"
#include "blocktool/number_theory.hpp"
#include "blocktool/session.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace blocktool;
using testsupport::corpus;

namespace {

std::vector<std::int64_t> primes_of(const Group& g) { return nt::prime_divisors(static_cast<std::int64_t>(g.order())); }

int order_six_element(const Group& g) {
  for (int x = 0; x < static_cast<int>(g.order()); ++x)
    if (g.element_order(x) == 6) return x;
  return -1;
}

}  // namespace

TEST_CASE("C6 at p = 2") {
  Session s(corpus("C6"), 2);
  const auto& bs = s.whole().blocks;
  REQUIRE(bs.size() == 3);
  for (const auto& b : bs.blocks()) {
    CHECK(b.irr.size() == 2);
    CHECK(b.defect == 1);
  }
  // characters in one block share their restriction to the 3-part
  const auto& t = s.whole().table;
  const auto& g = *s.group();
  const int x = order_six_element(g);
  const int c3 = g.class_of(g.pow(x, 2));
  for (const auto& b : bs.blocks()) CHECK(t.value(b.irr[0], c3) == t.value(b.irr[1], c3));
  auto orbits = bs.galois_orbits();
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0] == std::vector<int>{0});
  CHECK(orbits[1] == std::vector<int>{1, 2});
  CHECK(bs.galois_image(1, 1) == 2);
  CHECK(bs.galois_image(1, 2) == 1);
  // b_omega has coefficients in Q(zeta_3) with denominator 3
  for (const auto& c : bs.block(1).coeffs)
    for (const auto& q : c.coeffs()) CHECK((q.get_den() == 1 || q.get_den() == 3));
  for (int b = 0; b < 3; ++b) {
    auto d = defect_groups(s, b);
    REQUIRE(d.size() == 1);
    CHECK(d[0].order() == 2);
    auto fam = subpair_family(s, b);
    CHECK(fam.subgroups.size() == 2);
    CHECK(fam.e_of(fam.p) == b);
    CHECK(fam.e_of(fam.subgroups[0]) == b);
  }
}

TEST_CASE("trivial block of C3 at p = 2") {
  auto g = std::make_shared<const Group>("C3", 3, std::vector<Permutation>{testsupport::perm(3, {{1, 2, 3}})});
  Session s(g, 2);
  const auto& b = s.whole().blocks.block(0);
  REQUIRE(b.irr == std::vector<int>{0});
  for (const auto& c : b.coeffs) CHECK(c == Cyclotomic(3, mpq_class(1, 3)));
}

TEST_CASE("S3 at p = 3, 2 and 5") {
  Session s3(corpus("S3"), 3);
  REQUIRE(s3.whole().blocks.size() == 1);
  CHECK(s3.whole().blocks.block(0).irr.size() == 3);
  CHECK(s3.whole().blocks.block(0).defect == 1);
  Session s2(corpus("S3"), 2);
  REQUIRE(s2.whole().blocks.size() == 2);
  CHECK(s2.whole().blocks.block(0).irr == std::vector<int>{0, 1});
  CHECK(s2.whole().blocks.block(1).defect == 0);
  Session s5(corpus("S3"), 5);
  CHECK(s5.whole().blocks.size() == 3);
  for (const auto& b : s5.whole().blocks.blocks()) CHECK(b.defect == 0);
}

TEST_CASE("block idempotents against the splitting oracle") {
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    for (auto p : primes_of(*g)) {
      Session s(g, p);
      std::vector<FqVector> mine;
      for (const auto& b : s.whole().blocks.blocks()) mine.push_back(b.residue);
      std::sort(mine.begin(), mine.end());
      CHECK(mine == oracle::primitive_central_idempotents(*g, s.field(), oracle::seed_from_hash(g->hash())));
    }
  }
}

TEST_CASE("orthogonal decomposition of 1") {
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    for (auto p : primes_of(*g)) {
      Session s(g, p);
      const auto& bs = s.whole().blocks;
      const auto n = s.conductor();
      std::vector<Cyclotomic> sum(g->num_classes(), Cyclotomic(n));
      FqVector fsum(g->num_classes(), s.field().zero());
      for (int i = 0; i < bs.size(); ++i) {
        for (int c = 0; c < g->num_classes(); ++c) {
          sum[c] += bs.block(i).coeffs[c];
          fsum[c] = s.field().add(fsum[c], bs.block(i).residue[c]);
        }
        for (int j = i + 1; j < bs.size(); ++j) {
          auto prod = central_product(*g, bs.block(i).coeffs, bs.block(j).coeffs);
          for (const auto& v : prod) CHECK(v.is_zero());
          CHECK(is_zero(s.field(), central_product(*g, s.field(), bs.block(i).residue, bs.block(j).residue)));
        }
      }
      for (int c = 0; c < g->num_classes(); ++c) {
        CHECK(sum[c] == Cyclotomic(n, mpq_class(c == 0 ? 1 : 0)));
        CHECK(fsum[c] == (c == 0 ? s.field().one() : s.field().zero()));
      }
    }
  }
}

TEST_CASE("Galois orbits") {
  Session s4(corpus("S4"), 2);
  for (const auto& o : s4.whole().blocks.galois_orbits()) CHECK(o.size() == 1);
  // C7:C3 at p = 3: the two nonrational degree-3 characters have defect 0 and
  // conjugate coefficient fields
  Session f21(corpus("C7xC3"), 3);
  const auto& bs = f21.whole().blocks;
  int swapped = 0;
  for (const auto& o : bs.galois_orbits())
    if (o.size() == 2) {
      ++swapped;
      for (int b : o) CHECK(bs.block(b).defect == 0);
    }
  CHECK(swapped == 1);
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    for (auto p : primes_of(*g)) {
      Session s(g, p);
      const auto m = nt::mult_order(p, nt::p_prime_part(s.conductor(), p));
      for (int b = 0; b < s.whole().blocks.size(); ++b) CHECK(s.whole().blocks.galois_image(b, m) == b);
    }
  }
}

TEST_CASE("Brauer homomorphism") {
  for (auto name : {"S4", "A4", "D10", "SL2_3", "C5xC4"}) {
    auto g = corpus(name);
    for (auto p : primes_of(*g)) {
      Session s(g, p);
      const auto& f = s.field();
      const auto& w = s.whole();
      std::vector<FqVector> samples;
      for (const auto& b : w.blocks.blocks()) samples.push_back(b.residue);
      for (int c = 0; c < g->num_classes(); ++c) {
        FqVector v(g->num_classes(), f.zero());
        v[c] = f.one();
        samples.push_back(v);
      }
      for (const auto& q : s.p_subgroups()) {
        const auto& cq = s.centralizer(q);
        for (const auto& a : samples) {
          auto bra = brauer_hom(s, w, a, q);
          FqVector fa;
          for (const auto& x : a) fa.push_back(f.frobenius(x, 1));
          FqVector fbra;
          for (const auto& x : bra) fbra.push_back(f.frobenius(x, 1));
          CHECK(brauer_hom(s, w, fa, q) == fbra);
          for (const auto& b : samples)
            CHECK(brauer_hom(s, w, central_product(*g, f, a, b), q) ==
                  central_product(*cq.group, f, bra, brauer_hom(s, w, b, q)));
        }
      }
      const auto triv = Subgroup::trivial(g);
      for (const auto& a : samples) CHECK(brauer_hom(s, w, a, triv) == a);
    }
  }
}

TEST_CASE("defect groups have order p^defect; principal block has Sylow defect group") {
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    for (auto p : primes_of(*g)) {
      Session s(g, p);
      for (int b = 0; b < s.whole().blocks.size(); ++b) {
        auto d = defect_groups(s, b);
        REQUIRE(d.size() == 1);
        std::size_t expect = 1;
        for (int i = 0; i < s.whole().blocks.block(b).defect; ++i) expect *= p;
        CHECK(d[0].order() == expect);
        if (b == 0) CHECK(d[0].order() == sylow_subgroup(g, p).order());
        if (s.whole().blocks.block(b).defect == 0) CHECK(d[0].order() == 1);
      }
    }
  }
}

TEST_CASE("subpair families are chain independent and Galois equivariant") {
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    for (auto p : primes_of(*g)) {
      Session s(g, p);
      const auto& bs = s.whole().blocks;
      for (int b = 0; b < bs.size(); ++b) {
        auto fam = subpair_family(s, b);
        CHECK(check_alternative_chains(s, fam).empty());
        CHECK(fam.e.front() == b);
        const int sb = bs.galois_image(b, 1);
        const int sep = s.centralizer(fam.p).blocks.galois_image(fam.e_of(fam.p), 1);
        auto sfam = subpair_family(s, sb, fam.p, sep);
        for (std::size_t i = 0; i < fam.subgroups.size(); ++i)
          CHECK(sfam.e[i] == s.centralizer(fam.subgroups[i]).blocks.galois_image(fam.e[i], 1));
      }
    }
  }
}

TEST_CASE("fusion categories") {
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    for (auto p : primes_of(*g)) {
      Session s(g, p);
      for (int b = 0; b < s.whole().blocks.size(); ++b) {
        auto fam = subpair_family(s, b);
        auto fus = fusion_category(s, fam, 16);
        REQUIRE_FALSE(fus.skipped);
        CHECK(fusion_equal(fus, fus).equal);
        // P-conjugations are always morphisms
        for (std::size_t qi = 0; qi < fam.subgroups.size(); ++qi)
          for (int x : fam.p.elements()) {
            const auto& q = fam.subgroups[qi];
            std::vector<int> images;
            for (int y : q.elements()) images.push_back(g->conj(x, y));
            const int target = fam.index_of(conjugate(q, x));
            CHECK(fus.hom[{static_cast<int>(qi), target}].count(images) == 1);
          }
      }
    }
  }
  // abelian: only inclusions
  Session c6(corpus("C6"), 2);
  auto fam = subpair_family(c6, 1);
  auto fus = fusion_category(c6, fam, 16);
  for (const auto& [key, maps] : fus.hom) {
    CHECK(maps.size() == 1);
    const auto& q = fam.subgroups[key.first];
    CHECK(*maps.begin() == q.elements());
  }
  CHECK(fusion_category(c6, fam, 1).skipped);
}

TEST_CASE("corrupted subpair family changes the fusion category") {
  // D30 at p = 3: the reflection permutes the 3-blocks of C_G(C3) = C15
  std::vector<int> rot(15), refl(15);
  for (int i = 0; i < 15; ++i) {
    rot[i] = (i + 1) % 15;
    refl[i] = (15 - i) % 15;
  }
  auto g = std::make_shared<const Group>("D30", 15, std::vector<Permutation>{Permutation(rot), Permutation(refl)});
  REQUIRE(g->order() == 30);
  Session s(g, 3);
  auto fam = subpair_family(s, 0);
  auto fus = fusion_category(s, fam, 16);
  const int top = fam.index_of(fam.p);
  const auto& cp = s.centralizer(fam.p);
  REQUIRE(cp.blocks.size() == 5);
  auto bad = fam;
  bad.e[top] = (bad.e[top] + 1) % cp.blocks.size();
  auto cmp = fusion_equal(fus, fusion_category(s, bad, 16));
  CHECK_FALSE(cmp.equal);
  CHECK_FALSE(cmp.witness.empty());
}
