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

#include <random>

#include "blocktool/descent.hpp"
#include "blocktool/errors.hpp"
#include "blocktool/number_theory.hpp"
#include "support.hpp"

using namespace blocktool;
using testsupport::corpus;

namespace {

using Table = std::vector<std::int64_t>;

// Brute force over GL_n(F_p): is there g with g(v_a) g(v_b) = g(v_a v_b)?
std::optional<bool> isomorphic(int n, std::int64_t p, const Table& a, const Table& b) {
  std::int64_t total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= p;
    if (total > 300000) return std::nullopt;
  }
  const PrimeField f{p};
  auto mult = [&](const Table& t, const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    std::vector<std::int64_t> out(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out[k] = (out[k] + x[i] * y[j] % p * t[(i * n + j) * n + k]) % p;
    return out;
  };
  for (std::int64_t code = 0; code < total; ++code) {
    linalg::Matrix<PrimeField> g(n, n, 0);
    std::int64_t c = code;
    for (int i = 0; i < n * n; ++i) {
      g.data[i] = c % p;
      c /= p;
    }
    if (linalg::rank(f, g) != static_cast<std::size_t>(n)) continue;
    auto image = [&](const std::vector<std::int64_t>& x) {
      std::vector<std::int64_t> out(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] = (out[i] + g(i, j) * x[j]) % p;
      return out;
    };
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        std::vector<std::int64_t> ei(n, 0), ej(n, 0);
        ei[i] = 1;
        ej[j] = 1;
        if (image(mult(a, ei, ej)) != mult(b, image(ei), image(ej))) ok = false;
      }
    if (ok) return true;
  }
  return false;
}

std::vector<std::int64_t> primes_of(const Group& g) { return nt::prime_divisors(static_cast<std::int64_t>(g.order())); }

}  // namespace

TEST_CASE("centers of blocks") {
  Session c6(corpus("C6"), 2);
  auto z = center_of_block(c6.whole(), c6.field(), 1);
  CHECK(z.dimension == 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k) CHECK(z.constant(a, b, k) == z.constant(b, a, k));
  Session s3(corpus("S3"), 3);
  CHECK(center_of_block(s3.whole(), s3.field(), 0).dimension == 3);
  Session s5(corpus("S3"), 5);
  for (int b = 0; b < 3; ++b) {
    auto z0 = center_of_block(s5.whole(), s5.field(), b);
    REQUIRE(z0.dimension == 1);
    CHECK(z0.constant(0, 0, 0) == z0.unit[0]);
  }
}

TEST_CASE("central isomorphism of the identity isometry is the identity") {
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    for (auto p : primes_of(*g)) {
      Session s(g, p);
      for (int b = 0; b < s.whole().blocks.size(); ++b) {
        auto z = center_of_block(s.whole(), s.field(), b);
        auto f = broue_central_iso(s, build_isometry(s.whole(), p, b, 0), z, z);
        for (int i = 0; i < z.dimension; ++i)
          for (int j = 0; j < z.dimension; ++j) CHECK(f.matrix(i, j) == (i == j ? s.field().one() : s.field().zero()));
      }
    }
  }
}

TEST_CASE("C6 at p = 2: theta has order 2 and an F_2-form") {
  Session s(corpus("C6"), 2);
  const auto& f = s.field();
  auto zb = center_of_block(s.whole(), f, 1);
  auto zc = center_of_block(s.whole(), f, 2);
  auto iso = broue_central_iso(s, build_isometry(s.whole(), 2, 1, 1), zb, zc);
  CHECK(iso.matrix.rows == 2);
  auto theta = semilinear_theta(s, zb, zc, iso);
  const auto lambda = f.generator();
  for (int a = 0; a < 2; ++a) {
    FqCoords v(2, f.zero());
    v[a] = lambda;
    CHECK(apply_semilinear(f, theta, apply_semilinear(f, theta, v)) == v);
  }
  CHECK(apply_semilinear(f, theta, zc.unit) == zc.unit);
  auto form = fixed_points(s.residue_field().field, zc, theta);
  CHECK(form.j == 1);
  CHECK(form.basis.size() == 2);
}

TEST_CASE("plain Frobenius has the coordinate F_p-form") {
  for (auto name : {"S4", "A5", "C7xC3", "C5xC4"}) {
    auto g = corpus(name);
    for (auto p : primes_of(*g)) {
      Session s(g, p);
      auto z = center_of_block(s.whole(), s.field(), 0);
      SemilinearMap plain{linalg::identity(s.field(), z.dimension), p};
      auto form = fixed_points(s.residue_field().field, z, plain);
      CHECK(form.j == 1);
      REQUIRE(static_cast<int>(form.basis.size()) == z.dimension);
      for (const auto& v : form.basis)
        for (const auto& x : v) CHECK(s.field().in_prime_field(x));
      Table base;
      for (const auto& c : z.table) {
        REQUIRE(s.field().in_prime_field(c));
        base.push_back(c[0]);
      }
      auto iso = isomorphic(z.dimension, p, base, form.table);
      if (iso) CHECK(*iso);
    }
  }
}

TEST_CASE("descent over the corpus") {
  int escalated = 0;
  for (auto name : testsupport::kCorpus) {
    auto g = corpus(name);
    for (auto p : primes_of(*g)) {
      Session s(g, p);
      for (int b = 0; b < s.whole().blocks.size(); ++b) {
        auto r = descend(s, b);
        INFO(name << " p=" << p << " block " << b << ": " << r.witness);
        REQUIRE(r.verdict == Verdict::kPass);
        const int n = static_cast<int>(s.whole().blocks.block(r.target).irr.size());
        CHECK(r.center->dimension == n);
        CHECK(static_cast<int>(r.form->basis.size()) == n);
        for (auto c : r.form->table) CHECK((c >= 0 && c < p));
        if (r.form->j > 1) ++escalated;
        CHECK(r.brauer_feit.holds);
      }
    }
  }
  INFO("blocks needing a scalar extension: " << escalated);
  CHECK(escalated >= 0);
}

TEST_CASE("F_p-forms do not depend on the center basis") {
  std::mt19937_64 rng(7);
  for (auto name : {"C6", "S3", "A4", "SL2_3", "C7xC3", "D10"}) {
    auto g = corpus(name);
    for (auto p : primes_of(*g)) {
      Session s(g, p);
      const auto& f = s.field();
      for (int b = 0; b < s.whole().blocks.size(); ++b) {
        auto r = descend(s, b);
        REQUIRE(r.verdict == Verdict::kPass);
        const auto& z = *r.center;
        const int n = z.dimension;
        // random change of basis P, columns = new basis vectors in old coordinates
        FqMatrix pm(n, n, f.zero());
        do {
          for (auto& x : pm.data) x = f.enumerate(mpz_class(static_cast<unsigned long>(rng() % f.order().get_ui())));
        } while (linalg::rank(f, pm) != static_cast<std::size_t>(n));
        auto pinv = *linalg::inverse(f, pm);
        CenterAlgebra z2 = z;
        z2.basis.clear();
        for (int k = 0; k < n; ++k) {
          FqVector v(z.basis[0].size(), f.zero());
          for (int i = 0; i < n; ++i)
            for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.add(v[c], f.mul(pm(i, k), z.basis[i][c]));
          z2.basis.push_back(v);
        }
        for (int a = 0; a < n; ++a)
          for (int c = 0; c < n; ++c) {
            auto coords = *center_coordinates(z2, f, central_product(*g, f, z2.basis[a], z2.basis[c]));
            for (int k = 0; k < n; ++k) z2.table[(a * n + c) * n + k] = coords[k];
          }
        z2.unit = *center_coordinates(z2, f, s.whole().blocks.block(z.block).residue);
        FqMatrix frob_p = pm;
        for (auto& x : frob_p.data) x = f.frobenius(x, 1);
        SemilinearMap t2{linalg::multiply(f, linalg::multiply(f, pinv, r.theta->matrix), frob_p), p};
        auto form2 = fixed_points(s.residue_field().field, z2, t2);
        auto iso = isomorphic(n, p, r.form->table, form2.table);
        if (iso) CHECK(*iso);
      }
    }
  }
}

namespace {

// F_2 x F_2 with its idempotent basis, twisted by a linear automorphism
CenterAlgebra split_algebra(const GaloisField& f, int n) {
  CenterAlgebra z;
  z.dimension = n;
  z.table.assign(static_cast<std::size_t>(n) * n * n, f.zero());
  for (int a = 0; a < n; ++a) z.table[(a * n + a) * n + a] = f.one();
  z.unit.assign(n, f.one());
  return z;
}

}  // namespace

TEST_CASE("scalar extension of fixed points") {
  auto f2 = std::make_shared<const GaloisField>(2, fpoly::Poly{1, 1});
  const auto& f = *f2;
  // swapping the two idempotents: the form is F_4, found over F_4
  auto z = split_algebra(f, 2);
  SemilinearMap swap{FqMatrix(2, 2, f.zero()), 2};
  swap.matrix(0, 1) = f.one();
  swap.matrix(1, 0) = f.one();
  auto form = fixed_points(f2, z, swap);
  CHECK(form.j == 2);
  CHECK(form.levels_tried == std::vector<int>{1, 2});
  Table split{1, 0, 0, 0, 0, 0, 0, 1};
  CHECK(isomorphic(2, 2, form.table, split) == std::optional<bool>(false));
  // a 3-cycle of idempotents needs degree 3, which doubling never reaches
  auto z3 = split_algebra(f, 3);
  SemilinearMap cycle{FqMatrix(3, 3, f.zero()), 2};
  for (int i = 0; i < 3; ++i) cycle.matrix((i + 1) % 3, i) = f.one();
  auto form3 = fixed_points(f2, z3, cycle, 8);
  CHECK(form3.j == 3);
  CHECK(form3.levels_tried == std::vector<int>{1, 2, 4, 8, 3});
  CHECK_THROWS_AS(fixed_points(f2, z3, cycle, 2), InconclusiveError);
}

TEST_CASE("Brauer-Feit report") {
  auto r = brauer_feit_check(2, 1, 2);
  CHECK(r.m == 2);
  CHECK(r.m_floor == 2);
  CHECK(r.count_bound == 256);
  CHECK(r.holds);
  auto r0 = brauer_feit_check(2, 0, 1);
  CHECK(r0.m == mpq_class(5, 4));
  CHECK(r0.m_floor == 1);
  CHECK(r0.count_bound == 2);
  CHECK(r0.holds);
  auto r3 = brauer_feit_check(3, 1, 3);
  CHECK(r3.m == mpq_class(13, 4));
  CHECK(r3.count_bound == mpz_class("7625597484987"));
  CHECK(r3.holds);
  CHECK_FALSE(brauer_feit_check(2, 1, 3).holds);
}

TEST_CASE("a character bijection that is not perfect gives a non-integral central map") {
  Session s(corpus("D8"), 2);
  auto iso = build_isometry(s.whole(), 2, 0, 0);
  // swap the trivial and the degree-2 character: z -> 1 - (sum of G)/4
  REQUIRE(iso.rows.size() == 5);
  std::swap(iso.images[0], iso.images[4]);
  auto z = center_of_block(s.whole(), s.field(), 0);
  CHECK_THROWS_AS(broue_central_iso(s, iso, z, z), NotIntegralError);
}
