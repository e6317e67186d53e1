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

#include "blocktool/cyclotomic.hpp"
#include "blocktool/errors.hpp"
#include "blocktool/io.hpp"
#include "blocktool/number_theory.hpp"

using namespace blocktool;

namespace {

Cyclotomic z(std::int64_t n, std::int64_t k = 1) { return Cyclotomic::root_of_unity(n, k); }
Cyclotomic q(std::int64_t n, long num, long den = 1) { return Cyclotomic(n, mpq_class(num, den)); }

Cyclotomic random_element(std::mt19937_64& rng, std::int64_t n) {
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 4);
  std::vector<mpq_class> c(CyclotomicField::get(n)->degree());
  for (auto& x : c) {
    x = mpq_class(coef(rng), den(rng));
    x.canonicalize();
  }
  return Cyclotomic(n, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<std::int64_t>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  for (std::int64_t n = 1; n <= 60; ++n)
    CHECK(static_cast<std::int64_t>(cyclotomic_polynomial(n).size()) - 1 == nt::totient(n));
}

TEST_CASE("basic cyclotomic identities") {
  CHECK(z(3) + z(3, 2) == q(3, -1));
  CHECK(z(4) * z(4) == q(4, -1));
  CHECK((q(3, 1) - z(3)) * (q(3, 1) - z(3, 2)) == q(3, 3));
  CHECK(z(6, 6) == q(6, 1));
  CHECK(z(12, 3) == z(4).lift(12));
  CHECK(z(4) == z(12, 3));
  CHECK(z(3) + z(4) == z(12, 4) + z(12, 3));
  CHECK((q(1, 1, 3) + q(1, 1, 4)).rational_value() == mpq_class(7, 12));
  CHECK_FALSE(z(5).is_rational());
}

TEST_CASE("division and inverses") {
  std::mt19937_64 rng(7);
  for (std::int64_t n : {1, 3, 4, 5, 8, 12, 15, 20, 21}) {
    for (int t = 0; t < 10; ++t) {
      auto a = random_element(rng, n);
      if (a.is_zero()) continue;
      CHECK(a * a.inverse() == q(n, 1));
      auto b = random_element(rng, n);
      CHECK((b / a) * a == b);
    }
  }
  CHECK_THROWS_AS(q(5, 0).inverse(), std::domain_error);
}

TEST_CASE("Galois action is a field automorphism") {
  std::mt19937_64 rng(11);
  for (std::int64_t n : {3, 4, 5, 8, 12, 15, 20, 21}) {
    for (std::int64_t t = 1; t < n; ++t) {
      if (std::gcd(t, n) != 1) continue;
      auto a = random_element(rng, n), b = random_element(rng, n);
      CHECK((a + b).galois(t) == a.galois(t) + b.galois(t));
      CHECK((a * b).galois(t) == a.galois(t) * b.galois(t));
      CHECK(q(n, 5, 7).galois(t) == q(n, 5, 7));
      CHECK(z(n).galois(t) == z(n, t));
    }
  }
  CHECK_THROWS(z(6).galois(2));
}

TEST_CASE("sigma_K0 exponents") {
  CHECK(sigma_K0(2, 3).exponent == 2);
  CHECK(sigma_K0(2, 3).apply(z(3)) == z(3, 2));
  CHECK(sigma_K0(2, 3).pow(2).apply(z(3)) == z(3));
  CHECK(sigma_K0(2, 4).exponent == 1);
  CHECK(sigma_K0(2, 4).apply(z(4)) == z(4));
  CHECK(sigma_K0(2, 12).exponent == 5);
  CHECK(sigma_K0(3, 1).exponent == 1);
  for (std::int64_t n : {6, 12, 20, 21, 30, 60})
    for (std::int64_t p : {2, 3, 5, 7}) {
      auto s = sigma_K0(p, n);
      CHECK(std::gcd(s.exponent, n) == 1);
      const std::int64_t npp = nt::p_prime_part(n, p), np = nt::p_part(n, p);
      CHECK(nt::mod(s.exponent, npp) == nt::mod(p, npp));
      CHECK(nt::mod(s.exponent, np) == 1 % np);
      // restriction to Q(zeta_{N_p'}) has order ord_{N_p'}(p)
      auto eta = z(npp).lift(n);
      std::int64_t k = 1;
      auto cur = s.apply(eta);
      while (cur != eta) {
        cur = s.apply(cur);
        ++k;
      }
      CHECK(k == nt::mult_order(p, npp));
    }
}

TEST_CASE("complex conjugation makes norms rational") {
  std::mt19937_64 rng(3);
  for (std::int64_t n : {5, 12, 21}) {
    auto a = random_element(rng, n);
    CHECK((a * a.galois(-1)).galois(-1) == a * a.galois(-1));
  }
  auto w = z(3);
  CHECK((w * w.galois(-1)).rational_value() == mpq_class(1));
}

TEST_CASE("JSON round trip is exact") {
  std::mt19937_64 rng(5);
  for (std::int64_t n : {1, 7, 12, 20}) {
    auto a = random_element(rng, n);
    auto j = cyclotomic_to_json(a);
    CHECK(cyclotomic_from_json(j) == a);
    CHECK(cyclotomic_to_json(cyclotomic_from_json(Json::parse(j.dump()))) == j);
  }
  auto j = cyclotomic_to_json(q(3, -7, 4));
  CHECK(j.dump() == R"({"N":3,"coeffs":[["-7","4"],["0","1"]]})");
  CHECK_THROWS_AS(cyclotomic_from_json(Json::parse(R"({"N":3,"coeffs":[["1","1"]]})")), InputError);
}
