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

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace blocktool {

/// Operations object for linalg over F_p.
struct PrimeField {
  using Elem = std::int64_t;
  std::int64_t p = 2;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a - b + p) % p; }
  Elem mul(Elem a, Elem b) const { return a * b % p; }
  Elem neg(Elem a) const { return (p - a) % p; }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
};

/// Dense polynomials over F_p, lowest coefficient first, no trailing zeros
/// (the zero polynomial is empty).
namespace fpoly {
using Poly = std::vector<std::int64_t>;

void trim(Poly& a);
Poly add(const Poly& a, const Poly& b, std::int64_t p);
Poly sub(const Poly& a, const Poly& b, std::int64_t p);
Poly mul(const Poly& a, const Poly& b, std::int64_t p);
Poly rem(Poly a, const Poly& m, std::int64_t p);
Poly gcd(Poly a, Poly b, std::int64_t p);
/// x^(p^k) mod f.
Poly x_pow_p_pow(const Poly& f, std::int64_t p, std::int64_t k);
bool is_irreducible(const Poly& f, std::int64_t p);
/// The least monic irreducible of degree d, comparing coefficient lists
/// from degree d-1 down to 0.
Poly least_irreducible(std::int64_t p, int d);
/// Ordering used for choosing among factors: coefficients from the top down.
bool less_from_top(const Poly& a, const Poly& b);
}  // namespace fpoly

/// F_p[y]/(f) for a monic irreducible f of degree d. Elements are coefficient
/// vectors of length d. Also an operations object for linalg.
class GaloisField {
 public:
  using Elem = std::vector<std::int64_t>;

  GaloisField(std::int64_t p, fpoly::Poly modulus);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return d_; }
  const fpoly::Poly& modulus() const { return f_; }
  mpz_class order() const;

  Elem zero() const { return Elem(d_, 0); }
  Elem one() const;
  Elem from_int(std::int64_t c) const;
  /// The class of y.
  Elem generator() const;
  /// The i-th element in base-p digit enumeration (0 <= i < q).
  Elem enumerate(const mpz_class& i) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, std::int64_t c) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, const mpz_class& e) const;
  /// a^(p^k).
  Elem frobenius(const Elem& a, std::int64_t k = 1) const;
  bool is_zero(const Elem& a) const;
  bool in_prime_field(const Elem& a) const;
  /// Evaluate a polynomial with F_p coefficients at a.
  Elem evaluate(const fpoly::Poly& poly, const Elem& a) const;
  /// Least k >= 1 with a^k = 1, assuming it divides n.
  std::int64_t order_dividing(const Elem& a, std::int64_t n) const;

  std::string to_string(const Elem& a) const;

 private:
  std::int64_t p_;
  int d_;
  fpoly::Poly f_;
};

using GaloisFieldPtr = std::shared_ptr<const GaloisField>;

/// Some element of exact multiplicative order n in the field (n | q - 1),
/// found by deterministic search.
GaloisField::Elem primitive_root_of_unity(const GaloisField& field, std::int64_t n);

/// The residue field F_q of Q(zeta_N) at the chosen prime above p:
/// F_p[y]/(h) with h an irreducible factor of Phi_{N_{p'}} mod p and u the
/// class of y, a primitive N_{p'}-th root of unity.
struct ResidueField {
  std::int64_t p = 2;
  std::int64_t n_pprime = 1;
  int m = 1;
  fpoly::Poly h;
  std::vector<fpoly::Poly> factors;
  std::size_t factor_index = 0;
  GaloisFieldPtr field;
  GaloisField::Elem u;

  mpz_class q() const { return field->order(); }
};

/// Irreducible factors of Phi_n over F_p, sorted with fpoly::less_from_top.
std::vector<fpoly::Poly> cyclotomic_factors_mod_p(std::int64_t n, std::int64_t p);

/// Seed 0 picks the least factor; other seeds pick factor (seed mod count).
ResidueField make_residue_field(std::int64_t p, std::int64_t n_pprime, std::uint64_t seed = 0);

/// A field F_{q^j} containing F_q = base, with the embedding determined by the
/// image of the base generator.
struct FieldExtension {
  GaloisFieldPtr base;
  GaloisFieldPtr big;
  int j = 1;
  GaloisField::Elem generator_image;

  GaloisField::Elem embed(const GaloisField::Elem& a) const;
};

FieldExtension extend_field(const GaloisFieldPtr& base, int j);

}  // namespace blocktool
