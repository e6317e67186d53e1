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
#include <optional>
#include <string>
#include <vector>

namespace blocktool {

/// Shared data of Q(zeta_N): the cyclotomic polynomial and the reduced power
/// basis images of zeta^k for 0 <= k < N. Instances are interned per N.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(std::int64_t conductor);

  std::int64_t conductor() const { return n_; }
  int degree() const { return degree_; }
  /// Phi_N, lowest coefficient first; monic of length degree()+1.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  /// Coordinates of zeta^k in the basis 1, zeta, ..., zeta^(degree-1).
  const std::vector<std::int64_t>& power(std::int64_t k) const;

  explicit CyclotomicField(std::int64_t conductor);

 private:
  std::int64_t n_;
  int degree_;
  std::vector<std::int64_t> modulus_;
  std::vector<std::vector<std::int64_t>> powers_;
};

/// Cyclotomic polynomial Phi_n over Z, lowest coefficient first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

/// An exact element of Q(zeta_N) stored as rational coordinates in the power
/// basis modulo Phi_N. Always canonical, so coordinate equality is equality
/// (after lifting both operands to a common conductor).
class Cyclotomic {
 public:
  explicit Cyclotomic(std::int64_t conductor = 1);
  Cyclotomic(std::int64_t conductor, const mpq_class& value);
  /// Throws std::invalid_argument if the length is not phi(N).
  Cyclotomic(std::int64_t conductor, std::vector<mpq_class> coeffs);

  static Cyclotomic root_of_unity(std::int64_t conductor, std::int64_t k);

  std::int64_t conductor() const { return field_->conductor(); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;
  std::optional<mpq_class> rational_value() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic& operator*=(const mpq_class& q);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Throws std::domain_error on zero.
  Cyclotomic inverse() const;
  /// zeta_N -> zeta_N^t; requires gcd(t, N) = 1.
  Cyclotomic galois(std::int64_t t) const;
  /// The same number written over conductor M (N must divide M).
  Cyclotomic lift(std::int64_t m) const;

  /// Total order on coordinates (only meaningful at equal conductor).
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  /// Human-readable form like "-1 + 2*z^3" with z = zeta_N.
  std::string to_string() const;

 private:
  std::shared_ptr<const CyclotomicField> field_;
  std::vector<mpq_class> coeffs_;
};

/// zeta_N -> zeta_N^t.
struct GaloisAutomorphism {
  std::int64_t conductor = 1;
  std::int64_t exponent = 1;

  Cyclotomic apply(const Cyclotomic& a) const;
  GaloisAutomorphism compose(const GaloisAutomorphism& other) const;
  GaloisAutomorphism pow(std::int64_t n) const;
};

/// The automorphism acting as eta -> eta^p on roots of unity of order prime
/// to p and trivially on p-power roots of unity: exponent t with t = p mod
/// N_{p'} and t = 1 mod N_p.
GaloisAutomorphism sigma_K0(std::int64_t p, std::int64_t conductor);

/// Operations object for linalg over Q(zeta_N).
struct CyclotomicOps {
  using Elem = Cyclotomic;
  std::int64_t conductor = 1;
  Elem zero() const { return Cyclotomic(conductor); }
  Elem one() const { return Cyclotomic(conductor, mpq_class(1)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
};

/// Operations object for linalg over Q.
struct RationalOps {
  using Elem = mpq_class;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
};

}  // namespace blocktool
