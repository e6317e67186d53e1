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

#include "blocktool/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "blocktool/number_theory.hpp"

namespace blocktool {

PrimeField::Elem PrimeField::inv(Elem a) const { return nt::inv_mod(a, p); }

namespace fpoly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly add(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = nt::mod(r[i] - b[i], p);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly rem(Poly a, const Poly& m, std::int64_t p) {
  trim(a);
  if (m.empty()) throw std::domain_error("polynomial division by zero");
  const std::size_t dm = m.size() - 1;
  const std::int64_t lead_inv = nt::inv_mod(m.back(), p);
  while (a.size() > dm) {
    std::int64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = nt::mod(a[shift + i] - c * m[i], p);
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::int64_t inv = nt::inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

namespace {
Poly pow_mod(Poly base, std::int64_t e, const Poly& f, std::int64_t p) {
  Poly r{1};
  base = rem(base, f, p);
  while (e > 0) {
    if (e & 1) r = rem(mul(r, base, p), f, p);
    base = rem(mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}
}  // namespace

Poly x_pow_p_pow(const Poly& f, std::int64_t p, std::int64_t k) {
  Poly r = rem(Poly{0, 1}, f, p);
  for (std::int64_t i = 0; i < k; ++i) r = pow_mod(r, p, f, p);
  return r;
}

bool is_irreducible(const Poly& f, std::int64_t p) {
  const std::int64_t d = static_cast<std::int64_t>(f.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  if (sub(x_pow_p_pow(f, p, d), x, p) != Poly{}) return false;
  for (auto l : nt::prime_divisors(d)) {
    Poly g = gcd(f, sub(x_pow_p_pow(f, p, d / l), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly least_irreducible(std::int64_t p, int d) {
  if (d < 1) throw std::invalid_argument("field degree must be positive");
  Poly f(static_cast<std::size_t>(d) + 1, 0);
  f[d] = 1;
  // Odometer over coefficients with the constant term least significant
  // after the top ones: enumerate c_{d-1}, ..., c_0 lexicographically.
  while (true) {
    if (is_irreducible(f, p)) return f;
    int i = 0;
    while (i < d && f[i] == p - 1) f[i++] = 0;
    if (i == d) break;
    ++f[i];
  }
  throw std::logic_error("no irreducible polynomial found");
}

bool less_from_top(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace fpoly

GaloisField::GaloisField(std::int64_t p, fpoly::Poly modulus) : p_(p), f_(std::move(modulus)) {
  fpoly::trim(f_);
  if (f_.size() < 2 || f_.back() != 1) throw std::invalid_argument("field modulus must be monic of positive degree");
  d_ = static_cast<int>(f_.size()) - 1;
}

mpz_class GaloisField::order() const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(d_));
  return q;
}

GaloisField::Elem GaloisField::one() const { return from_int(1); }

GaloisField::Elem GaloisField::from_int(std::int64_t c) const {
  Elem r(d_, 0);
  r[0] = nt::mod(c, p_);
  return r;
}

GaloisField::Elem GaloisField::generator() const {
  if (d_ == 1) return from_int(-f_[0]);
  Elem r(d_, 0);
  r[1] = 1;
  return r;
}

GaloisField::Elem GaloisField::enumerate(const mpz_class& i) const {
  Elem r(d_, 0);
  mpz_class n = i;
  const mpz_class pp = static_cast<long>(p_);
  for (int k = 0; k < d_; ++k) {
    mpz_class digit = n % pp;
    r[k] = digit.get_si();
    n /= pp;
  }
  return r;
}

GaloisField::Elem GaloisField::add(const Elem& a, const Elem& b) const {
  Elem r(d_);
  for (int i = 0; i < d_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

GaloisField::Elem GaloisField::sub(const Elem& a, const Elem& b) const {
  Elem r(d_);
  for (int i = 0; i < d_; ++i) r[i] = (a[i] - b[i] + p_) % p_;
  return r;
}

GaloisField::Elem GaloisField::neg(const Elem& a) const {
  Elem r(d_);
  for (int i = 0; i < d_; ++i) r[i] = (p_ - a[i]) % p_;
  return r;
}

GaloisField::Elem GaloisField::scale(const Elem& a, std::int64_t c) const {
  c = nt::mod(c, p_);
  Elem r(d_);
  for (int i = 0; i < d_; ++i) r[i] = a[i] * c % p_;
  return r;
}

GaloisField::Elem GaloisField::mul(const Elem& a, const Elem& b) const {
  if (d_ == 1) return Elem{a[0] * b[0] % p_};
  std::vector<std::int64_t> prod(2 * d_ - 1, 0);
  for (int i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  }
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    std::int64_t c = prod[k];
    if (c == 0) continue;
    for (int i = 0; i < d_; ++i) prod[k - d_ + i] = nt::mod(prod[k - d_ + i] - c * f_[i], p_);
    prod[k] = 0;
  }
  prod.resize(d_);
  return prod;
}

GaloisField::Elem GaloisField::pow(const Elem& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem r = one(), base = a;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, base);
    if (i + 1 < bits) base = mul(base, base);
  }
  return r;
}

GaloisField::Elem GaloisField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("finite field division by zero");
  return pow(a, order() - 2);
}

GaloisField::Elem GaloisField::frobenius(const Elem& a, std::int64_t k) const {
  Elem r = a;
  const std::int64_t steps = nt::mod(k, d_);
  for (std::int64_t i = 0; i < steps; ++i) r = pow(r, mpz_class(static_cast<long>(p_)));
  return r;
}

bool GaloisField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

bool GaloisField::in_prime_field(const Elem& a) const {
  return std::all_of(a.begin() + 1, a.end(), [](std::int64_t c) { return c == 0; });
}

GaloisField::Elem GaloisField::evaluate(const fpoly::Poly& poly, const Elem& a) const {
  Elem r = zero();
  for (std::size_t i = poly.size(); i-- > 0;) r = add(mul(r, a), from_int(poly[i]));
  return r;
}

std::int64_t GaloisField::order_dividing(const Elem& a, std::int64_t n) const {
  for (std::int64_t k = 1; k <= n; ++k)
    if (n % k == 0 && pow(a, mpz_class(static_cast<long>(k))) == one()) return k;
  throw std::logic_error("element order does not divide the given bound");
}

std::string GaloisField::to_string(const Elem& a) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < d_; ++i) os << (i ? "," : "") << a[i];
  os << "]";
  return os.str();
}

GaloisField::Elem primitive_root_of_unity(const GaloisField& field, std::int64_t n) {
  const mpz_class qm1 = field.order() - 1;
  if (qm1 % n != 0) throw std::invalid_argument("root of unity order does not divide q - 1");
  if (n == 1) return field.one();
  const mpz_class cofactor = qm1 / n;
  const auto primes = nt::prime_divisors(n);
  for (mpz_class i = 1; i <= qm1; ++i) {
    auto x = field.enumerate(i);
    auto c = field.pow(x, cofactor);
    bool ok = true;
    for (auto l : primes)
      if (field.pow(c, mpz_class(static_cast<long>(n / l))) == field.one()) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  throw std::logic_error("no primitive root of unity found");
}

std::vector<fpoly::Poly> cyclotomic_factors_mod_p(std::int64_t n, std::int64_t p) {
  if (n % p == 0) throw std::invalid_argument("cyclotomic factorization needs p not dividing n");
  if (n == 1) return {fpoly::Poly{p - 1 == 0 ? 0 : p - 1, 1}};
  const int m = static_cast<int>(nt::mult_order(p, n));
  GaloisField base(p, fpoly::least_irreducible(p, m));
  const auto r = primitive_root_of_unity(base, n);
  std::vector<bool> seen(n, false);
  std::vector<fpoly::Poly> out;
  for (std::int64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1 || seen[a]) continue;
    // minimal polynomial of r^a: product over its Frobenius orbit
    std::vector<GaloisField::Elem> poly{base.one()};
    std::int64_t b = a;
    do {
      seen[b] = true;
      auto s = base.pow(r, mpz_class(static_cast<long>(b)));
      std::vector<GaloisField::Elem> next(poly.size() + 1, base.zero());
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] = base.add(next[k + 1], poly[k]);
        next[k] = base.sub(next[k], base.mul(s, poly[k]));
      }
      poly = std::move(next);
      b = b * p % n;
    } while (b != a);
    fpoly::Poly h;
    for (const auto& c : poly) {
      if (!base.in_prime_field(c)) throw std::logic_error("minimal polynomial not over F_p");
      h.push_back(c[0]);
    }
    out.push_back(h);
  }
  std::sort(out.begin(), out.end(), fpoly::less_from_top);
  return out;
}

ResidueField make_residue_field(std::int64_t p, std::int64_t n_pprime, std::uint64_t seed) {
  ResidueField rf;
  rf.p = p;
  rf.n_pprime = n_pprime;
  rf.factors = cyclotomic_factors_mod_p(n_pprime, p);
  rf.factor_index = static_cast<std::size_t>(seed % rf.factors.size());
  rf.h = rf.factors[rf.factor_index];
  rf.m = static_cast<int>(rf.h.size()) - 1;
  rf.field = std::make_shared<const GaloisField>(p, rf.h);
  rf.u = rf.field->generator();
  return rf;
}

GaloisField::Elem FieldExtension::embed(const GaloisField::Elem& a) const {
  GaloisField::Elem r = big->zero(), power = big->one();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) r = big->add(r, big->scale(power, a[i]));
    power = big->mul(power, generator_image);
  }
  return r;
}

FieldExtension extend_field(const GaloisFieldPtr& base, int j) {
  FieldExtension ext;
  ext.base = base;
  ext.j = j;
  if (j == 1) {
    ext.big = base;
    ext.generator_image = base->generator();
    return ext;
  }
  const std::int64_t p = base->characteristic();
  auto big = std::make_shared<const GaloisField>(p, fpoly::least_irreducible(p, base->degree() * j));
  ext.big = big;
  if (big->is_zero(big->evaluate(base->modulus(), big->zero()))) {
    ext.generator_image = big->zero();
    return ext;
  }
  const mpz_class qm1 = base->order() - 1;
  const auto r = primitive_root_of_unity(*big, qm1.get_si());
  auto x = big->one();
  for (mpz_class k = 0; k < qm1; ++k) {
    if (big->is_zero(big->evaluate(base->modulus(), x))) {
      ext.generator_image = x;
      return ext;
    }
    x = big->mul(x, r);
  }
  throw std::logic_error("base modulus has no root in the extension");
}

}  // namespace blocktool
