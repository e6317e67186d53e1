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

#include "blocktool/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "blocktool/linalg.hpp"
#include "blocktool/number_theory.hpp"

namespace blocktool {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact quotient of a by the monic polynomial b.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  IntPoly q(a.size() - db, 0);
  for (std::size_t k = a.size() - 1; k + 1 > db; --k) {
    std::int64_t c = a[k];
    q[k - db] = c;
    if (c != 0)
      for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    if (k == db) break;
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw std::logic_error("divide_monic: inexact division");
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, IntPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  IntPoly poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(n, poly);
  return poly;
}

CyclotomicField::CyclotomicField(std::int64_t conductor) : n_(conductor) {
  if (n_ < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  modulus_ = cyclotomic_polynomial(n_);
  degree_ = static_cast<int>(modulus_.size()) - 1;
  powers_.resize(static_cast<std::size_t>(n_));
  std::vector<std::int64_t> cur(degree_, 0);
  cur[0] = 1;
  for (std::int64_t k = 0; k < n_; ++k) {
    powers_[k] = cur;
    // multiply by zeta and reduce
    std::int64_t carry = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (carry != 0)
      for (int i = 0; i < degree_; ++i) cur[i] -= carry * modulus_[i];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::int64_t conductor) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const CyclotomicField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[conductor];
  if (!slot) slot = std::make_shared<const CyclotomicField>(conductor);
  return slot;
}

const std::vector<std::int64_t>& CyclotomicField::power(std::int64_t k) const {
  return powers_[static_cast<std::size_t>(nt::mod(k, n_))];
}

Cyclotomic::Cyclotomic(std::int64_t conductor)
    : field_(CyclotomicField::get(conductor)), coeffs_(field_->degree(), mpq_class(0)) {}

Cyclotomic::Cyclotomic(std::int64_t conductor, const mpq_class& value) : Cyclotomic(conductor) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(std::int64_t conductor, std::vector<mpq_class> coeffs)
    : field_(CyclotomicField::get(conductor)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_->degree())
    throw std::invalid_argument("cyclotomic coefficient vector has wrong length");
  for (auto& c : coeffs_) c.canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t conductor, std::int64_t k) {
  Cyclotomic r(conductor);
  const auto& pw = r.field_->power(k);
  for (std::size_t i = 0; i < pw.size(); ++i) r.coeffs_[i] = pw[i];
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

std::optional<mpq_class> Cyclotomic::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.conductor() != conductor()) {
    std::int64_t l = std::lcm(conductor(), rhs.conductor());
    *this = lift(l);
    return *this += rhs.lift(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.conductor() != conductor()) {
    std::int64_t l = std::lcm(conductor(), rhs.conductor());
    *this = lift(l);
    return *this *= rhs.lift(l);
  }
  const std::size_t d = coeffs_.size();
  std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(rhs.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  const auto& phi = field_->modulus();
  for (std::size_t k = prod.size() - 1; k >= d; --k) {
    if (sgn(prod[k]) != 0) {
      mpq_class c = prod[k];
      for (std::size_t i = 0; i < d; ++i)
        if (phi[i] != 0) prod[k - d + i] -= c * phi[i];
      prod[k] = 0;
    }
  }
  prod.resize(d);
  coeffs_ = std::move(prod);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const mpq_class& q0) {
  mpq_class q = q0;
  q.canonicalize();
  for (auto& c : coeffs_) c *= q;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) {
    std::int64_t l = std::lcm(a.conductor(), b.conductor());
    return a.lift(l).coeffs_ == b.lift(l).coeffs_;
  }
  return a.coeffs_ == b.coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic division by zero");
  const std::size_t d = coeffs_.size();
  RationalOps q;
  auto m = linalg::zeros(q, d, d);
  Cyclotomic col = *this;
  const Cyclotomic zeta = root_of_unity(conductor(), 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col.coeffs_[i];
    col *= zeta;
  }
  std::vector<mpq_class> e0(d, mpq_class(0));
  e0[0] = 1;
  auto x = linalg::solve(q, m, e0);
  if (!x) throw std::logic_error("cyclotomic inverse: singular multiplication matrix");
  return Cyclotomic(conductor(), std::move(*x));
}

Cyclotomic Cyclotomic::galois(std::int64_t t) const {
  const std::int64_t n = conductor();
  if (std::gcd(nt::mod(t, n), n) != 1 && n > 1) throw std::invalid_argument("galois exponent not a unit");
  Cyclotomic r(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const auto& pw = field_->power(t * static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < pw.size(); ++j)
      if (pw[j] != 0) r.coeffs_[j] += coeffs_[i] * pw[j];
  }
  return r;
}

Cyclotomic Cyclotomic::lift(std::int64_t m) const {
  const std::int64_t n = conductor();
  if (m == n) return *this;
  if (m % n != 0) throw std::invalid_argument("lift: conductor does not divide target");
  Cyclotomic r(m);
  const std::int64_t step = m / n;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const auto& pw = r.field_->power(step * static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < pw.size(); ++j)
      if (pw[j] != 0) r.coeffs_[j] += coeffs_[i] * pw[j];
  }
  return r;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  for (std::size_t i = 0; i < a.coeffs_.size() && i < b.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << coeffs_[i].get_str();
    } else {
      if (coeffs_[i] != 1) os << coeffs_[i].get_str() << "*";
      os << "z" << conductor() << (i > 1 ? "^" + std::to_string(i) : "");
    }
  }
  return first ? "0" : os.str();
}

Cyclotomic GaloisAutomorphism::apply(const Cyclotomic& a) const {
  if (a.conductor() == conductor) return a.galois(exponent);
  if (conductor % a.conductor() == 0) return a.lift(conductor).galois(exponent);
  throw std::invalid_argument("Galois automorphism conductor does not match");
}

GaloisAutomorphism GaloisAutomorphism::compose(const GaloisAutomorphism& other) const {
  return {conductor, nt::mod(exponent * other.exponent, conductor)};
}

GaloisAutomorphism GaloisAutomorphism::pow(std::int64_t n) const {
  return {conductor, nt::pow_mod(exponent, n, conductor) + (conductor == 1 ? 1 : 0)};
}

GaloisAutomorphism sigma_K0(std::int64_t p, std::int64_t conductor) {
  const std::int64_t np = nt::p_part(conductor, p);
  const std::int64_t npp = conductor / np;
  std::int64_t t = nt::crt(1, np, nt::mod(p, npp), npp);
  if (conductor == 1) t = 1;
  return {conductor, t};
}

}  // namespace blocktool
