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

#include "blocktool/localfield.hpp"

#include <stdexcept>

#include "blocktool/errors.hpp"
#include "blocktool/number_theory.hpp"

namespace blocktool {

namespace {

mpz_class pow_z(std::int64_t p, std::int64_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

void reduce_into(mpz_class& x, const mpz_class& m) {
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
}

mpz_class binomial(std::int64_t n, std::int64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

LocalContext::LocalContext(const ResidueField& rf, std::int64_t conductor, std::int64_t precision)
    : rf_(rf), n_(conductor), m_prec_(precision) {
  if (precision < 1) throw std::invalid_argument("precision must be positive");
  np_ = nt::p_part(n_, rf_.p);
  npp_ = n_ / np_;
  if (rf_.n_pprime != npp_) throw std::invalid_argument("residue field built for a different conductor");
  e_ = nt::totient(np_);
  auto [g, a, b] = nt::ext_gcd(npp_, np_);
  (void)g;
  alpha_ = a;
  beta_ = b;
  modulus_ = pow_z(rf_.p, m_prec_);
  for (auto c : rf_.h) h_.push_back(mpz_class(static_cast<long>(c)));

  const int m = rf_.m;
  WElem y(m, 0);
  if (m == 1) {
    y[0] = -h_[0];
    reduce_into(y[0], modulus_);
  } else {
    y[1] = 1;
  }
  const mpz_class q = rf_.q();
  omega_ = y;
  while (true) {
    WElem next = w_pow(omega_, q);
    if (next == omega_) break;
    omega_ = std::move(next);
  }
  omega_powers_.resize(static_cast<std::size_t>(npp_));
  WElem cur(m, 0);
  cur[0] = 1;
  for (std::int64_t k = 0; k < npp_; ++k) {
    omega_powers_[k] = cur;
    cur = w_mul(cur, omega_);
  }
}

WElem LocalContext::w_mul(const WElem& a, const WElem& b) const {
  const int m = rf_.m;
  std::vector<mpz_class> prod(2 * m - 1, 0);
  for (int i = 0; i < m; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < m; ++j) prod[i + j] += a[i] * b[j];
  }
  for (int k = 2 * m - 2; k >= m; --k) {
    reduce_into(prod[k], modulus_);
    if (sgn(prod[k]) == 0) continue;
    for (int i = 0; i < m; ++i) prod[k - m + i] -= prod[k] * h_[i];
  }
  prod.resize(m);
  for (auto& c : prod) reduce_into(c, modulus_);
  return prod;
}

WElem LocalContext::w_pow(const WElem& a, const mpz_class& e) const {
  WElem r(rf_.m, 0), base = a;
  r[0] = 1;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) r = w_mul(r, base);
    if (i + 1 < bits) base = w_mul(base, base);
  }
  return r;
}

std::int64_t LocalContext::v_p(const WElem& a) const {
  std::int64_t best = m_prec_;
  const mpz_class pp = static_cast<long>(rf_.p);
  for (const auto& c : a) {
    if (sgn(c) == 0) continue;
    mpz_class t = c;
    std::int64_t k = 0;
    while (mpz_divisible_p(t.get_mpz_t(), pp.get_mpz_t())) {
      t /= pp;
      ++k;
    }
    best = std::min(best, k);
  }
  return best;
}

LocalElement LocalContext::embed(const Cyclotomic& a0) const {
  if (n_ % a0.conductor() != 0) throw std::invalid_argument("embed: conductor does not divide the global conductor");
  const Cyclotomic a = a0.lift(n_);
  mpz_class den = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  LocalElement out;
  const mpz_class pp = static_cast<long>(rf_.p);
  while (mpz_divisible_p(den.get_mpz_t(), pp.get_mpz_t())) {
    den /= pp;
    ++out.shift;
  }
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
  const mpz_class full_den = den * pow_z(rf_.p, out.shift);

  const auto& zfield = CyclotomicField::get(np_);
  out.c.assign(static_cast<std::size_t>(e_), WElem(rf_.m, 0));
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const mpq_class& ak = a.coeffs()[k];
    if (sgn(ak) == 0) continue;
    mpz_class num = ak.get_num() * (full_den / ak.get_den()) * den_inv;
    reduce_into(num, modulus_);
    const auto ki = static_cast<std::int64_t>(k);
    const auto& zp = zfield->power(alpha_ * ki);
    const WElem& w = omega_powers_[nt::mod(beta_ * ki, npp_)];
    for (std::int64_t i = 0; i < e_; ++i) {
      if (zp[i] == 0) continue;
      const mpz_class s = num * zp[i];
      for (int j = 0; j < rf_.m; ++j) out.c[i][j] += s * w[j];
    }
  }
  for (auto& wi : out.c)
    for (auto& x : wi) reduce_into(x, modulus_);
  return out;
}

namespace {

// Coordinates in the basis 1, pi, ..., pi^(e-1) with pi = 1 - z.
std::vector<WElem> to_pi_basis(const LocalElement& a, std::int64_t e, int m, const mpz_class& modulus) {
  std::vector<WElem> b(static_cast<std::size_t>(e), WElem(m, 0));
  for (std::int64_t k = 0; k < e; ++k) {
    for (std::int64_t i = k; i < e; ++i) {
      const mpz_class c = binomial(i, k) * ((k % 2) ? -1 : 1);
      for (int j = 0; j < m; ++j) b[k][j] += c * a.c[i][j];
    }
    for (auto& x : b[k]) reduce_into(x, modulus);
  }
  return b;
}

}  // namespace

Valuation LocalContext::valuation(const LocalElement& a) const {
  auto b = to_pi_basis(a, e_, rf_.m, modulus_);
  bool any = false;
  std::int64_t best = 0;
  for (std::int64_t k = 0; k < e_; ++k) {
    std::int64_t vk = v_p(b[k]);
    if (vk >= m_prec_) continue;
    std::int64_t v = e_ * vk + k;
    if (!any || v < best) best = v;
    any = true;
  }
  if (!any) return {Valuation::Kind::kInconclusive, 0};
  return {Valuation::Kind::kFinite, best - e_ * a.shift};
}

GaloisField::Elem LocalContext::residue(const LocalElement& a) const {
  Valuation v = valuation(a);
  if (v.inconclusive()) {
    if (e_ * (m_prec_ - a.shift) > 0 && a.shift < m_prec_) return rf_.field->zero();
    throw InconclusiveError("residue undetermined at precision " + std::to_string(m_prec_));
  }
  if (v.value < 0) throw NotIntegralError("element is not p-integral (valuation " + std::to_string(v.value) + ")");
  if (m_prec_ - a.shift < 1) throw InconclusiveError("residue undetermined at precision " + std::to_string(m_prec_));
  auto b = to_pi_basis(a, e_, rf_.m, modulus_);
  const mpz_class ps = pow_z(rf_.p, a.shift);
  GaloisField::Elem r(rf_.m, 0);
  for (int j = 0; j < rf_.m; ++j) {
    mpz_class t = b[0][j];
    if (a.shift > 0) {
      if (!mpz_divisible_p(t.get_mpz_t(), ps.get_mpz_t())) throw std::logic_error("residue: inconsistent shift");
      t /= ps;
    }
    r[j] = mpz_fdiv_ui(t.get_mpz_t(), static_cast<unsigned long>(rf_.p));
  }
  return r;
}

LocalField::LocalField(ResidueField rf, std::int64_t conductor, std::int64_t group_order, std::int64_t precision)
    : rf_(std::move(rf)), n_(conductor) {
  e_ = nt::totient(nt::p_part(n_, rf_.p));
  m0_ = precision > 0 ? precision : e_ * (nt::vp(group_order, rf_.p) + 4);
}

const LocalContext& LocalField::context(std::int64_t precision) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = contexts_[precision];
  if (!slot) slot = std::make_unique<LocalContext>(rf_, n_, precision);
  return *slot;
}

Valuation LocalField::valuation(const Cyclotomic& a) const {
  if (a.is_zero()) return {Valuation::Kind::kInfinite, 0};
  for (std::int64_t m = m0_;; m *= 2) {
    const auto& ctx = context(m);
    Valuation v = ctx.valuation(ctx.embed(a));
    if (!v.inconclusive() || m >= precision_cap()) return v;
  }
}

bool LocalField::valuation_at_least(const Cyclotomic& a, std::int64_t bound) const {
  if (a.is_zero()) return true;
  for (std::int64_t m = m0_;; m *= 2) {
    const auto& ctx = context(m);
    LocalElement x = ctx.embed(a);
    Valuation v = ctx.valuation(x);
    if (v.finite()) return v.value >= bound;
    if (e_ * (m - x.shift) >= bound) return true;
    if (m >= precision_cap()) throw InconclusiveError("valuation undetermined at precision cap");
  }
}

GaloisField::Elem LocalField::reduce(const Cyclotomic& a) const {
  if (a.is_zero()) return rf_.field->zero();
  for (std::int64_t m = m0_;; m *= 2) {
    const auto& ctx = context(m);
    LocalElement x = ctx.embed(a);
    Valuation v = ctx.valuation(x);
    if (v.inconclusive() && m - x.shift >= 1) return rf_.field->zero();
    if (v.finite()) {
      if (v.value < 0) throw NotIntegralError("element is not p-integral (valuation " + std::to_string(v.value) + ")");
      if (m - x.shift >= 1) return ctx.residue(x);
    }
    if (m >= precision_cap()) throw InconclusiveError("residue undetermined at precision cap");
  }
}

}  // namespace blocktool
