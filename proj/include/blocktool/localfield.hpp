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
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "blocktool/cyclotomic.hpp"
#include "blocktool/finite_field.hpp"

namespace blocktool {

/// Element of the truncated unramified ring W_M = (Z/p^M)[y]/(H).
using WElem = std::vector<mpz_class>;

/// p^(-shift) * sum_i c[i] z^i, z the image of zeta_{N_p}, c[i] in W_M.
struct LocalElement {
  std::vector<WElem> c;
  std::int64_t shift = 0;
};

struct Valuation {
  enum class Kind { kFinite, kInfinite, kInconclusive };
  Kind kind = Kind::kFinite;
  std::int64_t value = 0;

  bool finite() const { return kind == Kind::kFinite; }
  bool infinite() const { return kind == Kind::kInfinite; }
  bool inconclusive() const { return kind == Kind::kInconclusive; }
};

/// The completion of Q(zeta_N) at the prime fixed by a residue field, at a
/// fixed W-precision M. Valuations are normalized with v(1 - zeta_{N_p}) = 1.
class LocalContext {
 public:
  LocalContext(const ResidueField& rf, std::int64_t conductor, std::int64_t precision);

  std::int64_t p() const { return rf_.p; }
  std::int64_t conductor() const { return n_; }
  std::int64_t ramification() const { return e_; }
  std::int64_t precision() const { return m_prec_; }
  const ResidueField& residue_field() const { return rf_; }
  const WElem& teichmuller() const { return omega_; }

  LocalElement embed(const Cyclotomic& a) const;
  Valuation valuation(const LocalElement& a) const;
  /// Throws NotIntegralError for negative valuation, InconclusiveError when
  /// the precision does not determine the residue.
  GaloisField::Elem residue(const LocalElement& a) const;

  WElem w_mul(const WElem& a, const WElem& b) const;
  WElem w_pow(const WElem& a, const mpz_class& e) const;

 private:
  std::int64_t v_p(const WElem& a) const;

  ResidueField rf_;
  std::int64_t n_, np_, npp_, e_, m_prec_;
  std::int64_t alpha_, beta_;
  mpz_class modulus_;  // p^M
  std::vector<mpz_class> h_;
  WElem omega_;
  std::vector<WElem> omega_powers_;
};

/// Precision-escalating front end over LocalContext.
class LocalField {
 public:
  /// precision <= 0 selects e * (v_p(group_order) + 4).
  LocalField(ResidueField rf, std::int64_t conductor, std::int64_t group_order, std::int64_t precision = 0);

  const ResidueField& residue_field() const { return rf_; }
  std::int64_t p() const { return rf_.p; }
  std::int64_t conductor() const { return n_; }
  std::int64_t ramification() const { return e_; }
  std::int64_t initial_precision() const { return m0_; }
  std::int64_t precision_cap() const { return 1024 * e_; }

  /// Exact zero gives kInfinite; kInconclusive only after escalation.
  Valuation valuation(const Cyclotomic& a) const;
  /// v(a) >= bound; throws InconclusiveError when undecidable at the cap.
  bool valuation_at_least(const Cyclotomic& a, std::int64_t bound) const;
  /// The residue of a p-integral element; NotIntegralError otherwise.
  GaloisField::Elem reduce(const Cyclotomic& a) const;

  const LocalContext& context(std::int64_t precision) const;

 private:
  ResidueField rf_;
  std::int64_t n_, e_, m0_;
  mutable std::mutex mu_;
  mutable std::map<std::int64_t, std::unique_ptr<LocalContext>> contexts_;
};

}  // namespace blocktool
