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

// Independent brute-force oracles shared by the unit tests and the
// acceptance runner.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "blocktool/finite_field.hpp"
#include "blocktool/group.hpp"

namespace oracle {

using blocktool::GaloisField;
using FqVector = std::vector<GaloisField::Elem>;

/// Structure constants of the class-sum basis of Z(Z G), by multiplying
/// every pair of elements.
inline std::vector<std::int64_t> class_structure_constants(const blocktool::Group& g) {
  const int r = g.num_classes();
  std::vector<std::int64_t> c(static_cast<std::size_t>(r) * r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      std::vector<std::int64_t> hits(r, 0);
      for (int x : g.classes()[i].members)
        for (int y : g.classes()[j].members) {
          auto prod = g.element(x) * g.element(y);
          ++hits[g.class_of(g.index_of(prod))];
        }
      for (int k = 0; k < r; ++k)
        c[(static_cast<std::size_t>(i) * r + j) * r + k] = hits[k] / static_cast<std::int64_t>(g.classes()[k].size);
    }
  return c;
}

class CenterAlgebra {
 public:
  CenterAlgebra(const blocktool::Group& g, const GaloisField& f)
      : f_(f), r_(g.num_classes()), c_(class_structure_constants(g)) {}

  int dim() const { return r_; }
  FqVector zero() const { return FqVector(r_, f_.zero()); }
  FqVector one() const {
    auto v = zero();
    v[0] = f_.one();
    return v;
  }
  FqVector add(const FqVector& a, const FqVector& b) const {
    FqVector o(r_);
    for (int i = 0; i < r_; ++i) o[i] = f_.add(a[i], b[i]);
    return o;
  }
  FqVector sub(const FqVector& a, const FqVector& b) const {
    FqVector o(r_);
    for (int i = 0; i < r_; ++i) o[i] = f_.sub(a[i], b[i]);
    return o;
  }
  FqVector scale(const FqVector& a, const GaloisField::Elem& s) const {
    FqVector o(r_);
    for (int i = 0; i < r_; ++i) o[i] = f_.mul(a[i], s);
    return o;
  }
  FqVector mul(const FqVector& a, const FqVector& b) const {
    auto o = zero();
    for (int i = 0; i < r_; ++i) {
      if (f_.is_zero(a[i])) continue;
      for (int j = 0; j < r_; ++j) {
        if (f_.is_zero(b[j])) continue;
        auto ab = f_.mul(a[i], b[j]);
        for (int k = 0; k < r_; ++k) {
          auto m = c_[(static_cast<std::size_t>(i) * r_ + j) * r_ + k];
          if (m) o[k] = f_.add(o[k], f_.scale(ab, m));
        }
      }
    }
    return o;
  }
  FqVector pow(FqVector a, mpz_class e) const {
    auto result = one();
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = mul(result, a);
      a = mul(a, a);
      e /= 2;
    }
    return result;
  }
  bool is_zero(const FqVector& a) const {
    return std::all_of(a.begin(), a.end(), [&](const auto& x) { return f_.is_zero(x); });
  }
  const GaloisField& field() const { return f_; }

 private:
  const GaloisField& f_;
  int r_;
  std::vector<std::int64_t> c_;
};

/// Primitive idempotents of Z(F_q G) by splitting along the eigenvalues of
/// the semisimple parts of random central elements, then of the class sums;
/// finally every idempotent is checked to be primitive (its local algebra
/// has one-dimensional semisimple quotient).
inline std::vector<FqVector> primitive_central_idempotents(const blocktool::Group& g, const GaloisField& f,
                                                           std::uint64_t seed) {
  CenterAlgebra a(g, f);
  const mpz_class q = f.order();
  mpz_class qk = q;
  while (qk < a.dim()) qk *= q;  // x -> x^qk kills nilpotent parts
  std::vector<FqVector> idem{a.one()};
  auto split_by = [&](const FqVector& x) {
    std::vector<FqVector> next;
    for (const auto& e : idem) {
      auto y = a.pow(a.mul(x, e), qk);
      for (mpz_class i = 0; i < q; ++i) {
        auto lambda = f.enumerate(i);
        auto d = a.sub(y, a.scale(e, lambda));
        auto el = a.mul(e, a.sub(a.one(), a.pow(d, q - 1)));
        if (!a.is_zero(el)) next.push_back(el);
      }
    }
    idem = std::move(next);
  };
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 4; ++t) {
    FqVector x = a.zero();
    for (auto& c : x) c = f.enumerate(mpz_class(static_cast<unsigned long>(rng() % 1000003)) % q);
    split_by(x);
  }
  for (int j = 0; j < a.dim(); ++j) {
    FqVector x = a.zero();
    x[j] = f.one();
    split_by(x);
  }
  for (const auto& e : idem) {
    if (a.mul(e, e) != e) throw std::logic_error("oracle produced a non-idempotent");
    for (int j = 0; j < a.dim(); ++j) {
      FqVector x = a.zero();
      x[j] = f.one();
      auto y = a.pow(a.mul(x, e), qk);
      // y must be a scalar multiple of e
      int pivot = -1;
      for (int k = 0; k < a.dim(); ++k)
        if (!f.is_zero(e[k])) {
          pivot = k;
          break;
        }
      auto s = f.mul(y[pivot], f.inv(e[pivot]));
      if (a.scale(e, s) != y) throw std::logic_error("oracle idempotent is not primitive");
    }
  }
  std::sort(idem.begin(), idem.end());
  return idem;
}

inline std::uint64_t seed_from_hash(const std::string& hex) { return std::stoull(hex.substr(0, 15), nullptr, 16); }

}  // namespace oracle
