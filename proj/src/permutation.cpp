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

#include "blocktool/permutation.hpp"

#include <numeric>

#include "blocktool/errors.hpp"
#include "blocktool/number_theory.hpp"

namespace blocktool {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v]) throw InputError("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> im(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) im[i] = images[i] - 1;
  return Permutation(std::move(im));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(images_);
  for (int& v : out) ++v;
  return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InputError("permutation degree mismatch");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = images_[rhs.images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<int>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t k) const {
  std::int64_t n = element_order(*this);
  k = nt::mod(k, n);
  Permutation result = identity(degree());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::int64_t element_order(const Permutation& g) {
  std::vector<bool> seen(g.degree(), false);
  std::int64_t order = 1;
  for (int i = 0; i < g.degree(); ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    for (int j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::int64_t twisted_power_exponent(std::int64_t n, std::int64_t p, std::int64_t q) {
  // k = 1 mod n_p and k = q mod n_{p'}.
  std::int64_t np = nt::p_part(n, p);
  std::int64_t npp = n / np;
  return nt::crt(1, np, nt::mod(q, npp), npp);
}

std::pair<Permutation, Permutation> p_decompose(const Permutation& g, std::int64_t p) {
  // order = p^a * m; u p^a + v m = 1; g_{p'} = g^{u p^a}, g_p = g^{v m}.
  std::int64_t n = element_order(g);
  std::int64_t pa = nt::p_part(n, p);
  std::int64_t m = n / pa;
  auto [d, u, v] = nt::ext_gcd(pa, m);
  (void)d;
  return {g.pow(v * m), g.pow(u * pa)};
}

}  // namespace blocktool
