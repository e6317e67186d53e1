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

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace blocktool {

/// A permutation of {0, ..., degree-1}. Serialized 1-based.
///
/// Products compose right to left: (g * h)(i) = g(h(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError if `images` is not a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation from_one_based(const std::vector<int>& images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_based() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;
  bool is_identity() const;

  /// Lexicographic on image arrays; the identity is the least element.
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Least n >= 1 with g^n = 1 (lcm of cycle lengths).
std::int64_t element_order(const Permutation& g);

/// Splits g into commuting parts g = g_p * g_{p'} with g_p of p-power order and
/// g_{p'} of order prime to p, both powers of g.
std::pair<Permutation, Permutation> p_decompose(const Permutation& g, std::int64_t p);

/// The exponent k with g_p * g_{p'}^{q} = g^k, where q is an integer and
/// n the order of g. Used to realize x -> x_p x_{p'}^q through power maps.
std::int64_t twisted_power_exponent(std::int64_t n, std::int64_t p, std::int64_t q);

}  // namespace blocktool
