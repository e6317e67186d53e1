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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "blocktool/permutation.hpp"

namespace blocktool {

/// A conjugacy class of a Group. Members are element indices of the group.
struct ConjugacyClass {
  int representative = 0;  ///< lexicographically least member
  std::size_t size = 0;
  std::vector<int> members;  ///< sorted
  std::int64_t rep_order = 1;

  bool is_p_regular(std::int64_t p) const { return rep_order % p != 0; }
};

struct GroupLimits {
  std::size_t max_order = 2000;
  int max_degree = 50;
};

/// A finite permutation group with its full element list, multiplication
/// table, conjugacy classes and class multiplication coefficients.
///
/// Elements are sorted lexicographically by image array, so the identity has
/// index 0. Classes are sorted by (representative order, size, least member).
/// Immutable after construction.
class Group {
 public:
  Group(std::string name, int degree, std::vector<Permutation> generators,
        const GroupLimits& limits = {});

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int i) const { return elements_[i]; }

  /// Index of g, or -1 if g is not in the group.
  int index_of(const Permutation& g) const;

  int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * order() + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, std::int64_t k) const;
  /// g x g^{-1}
  int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }
  std::int64_t element_order(int a) const { return orders_[a]; }
  std::int64_t exponent() const { return exponent_; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int element) const { return class_of_[element]; }
  int inverse_class(int c) const { return inverse_class_[c]; }
  /// Class of rep(c)^t.
  int power_class(int c, std::int64_t t) const;
  std::size_t centralizer_order(int c) const { return order() / classes_[c].size; }

  /// Number of pairs (x, y) in C_i x C_j with x y = rep(C_k).
  std::int64_t class_mult(int i, int j, int k) const {
    auto r = static_cast<std::size_t>(num_classes());
    return class_mult_[(static_cast<std::size_t>(i) * r + j) * r + k];
  }

  /// SHA-256 (hex) of the degree and the sorted element list.
  const std::string& hash() const { return hash_; }

 private:
  std::string name_;
  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<int> mult_;
  std::vector<int> inv_;
  std::vector<std::int64_t> orders_;
  std::int64_t exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  std::vector<int> inverse_class_;
  std::vector<std::int32_t> class_mult_;
  std::string hash_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// The classes of G in the canonical order.
const std::vector<ConjugacyClass>& conjugacy_classes(const Group& g);

}  // namespace blocktool
