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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "blocktool/cyclotomic.hpp"
#include "blocktool/group.hpp"
#include "blocktool/io.hpp"

namespace blocktool {

/// Values of a class function, indexed by class.
using ClassFunction = std::vector<Cyclotomic>;

/// Exact ordinary character table. Rows are sorted by degree with the trivial
/// character first, then by descending value vectors.
class CharacterTable {
 public:
  CharacterTable(GroupPtr group, std::int64_t conductor, std::vector<ClassFunction> rows);

  const GroupPtr& group() const { return group_; }
  std::int64_t conductor() const { return conductor_; }
  int size() const { return static_cast<int>(rows_.size()); }
  const ClassFunction& row(int i) const { return rows_[i]; }
  const std::vector<ClassFunction>& rows() const { return rows_; }
  const Cyclotomic& value(int row, int cls) const { return rows_[row][cls]; }
  /// chi(1) as an integer.
  std::int64_t degree(int row) const;
  /// Class of rep(c)^t for any integer t.
  int power_class(int c, std::int64_t t) const { return group_->power_class(c, t); }

  /// The same table with values written over conductor m.
  CharacterTable lift(std::int64_t m) const;

  /// |C| chi(g_C) / chi(1).
  Cyclotomic central_character(int row, int cls) const;
  /// (1/|G|) sum_C |C| a(C) b(C^-1).
  Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) const;
  /// Index of the row equal to f, or -1.
  int find_row(const ClassFunction& f) const;
  /// tau(x)/tau(1) for x central in the group; throws std::invalid_argument
  /// otherwise.
  Cyclotomic central_scalar(int row, int element) const;

  /// Row index of sigma_K0(chi), computed valuewise and through
  /// chi(g_p g_{p'}^p); throws InternalError if the two disagree or match no
  /// row.
  int sigma_character(int row, std::int64_t p) const;

  /// Exact row and column orthogonality; throws InternalError on failure.
  void verify_orthogonality() const;
  /// omega(C_i) omega(C_j) = sum_k a_ijk omega(C_k) for every row.
  void verify_central_characters() const;

 private:
  GroupPtr group_;
  std::int64_t conductor_;
  std::vector<ClassFunction> rows_;
};

/// chi restricted along an embedding: value at each class of the subgroup is
/// chi at the containing class of the parent.
ClassFunction restrict_to(const ClassFunction& chi, const Group& parent, const Group& sub,
                          const std::vector<int>& to_parent);

/// Smallest prime l = 1 mod exponent with l^2 > 4|G|.
std::int64_t dixon_prime(std::int64_t exponent, std::int64_t order);

/// The character table by Dixon–Schneider, verified before return.
CharacterTable dixon_schneider(const GroupPtr& group);

Json table_to_json(const CharacterTable& t);
/// Ingests a table in the cache format; re-verifies everything and throws
/// InputError if the data do not describe the character table of `group`.
CharacterTable table_from_json(const GroupPtr& group, const Json& j);

/// Default cache directory: $BLOCKTOOL_CACHE, else $XDG_CACHE_HOME/blocktool,
/// else $HOME/.cache/blocktool.
std::filesystem::path default_cache_dir();

/// Loads the table from `cache_dir` (if set and present) or computes and
/// stores it.
CharacterTable character_table(const GroupPtr& group, const std::optional<std::filesystem::path>& cache_dir);

}  // namespace blocktool
