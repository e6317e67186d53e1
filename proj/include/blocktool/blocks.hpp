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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "blocktool/chartab.hpp"
#include "blocktool/finite_field.hpp"
#include "blocktool/localfield.hpp"
#include "blocktool/subgroups.hpp"

namespace blocktool {

class Session;
struct GroupData;

/// A central element of F_q X given by its coefficient on each class of X.
using FqVector = std::vector<GaloisField::Elem>;

struct Block {
  std::vector<int> irr;                  ///< character rows, sorted
  std::vector<Cyclotomic> coeffs;        ///< coefficient of each class element
  FqVector residue;                      ///< reduction of coeffs
  int defect = 0;
};

/// The p-blocks of a group from its character table (over the global
/// conductor). Construction verifies idempotency, p-regular support,
/// rationality over Q(zeta_{N_p'}) and p-integrality of every block
/// idempotent; failures raise InternalError.
class BlockSystem {
 public:
  BlockSystem(const CharacterTable& table, const LocalField& lf);

  int size() const { return static_cast<int>(blocks_.size()); }
  const Block& block(int i) const { return blocks_[i]; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int block_of_row(int row) const { return block_of_row_[row]; }
  /// Index of sigma^n(b).
  int galois_image(int b, std::int64_t n) const;
  /// Orbits under sigma, each sorted, ordered by least member.
  std::vector<std::vector<int>> galois_orbits() const;
  int orbit_length(int b) const;

 private:
  std::vector<Block> blocks_;
  std::vector<int> block_of_row_;
  std::vector<int> sigma_;
};

/// Product of central elements of F_q X through class multiplication
/// coefficients.
FqVector central_product(const Group& x, const GaloisField& f, const FqVector& a, const FqVector& b);
std::vector<Cyclotomic> central_product(const Group& x, const std::vector<Cyclotomic>& a,
                                        const std::vector<Cyclotomic>& b);

/// Whether conjugation by every element of R (a subgroup of G normalizing X)
/// fixes the central element a of F_q X.
bool is_stable(const GroupData& x, const FqVector& a, const Subgroup& r);

/// Truncation of a central element of F_q X to the subgroup Y <= X.
FqVector truncate(const GroupData& from, const GroupData& to, const FqVector& a);

/// Br_Q on a central element of F_q X, X containing C_G(Q) and normalized by
/// Q. Throws std::invalid_argument if a is not Q-stable.
FqVector brauer_hom(const Session& s, const GroupData& from, const FqVector& a, const Subgroup& q);

/// ^g a for a central in F_q C_G(Q), landing in F_q C_G(^gQ).
FqVector conjugate_central(const Group& parent, const GroupData& from, const GroupData& to, int g,
                           const FqVector& a);

bool is_zero(const GaloisField& f, const FqVector& a);

/// Rechecks block b of x from its exact coefficients: support on p-regular
/// classes, coefficients in Q(zeta_{N_p'}) with nonnegative valuation, and
/// residue(sigma_K0(b)) equal to the coefficientwise p-th power of
/// residue(b). Returns a description of the first failure or an empty string.
std::string check_block_rationality(const Session& s, const GroupData& x, int b);

/// Maximal p-subgroups Q (up to conjugacy) with Br_Q(b) != 0; verified to be a
/// single class of order p^defect.
std::vector<Subgroup> defect_groups(const Session& s, int b);

/// The Brauer pairs (Q, e_Q) contained in a maximal pair (P, e_P).
struct SubpairFamily {
  int block = 0;
  Subgroup p;
  std::vector<Subgroup> subgroups;  ///< all subgroups of P, sorted
  std::vector<int> e;               ///< block index of e_Q in C_G(Q)'s system

  int index_of(const Subgroup& q) const;
  int e_of(const Subgroup& q) const { return e[index_of(q)]; }
};

/// Blocks f of F_q C_G(Q) with (Q, f) normal in (R, g), Q normal in R.
std::vector<int> normal_subpairs(const Session& s, const Subgroup& q, const Subgroup& r, int g_block);

/// With P and e_P omitted, P is the first defect group and e_P the first
/// block of C_G(P) with Br_P(b) e_P = e_P. Every e_Q is found along the chain
/// Q < N_P(Q) < ... < P with an exhaustive uniqueness check.
SubpairFamily subpair_family(const Session& s, int b, std::optional<Subgroup> p = std::nullopt,
                             std::optional<int> e_p = std::nullopt);

/// Blocks e of C_G(P) with Br_P(b) e = e.
std::vector<int> maximal_pair_candidates(const Session& s, int b, const Subgroup& p);

/// Recomputes each e_Q through every R with Q < R <= N_P(Q); returns a
/// description of the first disagreement or an empty string.
std::string check_alternative_chains(const Session& s, const SubpairFamily& f);

/// Morphisms of the fusion category keyed by (index of Q, index of R) in the
/// family's subgroup list; each morphism is the image list of Q's elements.
struct FusionData {
  std::map<std::pair<int, int>, std::set<std::vector<int>>> hom;
  bool skipped = false;
};

FusionData fusion_category(const Session& s, const SubpairFamily& f, std::size_t size_cap);

struct FusionComparison {
  bool equal = true;
  std::string witness;
};

FusionComparison fusion_equal(const FusionData& a, const FusionData& b);

}  // namespace blocktool
