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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blocktool/blocks.hpp"
#include "blocktool/chartab.hpp"
#include "blocktool/io.hpp"
#include "blocktool/localfield.hpp"
#include "blocktool/session.hpp"

namespace blocktool {

/// I^H applied n times: the value at the class of x is phi(x_p x_{p'}^{p^n}).
ClassFunction apply_IH(const Group& h, const ClassFunction& phi, std::int64_t p, std::int64_t n = 1);

/// The p'-restriction of I^H applied n times: value at a p-regular y is
/// phi(y^{p^n}); p-singular entries are zero.
ClassFunction apply_IH_regular(const Group& h, const ClassFunction& phi, std::int64_t p, std::int64_t n = 1);

/// A bijection with signs between the characters of two blocks of one group.
struct Isometry {
  int source = 0;
  int target = 0;
  std::vector<int> rows;    ///< characters of the source block, sorted
  std::vector<int> images;  ///< I(rows[i]) up to sign
  std::vector<int> signs;   ///< +1 or -1
};

/// chi -> sigma^n(chi) on Irr(X, b) with all signs +1; throws InternalError
/// if an image leaves sigma^n(b).
Isometry build_isometry(const GroupData& x, std::int64_t p, int b, std::int64_t n);

/// mu(x, y) = sum_chi eps_chi chi(x) I(chi)(y), indexed [class x][class y].
using MuFunction = std::vector<std::vector<Cyclotomic>>;
MuFunction mu_function(const GroupData& x, const Isometry& iso);

struct PairRecord {
  int x = 0;
  int y = 0;
  Cyclotomic mu;
  Valuation valuation;
  std::int64_t required = 0;         ///< e * v_p|C(x)|
  std::int64_t required_strict = 0;  ///< e * v_p|C(y)|
  bool mixed = false;                ///< exactly one of x, y is p-singular
  bool ok = true;
  bool inconclusive = false;
};

struct PerfectIsometryReport {
  bool strict = false;
  bool pass = true;
  bool inconclusive = false;
  std::string witness;
  std::vector<PairRecord> pairs;
};

/// Conditions (a) and (b) of a perfect isometry on every class pair; with
/// `strict`, (a) also for the centralizer of y.
PerfectIsometryReport verify_perfect_isometry(const GroupData& x, const MuFunction& mu, const LocalField& lf,
                                              bool strict);

/// Central element of the group algebra of `cx` with coefficient 1 on the
/// identity.
std::vector<Cyclotomic> unit_element(const GroupData& cx, std::int64_t conductor);

/// d_G^{(x,e)}(chi) on the p-regular classes of cx = C_G(x): the value at y
/// is sum_h e_h chi(x h y). p-singular entries are zero. Throws
/// std::invalid_argument if x is not a p-element.
ClassFunction gen_decomp(const Group& g, const ClassFunction& chi, int x, const GroupData& cx,
                         const std::vector<Cyclotomic>& e, std::int64_t p);

struct SquareRecord {
  int x = 0;    ///< element of G
  int chi = 0;  ///< row of the source character
  int y = 0;    ///< p-regular class of C_G(x)
  Cyclotomic lhs;
  Cyclotomic rhs;
  bool ok = true;
};

struct CyclicRecord {
  Subgroup q;
  std::vector<int> generators;
  int e_q = 0;
  int f_q = 0;
  Isometry isometry;
  PerfectIsometryReport perfect;
  std::vector<SquareRecord> squares;
};

enum class Verdict { kPass, kFail, kInconclusive };
const char* verdict_name(Verdict v);

struct FaultInjection {
  enum class Kind { kNone, kPerturbIdempotent, kFlipSign, kAlterMu };
  Kind kind = Kind::kNone;
};

/// "none", "perturb-idempotent", "flip-sign", "alter-mu".
const char* fault_name(FaultInjection::Kind k);
/// Throws InputError for an unknown name.
FaultInjection::Kind fault_from_name(const std::string& s);

struct IsotypyOptions {
  bool strict = false;
  FaultInjection fault;
  /// Block of C_G(P) used as e_P; default: the first eligible one.
  std::optional<int> e_p;
};

struct IsotypyCertificate {
  explicit IsotypyCertificate(Subgroup p) : defect_group(std::move(p)) {}

  std::string group;
  std::string group_hash;
  std::int64_t p = 0;
  int block = 0;
  std::int64_t power = 0;
  int target = 0;
  bool strict = false;
  std::string fault;
  Subgroup defect_group;
  int e_p = 0;
  bool e_p_requested = false;
  int f_p = 0;
  bool family_ok = true;
  bool fusion_skipped = false;
  FusionComparison fusion;
  std::vector<CyclicRecord> cyclic;
  Verdict verdict = Verdict::kPass;
  std::string witness;
};

/// Galois conjugate blocks b and sigma^n(b) checked for isotypy with the
/// maps I^{C_G(Q)}: equality of fusion categories, perfect isometries over
/// every cyclic Q <= P, and the commuting squares for every generator of Q.
IsotypyCertificate verify_isotypy(const Session& s, int b, std::int64_t n, const IsotypyOptions& options = {});

Json certificate_to_json(const IsotypyCertificate& c);

struct ReplayResult {
  bool identical = false;
  Verdict verdict = Verdict::kFail;
  std::string difference;
};

/// Recomputes a stored certificate from its parameters and compares it field
/// by field. Throws InputError if it does not belong to the session's group
/// and prime.
ReplayResult replay_certificate(const Session& s, const Json& certificate);

}  // namespace blocktool
