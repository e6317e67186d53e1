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
#include <optional>
#include <string>
#include <vector>

#include "blocktool/finite_field.hpp"
#include "blocktool/io.hpp"
#include "blocktool/isotypy.hpp"
#include "blocktool/linalg.hpp"
#include "blocktool/session.hpp"

namespace blocktool {

using FqMatrix = linalg::Matrix<GaloisField>;
using FqCoords = std::vector<GaloisField::Elem>;

/// Z(F_q X b) with basis b.C_j for a greedy choice of classes j.
struct CenterAlgebra {
  int block = 0;
  int dimension = 0;
  std::vector<int> basis_classes;
  std::vector<FqVector> basis;           ///< class coordinates
  std::vector<GaloisField::Elem> table;  ///< v_a v_b = sum_k table[(a n + b) n + k] v_k
  FqCoords unit;

  const GaloisField::Elem& constant(int a, int b, int k) const {
    return table[(static_cast<std::size_t>(a) * dimension + b) * dimension + k];
  }
};

/// Throws InternalError if the dimension differs from |Irr(X, b)|.
CenterAlgebra center_of_block(const GroupData& x, const GaloisField& f, int b);

/// Coordinates of a class-coordinate vector, or nullopt outside the center.
std::optional<FqCoords> center_coordinates(const CenterAlgebra& z, const GaloisField& f, const FqVector& v);
FqCoords center_multiply(const CenterAlgebra& z, const GaloisField& f, const FqCoords& a, const FqCoords& b);

/// f: Z(kG c) -> Z(kG b) for an isometry from b to c, reduced from the
/// characteristic-zero map e_{I(chi)} -> e_chi.
struct CentralIsomorphism {
  FqMatrix matrix;                            ///< column j: image of the j-th basis element of Z(kG c)
  std::vector<std::vector<Cyclotomic>> lifts;  ///< exact coordinates before reduction, per column
};

/// Throws NotIntegralError (with witness) if a coordinate is not P-integral,
/// InconclusiveError if undecidable, InternalError if the reduction is not a
/// unital algebra isomorphism.
CentralIsomorphism broue_central_iso(const Session& s, const Isometry& iso, const CenterAlgebra& source,
                                     const CenterAlgebra& target);

/// theta(v) = matrix * v^(p), entries of v raised to the p-th power.
struct SemilinearMap {
  FqMatrix matrix;
  std::int64_t p = 2;
};

FqCoords apply_semilinear(const GaloisField& f, const SemilinearMap& theta, const FqCoords& v);

/// sigma o f on Z(kG sigma(b)), sigma the coefficientwise p-th power map.
/// Verified to be a p-semilinear ring automorphism.
SemilinearMap semilinear_theta(const Session& s, const CenterAlgebra& source, const CenterAlgebra& target,
                               const CentralIsomorphism& f);

struct FpForm {
  int j = 1;
  std::vector<int> levels_tried;
  GaloisFieldPtr field;                ///< F_{q^j}
  std::vector<FqCoords> basis;         ///< theta-fixed vectors over F_{q^j}
  std::vector<std::int64_t> table;     ///< structure constants over F_p, same layout as CenterAlgebra
  std::vector<std::int64_t> unit;
};

/// Fixed points of theta over F_{q^j}, j = 1, 2, 4, ... up to `cap`. Throws
/// InconclusiveError at the cap and InternalError if the fixed points are not
/// an F_p-form.
FpForm fixed_points(const GaloisFieldPtr& base, const CenterAlgebra& z, const SemilinearMap& theta, int cap = 64);

struct BrauerFeitReport {
  std::int64_t p = 2;
  int defect = 0;
  int characters = 0;
  mpq_class m;            ///< p^{2d}/4 + 1
  std::int64_t m_floor = 0;
  mpz_class count_bound;  ///< p^{m_floor^3}
  bool holds = true;
};

BrauerFeitReport brauer_feit_check(std::int64_t p, int defect, int characters);
Json brauer_feit_to_json(const BrauerFeitReport& r);

struct DescentReport {
  int block = 0;
  int target = 0;
  Isometry isometry;
  std::optional<CenterAlgebra> center;
  std::optional<CentralIsomorphism> iso;
  std::optional<SemilinearMap> theta;
  std::optional<FpForm> form;
  BrauerFeitReport brauer_feit;
  Verdict verdict = Verdict::kPass;
  std::string witness;
};

/// The full descent for block b: perfect isometry to sigma(b), central
/// isomorphism, theta, its fixed points and the Brauer–Feit report.
DescentReport descend(const Session& s, int b, int cap = 64);
Json descent_to_json(const Session& s, const DescentReport& r);

}  // namespace blocktool
