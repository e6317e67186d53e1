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

#include "blocktool/descent.hpp"

#include <algorithm>
#include <sstream>

#include "blocktool/errors.hpp"
#include "blocktool/number_theory.hpp"

namespace blocktool {

namespace {

FqMatrix columns_to_matrix(const GaloisField& f, const std::vector<FqVector>& cols, std::size_t rows) {
  FqMatrix m(rows, cols.size(), f.zero());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

FqCoords column(const FqMatrix& m, std::size_t j) {
  FqCoords out;
  for (std::size_t i = 0; i < m.rows; ++i) out.push_back(m(i, j));
  return out;
}

FqCoords mat_vec(const GaloisField& f, const FqMatrix& m, const FqCoords& v) {
  FqCoords out(m.rows, f.zero());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out[i] = f.add(out[i], f.mul(m(i, j), v[j]));
  return out;
}

FqVector to_classes(const CenterAlgebra& z, const GaloisField& f, const FqCoords& c) {
  FqVector out(z.basis.front().size(), f.zero());
  for (int k = 0; k < z.dimension; ++k)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], f.mul(c[k], z.basis[k][i]));
  return out;
}

FqCoords frobenius_all(const GaloisField& f, FqCoords v) {
  for (auto& x : v) x = f.frobenius(x, 1);
  return v;
}

FqCoords multiply_with(const GaloisField& f, int n, const std::vector<GaloisField::Elem>& table, const FqCoords& a,
                       const FqCoords& b) {
  FqCoords out(n, f.zero());
  for (int i = 0; i < n; ++i) {
    if (f.is_zero(a[i])) continue;
    for (int j = 0; j < n; ++j) {
      if (f.is_zero(b[j])) continue;
      const auto ab = f.mul(a[i], b[j]);
      for (int k = 0; k < n; ++k)
        out[k] = f.add(out[k], f.mul(ab, table[(static_cast<std::size_t>(i) * n + j) * n + k]));
    }
  }
  return out;
}

Json matrix_to_json(const FqMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(field_element_to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

}  // namespace

CenterAlgebra center_of_block(const GroupData& x, const GaloisField& f, int b) {
  const auto& g = *x.group;
  const int r = g.num_classes();
  const auto& bbar = x.blocks.block(b).residue;
  CenterAlgebra z;
  z.block = b;
  for (int j = 0; j < r; ++j) {
    FqVector cls(r, f.zero());
    cls[j] = f.one();
    auto v = central_product(g, f, bbar, cls);
    auto trial = z.basis;
    trial.push_back(v);
    if (linalg::rank(f, columns_to_matrix(f, trial, r)) == trial.size()) {
      z.basis = std::move(trial);
      z.basis_classes.push_back(j);
    }
  }
  z.dimension = static_cast<int>(z.basis.size());
  if (z.dimension != static_cast<int>(x.blocks.block(b).irr.size()))
    throw InternalError(g.name() + ": center of block " + std::to_string(b) + " has dimension " +
                        std::to_string(z.dimension) + ", expected the number of characters");
  const int n = z.dimension;
  z.table.assign(static_cast<std::size_t>(n) * n * n, f.zero());
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      auto coords = center_coordinates(z, f, central_product(g, f, z.basis[a], z.basis[c]));
      if (!coords) throw InternalError(g.name() + ": center of a block is not closed under multiplication");
      for (int k = 0; k < n; ++k) z.table[(static_cast<std::size_t>(a) * n + c) * n + k] = (*coords)[k];
    }
  auto unit = center_coordinates(z, f, bbar);
  if (!unit) throw InternalError(g.name() + ": block idempotent outside its own center");
  z.unit = *unit;
  return z;
}

std::optional<FqCoords> center_coordinates(const CenterAlgebra& z, const GaloisField& f, const FqVector& v) {
  return linalg::solve(f, columns_to_matrix(f, z.basis, v.size()), v);
}

FqCoords center_multiply(const CenterAlgebra& z, const GaloisField& f, const FqCoords& a, const FqCoords& b) {
  return multiply_with(f, z.dimension, z.table, a, b);
}

CentralIsomorphism broue_central_iso(const Session& s, const Isometry& iso, const CenterAlgebra& source,
                                     const CenterAlgebra& target) {
  const auto& t = s.whole().table;
  const auto& g = *s.group();
  const GaloisField& f = s.field();
  const int n = source.dimension;
  if (target.dimension != n || static_cast<int>(iso.rows.size()) != n)
    throw std::invalid_argument("central isomorphism between centers of different dimension");
  const CyclotomicOps ops{s.conductor()};
  linalg::Matrix<CyclotomicOps> a(n, n, ops.zero());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) a(i, k) = t.central_character(iso.rows[i], source.basis_classes[k]);
  CentralIsomorphism out;
  out.matrix = FqMatrix(n, n, f.zero());
  for (int j = 0; j < n; ++j) {
    std::vector<Cyclotomic> rhs;
    for (int i = 0; i < n; ++i) rhs.push_back(t.central_character(iso.images[i], target.basis_classes[j]));
    auto x = linalg::solve(ops, a, rhs);
    if (!x) throw InternalError(g.name() + ": central character system is singular");
    for (int k = 0; k < n; ++k) {
      if (!s.local_field().valuation_at_least((*x)[k], 0)) {
        std::ostringstream os;
        os << g.name() << ": coordinate " << k << " of the image of basis element " << j
           << " is not integral: " << (*x)[k].to_string();
        throw NotIntegralError(os.str());
      }
      out.matrix(k, j) = s.local_field().reduce((*x)[k]);
    }
    out.lifts.push_back(std::move(*x));
  }

  const std::string label = g.name() + ": reduced central map ";
  if (mat_vec(f, out.matrix, target.unit) != source.unit) throw InternalError(label + "is not unital");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FqCoords prod(n);
      for (int k = 0; k < n; ++k) prod[k] = target.constant(i, j, k);
      if (mat_vec(f, out.matrix, prod) !=
          center_multiply(source, f, column(out.matrix, i), column(out.matrix, j)))
        throw InternalError(label + "is not multiplicative");
    }
  if (!linalg::inverse(f, out.matrix)) throw InternalError(label + "is not bijective");
  return out;
}

FqCoords apply_semilinear(const GaloisField& f, const SemilinearMap& theta, const FqCoords& v) {
  return mat_vec(f, theta.matrix, frobenius_all(f, v));
}

SemilinearMap semilinear_theta(const Session& s, const CenterAlgebra& source, const CenterAlgebra& target,
                               const CentralIsomorphism& fmap) {
  const GaloisField& f = s.field();
  const auto& g = *s.group();
  const int n = target.dimension;
  if (s.whole().blocks.galois_image(source.block, 1) != target.block)
    throw std::invalid_argument("theta needs the center of sigma(b) as target");
  // class-coordinate path: Z(kG c) -f-> Z(kG b) -sigma-> Z(kG c)
  auto via_classes = [&](const FqCoords& v) {
    auto img = to_classes(source, f, mat_vec(f, fmap.matrix, v));
    auto coords = center_coordinates(target, f, frobenius_all(f, img));
    if (!coords) throw InternalError(g.name() + ": sigma does not map Z(kG b) onto Z(kG sigma(b))");
    return *coords;
  };
  SemilinearMap theta{FqMatrix(n, n, f.zero()), s.p()};
  for (int j = 0; j < n; ++j) {
    FqCoords e(n, f.zero());
    e[j] = f.one();
    auto col = via_classes(e);
    for (int i = 0; i < n; ++i) theta.matrix(i, j) = col[i];
  }
  const std::string label = g.name() + ": theta ";
  if (apply_semilinear(f, theta, target.unit) != target.unit) throw InternalError(label + "does not fix the unit");
  const auto lambda = f.generator();
  for (int a = 0; a < n; ++a) {
    FqCoords va(n, f.zero());
    va[a] = f.one();
    FqCoords scaled(n, f.zero());
    scaled[a] = lambda;
    auto expect = apply_semilinear(f, theta, va);
    for (auto& x : expect) x = f.mul(x, f.frobenius(lambda, 1));
    if (via_classes(scaled) != expect || apply_semilinear(f, theta, scaled) != expect)
      throw InternalError(label + "is not p-semilinear");
    for (int c = 0; c < n; ++c) {
      FqCoords vc(n, f.zero());
      vc[c] = f.one();
      if (apply_semilinear(f, theta, center_multiply(target, f, va, vc)) !=
          center_multiply(target, f, apply_semilinear(f, theta, va), apply_semilinear(f, theta, vc)))
        throw InternalError(label + "is not multiplicative");
    }
  }
  if (!linalg::inverse(f, theta.matrix)) throw InternalError(label + "is not bijective");
  return theta;
}

namespace {

std::optional<FpForm> fixed_points_at(const GaloisFieldPtr& base, const CenterAlgebra& z, const SemilinearMap& theta,
                                      int j) {
  const int n = z.dimension;
  const std::int64_t p = base->characteristic();
  const PrimeField fp{p};
  {
    const auto ext = extend_field(base, j);
    const GaloisField& big = *ext.big;
    const int d = big.degree();
    SemilinearMap th{FqMatrix(n, n, big.zero()), p};
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) th.matrix(i, k) = ext.embed(theta.matrix(i, k));

    // theta - id as an F_p-linear map on F_p^{n d}
    const std::size_t dim = static_cast<std::size_t>(n) * d;
    linalg::Matrix<PrimeField> m(dim, dim, 0);
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < d; ++t) {
        FqCoords v(n, big.zero());
        v[i][t] = 1;
        auto w = apply_semilinear(big, th, v);
        w[i] = big.sub(w[i], v[i]);
        for (int a = 0; a < n; ++a)
          for (int s = 0; s < d; ++s) m(static_cast<std::size_t>(a) * d + s, static_cast<std::size_t>(i) * d + t) = w[a][s];
      }
    const auto kernel = linalg::nullspace(fp, m);
    FpForm form;
    if (static_cast<int>(kernel.size()) > n) throw InternalError("fixed points of theta exceed the dimension");
    if (static_cast<int>(kernel.size()) < n) return std::nullopt;

    form.j = j;
    form.field = ext.big;
    for (const auto& kv : kernel) {
      FqCoords v(n, big.zero());
      for (int a = 0; a < n; ++a)
        for (int s = 0; s < d; ++s) v[a][s] = kv[static_cast<std::size_t>(a) * d + s];
      form.basis.push_back(std::move(v));
    }
    const auto bm = columns_to_matrix(big, form.basis, n);
    if (linalg::rank(big, bm) != static_cast<std::size_t>(n))
      throw InternalError("fixed points do not span the center after scalar extension");

    std::vector<GaloisField::Elem> big_table;
    for (const auto& c : z.table) big_table.push_back(ext.embed(c));
    auto to_fp = [&](const FqCoords& coords, const char* what) {
      std::vector<std::int64_t> out;
      for (const auto& c : coords) {
        if (!big.in_prime_field(c)) throw InternalError(std::string("fixed-point ") + what + " outside F_p");
        out.push_back(c[0]);
      }
      return out;
    };
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        auto prod = multiply_with(big, n, big_table, form.basis[a], form.basis[c]);
        if (apply_semilinear(big, th, prod) != prod) throw InternalError("product of fixed points is not fixed");
        auto coords = linalg::solve(big, bm, prod);
        if (!coords) throw InternalError("product of fixed points leaves their span");
        for (auto x : to_fp(*coords, "structure constant")) form.table.push_back(x);
      }
    FqCoords unit;
    for (const auto& u : z.unit) unit.push_back(ext.embed(u));
    form.unit = to_fp(*linalg::solve(big, bm, unit), "unit coordinate");
    return form;
  }
}

// Order of the F_q-linear map theta^m, or 0 if it exceeds cap.
int linear_part_order(const GaloisField& f, const SemilinearMap& theta, int cap) {
  const std::size_t n = theta.matrix.rows;
  auto l = linalg::identity(f, n);
  auto twist = theta.matrix;
  for (int i = 0; i < f.degree(); ++i) {
    l = linalg::multiply(f, l, twist);
    for (auto& x : twist.data) x = f.frobenius(x, 1);
  }
  const auto id = linalg::identity(f, n);
  auto power = l;
  for (int k = 1; k <= cap; ++k) {
    if (power.data == id.data) return k;
    power = linalg::multiply(f, power, l);
  }
  return 0;
}

}  // namespace

FpForm fixed_points(const GaloisFieldPtr& base, const CenterAlgebra& z, const SemilinearMap& theta, int cap) {
  std::vector<int> tried;
  auto attempt = [&](int j) {
    tried.push_back(j);
    auto form = fixed_points_at(base, z, theta, j);
    if (form) form->levels_tried = tried;
    return form;
  };
  for (int j = 1; j <= cap; j *= 2)
    if (auto form = attempt(j)) return *form;
  // full dimension is reached exactly at multiples of the order of theta^m
  const int k = linear_part_order(*base, theta, cap);
  if (k > 0 && std::find(tried.begin(), tried.end(), k) == tried.end())
    if (auto form = attempt(k)) return *form;
  throw InconclusiveError("theta has too few fixed points up to extension degree " + std::to_string(cap));
}

BrauerFeitReport brauer_feit_check(std::int64_t p, int defect, int characters) {
  BrauerFeitReport r;
  r.p = p;
  r.defect = defect;
  r.characters = characters;
  mpz_class p2d;
  mpz_ui_pow_ui(p2d.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(2 * defect));
  r.m = mpq_class(p2d, 4) + 1;
  r.m.canonicalize();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.m.get_num_mpz_t(), r.m.get_den_mpz_t());
  r.m_floor = fl.get_si();
  mpz_ui_pow_ui(r.count_bound.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(r.m_floor * r.m_floor * r.m_floor));
  r.holds = mpq_class(characters) <= r.m;
  return r;
}

Json brauer_feit_to_json(const BrauerFeitReport& r) {
  return Json{{"prime", r.p},
              {"defect", r.defect},
              {"characters", r.characters},
              {"m", r.m.get_str()},
              {"mFloor", r.m_floor},
              {"countBound", r.count_bound.get_str()},
              {"holds", r.holds}};
}

DescentReport descend(const Session& s, int b, int cap) {
  const auto& w = s.whole();
  if (b < 0 || b >= w.blocks.size()) throw InputError("block index " + std::to_string(b) + " out of range");
  DescentReport r;
  r.block = b;
  r.target = w.blocks.galois_image(b, 1);
  r.brauer_feit = brauer_feit_check(s.p(), w.blocks.block(b).defect, static_cast<int>(w.blocks.block(b).irr.size()));
  auto fail = [&](Verdict v, const std::string& msg) {
    if (r.verdict == Verdict::kPass) {
      r.verdict = v;
      r.witness = msg;
    }
  };
  if (!r.brauer_feit.holds) fail(Verdict::kFail, "Brauer-Feit bound violated");
  try {
    r.isometry = build_isometry(w, s.p(), b, 1);
    auto perfect = verify_perfect_isometry(w, mu_function(w, r.isometry), s.local_field(), false);
    if (!perfect.pass) fail(Verdict::kFail, perfect.witness);
    if (perfect.inconclusive) fail(Verdict::kInconclusive, "valuation undecided at the precision cap");
    const auto zb = center_of_block(w, s.field(), b);
    r.center = center_of_block(w, s.field(), r.target);
    r.iso = broue_central_iso(s, r.isometry, zb, *r.center);
    r.theta = semilinear_theta(s, zb, *r.center, *r.iso);
    r.form = fixed_points(s.residue_field().field, *r.center, *r.theta, cap);
  } catch (const NotIntegralError& e) {
    fail(Verdict::kFail, e.what());
  } catch (const InconclusiveError& e) {
    fail(Verdict::kInconclusive, e.what());
  } catch (const InternalError& e) {
    fail(Verdict::kFail, e.what());
  }
  return r;
}

Json descent_to_json(const Session& s, const DescentReport& r) {
  Json j;
  j["schema"] = "blocktool.fpform/1";
  j["group"] = s.group()->name();
  j["groupHash"] = s.group()->hash();
  j["prime"] = s.p();
  j["block"] = r.block;
  j["target"] = r.target;
  j["isometry"] = Json{{"rows", r.isometry.rows}, {"images", r.isometry.images}, {"signs", r.isometry.signs}};
  if (r.center) {
    j["centerDimension"] = r.center->dimension;
    j["basisClasses"] = r.center->basis_classes;
  }
  if (r.iso) j["centralIsomorphism"] = matrix_to_json(r.iso->matrix);
  if (r.theta) j["theta"] = matrix_to_json(r.theta->matrix);
  if (r.form) {
    const int n = static_cast<int>(r.form->basis.size());
    j["extensionLevel"] = r.form->j;
    j["levelsTried"] = r.form->levels_tried;
    Json table = Json::array();
    for (int a = 0; a < n; ++a) {
      Json row = Json::array();
      for (int c = 0; c < n; ++c) {
        Json v = Json::array();
        for (int k = 0; k < n; ++k) v.push_back(r.form->table[(static_cast<std::size_t>(a) * n + c) * n + k]);
        row.push_back(v);
      }
      table.push_back(row);
    }
    j["fpStructureConstants"] = table;
    j["fpUnit"] = r.form->unit;
  }
  j["brauerFeit"] = brauer_feit_to_json(r.brauer_feit);
  j["verdict"] = verdict_name(r.verdict);
  j["witness"] = r.witness;
  return j;
}

}  // namespace blocktool
