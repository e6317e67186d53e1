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

#include "blocktool/chartab.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "blocktool/errors.hpp"
#include "blocktool/finite_field.hpp"
#include "blocktool/linalg.hpp"
#include "blocktool/number_theory.hpp"
#include "blocktool/permutation.hpp"

namespace blocktool {

CharacterTable::CharacterTable(GroupPtr group, std::int64_t conductor, std::vector<ClassFunction> rows)
    : group_(std::move(group)), conductor_(conductor), rows_(std::move(rows)) {}

std::int64_t CharacterTable::degree(int row) const {
  auto v = rows_[row][0].rational_value();
  if (!v || v->get_den() != 1) throw InternalError("character degree is not an integer");
  return v->get_num().get_si();
}

CharacterTable CharacterTable::lift(std::int64_t m) const {
  std::vector<ClassFunction> rows = rows_;
  for (auto& r : rows)
    for (auto& v : r) v = v.lift(m);
  return CharacterTable(group_, m, std::move(rows));
}

Cyclotomic CharacterTable::central_character(int row, int cls) const {
  Cyclotomic r = rows_[row][cls];
  r *= mpq_class(static_cast<long>(group_->classes()[cls].size), degree(row));
  return r;
}

Cyclotomic CharacterTable::inner_product(const ClassFunction& a, const ClassFunction& b) const {
  Cyclotomic s(conductor_);
  for (int c = 0; c < group_->num_classes(); ++c) {
    Cyclotomic t = a[c] * b[group_->inverse_class(c)];
    t *= mpq_class(static_cast<long>(group_->classes()[c].size));
    s += t;
  }
  s *= mpq_class(1, static_cast<long>(group_->order()));
  return s;
}

int CharacterTable::find_row(const ClassFunction& f) const {
  for (int i = 0; i < size(); ++i)
    if (rows_[i] == f) return i;
  return -1;
}

Cyclotomic CharacterTable::central_scalar(int row, int element) const {
  const int c = group_->class_of(element);
  if (group_->classes()[c].size != 1) throw std::invalid_argument("central_scalar: element is not central");
  Cyclotomic r = rows_[row][c];
  r *= mpq_class(1, degree(row));
  return r;
}

int CharacterTable::sigma_character(int row, std::int64_t p) const {
  const auto sigma = sigma_K0(p, conductor_);
  ClassFunction valuewise, powered;
  for (int c = 0; c < group_->num_classes(); ++c) {
    valuewise.push_back(sigma.apply(rows_[row][c]));
    const std::int64_t o = group_->classes()[c].rep_order;
    powered.push_back(rows_[row][power_class(c, twisted_power_exponent(o, p, p))]);
    if (valuewise.back() != powered.back()) {
      std::ostringstream os;
      os << group_->name() << ": sigma_K0 of row " << row << " differs from the power-map image at class " << c
         << " (" << valuewise.back().to_string() << " vs " << powered.back().to_string() << ")";
      throw InternalError(os.str());
    }
  }
  int idx = find_row(valuewise);
  if (idx < 0) throw InternalError(group_->name() + ": Galois image of a character is not in the table");
  return idx;
}

void CharacterTable::verify_orthogonality() const {
  const auto& g = *group_;
  const int r = g.num_classes();
  if (size() != r) throw InternalError(g.name() + ": character table is not square");
  const Cyclotomic order(conductor_, mpq_class(static_cast<long>(g.order())));
  for (int i = 0; i < r; ++i) {
    auto d = rows_[i][0].rational_value();
    if (!d || d->get_den() != 1 || *d <= 0 || g.order() % d->get_num().get_ui() != 0)
      throw InternalError(g.name() + ": invalid character degree in row " + std::to_string(i));
    for (int j = i; j < r; ++j) {
      Cyclotomic s(conductor_);
      for (int c = 0; c < r; ++c) {
        Cyclotomic t = rows_[i][c] * rows_[j][g.inverse_class(c)];
        t *= mpq_class(static_cast<long>(g.classes()[c].size));
        s += t;
      }
      if (s != (i == j ? order : Cyclotomic(conductor_)))
        throw InternalError(g.name() + ": row orthogonality fails for rows " + std::to_string(i) + "," +
                            std::to_string(j));
    }
  }
  for (int c = 0; c < r; ++c)
    for (int c2 = c; c2 < r; ++c2) {
      Cyclotomic s(conductor_);
      for (int i = 0; i < r; ++i) s += rows_[i][c] * rows_[i][g.inverse_class(c2)];
      Cyclotomic expect =
          c == c2 ? Cyclotomic(conductor_, mpq_class(static_cast<long>(g.centralizer_order(c)))) : Cyclotomic(conductor_);
      if (s != expect)
        throw InternalError(g.name() + ": column orthogonality fails for classes " + std::to_string(c) + "," +
                            std::to_string(c2));
    }
}

void CharacterTable::verify_central_characters() const {
  const auto& g = *group_;
  const int r = g.num_classes();
  for (int row = 0; row < size(); ++row) {
    std::vector<Cyclotomic> w;
    for (int c = 0; c < r; ++c) w.push_back(central_character(row, c));
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) {
        Cyclotomic rhs(conductor_);
        for (int k = 0; k < r; ++k) {
          auto a = g.class_mult(i, j, k);
          if (a == 0) continue;
          Cyclotomic t = w[k];
          t *= mpq_class(static_cast<long>(a));
          rhs += t;
        }
        if (w[i] * w[j] != rhs)
          throw InternalError(g.name() + ": central character of row " + std::to_string(row) + " is not multiplicative");
      }
  }
}

ClassFunction restrict_to(const ClassFunction& chi, const Group& parent, const Group& sub,
                          const std::vector<int>& to_parent) {
  ClassFunction out;
  for (const auto& c : sub.classes()) out.push_back(chi[parent.class_of(to_parent[c.representative])]);
  return out;
}

std::int64_t dixon_prime(std::int64_t exponent, std::int64_t order) {
  for (std::int64_t l = exponent + 1;; l += exponent)
    if (l * l > 4 * order && nt::is_prime(l)) return l;
}

namespace {

using Vec = std::vector<std::int64_t>;

// Joint eigenvectors of the class matrices over F_l: one vector per
// irreducible character, normalized to 1 at the identity class.
std::vector<Vec> joint_eigenvectors(const Group& g, std::int64_t l) {
  const int r = g.num_classes();
  PrimeField f{l};
  std::vector<std::vector<Vec>> spaces;  // each space: list of basis vectors
  {
    std::vector<Vec> basis;
    for (int i = 0; i < r; ++i) {
      Vec v(r, 0);
      v[i] = 1;
      basis.push_back(v);
    }
    spaces.push_back(basis);
  }
  for (int j = 0; j < r; ++j) {
    bool all_split = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
    if (all_split) break;
    // (M_j)_{ik} = a_{jik}: M_j w = omega(C_j) w for central character vectors w
    auto apply = [&](const Vec& v) {
      Vec out(r, 0);
      for (int i = 0; i < r; ++i) {
        std::int64_t s = 0;
        for (int k = 0; k < r; ++k) s = (s + g.class_mult(j, i, k) % l * v[k]) % l;
        out[i] = s;
      }
      return out;
    };
    std::vector<std::vector<Vec>> next;
    for (auto& space : spaces) {
      const std::size_t d = space.size();
      if (d == 1) {
        next.push_back(space);
        continue;
      }
      linalg::Matrix<PrimeField> b(r, d, 0);
      for (std::size_t c = 0; c < d; ++c)
        for (int i = 0; i < r; ++i) b(i, c) = space[c][i];
      linalg::Matrix<PrimeField> a(d, d, 0);
      for (std::size_t c = 0; c < d; ++c) {
        auto x = linalg::solve(f, b, apply(space[c]));
        if (!x) throw InternalError(g.name() + ": class matrix does not preserve an eigenspace");
        for (std::size_t k = 0; k < d; ++k) a(k, c) = (*x)[k];
      }
      std::size_t found = 0;
      for (std::int64_t lambda = 0; lambda < l && found < d; ++lambda) {
        auto shifted = a;
        for (std::size_t k = 0; k < d; ++k) shifted(k, k) = f.sub(shifted(k, k), lambda);
        auto ker = linalg::nullspace(f, shifted);
        if (ker.empty()) continue;
        std::vector<Vec> sub;
        for (const auto& kv : ker) {
          Vec v(r, 0);
          for (std::size_t k = 0; k < d; ++k)
            for (int i = 0; i < r; ++i) v[i] = (v[i] + kv[k] * space[k][i]) % l;
          sub.push_back(v);
        }
        found += sub.size();
        next.push_back(sub);
      }
      if (found != d) throw InternalError(g.name() + ": class matrix eigenvalues do not split over F_l");
    }
    spaces = std::move(next);
  }
  std::vector<Vec> out;
  for (auto& s : spaces) {
    if (s.size() != 1) throw InternalError(g.name() + ": class matrices do not separate characters");
    Vec v = s[0];
    if (v[0] == 0) throw InternalError(g.name() + ": eigenvector vanishes at the identity class");
    const std::int64_t inv = nt::inv_mod(v[0], l);
    for (auto& x : v) x = x * inv % l;
    out.push_back(v);
  }
  return out;
}

}  // namespace

CharacterTable dixon_schneider(const GroupPtr& group) {
  const auto& g = *group;
  const int r = g.num_classes();
  const std::int64_t e = g.exponent();
  const std::int64_t order = static_cast<std::int64_t>(g.order());
  const std::int64_t l = dixon_prime(e, order);

  std::int64_t prim = 2;
  while (nt::mult_order(prim, l) != l - 1) ++prim;
  const std::int64_t zl = nt::pow_mod(prim, (l - 1) / e, l);
  std::vector<std::int64_t> zpow(e);
  for (std::int64_t t = 0; t < e; ++t) zpow[t] = nt::pow_mod(zl, t, l);

  std::vector<ClassFunction> rows;
  for (const auto& w : joint_eigenvectors(g, l)) {
    std::int64_t s = 0;
    for (int k = 0; k < r; ++k) {
      std::int64_t term = w[k] * w[g.inverse_class(k)] % l;
      term = term * nt::inv_mod(static_cast<std::int64_t>(g.classes()[k].size), l) % l;
      s = (s + term) % l;
    }
    const std::int64_t target = nt::mod(order % l * nt::inv_mod(s, l), l);
    std::int64_t d = 0;
    for (std::int64_t c = 1; c <= (l - 1) / 2; ++c)
      if (c * c % l == target) d = c;
    if (d == 0 || order % d != 0) throw InternalError(g.name() + ": no valid character degree");
    Vec chi(r);
    for (int k = 0; k < r; ++k)
      chi[k] = d * w[k] % l * nt::inv_mod(static_cast<std::int64_t>(g.classes()[k].size), l) % l;

    ClassFunction row;
    for (int k = 0; k < r; ++k) {
      const std::int64_t o = g.classes()[k].rep_order;
      const std::int64_t step = e / o;
      const std::int64_t inv_o = nt::inv_mod(o, l);
      Cyclotomic value(e);
      std::int64_t total = 0;
      for (std::int64_t j = 0; j < o; ++j) {
        std::int64_t m = 0;
        for (std::int64_t i = 0; i < o; ++i)
          m = (m + chi[g.power_class(k, i)] * zpow[nt::mod(-step * i * j, e)]) % l;
        m = m * inv_o % l;
        if (m > d) throw InternalError(g.name() + ": eigenvalue multiplicity exceeds the degree");
        total += m;
        if (m != 0) {
          Cyclotomic t = Cyclotomic::root_of_unity(e, step * j);
          t *= mpq_class(static_cast<long>(m));
          value += t;
        }
      }
      if (total != d) throw InternalError(g.name() + ": eigenvalue multiplicities do not sum to the degree");
      row.push_back(value);
    }
    rows.push_back(row);
  }

  const Cyclotomic one(e, mpq_class(1));
  auto is_trivial = [&](const ClassFunction& f) {
    return std::all_of(f.begin(), f.end(), [&](const Cyclotomic& v) { return v == one; });
  };
  std::sort(rows.begin(), rows.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    const auto da = *a[0].rational_value(), db = *b[0].rational_value();
    if (da != db) return da < db;
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    for (std::size_t c = 0; c < a.size(); ++c) {
      int cmp = Cyclotomic::compare(a[c], b[c]);
      if (cmp != 0) return cmp > 0;
    }
    return false;
  });
  CharacterTable table(group, e, std::move(rows));
  table.verify_orthogonality();
  return table;
}

Json table_to_json(const CharacterTable& t) {
  const auto& g = *t.group();
  Json classes = Json::array();
  for (const auto& c : g.classes()) classes.push_back(g.element(c.representative).one_based());
  Json values = Json::array();
  for (const auto& row : t.rows()) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(cyclotomic_to_json(v));
    values.push_back(jr);
  }
  Json maps = Json::object();
  for (std::int64_t s = 0; s < g.exponent(); ++s) {
    Json m = Json::array();
    for (int c = 0; c < g.num_classes(); ++c) m.push_back(g.power_class(c, s));
    maps[std::to_string(s)] = m;
  }
  return Json{{"groupHash", g.hash()},
              {"conductor", t.conductor()},
              {"classOrder", classes},
              {"values", values},
              {"powerMaps", maps}};
}

CharacterTable table_from_json(const GroupPtr& group, const Json& j) {
  const auto& g = *group;
  try {
    if (j.at("groupHash").get<std::string>() != g.hash()) throw InputError("table belongs to a different group");
    const auto n = j.at("conductor").get<std::int64_t>();
    if (n != g.exponent()) throw InputError("table conductor differs from the group exponent");
    const auto& classes = j.at("classOrder");
    if (static_cast<int>(classes.size()) != g.num_classes()) throw InputError("class count mismatch");
    for (int c = 0; c < g.num_classes(); ++c)
      if (classes.at(c).get<std::vector<int>>() != g.element(g.classes()[c].representative).one_based())
        throw InputError("class order differs from the canonical ordering");
    const auto& maps = j.at("powerMaps");
    for (std::int64_t s = 0; s < g.exponent(); ++s) {
      auto m = maps.at(std::to_string(s)).get<std::vector<int>>();
      if (static_cast<int>(m.size()) != g.num_classes()) throw InputError("power map has wrong length");
      for (int c = 0; c < g.num_classes(); ++c)
        if (m[c] != g.power_class(c, s)) throw InputError("power map disagrees with the group");
    }
    std::vector<ClassFunction> rows;
    for (const auto& jr : j.at("values")) {
      ClassFunction row;
      for (const auto& v : jr) {
        auto x = cyclotomic_from_json(v);
        if (n % x.conductor() != 0) throw InputError("value outside the table conductor");
        row.push_back(x.lift(n));
      }
      if (static_cast<int>(row.size()) != g.num_classes()) throw InputError("table row has wrong length");
      rows.push_back(std::move(row));
    }
    CharacterTable t(group, n, std::move(rows));
    t.verify_orthogonality();
    t.verify_central_characters();
    return t;
  } catch (const InternalError& e) {
    throw InputError(std::string("table failed verification: ") + e.what());
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed character table: ") + e.what());
  }
}

std::filesystem::path default_cache_dir() {
  if (const char* c = std::getenv("BLOCKTOOL_CACHE"); c && *c) return c;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "blocktool";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "blocktool";
  return std::filesystem::temp_directory_path() / "blocktool";
}

CharacterTable character_table(const GroupPtr& group, const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return dixon_schneider(group);
  const auto path = *cache_dir / (group->hash() + ".json");
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    try {
      return table_from_json(group, Json::parse(read_file(path.string())));
    } catch (const Error&) {
      // unreadable or stale cache entry: recompute below
    } catch (const Json::exception&) {
    }
  }
  CharacterTable t = dixon_schneider(group);
  try {
    write_file_atomic(path.string(), dump(table_to_json(t)));
  } catch (const std::exception&) {
    // the cache is an optimization only
  }
  return t;
}

}  // namespace blocktool
