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

#include "blocktool/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "blocktool/errors.hpp"
#include "blocktool/number_theory.hpp"
#include "blocktool/session.hpp"

namespace blocktool {

namespace {

std::string describe(const Group& g, const std::vector<int>& elements) {
  std::ostringstream os;
  os << "<";
  bool first = true;
  for (int x : elements) {
    if (g.element(x).is_identity()) continue;
    os << (first ? "" : ",");
    first = false;
    for (auto v : g.element(x).one_based()) os << v;
  }
  os << ">";
  return os.str();
}

}  // namespace

BlockSystem::BlockSystem(const CharacterTable& table, const LocalField& lf) {
  const auto& g = *table.group();
  const std::int64_t p = lf.p();
  const std::int64_t n = lf.conductor();
  const GaloisField& f = *lf.residue_field().field;
  if (table.conductor() != n) throw std::invalid_argument("table and local field use different conductors");
  const int r = g.num_classes();

  std::vector<FqVector> keys;
  for (int row = 0; row < table.size(); ++row) {
    FqVector key;
    for (int c = 0; c < r; ++c) {
      try {
        key.push_back(lf.reduce(table.central_character(row, c)));
      } catch (const NotIntegralError& e) {
        throw InternalError(g.name() + ": central character value is not integral: " + e.what());
      }
    }
    keys.push_back(std::move(key));
  }
  block_of_row_.assign(table.size(), -1);
  for (int row = 0; row < table.size(); ++row) {
    if (block_of_row_[row] >= 0) continue;
    Block b;
    for (int other = row; other < table.size(); ++other)
      if (block_of_row_[other] < 0 && keys[other] == keys[row]) {
        block_of_row_[other] = static_cast<int>(blocks_.size());
        b.irr.push_back(other);
      }
    blocks_.push_back(std::move(b));
  }

  const std::int64_t npp = nt::p_prime_part(n, p);
  const int vg = nt::vp(static_cast<std::int64_t>(g.order()), p);
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    Block& b = blocks_[bi];
    const std::string label = g.name() + " block " + std::to_string(bi);
    b.coeffs.assign(r, Cyclotomic(n));
    int min_vp = vg;
    for (int row : b.irr) {
      const std::int64_t d = table.degree(row);
      min_vp = std::min(min_vp, nt::vp(d, p));
      const mpq_class scale(d, static_cast<long>(g.order()));
      for (int c = 0; c < r; ++c) {
        Cyclotomic t = table.value(row, g.inverse_class(c));
        t *= scale;
        b.coeffs[c] += t;
      }
    }
    b.defect = vg - min_vp;
    for (int c = 0; c < r; ++c) {
      if (!g.classes()[c].is_p_regular(p) && !b.coeffs[c].is_zero())
        throw InternalError(label + ": idempotent has a nonzero coefficient on a p-singular class");
      for (std::int64_t t = 1; t < n; t += 1) {
        if (std::gcd(t, n) != 1 || nt::mod(t, npp) != 1 % npp) continue;
        if (b.coeffs[c].galois(t) != b.coeffs[c])
          throw InternalError(label + ": idempotent coefficient is not in the p'-cyclotomic subfield");
      }
      try {
        b.residue.push_back(lf.reduce(b.coeffs[c]));
      } catch (const NotIntegralError& e) {
        throw InternalError(label + ": idempotent coefficient is not p-integral: " + e.what());
      }
    }
    if (central_product(g, b.coeffs, b.coeffs) != b.coeffs) throw InternalError(label + ": idempotent check failed");
  }

  const auto sigma = sigma_K0(p, n);
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    std::vector<Cyclotomic> image;
    for (const auto& c : blocks_[bi].coeffs) image.push_back(sigma.apply(c));
    int found = -1;
    for (std::size_t bj = 0; bj < blocks_.size(); ++bj)
      if (blocks_[bj].coeffs == image) found = static_cast<int>(bj);
    if (found < 0) throw InternalError(g.name() + ": Galois image of block " + std::to_string(bi) + " is not a block");
    for (int c = 0; c < r; ++c)
      if (blocks_[found].residue[c] != f.frobenius(blocks_[bi].residue[c], 1))
        throw InternalError(g.name() + ": residue of the Galois image is not the Frobenius image");
    sigma_.push_back(found);
  }
}

int BlockSystem::galois_image(int b, std::int64_t n) const {
  if (n < 0) {
    const int len = orbit_length(b);
    n = nt::mod(n, len);
  }
  for (std::int64_t i = 0; i < n; ++i) b = sigma_[b];
  return b;
}

int BlockSystem::orbit_length(int b) const {
  int len = 1;
  for (int c = sigma_[b]; c != b; c = sigma_[c]) ++len;
  return len;
}

std::vector<std::vector<int>> BlockSystem::galois_orbits() const {
  std::vector<bool> seen(blocks_.size(), false);
  std::vector<std::vector<int>> out;
  for (int b = 0; b < size(); ++b) {
    if (seen[b]) continue;
    std::vector<int> orbit;
    for (int c = b; !seen[c]; c = sigma_[c]) {
      seen[c] = true;
      orbit.push_back(c);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

FqVector central_product(const Group& x, const GaloisField& f, const FqVector& a, const FqVector& b) {
  const int r = x.num_classes();
  FqVector out(r, f.zero());
  for (int i = 0; i < r; ++i) {
    if (f.is_zero(a[i])) continue;
    for (int j = 0; j < r; ++j) {
      if (f.is_zero(b[j])) continue;
      const auto ab = f.mul(a[i], b[j]);
      for (int k = 0; k < r; ++k) {
        auto m = x.class_mult(i, j, k);
        if (m != 0) out[k] = f.add(out[k], f.scale(ab, m));
      }
    }
  }
  return out;
}

std::vector<Cyclotomic> central_product(const Group& x, const std::vector<Cyclotomic>& a,
                                        const std::vector<Cyclotomic>& b) {
  const int r = x.num_classes();
  const std::int64_t n = a.empty() ? 1 : a[0].conductor();
  std::vector<Cyclotomic> out(r, Cyclotomic(n));
  for (int i = 0; i < r; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < r; ++j) {
      if (b[j].is_zero()) continue;
      const Cyclotomic ab = a[i] * b[j];
      for (int k = 0; k < r; ++k) {
        auto m = x.class_mult(i, j, k);
        if (m == 0) continue;
        Cyclotomic t = ab;
        t *= mpq_class(static_cast<long>(m));
        out[k] += t;
      }
    }
  }
  return out;
}

bool is_zero(const GaloisField& f, const FqVector& a) {
  return std::all_of(a.begin(), a.end(), [&](const auto& x) { return f.is_zero(x); });
}

std::string check_block_rationality(const Session& s, const GroupData& x, int b) {
  const auto& g = *x.group;
  const auto& lf = s.local_field();
  const GaloisField& f = s.field();
  const std::int64_t p = s.p();
  const std::int64_t n = s.conductor();
  const std::int64_t npp = nt::p_prime_part(n, p);
  const auto sigma = sigma_K0(p, n);
  const auto& blk = x.blocks.block(b);
  for (int c = 0; c < g.num_classes(); ++c) {
    const auto& a = blk.coeffs[c];
    const std::string at = "class " + std::to_string(c) + ": ";
    if (!g.classes()[c].is_p_regular(p) && !a.is_zero()) return at + "nonzero on a p-singular class";
    for (std::int64_t t = 1; t < n; ++t)
      if (std::gcd(t, n) == 1 && nt::mod(t, npp) == 1 % npp && a.galois(t) != a)
        return at + "coefficient moved by zeta -> zeta^" + std::to_string(t);
    if (!lf.valuation_at_least(a, 0)) return at + "negative valuation";
    if (lf.reduce(sigma.apply(a)) != f.frobenius(lf.reduce(a), 1))
      return at + "residue of the Galois image is not the p-th power";
  }
  return {};
}

bool is_stable(const GroupData& x, const FqVector& a, const Subgroup& r) {
  const auto& parent = *r.parent();
  for (int g : r.elements())
    for (int c = 0; c < x.group->num_classes(); ++c) {
      const int rep = x.to_parent[x.group->classes()[c].representative];
      const int img = x.from_parent[parent.conj(g, rep)];
      if (img < 0) throw std::invalid_argument("stability test: subgroup does not normalize the group");
      if (a[x.group->class_of(img)] != a[c]) return false;
    }
  return true;
}

FqVector truncate(const GroupData& from, const GroupData& to, const FqVector& a) {
  FqVector out;
  for (const auto& c : to.group->classes()) {
    const int idx = from.from_parent[to.to_parent[c.representative]];
    if (idx < 0) throw std::invalid_argument("truncate: target is not a subgroup of the source");
    out.push_back(a[from.group->class_of(idx)]);
  }
  return out;
}

FqVector brauer_hom(const Session& s, const GroupData& from, const FqVector& a, const Subgroup& q) {
  if (!is_stable(from, a, q)) throw std::invalid_argument("Brauer homomorphism applied to a non-fixed element");
  return truncate(from, s.centralizer(q), a);
}

FqVector conjugate_central(const Group& parent, const GroupData& from, const GroupData& to, int g,
                           const FqVector& a) {
  const int g_inv = parent.inv(g);
  FqVector out;
  for (const auto& c : to.group->classes()) {
    const int y = to.to_parent[c.representative];
    const int idx = from.from_parent[parent.conj(g_inv, y)];
    if (idx < 0) throw std::invalid_argument("conjugate_central: groups are not conjugate by g");
    out.push_back(a[from.group->class_of(idx)]);
  }
  return out;
}

std::vector<Subgroup> defect_groups(const Session& s, int b) {
  const auto& whole = s.whole();
  const auto& bbar = whole.blocks.block(b).residue;
  std::vector<Subgroup> nonzero;
  for (const auto& q : s.p_subgroups())
    if (!is_zero(s.field(), brauer_hom(s, whole, bbar, q))) nonzero.push_back(q);
  std::vector<Subgroup> maximal;
  for (const auto& q : nonzero) {
    bool dominated = false;
    for (const auto& r : nonzero)
      if (r.order() > q.order() && conjugate_into(q, r)) dominated = true;
    if (!dominated) maximal.push_back(q);
  }
  std::size_t expected = 1;
  for (int i = 0; i < whole.blocks.block(b).defect; ++i) expected *= static_cast<std::size_t>(s.p());
  if (maximal.size() != 1)
    throw InternalError(s.group()->name() + ": block " + std::to_string(b) +
                        " has non-conjugate maximal subgroups with nonzero Brauer image");
  if (maximal[0].order() != expected)
    throw InternalError(s.group()->name() + ": defect group order of block " + std::to_string(b) +
                        " disagrees with the defect");
  return maximal;
}

int SubpairFamily::index_of(const Subgroup& q) const {
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), q);
  if (it == subgroups.end() || !(*it == q)) throw std::invalid_argument("subgroup is not contained in P");
  return static_cast<int>(it - subgroups.begin());
}

std::vector<int> normal_subpairs(const Session& s, const Subgroup& q, const Subgroup& r, int g_block) {
  const auto& cq = s.centralizer(q);
  const auto& cr = s.centralizer(r);
  const auto& gbar = cr.blocks.block(g_block).residue;
  std::vector<int> out;
  for (int f = 0; f < cq.blocks.size(); ++f) {
    const auto& fbar = cq.blocks.block(f).residue;
    if (!is_stable(cq, fbar, r)) continue;
    const auto br = truncate(cq, cr, fbar);
    if (central_product(*cr.group, s.field(), br, gbar) == gbar) out.push_back(f);
  }
  return out;
}

std::vector<int> maximal_pair_candidates(const Session& s, int b, const Subgroup& p) {
  const auto& cp = s.centralizer(p);
  const auto br = brauer_hom(s, s.whole(), s.whole().blocks.block(b).residue, p);
  std::vector<int> out;
  for (int f = 0; f < cp.blocks.size(); ++f) {
    const auto& fbar = cp.blocks.block(f).residue;
    if (central_product(*cp.group, s.field(), br, fbar) == fbar) out.push_back(f);
  }
  return out;
}

namespace {

Subgroup normalizer_in(const Subgroup& p, const Subgroup& q) {
  std::vector<int> els;
  for (int x : p.elements())
    if (conjugate(q, x) == q) els.push_back(x);
  return Subgroup(p.parent(), els);
}

bool normalizes(const Subgroup& r, const Subgroup& q) {
  return std::all_of(r.elements().begin(), r.elements().end(), [&](int x) { return conjugate(q, x) == q; });
}

}  // namespace

SubpairFamily subpair_family(const Session& s, int b, std::optional<Subgroup> p, std::optional<int> e_p) {
  SubpairFamily fam{b, p ? *p : defect_groups(s, b).front(), {}, {}};
  const auto candidates = maximal_pair_candidates(s, b, fam.p);
  if (candidates.empty())
    throw InternalError(s.group()->name() + ": no maximal Brauer pair for block " + std::to_string(b));
  int ep = candidates.front();
  if (e_p) {
    if (std::find(candidates.begin(), candidates.end(), *e_p) == candidates.end())
      throw std::invalid_argument("requested e_P does not form a Brauer pair with the block");
    ep = *e_p;
  }
  fam.subgroups = all_subgroups(fam.p);
  fam.e.assign(fam.subgroups.size(), -1);
  fam.e[fam.index_of(fam.p)] = ep;
  for (std::size_t i = fam.subgroups.size(); i-- > 0;) {
    const Subgroup& q = fam.subgroups[i];
    if (q == fam.p) continue;
    const Subgroup r = normalizer_in(fam.p, q);
    const int er = fam.e[fam.index_of(r)];
    if (er < 0) throw std::logic_error("subpair family: normalizer processed out of order");
    const auto f = normal_subpairs(s, q, r, er);
    if (f.size() != 1)
      throw InternalError(s.group()->name() + ": " + std::to_string(f.size()) + " candidate blocks for the subpair at " +
                          describe(*s.group(), q.elements()));
    fam.e[i] = f.front();
  }
  if (fam.e.front() != b && s.centralizer(fam.subgroups.front()).group == s.group())
    throw InternalError(s.group()->name() + ": subpair at the trivial subgroup is not the block itself");
  return fam;
}

std::string check_alternative_chains(const Session& s, const SubpairFamily& f) {
  for (std::size_t i = 0; i < f.subgroups.size(); ++i) {
    const Subgroup& q = f.subgroups[i];
    for (std::size_t j = 0; j < f.subgroups.size(); ++j) {
      const Subgroup& r = f.subgroups[j];
      if (r.order() <= q.order() || !r.contains(q) || !normalizes(r, q)) continue;
      const auto cand = normal_subpairs(s, q, r, f.e[j]);
      if (cand != std::vector<int>{f.e[i]}) {
        std::ostringstream os;
        os << "subpair at " << describe(*s.group(), q.elements()) << " via " << describe(*s.group(), r.elements())
           << " gives " << cand.size() << " candidate(s) instead of block " << f.e[i];
        return os.str();
      }
    }
  }
  return {};
}

FusionData fusion_category(const Session& s, const SubpairFamily& f, std::size_t size_cap) {
  FusionData out;
  if (f.p.order() > size_cap) {
    out.skipped = true;
    return out;
  }
  const auto& g = *s.group();
  for (std::size_t qi = 0; qi < f.subgroups.size(); ++qi) {
    const Subgroup& q = f.subgroups[qi];
    const auto& cq = s.centralizer(q);
    const auto& eq = cq.blocks.block(f.e[qi]).residue;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      const Subgroup xq = conjugate(q, x);
      if (!f.p.contains(xq)) continue;
      const int xi = f.index_of(xq);
      const auto& cxq = s.centralizer(xq);
      if (conjugate_central(g, cq, cxq, x, eq) != cxq.blocks.block(f.e[xi]).residue) continue;
      std::vector<int> images;
      for (int y : q.elements()) images.push_back(g.conj(x, y));
      for (std::size_t ri = 0; ri < f.subgroups.size(); ++ri)
        if (f.subgroups[ri].contains(xq)) out.hom[{static_cast<int>(qi), static_cast<int>(ri)}].insert(images);
    }
  }
  return out;
}

FusionComparison fusion_equal(const FusionData& a, const FusionData& b) {
  FusionComparison out;
  if (a.skipped || b.skipped) return out;
  auto report = [&](const std::pair<int, int>& key, const std::vector<int>& m, const char* side) {
    std::ostringstream os;
    os << "morphism from subgroup #" << key.first << " to subgroup #" << key.second << " with images [";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << "] only in the " << side << " category";
    out.equal = false;
    out.witness = os.str();
  };
  for (const auto& [key, set] : a.hom) {
    auto it = b.hom.find(key);
    for (const auto& m : set)
      if (it == b.hom.end() || !it->second.count(m)) {
        report(key, m, "first");
        return out;
      }
  }
  for (const auto& [key, set] : b.hom) {
    auto it = a.hom.find(key);
    for (const auto& m : set)
      if (it == a.hom.end() || !it->second.count(m)) {
        report(key, m, "second");
        return out;
      }
  }
  return out;
}

}  // namespace blocktool
