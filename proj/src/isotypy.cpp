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

#include "blocktool/isotypy.hpp"

#include <algorithm>
#include <sstream>

#include "blocktool/errors.hpp"
#include "blocktool/number_theory.hpp"
#include "blocktool/permutation.hpp"

namespace blocktool {

namespace {

std::int64_t conductor_of(const ClassFunction& f) { return f.empty() ? 1 : f[0].conductor(); }

Json subgroup_to_json(const Subgroup& s) { return Json{{"order", s.order()}, {"elements", s.elements()}}; }

Json valuation_to_json(const Valuation& v) {
  if (v.infinite()) return "inf";
  if (v.inconclusive()) return "inconclusive";
  return v.value;
}

std::string first_difference(const Json& a, const Json& b, const std::string& path) {
  if (a.is_number() && b.is_number()) return a == b ? std::string{} : path;
  if (a.type() != b.type()) return path;
  if (a.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key())) return path + "/" + it.key();
      auto d = first_difference(it.value(), b.at(it.key()), path + "/" + it.key());
      if (!d.empty()) return d;
    }
    for (auto it = b.begin(); it != b.end(); ++it)
      if (!a.contains(it.key())) return path + "/" + it.key();
    return {};
  }
  if (a.is_array()) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      auto d = first_difference(a[i], b[i], path + "/" + std::to_string(i));
      if (!d.empty()) return d;
    }
    return a.size() == b.size() ? std::string{} : path;
  }
  return a == b ? std::string{} : path;
}

}  // namespace

ClassFunction apply_IH(const Group& h, const ClassFunction& phi, std::int64_t p, std::int64_t n) {
  ClassFunction out;
  for (int c = 0; c < h.num_classes(); ++c) {
    const std::int64_t o = h.classes()[c].rep_order;
    const std::int64_t k = twisted_power_exponent(o, p, nt::pow_mod(p, n, o));
    out.push_back(phi[h.power_class(c, k)]);
  }
  return out;
}

ClassFunction apply_IH_regular(const Group& h, const ClassFunction& phi, std::int64_t p, std::int64_t n) {
  ClassFunction out;
  for (int c = 0; c < h.num_classes(); ++c) {
    const auto& cls = h.classes()[c];
    if (!cls.is_p_regular(p)) {
      out.emplace_back(conductor_of(phi));
      continue;
    }
    out.push_back(phi[h.power_class(c, nt::pow_mod(p, n, cls.rep_order))]);
  }
  return out;
}

Isometry build_isometry(const GroupData& x, std::int64_t p, int b, std::int64_t n) {
  Isometry iso;
  iso.source = b;
  iso.target = x.blocks.galois_image(b, n);
  iso.rows = x.blocks.block(b).irr;
  for (int row : iso.rows) {
    int image = row;
    for (std::int64_t i = 0; i < n; ++i) image = x.table.sigma_character(image, p);
    if (x.blocks.block_of_row(image) != iso.target)
      throw InternalError(x.group->name() + ": Galois image of character " + std::to_string(row) +
                          " lies outside the conjugate block");
    iso.images.push_back(image);
    iso.signs.push_back(1);
  }
  return iso;
}

MuFunction mu_function(const GroupData& x, const Isometry& iso) {
  const int r = x.group->num_classes();
  const std::int64_t n = x.table.conductor();
  MuFunction mu(r, std::vector<Cyclotomic>(r, Cyclotomic(n)));
  for (std::size_t i = 0; i < iso.rows.size(); ++i) {
    for (int a = 0; a < r; ++a) {
      Cyclotomic chi = x.table.value(iso.rows[i], a);
      if (iso.signs[i] < 0) chi = -chi;
      for (int c = 0; c < r; ++c) mu[a][c] += chi * x.table.value(iso.images[i], c);
    }
  }
  return mu;
}

PerfectIsometryReport verify_perfect_isometry(const GroupData& x, const MuFunction& mu, const LocalField& lf,
                                              bool strict) {
  const auto& g = *x.group;
  const std::int64_t p = lf.p();
  const std::int64_t e = lf.ramification();
  PerfectIsometryReport rep;
  rep.strict = strict;
  for (int a = 0; a < g.num_classes(); ++a) {
    for (int c = 0; c < g.num_classes(); ++c) {
      PairRecord pr;
      pr.x = a;
      pr.y = c;
      pr.mu = mu[a][c];
      pr.required = e * nt::vp(static_cast<std::int64_t>(g.centralizer_order(a)), p);
      pr.required_strict = e * nt::vp(static_cast<std::int64_t>(g.centralizer_order(c)), p);
      pr.mixed = g.classes()[a].is_p_regular(p) != g.classes()[c].is_p_regular(p);
      const std::int64_t need = strict ? std::max(pr.required, pr.required_strict) : pr.required;
      pr.valuation = lf.valuation(pr.mu);
      std::string failure;
      if (pr.mixed && !pr.mu.is_zero()) {
        failure = "nonzero on a pair with exactly one p-singular class";
      } else if (pr.valuation.finite()) {
        if (pr.valuation.value < need) failure = "valuation below the required bound";
      } else if (pr.valuation.inconclusive()) {
        try {
          if (!lf.valuation_at_least(pr.mu, need)) failure = "valuation below the required bound";
        } catch (const InconclusiveError&) {
          pr.inconclusive = true;
          rep.inconclusive = true;
        }
      }
      if (!failure.empty()) {
        pr.ok = false;
        if (rep.pass) {
          std::ostringstream os;
          os << g.name() << ": mu(class " << a << ", class " << c << ") = " << pr.mu.to_string() << ": " << failure
             << " (required " << need << ")";
          rep.witness = os.str();
        }
        rep.pass = false;
      }
      rep.pairs.push_back(std::move(pr));
    }
  }
  return rep;
}

std::vector<Cyclotomic> unit_element(const GroupData& cx, std::int64_t conductor) {
  std::vector<Cyclotomic> e(cx.group->num_classes(), Cyclotomic(conductor));
  e[0] = Cyclotomic(conductor, mpq_class(1));
  return e;
}

ClassFunction gen_decomp(const Group& g, const ClassFunction& chi, int x, const GroupData& cx,
                         const std::vector<Cyclotomic>& e, std::int64_t p) {
  if (nt::p_part(g.element_order(x), p) != g.element_order(x))
    throw std::invalid_argument("generalized decomposition map at an element that is not a p-element");
  const auto& c = *cx.group;
  ClassFunction out(c.num_classes(), Cyclotomic(conductor_of(chi)));
  for (int y = 0; y < c.num_classes(); ++y) {
    if (!c.classes()[y].is_p_regular(p)) continue;
    const int yg = cx.to_parent[c.classes()[y].representative];
    for (int h = 0; h < static_cast<int>(c.order()); ++h) {
      const auto& coeff = e[c.class_of(h)];
      if (coeff.is_zero()) continue;
      const int xhy = g.mul(g.mul(x, cx.to_parent[h]), yg);
      out[y] += coeff * chi[g.class_of(xhy)];
    }
  }
  return out;
}

const char* fault_name(FaultInjection::Kind k) {
  switch (k) {
    case FaultInjection::Kind::kNone:
      return "none";
    case FaultInjection::Kind::kPerturbIdempotent:
      return "perturb-idempotent";
    case FaultInjection::Kind::kFlipSign:
      return "flip-sign";
    case FaultInjection::Kind::kAlterMu:
      return "alter-mu";
  }
  return "none";
}

FaultInjection::Kind fault_from_name(const std::string& s) {
  for (auto k : {FaultInjection::Kind::kNone, FaultInjection::Kind::kPerturbIdempotent,
                 FaultInjection::Kind::kFlipSign, FaultInjection::Kind::kAlterMu})
    if (s == fault_name(k)) return k;
  throw InputError("unknown fault kind '" + s + "'");
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "fail";
}

IsotypyCertificate verify_isotypy(const Session& s, int b, std::int64_t n, const IsotypyOptions& options) {
  const auto& g = *s.group();
  const auto& whole = s.whole();
  const std::int64_t p = s.p();
  if (b < 0 || b >= whole.blocks.size()) throw InputError("block index " + std::to_string(b) + " out of range");
  if (n < 0) throw InputError("negative Galois power");
  const auto fault = options.fault.kind;

  const auto fam = subpair_family(s, b, std::nullopt, options.e_p);
  IsotypyCertificate cert(fam.p);
  cert.group = g.name();
  cert.group_hash = g.hash();
  cert.p = p;
  cert.block = b;
  cert.power = n;
  cert.target = whole.blocks.galois_image(b, n);
  cert.strict = options.strict;
  cert.fault = fault_name(fault);
  bool inconclusive = false;
  auto fail = [&](const std::string& w) {
    if (cert.verdict != Verdict::kFail) cert.witness = w;
    cert.verdict = Verdict::kFail;
  };

  cert.e_p = fam.e_of(fam.p);
  cert.e_p_requested = options.e_p.has_value();
  cert.f_p = s.centralizer(fam.p).blocks.galois_image(cert.e_p, n);

  std::optional<SubpairFamily> image_family;
  try {
    image_family = subpair_family(s, cert.target, fam.p, cert.f_p);
  } catch (const std::invalid_argument& ex) {
    cert.family_ok = false;
    fail(std::string("conjugate maximal pair is not a Brauer pair of the conjugate block: ") + ex.what());
  } catch (const InternalError& ex) {
    cert.family_ok = false;
    fail(std::string("subpair family of the conjugate block: ") + ex.what());
  }
  if (image_family) {
    for (std::size_t i = 0; i < fam.subgroups.size(); ++i) {
      const int expect = s.centralizer(fam.subgroups[i]).blocks.galois_image(fam.e[i], n);
      if (image_family->e[i] != expect) {
        cert.family_ok = false;
        fail("subpair of the conjugate block at subgroup #" + std::to_string(i) + " is block " +
             std::to_string(image_family->e[i]) + ", Galois image is " + std::to_string(expect));
        break;
      }
    }
    const auto fa = fusion_category(s, fam, s.options().fusion_cap);
    const auto fb = fusion_category(s, *image_family, s.options().fusion_cap);
    cert.fusion_skipped = fa.skipped || fb.skipped;
    cert.fusion = fusion_equal(fa, fb);
    if (!cert.fusion.equal) fail("fusion categories differ: " + cert.fusion.witness);
  }

  auto main_iso = build_isometry(whole, p, b, n);
  if (fault == FaultInjection::Kind::kFlipSign) main_iso.signs[0] = -1;

  const auto cyclic = cyclic_subgroups_with_generators(fam.p);
  for (std::size_t qi = 0; qi < cyclic.size(); ++qi) {
    const auto& cs = cyclic[qi];
    const auto& cq = s.centralizer(cs.subgroup);
    const bool trivial = cs.subgroup.order() == 1;
    CyclicRecord rec{cs.subgroup, cs.generators, fam.e_of(cs.subgroup), 0, {}, {}, {}};
    rec.f_q = cq.blocks.galois_image(rec.e_q, n);
    rec.isometry = trivial ? main_iso : build_isometry(cq, p, rec.e_q, n);
    auto mu = mu_function(cq, rec.isometry);
    if (trivial && fault == FaultInjection::Kind::kAlterMu) mu[0][0] += Cyclotomic(s.conductor(), mpq_class(1));
    rec.perfect = verify_perfect_isometry(cq, mu, s.local_field(), options.strict);
    if (!rec.perfect.pass) fail(rec.perfect.witness);
    inconclusive = inconclusive || rec.perfect.inconclusive;

    auto eq = cq.blocks.block(rec.e_q).coeffs;
    if (qi + 1 == cyclic.size() && fault == FaultInjection::Kind::kPerturbIdempotent)
      eq[0] += Cyclotomic(s.conductor(), mpq_class(1));
    const auto& fq = cq.blocks.block(rec.f_q).coeffs;
    for (int x : cs.generators) {
      for (std::size_t i = 0; i < main_iso.rows.size(); ++i) {
        const int row = main_iso.rows[i];
        const auto lhs = apply_IH_regular(*cq.group, gen_decomp(g, whole.table.row(row), x, cq, eq, p), p, n);
        auto rhs = gen_decomp(g, whole.table.row(main_iso.images[i]), x, cq, fq, p);
        if (main_iso.signs[i] < 0)
          for (auto& v : rhs) v = -v;
        for (int y = 0; y < cq.group->num_classes(); ++y) {
          if (!cq.group->classes()[y].is_p_regular(p)) continue;
          SquareRecord sq{x, row, y, lhs[y], rhs[y], lhs[y] == rhs[y]};
          if (!sq.ok) {
            std::ostringstream os;
            os << g.name() << ": commuting square fails for character " << row << " at x = element " << x
               << ", y = class " << y << " of C_G(x): " << sq.lhs.to_string() << " vs " << sq.rhs.to_string();
            fail(os.str());
          }
          rec.squares.push_back(std::move(sq));
        }
      }
    }
    cert.cyclic.push_back(std::move(rec));
  }
  if (cert.verdict == Verdict::kPass && inconclusive) {
    cert.verdict = Verdict::kInconclusive;
    cert.witness = "valuation undecided at the precision cap";
  }
  return cert;
}

Json certificate_to_json(const IsotypyCertificate& c) {
  Json j;
  j["schema"] = "blocktool.isotypy/1";
  j["group"] = c.group;
  j["groupHash"] = c.group_hash;
  j["prime"] = c.p;
  j["block"] = c.block;
  j["power"] = c.power;
  j["target"] = c.target;
  j["strict"] = c.strict;
  j["fault"] = c.fault;
  j["defectGroup"] = subgroup_to_json(c.defect_group);
  j["eP"] = c.e_p;
  j["ePRequested"] = c.e_p_requested;
  j["fP"] = c.f_p;
  j["familyOk"] = c.family_ok;
  j["fusion"] = Json{{"morphismCondition", "(^gQ, ^g e_Q) <= (R, e_R)"},
                     {"skipped", c.fusion_skipped},
                     {"equal", c.fusion.equal},
                     {"witness", c.fusion.witness}};
  Json cyc = Json::array();
  for (const auto& r : c.cyclic) {
    Json rj;
    rj["subgroup"] = subgroup_to_json(r.q);
    rj["generators"] = r.generators;
    rj["eQ"] = r.e_q;
    rj["fQ"] = r.f_q;
    rj["isometry"] = Json{{"rows", r.isometry.rows}, {"images", r.isometry.images}, {"signs", r.isometry.signs}};
    Json pairs = Json::array();
    for (const auto& pr : r.perfect.pairs)
      pairs.push_back(Json{{"x", pr.x},
                           {"y", pr.y},
                           {"mu", cyclotomic_to_json(pr.mu)},
                           {"valuation", valuation_to_json(pr.valuation)},
                           {"required", pr.required},
                           {"requiredStrict", pr.required_strict},
                           {"mixed", pr.mixed},
                           {"ok", pr.ok}});
    rj["perfectIsometry"] = Json{{"strict", r.perfect.strict},
                                 {"pass", r.perfect.pass},
                                 {"inconclusive", r.perfect.inconclusive},
                                 {"witness", r.perfect.witness},
                                 {"pairs", pairs}};
    Json squares = Json::array();
    for (const auto& sq : r.squares)
      squares.push_back(Json{{"x", sq.x},
                             {"chi", sq.chi},
                             {"y", sq.y},
                             {"lhs", cyclotomic_to_json(sq.lhs)},
                             {"rhs", cyclotomic_to_json(sq.rhs)},
                             {"ok", sq.ok}});
    rj["squares"] = squares;
    cyc.push_back(rj);
  }
  j["cyclic"] = cyc;
  j["verdict"] = verdict_name(c.verdict);
  j["witness"] = c.witness;
  return j;
}

ReplayResult replay_certificate(const Session& s, const Json& certificate) {
  int block = 0;
  std::int64_t power = 0;
  IsotypyOptions opts;
  try {
    if (certificate.at("groupHash").get<std::string>() != s.group()->hash())
      throw InputError("certificate belongs to a different group");
    if (certificate.at("prime").get<std::int64_t>() != s.p()) throw InputError("certificate uses a different prime");
    block = certificate.at("block").get<int>();
    power = certificate.at("power").get<std::int64_t>();
    opts.strict = certificate.at("strict").get<bool>();
    opts.fault.kind = fault_from_name(certificate.at("fault").get<std::string>());
    if (certificate.at("ePRequested").get<bool>()) opts.e_p = certificate.at("eP").get<int>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
  const auto cert = verify_isotypy(s, block, power, opts);
  const Json fresh = certificate_to_json(cert);
  ReplayResult out;
  out.verdict = cert.verdict;
  out.difference = first_difference(certificate, fresh, "$");
  out.identical = out.difference.empty();
  return out;
}

}  // namespace blocktool
