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

#include "blocktool/run.hpp"

#include <algorithm>
#include <map>
#include <atomic>
#include <filesystem>
#include <sstream>
#include <thread>

#include "blocktool/descent.hpp"
#include "blocktool/digest.hpp"
#include "blocktool/errors.hpp"
#include "blocktool/number_theory.hpp"

namespace blocktool {

namespace {

int code_of(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return 0;
    case Verdict::kFail:
      return 1;
    case Verdict::kInconclusive:
      return 2;
  }
  return 1;
}

// input error > failure > inconclusive > pass
int combine(int a, int b) {
  for (int c : {3, 1, 2})
    if (a == c || b == c) return c;
  return 0;
}

std::string cycles(const Permutation& g) {
  std::ostringstream os;
  std::vector<bool> seen(g.degree(), false);
  for (int i = 0; i < g.degree(); ++i) {
    if (seen[i] || g[i] == i) continue;
    os << "(";
    for (int j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      os << (j == i ? "" : ",") << j + 1;
    }
    os << ")";
  }
  const auto s = os.str();
  return s.empty() ? "()" : s;
}

std::string digest(const Json& j) { return sha256_hex(dump(j)); }

Json group_header(const Group& g) {
  return Json{{"name", g.name()}, {"hash", g.hash()}, {"order", g.order()}, {"degree", g.degree()}};
}

struct Counter {
  int pass = 0;
  int total = 0;
  void add(bool ok) {
    ++total;
    if (ok) ++pass;
  }
  Json json() const { return Json{{"pass", pass}, {"total", total}}; }
};

struct Loaded {
  std::string path;
  GroupPtr group;
};

std::vector<Loaded> load_inputs(const RunConfig& config) {
  std::vector<Loaded> out;
  for (const auto& path : expand_inputs(config.inputs)) out.push_back({path, load_group(path)});
  if (out.empty()) throw InputError("no group files given");
  return out;
}

std::vector<std::int64_t> primes_for(const RunConfig& config, const Group& g, std::vector<std::string>& warnings) {
  const auto order = static_cast<std::int64_t>(g.order());
  if (config.primes.empty()) return nt::prime_divisors(order);
  for (auto p : config.primes) {
    if (!nt::is_prime(p)) throw InputError("not a prime: " + std::to_string(p));
    if (order % p != 0)
      warnings.push_back(std::to_string(p) + " does not divide |" + g.name() + "| = " + std::to_string(order) +
                         "; every block has defect 0");
  }
  return config.primes;
}

Json classes_report(const Group& g, const std::vector<std::int64_t>& primes) {
  Json cls = Json::array();
  for (int c = 0; c < g.num_classes(); ++c) {
    const auto& k = g.classes()[c];
    Json j{{"index", c},
           {"representative", cycles(g.element(k.representative))},
           {"size", k.size},
           {"order", k.rep_order},
           {"centralizerOrder", g.centralizer_order(c)},
           {"inverse", g.inverse_class(c)}};
    if (!primes.empty()) {
      Json reg;
      for (auto p : primes) reg[std::to_string(p)] = k.is_p_regular(p);
      j["pRegular"] = reg;
    }
    cls.push_back(j);
  }
  return Json{{"group", group_header(g)}, {"classes", cls}};
}

Json chartable_report(const GroupPtr& g, const RunConfig& config) {
  const auto t = character_table(g, config.session.cache_dir);
  Json rows = Json::array();
  for (int r = 0; r < t.size(); ++r) {
    Json vals = Json::array();
    for (const auto& v : t.row(r)) vals.push_back(v.to_string());
    rows.push_back(Json{{"degree", t.degree(r)}, {"values", vals}});
  }
  return Json{{"group", group_header(*g)},
              {"conductor", t.conductor()},
              {"display", Json{{"variable", "z = exp(2 pi i / " + std::to_string(t.conductor()) + ")"}, {"rows", rows}}},
              {"table", table_to_json(t)}};
}

Json residue_field_json(const Session& s) {
  const auto& rf = s.residue_field();
  return Json{{"p", rf.p}, {"q", rf.q().get_str()}, {"m", rf.m}, {"modulus", rf.h}, {"factorIndex", rf.factor_index}};
}

Json blocks_report(const Session& s) {
  const auto& w = s.whole();
  Json blocks = Json::array();
  for (int b = 0; b < w.blocks.size(); ++b) {
    const auto& blk = w.blocks.block(b);
    Json degrees = Json::array(), coeffs = Json::array(), residue = Json::array();
    for (int row : blk.irr) degrees.push_back(w.table.degree(row));
    for (const auto& c : blk.coeffs) coeffs.push_back(cyclotomic_to_json(c));
    for (const auto& c : blk.residue) residue.push_back(field_element_to_json(c));
    blocks.push_back(Json{{"index", b},
                          {"irr", blk.irr},
                          {"degrees", degrees},
                          {"defect", blk.defect},
                          {"galoisImage", w.blocks.galois_image(b, 1)},
                          {"orbitLength", w.blocks.orbit_length(b)},
                          {"coefficientDigest", digest(coeffs)},
                          {"residue", residue}});
  }
  int nontrivial = 0;
  for (const auto& o : w.blocks.galois_orbits())
    if (o.size() > 1) ++nontrivial;
  return Json{{"group", group_header(*s.group())},
              {"prime", s.p()},
              {"conductor", s.conductor()},
              {"residueField", residue_field_json(s)},
              {"blocks", blocks},
              {"orbits", w.blocks.galois_orbits()},
              {"nontrivialOrbits", nontrivial}};
}

struct EntryResult {
  Json report;
  int code = 0;
  std::string summary;
};

EntryResult verify_entry(const GroupPtr& g, std::int64_t p, const RunConfig& config) {
  EntryResult out;
  Json entry{{"group", group_header(*g)}, {"prime", p}};
  try {
    Session s(g, p, config.session);
    const auto& w = s.whole();
    entry["conductor"] = s.conductor();
    entry["residueField"] = residue_field_json(s);
    Counter lemma, isotypy, fpform, bf, dual, orth;
    Json blocks = Json::array();
    for (int b = 0; b < w.blocks.size(); ++b) {
      const auto& blk = w.blocks.block(b);
      Json bj{{"index", b}, {"irr", blk.irr}, {"defect", blk.defect}, {"orbitLength", w.blocks.orbit_length(b)}};
      const auto why = check_block_rationality(s, w, b);
      lemma.add(why.empty());
      if (!why.empty()) out.code = combine(out.code, 1);
      bj["rationality"] = why.empty() ? Json("pass") : Json(why);

      Json certs = Json::array();
      for (std::int64_t n = 0; n <= w.blocks.orbit_length(b); ++n)
        for (bool strict : {false, true}) {
          const auto cert = verify_isotypy(s, b, n, {strict, config.fault, std::nullopt});
          const Json cj = certificate_to_json(cert);
          isotypy.add(cert.verdict == Verdict::kPass);
          out.code = combine(out.code, code_of(cert.verdict));
          Json rec{{"power", n},
                   {"strict", strict},
                   {"target", cert.target},
                   {"defectGroupOrder", cert.defect_group.order()},
                   {"cyclicSubgroups", cert.cyclic.size()},
                   {"fusionSkipped", cert.fusion_skipped},
                   {"verdict", verdict_name(cert.verdict)},
                   {"digest", digest(cj)}};
          if (cert.verdict != Verdict::kPass) rec["witness"] = cert.witness;
          certs.push_back(rec);
        }
      bj["isotypy"] = certs;

      const auto d = descend(s, b);
      const Json dj = descent_to_json(s, d);
      fpform.add(d.verdict == Verdict::kPass);
      bf.add(d.brauer_feit.holds);
      out.code = combine(out.code, code_of(d.verdict));
      Json fj{{"target", d.target}, {"verdict", verdict_name(d.verdict)}, {"digest", digest(dj)}};
      if (d.form) {
        fj["dimension"] = d.form->basis.size();
        fj["extensionLevel"] = d.form->j;
      }
      if (d.verdict != Verdict::kPass) fj["witness"] = d.witness;
      bj["fpform"] = fj;
      bj["brauerFeit"] = brauer_feit_to_json(d.brauer_feit);
      blocks.push_back(bj);
    }

    for (const GroupData* x : s.loaded()) {
      try {
        x->table.verify_orthogonality();
        orth.add(true);
      } catch (const InternalError&) {
        orth.add(false);
        out.code = combine(out.code, 1);
      }
      for (int r = 0; r < x->table.size(); ++r) {
        try {
          x->table.sigma_character(r, p);
          dual.add(true);
        } catch (const InternalError&) {
          dual.add(false);
          out.code = combine(out.code, 1);
        }
      }
    }

    int nontrivial = 0;
    for (const auto& o : w.blocks.galois_orbits())
      if (o.size() > 1) ++nontrivial;
    entry["blockCount"] = w.blocks.size();
    entry["nontrivialOrbits"] = nontrivial;
    entry["blocks"] = blocks;
    entry["checks"] = Json{{"orthogonality", orth.json()}, {"rationality", lemma.json()},
                           {"dualPath", dual.json()},      {"isotypy", isotypy.json()},
                           {"fpform", fpform.json()},      {"brauerFeit", bf.json()}};
    std::ostringstream os;
    os << g->name() << " p=" << p << ": " << w.blocks.size() << " blocks, " << nontrivial
       << " nontrivial orbit(s); isotypy " << isotypy.pass << "/" << isotypy.total << ", fpform " << fpform.pass << "/"
       << fpform.total << ", Brauer-Feit " << bf.pass << "/" << bf.total << ", rationality " << lemma.pass << "/"
       << lemma.total << ", dual path " << dual.pass << "/" << dual.total << ", tables " << orth.pass << "/"
       << orth.total;
    out.summary = os.str();
  } catch (const InputError& e) {
    out.code = 3;
    entry["error"] = e.what();
    out.summary = g->name() + " p=" + std::to_string(p) + ": input error: " + e.what();
  } catch (const InconclusiveError& e) {
    out.code = combine(out.code, 2);
    entry["error"] = e.what();
    out.summary = g->name() + " p=" + std::to_string(p) + ": inconclusive: " + e.what();
  } catch (const std::exception& e) {
    out.code = combine(out.code, 1);
    entry["error"] = e.what();
    out.summary = g->name() + " p=" + std::to_string(p) + ": failure: " + e.what();
  }
  entry["verdict"] = out.code == 0 ? "pass" : out.code == 1 ? "fail" : out.code == 2 ? "inconclusive" : "error";
  out.report = std::move(entry);
  return out;
}

Json verify_all(const RunConfig& config, RunResult& result) {
  struct Job {
    GroupPtr group;
    std::int64_t p;
  };
  std::vector<Job> jobs;
  for (const auto& in : load_inputs(config))
    for (auto p : primes_for(config, *in.group, result.warnings)) jobs.push_back({in.group, p});
  std::vector<EntryResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = verify_entry(jobs[i].group, jobs[i].p, config);
  };
  const int n_threads = std::max(1, std::min<int>(config.jobs, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json entries = Json::array();
  std::map<std::string, Counter> totals;
  std::ostringstream summary;
  for (auto& r : results) {
    result.exit_code = combine(result.exit_code, r.code);
    if (r.report.contains("checks"))
      for (auto it = r.report["checks"].begin(); it != r.report["checks"].end(); ++it) {
        totals[it.key()].pass += it.value()["pass"].get<int>();
        totals[it.key()].total += it.value()["total"].get<int>();
      }
    summary << r.summary << "\n";
    entries.push_back(std::move(r.report));
  }
  Json tj;
  for (const auto& [k, c] : totals) tj[k] = c.json();
  summary << "total:";
  for (const auto& [k, c] : totals) summary << " " << k << " " << c.pass << "/" << c.total;
  summary << "\n";
  result.summary = summary.str();
  return Json{{"entries", entries}, {"totals", tj}};
}

Json single_session_report(const RunConfig& config, RunResult& result) {
  const auto inputs = load_inputs(config);
  if (inputs.size() != 1) throw InputError(config.command + " takes exactly one group file");
  const auto& g = inputs.front().group;
  if (config.command == "classes") {
    for (auto p : config.primes)
      if (!nt::is_prime(p)) throw InputError("not a prime: " + std::to_string(p));
    return classes_report(*g, config.primes);
  }
  if (config.command == "chartable") return chartable_report(g, config);
  if (config.primes.size() != 1) throw InputError(config.command + " needs exactly one prime (-p)");
  const auto p = primes_for(config, *g, result.warnings).front();
  Session s(g, p, config.session);
  if (config.command == "blocks") {
    auto j = blocks_report(s);
    std::ostringstream os;
    os << g->name() << " p=" << p << ": " << s.whole().blocks.size() << " blocks";
    for (int b = 0; b < s.whole().blocks.size(); ++b) os << (b ? ", " : " (defects ") << s.whole().blocks.block(b).defect;
    os << ")\n";
    result.summary = os.str();
    return j;
  }
  if (!config.block) throw InputError(config.command + " needs --block");
  const int b = *config.block;
  if (b < 0 || b >= s.whole().blocks.size()) throw InputError("block index " + std::to_string(b) + " out of range");
  if (config.command == "isotypy") {
    if (config.replay) {
      Json stored;
      try {
        stored = Json::parse(read_file(*config.replay));
      } catch (const Json::exception& e) {
        throw InputError(std::string("certificate is not valid JSON: ") + e.what());
      }
      if (stored.is_object() && stored.value("schema", "") == kReportSchema && stored.contains("result"))
        stored = stored["result"];
      const auto r = replay_certificate(s, stored);
      result.exit_code = r.identical ? code_of(r.verdict) : 1;
      result.summary = r.identical ? std::string("replay reproduces the certificate; verdict ") + verdict_name(r.verdict) + "\n"
                                   : "replay differs at " + r.difference + "\n";
      return Json{{"replay", Json{{"identical", r.identical},
                                  {"difference", r.difference},
                                  {"verdict", verdict_name(r.verdict)}}}};
    }
    if (config.power < 0) throw InputError("--power must be nonnegative");
    std::vector<std::optional<int>> choices{std::nullopt};
    if (config.all_pairs) {
      choices.clear();
      for (int e : maximal_pair_candidates(s, b, defect_groups(s, b).front())) choices.push_back(e);
    }
    Json certs = Json::array();
    std::ostringstream os;
    for (const auto& e : choices) {
      const auto cert = verify_isotypy(s, b, config.power, {config.strict, config.fault, e});
      result.exit_code = combine(result.exit_code, code_of(cert.verdict));
      certs.push_back(certificate_to_json(cert));
      std::size_t squares = 0;
      for (const auto& r : cert.cyclic) squares += r.squares.size();
      os << g->name() << " p=" << p << " block " << b << " -> " << cert.target << " (n=" << config.power
         << ", e_P=" << cert.e_p << "): |P|=" << cert.defect_group.order() << ", " << cert.cyclic.size()
         << " cyclic subgroups, " << squares << " squares, fusion "
         << (cert.fusion_skipped ? "skipped" : cert.fusion.equal ? "equal" : "different") << ": "
         << verdict_name(cert.verdict);
      if (!cert.witness.empty()) os << "\n  witness: " << cert.witness;
      os << "\n";
    }
    result.summary = os.str();
    return config.all_pairs ? Json{{"certificates", certs}} : certs.front();
  }
  if (config.command == "fpform") {
    const auto d = descend(s, b);
    result.exit_code = code_of(d.verdict);
    std::ostringstream os;
    os << g->name() << " p=" << p << " block " << b << ": center dimension "
       << (d.center ? std::to_string(d.center->dimension) : "?") << ", F_p-form at level "
       << (d.form ? std::to_string(d.form->j) : "-") << ", |Irr| = " << d.brauer_feit.characters
       << " <= m = " << d.brauer_feit.m.get_str() << ": " << verdict_name(d.verdict) << "\n";
    if (!d.witness.empty()) os << "  witness: " << d.witness << "\n";
    result.summary = os.str();
    return descent_to_json(s, d);
  }
  throw InputError("unknown subcommand '" + config.command + "'");
}

}  // namespace

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  namespace fs = std::filesystem;
  std::vector<std::string> out;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (fs::is_directory(in, ec)) {
      std::vector<std::string> files;
      for (const auto& e : fs::directory_iterator(in))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else if (fs::exists(in, ec)) {
      out.push_back(in);
    } else {
      throw InputError("no such file: " + in);
    }
  }
  return out;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  Json report;
  report["schema"] = kReportSchema;
  report["tool"] = Json{{"name", "blocktool"}, {"version", kToolVersion}};
  report["command"] = config.command;
  report["options"] = Json{{"primes", config.primes},
                           {"strict", config.strict},
                           {"precision", config.session.precision},
                           {"modulusSeed", config.session.modulus_seed},
                           {"sylowCap", config.session.sylow_cap},
                           {"fusionCap", config.session.fusion_cap}};
  if (config.fault.kind != FaultInjection::Kind::kNone)
    report["options"]["fault"] = fault_name(config.fault.kind);
  try {
    if (config.jobs < 1) throw InputError("--jobs must be positive");
    report["result"] = config.command == "verify-all" ? verify_all(config, result) : single_session_report(config, result);
  } catch (const InputError& e) {
    result.exit_code = 3;
    report["error"] = e.what();
    result.summary = std::string("input error: ") + e.what() + "\n";
  } catch (const InconclusiveError& e) {
    result.exit_code = 2;
    report["error"] = e.what();
    result.summary = std::string("inconclusive: ") + e.what() + "\n";
  } catch (const Error& e) {
    result.exit_code = 1;
    report["error"] = e.what();
    result.summary = std::string("failure: ") + e.what() + "\n";
  }
  report["warnings"] = result.warnings;
  report["exitCode"] = result.exit_code;
  result.report = std::move(report);
  return result;
}

}  // namespace blocktool
