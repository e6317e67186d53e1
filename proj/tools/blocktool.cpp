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

#include <iostream>

#include "CLI11.hpp"
#include "blocktool/chartab.hpp"
#include "blocktool/errors.hpp"
#include "blocktool/run.hpp"

namespace {

void add_common(CLI::App* sub, blocktool::RunConfig& cfg, std::string& cache_dir, std::string& out) {
  sub->add_option("inputs", cfg.inputs, "group JSON files or directories")->required();
  sub->add_option("-p,--prime", cfg.primes, "prime(s)");
  sub->add_option("--precision", cfg.session.precision, "initial p-adic precision (0: default)");
  sub->add_option("--sylow-cap", cfg.session.sylow_cap, "largest Sylow subgroup handled");
  sub->add_option("--fusion-cap", cfg.session.fusion_cap, "largest defect group for fusion comparison");
  sub->add_option("--cache-dir", cache_dir, "character table cache directory");
  sub->add_option("--modulus-seed", cfg.session.modulus_seed, "selects the prime above p");
  sub->add_option("--out", out, "write the JSON report here instead of stdout");
  sub->add_option("--jobs", cfg.jobs, "worker threads for verify-all");
}

}  // namespace

int main(int argc, char** argv) {
  blocktool::RunConfig cfg;
  std::string cache_dir, out, inject = "none", replay;
  CLI::App app{"p-blocks, isotypies and F_p-forms of small permutation groups"};
  app.set_version_flag("--version", blocktool::kToolVersion);
  app.require_subcommand(1);

  auto* classes = app.add_subcommand("classes", "conjugacy classes");
  auto* chartable = app.add_subcommand("chartable", "ordinary character table");
  auto* blocks = app.add_subcommand("blocks", "p-blocks with defects and Galois orbits");
  auto* isotypy = app.add_subcommand("isotypy", "isotypy certificate for b and sigma^n(b)");
  auto* fpform = app.add_subcommand("fpform", "F_p-form of the center of a block");
  auto* verify_all = app.add_subcommand("verify-all", "every check for every block and prime");
  for (auto* sub : {classes, chartable, blocks, isotypy, fpform, verify_all}) add_common(sub, cfg, cache_dir, out);
  for (auto* sub : {isotypy, fpform}) sub->add_option("--block", cfg.block, "block index")->required();
  isotypy->add_option("--power", cfg.power, "Galois power n");
  for (auto* sub : {isotypy, verify_all}) {
    sub->add_flag("--strict", cfg.strict, "also require divisibility by |C(y)|");
    sub->add_option("--inject", inject, "fault injection: perturb-idempotent | flip-sign | alter-mu");
  }
  isotypy->add_flag("--all-pairs", cfg.all_pairs, "one certificate per eligible maximal Brauer pair");
  isotypy->add_option("--replay", replay, "recompute a stored certificate and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (!replay.empty()) cfg.replay = replay;

  try {
    cfg.fault.kind = blocktool::fault_from_name(inject);
    cfg.session.cache_dir = cache_dir.empty() ? blocktool::default_cache_dir() : std::filesystem::path(cache_dir);
  } catch (const blocktool::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  }

  const auto result = blocktool::run(cfg);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  std::cerr << result.summary;
  const auto text = blocktool::dump(result.report);
  if (out.empty()) {
    std::cout << text;
  } else {
    try {
      blocktool::write_file_atomic(out, text);
    } catch (const std::exception& e) {
      std::cerr << "cannot write " << out << ": " << e.what() << "\n";
      return 3;
    }
  }
  return result.exit_code;
}
