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
#include <vector>

#include "blocktool/io.hpp"
#include "blocktool/isotypy.hpp"
#include "blocktool/session.hpp"

namespace blocktool {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "blocktool.report/1";

struct RunConfig {
  std::string command;  ///< classes | chartable | blocks | isotypy | fpform | verify-all
  std::vector<std::string> inputs;  ///< group files or directories of them
  std::vector<std::int64_t> primes;  ///< empty: every prime divisor of |G|
  std::optional<int> block;
  std::int64_t power = 1;
  bool strict = false;
  bool all_pairs = false;
  FaultInjection fault;
  std::optional<std::string> replay;  ///< certificate to re-check
  SessionOptions session;
  int jobs = 1;
};

struct RunResult {
  int exit_code = 0;
  Json report;
  std::string summary;
  std::vector<std::string> warnings;
};

/// Group files named by the inputs; directories contribute their *.json
/// files in name order. Throws InputError for missing paths.
std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs);

/// Runs one subcommand. Exit codes: 0 pass, 1 fail, 2 inconclusive, 3 input
/// error (InputError is caught and reported).
RunResult run(const RunConfig& config);

}  // namespace blocktool
