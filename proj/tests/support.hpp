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

#include <string>

#include "blocktool/group.hpp"
#include "blocktool/io.hpp"

namespace testsupport {

inline blocktool::GroupPtr corpus(const std::string& name) {
  return blocktool::load_group(std::string(BLOCKTOOL_CORPUS_DIR) + "/" + name + ".json");
}

inline const char* const kCorpus[] = {"C6", "S3", "S4", "A4", "A5", "D8",
                                      "D10", "Q8", "SL2_3", "C7xC3", "C5xC4"};

inline blocktool::Permutation perm(int degree, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i + 1;
  for (const auto& c : cycles) {
    std::vector<int> v(c);
    for (std::size_t i = 0; i < v.size(); ++i) img[v[i] - 1] = v[(i + 1) % v.size()];
  }
  return blocktool::Permutation::from_one_based(img);
}

}  // namespace testsupport
