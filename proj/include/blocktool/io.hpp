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

#include "blocktool/cyclotomic.hpp"
#include "blocktool/finite_field.hpp"
#include "blocktool/group.hpp"
#include "json.hpp"

namespace blocktool {

using Json = nlohmann::ordered_json;

/// Parses {"name", "degree", "generators"} with 1-based image arrays.
/// Throws InputError on malformed input.
GroupPtr group_from_json(const Json& j, const GroupLimits& limits = {});
GroupPtr load_group(const std::string& path, const GroupLimits& limits = {});

/// {"N": N, "coeffs": [["num", "den"], ...]}
Json cyclotomic_to_json(const Cyclotomic& a);
Cyclotomic cyclotomic_from_json(const Json& j);

Json field_element_to_json(const GaloisField::Elem& a);

std::string read_file(const std::string& path);
/// Writes through a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& contents);
std::string dump(const Json& j);

}  // namespace blocktool
