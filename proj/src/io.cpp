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

#include "blocktool/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "blocktool/errors.hpp"

namespace blocktool {

GroupPtr group_from_json(const Json& j, const GroupLimits& limits) {
  try {
    if (!j.is_object()) throw InputError("group definition must be a JSON object");
    const std::string name = j.value("name", std::string("G"));
    const int degree = j.at("degree").get<int>();
    if (degree < 1) throw InputError("group degree must be positive");
    if (degree > limits.max_degree)
      throw InputError("group degree " + std::to_string(degree) + " exceeds cap " + std::to_string(limits.max_degree));
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators")) {
      auto images = g.get<std::vector<int>>();
      if (static_cast<int>(images.size()) != degree) throw InputError("generator length differs from degree");
      gens.push_back(Permutation::from_one_based(images));
    }
    return std::make_shared<const Group>(name, degree, std::move(gens), limits);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed group definition: ") + e.what());
  }
}

GroupPtr load_group(const std::string& path, const GroupLimits& limits) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw InputError("cannot parse " + path + ": " + e.what());
  }
  return group_from_json(j, limits);
}

Json cyclotomic_to_json(const Cyclotomic& a) {
  Json coeffs = Json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
  return Json{{"N", a.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  try {
    const auto n = j.at("N").get<std::int64_t>();
    if (n < 1) throw InputError("cyclotomic conductor must be positive");
    std::vector<mpq_class> coeffs;
    for (const auto& c : j.at("coeffs")) {
      mpz_class num(c.at(0).get<std::string>()), den(c.at(1).get<std::string>());
      if (sgn(den) == 0) throw InputError("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      coeffs.push_back(q);
    }
    if (static_cast<std::int64_t>(coeffs.size()) != CyclotomicField::get(n)->degree())
      throw InputError("cyclotomic coefficient vector has wrong length");
    return Cyclotomic(n, std::move(coeffs));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed cyclotomic number: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("malformed cyclotomic number: ") + e.what());
  }
}

Json field_element_to_json(const GaloisField::Elem& a) { return Json(a); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(std::hash<std::string>{}(contents) & 0xffffff);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << contents;
    if (!out) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace blocktool
