// Copyright 2026 The charfield2 Authors.
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

#include "charfield2/fixtures.hpp"

#include <fstream>

#include "charfield2/error.hpp"
#include "json.hpp"

namespace charfield2 {
namespace {

using nlohmann::json;

std::optional<std::size_t> optional_count(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null() || j.at(key).is_string()) return std::nullopt;
  return j.at(key).get<std::size_t>();
}

}  // namespace

const NormalBasisFixture* Fixtures::find_basis(std::size_t n) const {
  for (const auto& f : normal_bases) {
    if (f.n == n) return &f;
  }
  return nullptr;
}

const DensityFixture* Fixtures::find_density(std::size_t m) const {
  for (const auto& f : densities) {
    if (f.m == m) return &f;
  }
  return nullptr;
}

std::string default_fixtures_path() { return std::string(CHARFIELD2_DATA_DIR) + "/fixtures.json"; }

Fixtures load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMissingFixture, "cannot open fixture file " + path);
  Fixtures out;
  try {
    const json doc = json::parse(in);
    for (const auto& j : doc.at("normal_bases")) {
      NormalBasisFixture f;
      f.table = j.at("table").get<int>();
      f.n = j.at("n").get<std::size_t>();
      f.modulus = BitPoly::parse(j.at("modulus").get<std::string>());
      f.alpha = BitPoly::parse(j.at("alpha").get<std::string>());
      f.cross_sum = j.at("cross_sum").get<std::size_t>();
      if (j.contains("printed_modulus")) f.printed_modulus = j.at("printed_modulus").get<std::string>();
      if (j.contains("printed_alpha")) f.printed_alpha = j.at("printed_alpha").get<std::string>();
      f.comment = j.value("comment", "");
      out.normal_bases.push_back(std::move(f));
    }
    for (const auto& j : doc.at("densities")) {
      DensityFixture f;
      f.m = j.at("m").get<std::size_t>();
      f.d_n = optional_count(j, "d_N");
      f.d_a = optional_count(j, "d_A");
      f.d_k = optional_count(j, "d_K");
      f.d_k_absent = j.contains("d_K") && j.at("d_K").is_string() && j.at("d_K").get<std::string>() == "-";
      out.densities.push_back(f);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, "malformed fixture file " + path + ": " + e.what());
  }
  return out;
}

Fixtures load_fixtures() { return load_fixtures(default_fixtures_path()); }

}  // namespace charfield2
