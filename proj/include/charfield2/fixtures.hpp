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

// Reference data for the reproduction commands: normal bases with their
// cross-product sums and best known densities of degree-m extensions.

#ifndef CHARFIELD2_FIXTURES_HPP_
#define CHARFIELD2_FIXTURES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "charfield2/bitpoly.hpp"

namespace charfield2 {

struct NormalBasisFixture {
  int table = 0;
  std::size_t n = 0;
  BitPoly modulus;
  BitPoly alpha;
  std::size_t cross_sum = 0;
  // Set when the stored modulus or element corrects a misprint.
  std::optional<std::string> printed_modulus;
  std::optional<std::string> printed_alpha;
  std::string comment;
};

struct DensityFixture {
  std::size_t m = 0;
  std::optional<std::size_t> d_n;
  std::optional<std::size_t> d_a;
  std::optional<std::size_t> d_k;
  // d_K listed as "-": the base admits no Kummer extension.
  bool d_k_absent = false;
};

struct Fixtures {
  std::vector<NormalBasisFixture> normal_bases;
  std::vector<DensityFixture> densities;

  // nullptr when n is not covered.
  const NormalBasisFixture* find_basis(std::size_t n) const;
  const DensityFixture* find_density(std::size_t m) const;
};

// Compiled-in location of data/fixtures.json.
std::string default_fixtures_path();

// Throws kMissingFixture if the file cannot be opened and kParse on
// malformed content.
Fixtures load_fixtures(const std::string& path);
Fixtures load_fixtures();

}  // namespace charfield2

#endif  // CHARFIELD2_FIXTURES_HPP_
