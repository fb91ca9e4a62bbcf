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

// Existence of a second extension step on top of an Artin-Schreier or
// Kummer extended basis.

#ifndef CHARFIELD2_TOWER_HPP_
#define CHARFIELD2_TOWER_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "charfield2/extended_basis.hpp"
#include "charfield2/field.hpp"
#include "charfield2/normal_basis.hpp"

namespace charfield2 {

// X^2 + X + b over F_{2^{2n}} is irreducible iff n is odd. Throws kDomain
// for n = 0.
bool biquadratic_possible(std::size_t n);
// The same question answered by the absolute trace of b's image.
bool biquadratic_direct(const ExtBasisCtx& as2);

// b is not a cube in F_{2^{2n}}. Throws kContextMismatch unless as2.
bool kummer_over_as2_possible(const ExtBasisCtx& as2);

// Always false: b has trace 0 in F_{2^{3n}}. Throws kContextMismatch
// unless k3.
bool as2_over_k3_possible(const ExtBasisCtx& k3);
// An element y of F_{2^{3n}} (oracle representation) with y^2 + y = b.
std::optional<Gf2nElem> as2_over_k3_witness(const ExtBasisCtx& k3);

// 3-adic valuation of (2^{3n} - 1)/(2^n - 1), exact.
unsigned bicubic_v3(std::size_t n);
// v3 == 1. Throws kUnsupportedDegree when 3 does not divide 2^n - 1.
bool bicubic_possible(std::size_t n);
// X^3 - b irreducible over F_{2^{3n}}, i.e. b is not a cube there. Throws
// kDomain when the base generator is not primitive.
bool bicubic_direct(const ExtBasisCtx& k3);

struct TowerReport {
  std::size_t base_n = 0;
  bool as2_over_as2 = false;
  bool k3_over_as2 = false;
  bool as2_over_k3 = false;
  // Unset when n is odd.
  std::optional<bool> k3_over_k3;
  std::optional<unsigned> v3;
  // Oracle checks, unset where the construction they need is missing.
  std::optional<bool> as2_over_as2_direct;
  std::optional<std::string> as2_over_k3_witness;
  std::optional<bool> k3_over_k3_direct;

  std::string to_json() const;
};

TowerReport tower_report(const NormalBasisCtx& nb);

}  // namespace charfield2

#endif  // CHARFIELD2_TOWER_HPP_
