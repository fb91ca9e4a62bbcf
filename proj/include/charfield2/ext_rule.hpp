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

// Reduction rules for the generators of an extended basis, and polynomials
// in those generators with coefficients in normal coordinates.

#ifndef CHARFIELD2_EXT_RULE_HPP_
#define CHARFIELD2_EXT_RULE_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "charfield2/bits.hpp"
#include "charfield2/normal_basis.hpp"

namespace charfield2 {

// Exponent of each generator, in generator order.
using MonomialExps = std::vector<unsigned>;

// Sparse polynomial in the generators over F_{2^n} (normal coordinates).
// Zero coefficients are never stored.
class SymPoly {
 public:
  SymPoly() = default;
  SymPoly(std::size_t vars, std::size_t n) : vars_(vars), n_(n) {}

  static SymPoly constant(std::size_t vars, const NormalCoords& c);
  static SymPoly variable(std::size_t vars, std::size_t index, const NormalBasisCtx& nb);

  std::size_t vars() const { return vars_; }
  std::size_t n() const { return n_; }
  const std::map<MonomialExps, NormalCoords>& terms() const { return terms_; }
  // Zero vector when absent.
  NormalCoords coefficient(const MonomialExps& e) const;
  void add_term(const MonomialExps& e, const NormalCoords& c);
  bool is_zero() const { return terms_.empty(); }

  friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  std::size_t vars_ = 0;
  std::size_t n_ = 0;
  std::map<MonomialExps, NormalCoords> terms_;
};

SymPoly sym_mul(const SymPoly& a, const SymPoly& b, const NormalBasisCtx& nb);

// generator^degree = rhs.
struct ExtRule {
  std::size_t generator = 0;
  unsigned degree = 0;
  SymPoly rhs;

  // "b1^2 = b1 + [coords] b0 + ..." with the given generator names.
  std::string to_string(const std::vector<std::string>& names) const;
};

// Rewrites every monomial until each generator exponent is below its
// rule's degree. Rules must be listed so that each right-hand side only
// involves earlier-reduced monomials.
SymPoly reduce(const SymPoly& p, const std::vector<ExtRule>& rules, const NormalBasisCtx& nb);

}  // namespace charfield2

#endif  // CHARFIELD2_EXT_RULE_HPP_
