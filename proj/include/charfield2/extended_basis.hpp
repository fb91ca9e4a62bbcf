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

// Extended bases (alpha^{2^i} * monomial) of F_{2^{nd}}/F_2 over a normal
// basis of F_{2^n}, with closed-form squaring and Karatsuba-style products.
//
// Block order of an element:
//   as2   1, b
//   k3    1, b, b^2
//   asw4  1, b0, b1, b0 b1
//   ka6   1, b, g, g b, g^2, g^2 b

#ifndef CHARFIELD2_EXTENDED_BASIS_HPP_
#define CHARFIELD2_EXTENDED_BASIS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charfield2/ext_rule.hpp"
#include "charfield2/normal_basis.hpp"

namespace charfield2 {

enum class ExtKind { kAs2, kK3, kAsw4, kKa6 };

std::string_view to_string(ExtKind kind);
// Accepts "as2", "k3", "asw4", "ka6".
std::optional<ExtKind> parse_ext_kind(std::string_view s);
std::size_t block_count(ExtKind kind);

struct OpCounter {
  std::size_t base_mults = 0;
  std::size_t base_adds = 0;
  std::size_t table_vector_products = 0;

  OpCounter& operator+=(const OpCounter& o);
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

struct ExtElem {
  std::vector<NormalCoords> blocks;

  // Hex blocks joined by ':'.
  std::string to_string() const;
  static ExtElem parse(std::string_view s, std::size_t n, std::size_t d);
  friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

// Coordinates i + n*b of the flattened vector hold block b, entry i.
BitVec flatten(const ExtElem& x);
ExtElem unflatten(const BitVec& v, std::size_t n, std::size_t d);

class ExtBasisCtx {
 public:
  const NormalBasisCtx& base() const { return base_; }
  ExtKind kind() const { return kind_; }
  std::size_t n() const { return base_.n(); }
  std::size_t d() const { return block_count(kind_); }
  std::size_t m() const { return n() * d(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  // Generator exponents of the monomial multiplying each block.
  const std::vector<MonomialExps>& monomials() const { return monomials_; }
  // Reduction rules in the order they are applied.
  const std::vector<ExtRule>& rules() const { return rules_; }

  // Cached alpha-polynomials in normal coordinates.
  const NormalCoords& alpha() const { return alpha_; }
  const NormalCoords& alpha2() const { return alpha2_; }
  const NormalCoords& alpha3() const { return alpha3_; }
  const NormalCoords& one_plus_alpha() const { return one_plus_alpha_; }

  ExtElem zero() const;
  // The base-field identity in block 0.
  ExtElem one() const;
  // Throws kInvalidElement on a wrong block count or block length.
  void check(const ExtElem& x) const;

  friend bool operator==(const ExtBasisCtx& a, const ExtBasisCtx& b) {
    return a.kind_ == b.kind_ && a.base_ == b.base_;
  }

 private:
  ExtBasisCtx(NormalBasisCtx base, ExtKind kind, std::vector<ExtRule> rules);

  friend ExtBasisCtx build_as2(const NormalBasisCtx& nb);
  friend ExtBasisCtx build_kummer3(const NormalBasisCtx& nb);
  friend ExtBasisCtx build_asw4(const NormalBasisCtx& nb);
  friend ExtBasisCtx build_ka6(const NormalBasisCtx& nb);

  NormalBasisCtx base_;
  ExtKind kind_;
  std::vector<std::string> names_;
  std::vector<MonomialExps> monomials_;
  std::vector<ExtRule> rules_;
  NormalCoords alpha_;
  NormalCoords alpha2_;
  NormalCoords alpha3_;
  NormalCoords one_plus_alpha_;
};

// b^2 = b + alpha. Always exists: a normal alpha has trace 1.
ExtBasisCtx build_as2(const NormalBasisCtx& nb);
// b^3 = alpha. Throws kUnsupportedDegree when 3 does not divide 2^n - 1 and
// kNoKummerExtension when alpha is a cube.
ExtBasisCtx build_kummer3(const NormalBasisCtx& nb);
// b0^2 = b0 + alpha, b1^2 = b1 + (1 + alpha) b0 + alpha^2. Throws
// kNoExtension when the second relation splits over F_{2^{2n}}, which
// happens exactly for odd n.
ExtBasisCtx build_asw4(const NormalBasisCtx& nb);
// b^2 = b + alpha, g^3 = b. Throws kNoKummerExtension when b is a cube in
// F_{2^{2n}}.
ExtBasisCtx build_ka6(const NormalBasisCtx& nb);
ExtBasisCtx build_extension(const NormalBasisCtx& nb, ExtKind kind);

std::pair<ExtElem, OpCounter> square(const ExtElem& x, const ExtBasisCtx& ctx);
std::pair<ExtElem, OpCounter> mul(const ExtElem& x, const ExtElem& y, const ExtBasisCtx& ctx);

// Schoolbook product of the generator polynomials followed by rule
// reduction. Independent of the closed-form formulas.
ExtElem reference_mul(const ExtElem& x, const ExtElem& y, const ExtBasisCtx& ctx);

ExtElem embed_base(const NormalCoords& v, const ExtBasisCtx& ctx);
// Block 0 when every other block is zero.
std::optional<NormalCoords> project_base(const ExtElem& x);

}  // namespace charfield2

#endif  // CHARFIELD2_EXTENDED_BASIS_HPP_
