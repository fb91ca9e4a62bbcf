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

// Normal bases (alpha, alpha^2, ..., alpha^{2^{n-1}}) of F_{2^n}/F_2 and their
// multiplication tables alpha * alpha^{2^i} = sum_j t_{i,j} alpha^{2^j}.

#ifndef CHARFIELD2_NORMAL_BASIS_HPP_
#define CHARFIELD2_NORMAL_BASIS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "charfield2/bits.hpp"
#include "charfield2/field.hpp"
#include "charfield2/table_set.hpp"

namespace charfield2 {

// Rank test on the conjugates of a. Zero is never normal.
bool is_normal_element(const Gf2nElem& a, const FieldCtx& ctx);

class NormalBasisCtx {
 public:
  // Throws kNotNormal when alpha is not a normal element, kDegreeCap when
  // n exceeds max_base_degree().
  NormalBasisCtx(FieldCtx field, Gf2nElem alpha);

  const FieldCtx& field() const { return field_; }
  std::size_t n() const { return field_.n(); }
  const Gf2nElem& alpha() const { return alpha_; }
  // Row i: normal coordinates of alpha * alpha^{2^i}.
  const BitMatrix& table() const { return table_; }
  std::size_t weight() const { return weight_; }
  std::size_t density() const { return n() * weight_; }
  // Column i of to_poly is alpha^{2^i} in the polynomial basis.
  const BitMatrix& to_poly_matrix() const { return to_poly_; }
  const BitMatrix& to_normal_matrix() const { return to_normal_; }
  // T_k with t^k_{i,j} the coordinate at alpha^{2^k} of alpha^{2^i} alpha^{2^j}.
  const TableSet& tables() const { return tables_; }

  NormalCoords to_normal(const Gf2nElem& a) const;
  Gf2nElem to_poly(const NormalCoords& v) const;

  NormalCoords zero() const { return NormalCoords(n()); }
  NormalCoords one() const { return one_; }
  NormalCoords alpha_coords() const { return NormalCoords::unit(n(), 0); }

  // alpha * v, one table-vector product: the row vector v times T.
  NormalCoords mul_alpha(const NormalCoords& v) const;
  // Table-based product z_k = x T_k y^t.
  NormalCoords mul(const NormalCoords& x, const NormalCoords& y) const;

  // Throws kInvalidElement on a length mismatch.
  void check(const NormalCoords& v) const;

  friend bool operator==(const NormalBasisCtx& a, const NormalBasisCtx& b) {
    return a.field_ == b.field_ && a.alpha_ == b.alpha_;
  }

 private:
  FieldCtx field_;
  Gf2nElem alpha_;
  BitMatrix table_;
  std::size_t weight_ = 0;
  BitMatrix to_poly_;
  BitMatrix to_normal_;
  TableSet tables_;
  NormalCoords one_;
};

NormalBasisCtx build_normal_basis(const Gf2nElem& a, const FieldCtx& ctx);

// Squaring in normal coordinates: out[i] = v[i-1 mod n].
NormalCoords frobenius_shift(const NormalCoords& v);

// S_l = sum_{i,j} phi(sum_r t_{j-i,r-i} t_{r,l}) for every column l, with
// indices mod n and phi the lift F_2 -> {0,1}.
std::vector<std::size_t> cross_product_sums(const NormalBasisCtx& nb);
// sum_l S_l.
std::size_t cross_product_sum(const NormalBasisCtx& nb);

struct NormalElementHit {
  Gf2nElem element;
  std::size_t weight;
};

// Candidates 1, 2, 3, ... in ascending numeric order; keeps the first `limit`
// normal (and, if requested, primitive) elements. The candidate range is
// split across `workers` threads; results do not depend on the count.
std::vector<NormalElementHit> search_normal_elements(const FieldCtx& ctx, bool require_primitive,
                                                     std::size_t limit, unsigned workers = 1);

// Exhaustive minimum-weight normal element, ties broken by numeric order.
// Throws kUnsupportedDegree for n > 24.
std::optional<NormalElementHit> best_normal_element(const FieldCtx& ctx, bool require_primitive,
                                                    unsigned workers = 1);

// Least sparse irreducible modulus of degree n and its numerically least
// normal (optionally primitive) element.
NormalBasisCtx first_normal_basis(std::size_t n, bool require_primitive = false);

}  // namespace charfield2

#endif  // CHARFIELD2_NORMAL_BASIS_HPP_
