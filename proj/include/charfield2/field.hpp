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

// Polynomial-basis arithmetic in F_2[x]/(f). This layer is the reference
// that every other representation in the library is checked against.

#ifndef CHARFIELD2_FIELD_HPP_
#define CHARFIELD2_FIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "charfield2/bitpoly.hpp"
#include "charfield2/bits.hpp"
#include "charfield2/factor.hpp"

namespace charfield2 {

using BigInt = boost::multiprecision::cpp_int;

// F_{2^n} = F_2[x]/(modulus). Immutable once built.
class FieldCtx {
 public:
  // Throws kDomain if the modulus is constant or reducible.
  explicit FieldCtx(BitPoly modulus);

  std::size_t n() const { return n_; }
  const BitPoly& modulus() const { return modulus_; }
  // Factorisation of 2^n - 1; available for n <= 64.
  const std::optional<std::vector<PrimePower>>& order_factors() const { return factors_; }
  BigInt group_order() const;

  Gf2nElem zero() const { return Gf2nElem(n_); }
  Gf2nElem one() const { return Gf2nElem::unit(n_, 0); }
  // Reduces p modulo the field polynomial.
  Gf2nElem element(const BitPoly& p) const;
  // Reduction of x^k for any k.
  Gf2nElem x_power(std::size_t k) const;

  // Throws kInvalidElement when the length is not n.
  void check(const Gf2nElem& a) const;

  Gf2nElem mul(const Gf2nElem& a, const Gf2nElem& b) const;
  Gf2nElem square(const Gf2nElem& a) const { return mul(a, a); }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  Gf2nElem reduce(std::span<const std::uint64_t> wide) const;

  std::size_t n_ = 0;
  BitPoly modulus_;
  // reduction_[k] = x^{n+k} mod f for 0 <= k < n - 1.
  std::vector<Gf2nElem> reduction_;
  std::optional<std::vector<PrimePower>> factors_;
};

Gf2nElem poly_mul_mod(const Gf2nElem& a, const Gf2nElem& b, const FieldCtx& ctx);
Gf2nElem frobenius(const Gf2nElem& a, const FieldCtx& ctx);
// Absolute trace to F_2.
bool trace(const Gf2nElem& a, const FieldCtx& ctx);

Gf2nElem pow(const Gf2nElem& a, std::uint64_t e, const FieldCtx& ctx);
Gf2nElem pow(const Gf2nElem& a, const BigInt& e, const FieldCtx& ctx);
// Throws kDomain for 0.
Gf2nElem inverse(const Gf2nElem& a, const FieldCtx& ctx);

// Order in the multiplicative group; needs order_factors (n <= 64).
std::uint64_t multiplicative_order(const Gf2nElem& a, const FieldCtx& ctx);
bool is_primitive(const Gf2nElem& a, const FieldCtx& ctx);

// a^{(2^n-1)/3} == 1. Throws kUnsupportedDegree if 3 does not divide
// 2^n - 1 and kDomain for a = 0.
bool is_cube(const Gf2nElem& a, const FieldCtx& ctx);

// A solution of y^2 + y = c, or nullopt when trace(c) = 1. Of the two
// solutions {y, y+1} the one with coefficient 0 at x^0 is returned.
std::optional<Gf2nElem> solve_artin_schreier(const Gf2nElem& c, const FieldCtx& ctx);

// p(a) for p in F_2[x].
Gf2nElem evaluate(const BitPoly& p, const Gf2nElem& a, const FieldCtx& ctx);

// All roots in the field of the polynomial sum_i coeffs[i] X^i, ascending
// in numeric bit order. Equal-degree splitting with trace maps.
std::vector<Gf2nElem> find_roots(std::span<const Gf2nElem> coeffs, const FieldCtx& ctx);

// All cube roots of a in the field, ascending.
std::vector<Gf2nElem> cube_roots(const Gf2nElem& a, const FieldCtx& ctx);

}  // namespace charfield2

#endif  // CHARFIELD2_FIELD_HPP_
