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

#ifndef CHARFIELD2_BITPOLY_HPP_
#define CHARFIELD2_BITPOLY_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charfield2/bits.hpp"

namespace charfield2 {

// Carry-less product of two 64-bit words, returned as (low, high).
std::pair<std::uint64_t, std::uint64_t> clmul64(std::uint64_t a, std::uint64_t b);

// Polynomial over F_2. Bit i is the coefficient of x^i. Limbs are kept
// trimmed so equality of BitPolys is equality of limb vectors.
class BitPoly {
 public:
  BitPoly() = default;
  explicit BitPoly(std::vector<std::uint64_t> limbs) : limbs_(std::move(limbs)) { trim(); }

  static BitPoly monomial(std::size_t k);
  static BitPoly from_exponents(std::initializer_list<std::size_t> exps);
  static BitPoly from_exponents(std::span<const std::size_t> exps);
  template <class Tag>
  static BitPoly from_bits(const Bits<Tag>& b) {
    return BitPoly(std::vector<std::uint64_t>(b.words().begin(), b.words().end()));
  }

  // Parses "1+x+x^4" (also "x^{16}") or little-endian lowercase hex ("13").
  static BitPoly parse(std::string_view text);

  bool is_zero() const { return limbs_.empty(); }
  // nullopt stands for the degree of the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool coeff(std::size_t i) const;
  void set_coeff(std::size_t i, bool v);
  std::size_t term_count() const;
  std::vector<std::size_t> exponents() const;
  std::span<const std::uint64_t> limbs() const { return limbs_; }

  template <class Tag>
  Bits<Tag> to_bits(std::size_t size) const {
    return Bits<Tag>::from_words(size, limbs_);
  }

  BitPoly& operator^=(const BitPoly& o);
  friend BitPoly operator^(BitPoly a, const BitPoly& b) { return a ^= b; }
  friend BitPoly operator+(BitPoly a, const BitPoly& b) { return a ^= b; }
  friend BitPoly operator*(const BitPoly& a, const BitPoly& b);
  BitPoly shifted_left(std::size_t k) const;

  // Schoolbook long division; throws kDomain on a zero divisor.
  std::pair<BitPoly, BitPoly> divmod(const BitPoly& divisor) const;
  BitPoly operator%(const BitPoly& m) const { return divmod(m).second; }
  BitPoly operator/(const BitPoly& m) const { return divmod(m).first; }

  // Lowercase hex of the little-endian byte string; zero is "00".
  std::string to_hex() const;
  // "1+x+x^4"; zero is "0".
  std::string to_string() const;

  bool less_numeric(const BitPoly& o) const;

  friend bool operator==(const BitPoly&, const BitPoly&) = default;

 private:
  void trim();

  std::vector<std::uint64_t> limbs_;
};

BitPoly gcd(BitPoly a, BitPoly b);
BitPoly mul_mod(const BitPoly& a, const BitPoly& b, const BitPoly& m);
// x^{2^k} mod m by k successive squarings.
BitPoly x_pow_2k_mod(std::size_t k, const BitPoly& m);

// Standard criterion: x^{2^n} = x mod f and gcd(x^{2^{n/r}} - x, f) = 1 for
// every prime r dividing n = deg f. Throws kDomain for constants.
bool is_irreducible(const BitPoly& f);

// Least irreducible polynomial of degree n among those with the fewest
// terms, ordered by the numeric value of the bit pattern.
BitPoly least_sparse_irreducible(std::size_t n);

std::vector<std::size_t> prime_divisors(std::size_t n);

}  // namespace charfield2

#endif  // CHARFIELD2_BITPOLY_HPP_
