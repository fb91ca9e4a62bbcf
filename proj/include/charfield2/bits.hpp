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

// Fixed-length bit vectors over F_2 and dense bit matrices.
//
// Bits<Tag> carries a phantom tag so that coordinates in different bases
// (polynomial basis, normal basis, extended basis) do not mix silently.
// Conversion between tags is explicit through retag<>().

#ifndef CHARFIELD2_BITS_HPP_
#define CHARFIELD2_BITS_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace charfield2 {

struct RawTag {};
struct PolyBasisTag {};
struct NormalBasisTag {};

template <class Tag>
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bits from_words(std::size_t size, std::span<const std::uint64_t> src) {
    Bits out(size);
    for (std::size_t i = 0; i < out.words_.size() && i < src.size(); ++i) {
      out.words_[i] = src[i];
    }
    out.clear_tail();
    return out;
  }

  static Bits unit(std::size_t size, std::size_t index) {
    Bits out(size);
    out.set(index, true);
    return out;
  }

  static Bits ones(std::size_t size) {
    Bits out(size);
    for (auto& w : out.words_) w = ~std::uint64_t{0};
    out.clear_tail();
    return out;
  }

  std::size_t size() const { return size_; }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  Bits& operator^=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool parity() const {
    std::uint64_t acc = 0;
    for (auto w : words_) acc ^= w;
    return std::popcount(acc) & 1;
  }
  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  // Dot product over F_2.
  bool dot(const Bits& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1;
  }

  // out[i] = in[i - k mod size]: the right-cyclic shift of coordinates.
  Bits rotated_right(std::size_t k) const {
    Bits out(size_);
    if (size_ == 0) return out;
    k %= size_;
    for (std::size_t i = 0; i < size_; ++i) {
      if (get(i)) out.set((i + k) % size_, true);
    }
    return out;
  }

  // Numeric order of the bit pattern read as a little-endian integer.
  bool less_numeric(const Bits& o) const {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    }
    return false;
  }

  template <class Other>
  Bits<Other> retag() const {
    return Bits<Other>::from_words(size_, words_);
  }

  // '0'/'1' characters, index 0 first.
  std::string to_bitstring() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const Bits& a, const Bits& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  void clear_tail() {
    if (size_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

using BitVec = Bits<RawTag>;
// Coordinates of an element of F_{2^n} in the polynomial basis of a FieldCtx.
using Gf2nElem = Bits<PolyBasisTag>;
// Coordinates with respect to a normal basis; index i multiplies alpha^{2^i}.
using NormalCoords = Bits<NormalBasisTag>;

// Dense matrix over F_2 stored as rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BitMatrix identity(std::size_t n);
  // Column j of the result is cols[j].
  static BitMatrix from_columns(std::span<const BitVec> cols, std::size_t height);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  BitVec& row(std::size_t i) { return rows_[i]; }

  std::size_t popcount() const;
  BitMatrix transposed() const;
  BitMatrix operator*(const BitMatrix& o) const;

  // M * v for a column vector v of length cols().
  template <class Tag>
  BitVec apply(const Bits<Tag>& v) const {
    BitVec out(rows());
    const BitVec raw = v.template retag<RawTag>();
    for (std::size_t i = 0; i < rows(); ++i) {
      if (rows_[i].dot(raw)) out.set(i, true);
    }
    return out;
  }

  // v * M for a row vector v of length rows().
  template <class Tag>
  Bits<Tag> left_apply(const Bits<Tag>& v) const {
    BitVec acc(cols_);
    for (std::size_t i = 0; i < rows(); ++i) {
      if (v.get(i)) acc ^= rows_[i];
    }
    return acc.template retag<Tag>();
  }

  std::size_t rank() const;
  std::optional<BitMatrix> inverse() const;
  // Some x with M x = b, or nullopt when b is outside the column space.
  std::optional<BitVec> solve(const BitVec& b) const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

}  // namespace charfield2

#endif  // CHARFIELD2_BITS_HPP_
