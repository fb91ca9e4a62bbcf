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

#include "charfield2/bits.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace charfield2 {
namespace {

TEST(Bits, SetGetFlip) {
  BitVec v(70);
  v.set(0, true);
  v.set(69, true);
  EXPECT_TRUE(v.get(0));
  EXPECT_TRUE(v.get(69));
  EXPECT_EQ(v.popcount(), 2U);
  v.flip(69);
  EXPECT_FALSE(v.get(69));
  EXPECT_EQ(BitVec::ones(70).popcount(), 70U);
}

TEST(Bits, RotateRight) {
  const BitVec e0 = BitVec::unit(5, 0);
  EXPECT_EQ(e0.rotated_right(1), BitVec::unit(5, 1));
  EXPECT_EQ(BitVec::unit(5, 4).rotated_right(1), e0);
  EXPECT_EQ(BitVec::ones(5).rotated_right(3), BitVec::ones(5));
  EXPECT_EQ(e0.rotated_right(7), BitVec::unit(5, 2));
}

TEST(Bits, BitstringAndOrder) {
  BitVec v(4);
  v.set(1, true);
  EXPECT_EQ(v.to_bitstring(), "0100");
  EXPECT_TRUE(BitVec::unit(4, 1).less_numeric(BitVec::unit(4, 2)));
  EXPECT_FALSE(BitVec::unit(4, 2).less_numeric(BitVec::unit(4, 2)));
}

TEST(BitMatrix, InverseRoundTrip) {
  std::mt19937_64 rng(0);
  for (std::size_t n : {1U, 3U, 8U, 65U}) {
    int found = 0;
    while (found < 5) {
      BitMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) m.row(i) = testing::random_bits<RawTag>(n, rng);
      const auto inv = m.inverse();
      if (!inv) {
        EXPECT_LT(m.rank(), n);
        continue;
      }
      EXPECT_EQ(m.rank(), n);
      EXPECT_EQ(m * *inv, BitMatrix::identity(n));
      EXPECT_EQ(*inv * m, BitMatrix::identity(n));
      ++found;
    }
  }
}

TEST(BitMatrix, SolveAndApply) {
  std::mt19937_64 rng(1);
  const std::size_t n = 20;
  for (int trial = 0; trial < 20; ++trial) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.row(i) = testing::random_bits<RawTag>(n, rng);
    const BitVec x = testing::random_bits<RawTag>(n, rng);
    const BitVec b = m.apply(x);
    const auto sol = m.solve(b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol), b);
  }
}

TEST(BitMatrix, LeftApplyIsTransposeApply) {
  std::mt19937_64 rng(2);
  BitMatrix m(7, 9);
  for (std::size_t i = 0; i < 7; ++i) m.row(i) = testing::random_bits<RawTag>(9, rng);
  const BitVec v = testing::random_bits<RawTag>(7, rng);
  EXPECT_EQ(m.left_apply(v), m.transposed().apply(v));
}

TEST(BitMatrix, SolveReportsInconsistency) {
  BitMatrix m(2, 2);
  m.set(0, 0, true);
  m.set(1, 0, true);
  BitVec b(2);
  b.set(0, true);
  EXPECT_FALSE(m.solve(b).has_value());
}

}  // namespace
}  // namespace charfield2
