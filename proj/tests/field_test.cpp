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

#include "charfield2/field.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

#include "charfield2/error.hpp"
#include "test_util.hpp"

namespace charfield2 {
namespace {

using testing::oracle_mul;
using testing::random_elem;

Gf2nElem elem(const FieldCtx& ctx, const char* poly) { return ctx.element(BitPoly::parse(poly)); }

TEST(FieldCtx, RejectsReducibleModulus) {
  EXPECT_THROW(FieldCtx(BitPoly::parse("1+x^2")), Error);
  EXPECT_THROW(FieldCtx(BitPoly::parse("1")), Error);
}

TEST(FieldCtx, OrderFactorsMultiplyOut) {
  const FieldCtx ctx(BitPoly::parse("1+x+x^3+x^4+x^8"));
  ASSERT_TRUE(ctx.order_factors().has_value());
  BigInt prod = 1;
  for (const auto& [p, e] : *ctx.order_factors()) {
    for (unsigned i = 0; i < e; ++i) prod *= p;
  }
  EXPECT_EQ(prod, ctx.group_order());
}

TEST(FieldCtx, SmallProducts) {
  const FieldCtx f4(BitPoly::parse("1+x+x^2"));
  EXPECT_EQ(f4.mul(elem(f4, "x"), elem(f4, "x")), elem(f4, "1+x"));
  const FieldCtx f16(BitPoly::parse("1+x+x^4"));
  EXPECT_EQ(f16.mul(elem(f16, "x^3"), elem(f16, "x^3")), elem(f16, "x^2+x^3"));
  const Gf2nElem b = elem(f16, "1+x^2+x^3");
  EXPECT_EQ(f16.mul(f16.one(), b), b);
}

TEST(FieldCtx, LengthMismatchIsInvalidElement) {
  const FieldCtx ctx(BitPoly::parse("1+x+x^4"));
  try {
    ctx.mul(Gf2nElem(3), ctx.one());
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidElement);
  }
}

TEST(FieldCtx, RingAxiomsAgainstOracle) {
  std::mt19937_64 rng(0);
  for (std::size_t n = 2; n <= 26; ++n) {
    const FieldCtx ctx(least_sparse_irreducible(n));
    for (int t = 0; t < 500; ++t) {
      const Gf2nElem a = random_elem(ctx, rng);
      const Gf2nElem b = random_elem(ctx, rng);
      const Gf2nElem c = random_elem(ctx, rng);
      const Gf2nElem ab = ctx.mul(a, b);
      ASSERT_EQ(ab, oracle_mul(a, b, ctx)) << "n=" << n;
      ASSERT_EQ(ab, ctx.mul(b, a));
      ASSERT_EQ(ctx.mul(ab, c), ctx.mul(a, ctx.mul(b, c)));
      ASSERT_EQ(ctx.mul(a, b ^ c), ab ^ ctx.mul(a, c));
    }
  }
}

TEST(FieldCtx, WideFieldAgainstOracle) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {63U, 64U, 65U, 127U, 156U}) {
    const FieldCtx ctx(least_sparse_irreducible(n));
    for (int t = 0; t < 50; ++t) {
      const Gf2nElem a = random_elem(ctx, rng);
      const Gf2nElem b = random_elem(ctx, rng);
      ASSERT_EQ(ctx.mul(a, b), oracle_mul(a, b, ctx)) << "n=" << n;
    }
  }
}

TEST(Frobenius, FixedPointsAndPeriod) {
  const FieldCtx f4(BitPoly::parse("1+x+x^2"));
  EXPECT_EQ(frobenius(f4.zero(), f4), f4.zero());
  EXPECT_EQ(frobenius(f4.one(), f4), f4.one());
  EXPECT_EQ(frobenius(elem(f4, "x"), f4), elem(f4, "1+x"));
  std::mt19937_64 rng(6);
  for (std::size_t n = 2; n <= 14; ++n) {
    const FieldCtx ctx(least_sparse_irreducible(n));
    for (int t = 0; t < 100; ++t) {
      const Gf2nElem a = random_elem(ctx, rng);
      const Gf2nElem b = random_elem(ctx, rng);
      Gf2nElem x = a;
      for (std::size_t i = 0; i < n; ++i) x = oracle_mul(x, x, ctx);
      EXPECT_EQ(x, a);
      EXPECT_EQ(frobenius(a ^ b, ctx), frobenius(a, ctx) ^ frobenius(b, ctx));
      EXPECT_EQ(frobenius(ctx.mul(a, b), ctx), ctx.mul(frobenius(a, ctx), frobenius(b, ctx)));
    }
  }
}

TEST(Trace, BasicValuesAndInvariance) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 14; ++n) {
    const FieldCtx ctx(least_sparse_irreducible(n));
    EXPECT_FALSE(trace(ctx.zero(), ctx));
    EXPECT_EQ(trace(ctx.one(), ctx), n % 2 == 1);
    for (int t = 0; t < 50; ++t) {
      const Gf2nElem a = random_elem(ctx, rng);
      const Gf2nElem b = random_elem(ctx, rng);
      EXPECT_EQ(trace(ctx.square(a), ctx), trace(a, ctx));
      EXPECT_EQ(trace(a ^ b, ctx), trace(a, ctx) != trace(b, ctx));
    }
  }
}

TEST(Order, KnownValues) {
  const FieldCtx f16(BitPoly::parse("1+x+x^4"));
  EXPECT_EQ(multiplicative_order(f16.one(), f16), 1U);
  EXPECT_EQ(multiplicative_order(elem(f16, "x^3"), f16), 5U);
  EXPECT_EQ(multiplicative_order(elem(f16, "x"), f16), 15U);
  const FieldCtx f4(BitPoly::parse("1+x+x^2"));
  EXPECT_TRUE(is_primitive(elem(f4, "x"), f4));
  EXPECT_THROW(multiplicative_order(f16.zero(), f16), Error);
}

TEST(Order, MatchesRepeatedMultiplication) {
  std::mt19937_64 rng(8);
  for (std::size_t n = 2; n <= 12; ++n) {
    const FieldCtx ctx(least_sparse_irreducible(n));
    for (int t = 0; t < 10; ++t) {
      const Gf2nElem a = random_elem(ctx, rng);
      if (a.none()) continue;
      std::uint64_t k = 1;
      Gf2nElem x = a;
      while (x != ctx.one()) {
        x = oracle_mul(x, a, ctx);
        ++k;
      }
      EXPECT_EQ(multiplicative_order(a, ctx), k);
    }
  }
}

TEST(Cube, KnownValues) {
  const FieldCtx f16(BitPoly::parse("1+x+x^4"));
  EXPECT_TRUE(is_cube(f16.one(), f16));
  EXPECT_TRUE(is_cube(elem(f16, "x^3"), f16));
  const FieldCtx f4(BitPoly::parse("1+x+x^2"));
  EXPECT_FALSE(is_cube(elem(f4, "x"), f4));
  const FieldCtx f8(BitPoly::parse("1+x+x^3"));
  try {
    is_cube(f8.one(), f8);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedDegree);
  }
  EXPECT_THROW(is_cube(f16.zero(), f16), Error);
}

TEST(Cube, AgreesWithEnumeratedCubes) {
  for (std::size_t n : {2U, 4U, 6U, 8U}) {
    const FieldCtx ctx(least_sparse_irreducible(n));
    std::set<std::string> cubes;
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
      const Gf2nElem a = Gf2nElem::from_words(n, std::vector<std::uint64_t>{v});
      cubes.insert(oracle_mul(oracle_mul(a, a, ctx), a, ctx).to_bitstring());
    }
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
      const Gf2nElem a = Gf2nElem::from_words(n, std::vector<std::uint64_t>{v});
      const bool listed = cubes.count(a.to_bitstring()) == 1;
      EXPECT_EQ(is_cube(a, ctx), listed);
      EXPECT_EQ(cube_roots(a, ctx).size(), listed ? 3U : 0U);
      for (const auto& r : cube_roots(a, ctx)) EXPECT_EQ(ctx.mul(ctx.square(r), r), a);
    }
  }
}

TEST(ArtinSchreier, SolvesExactlyWhenTraceZero) {
  const FieldCtx f4(BitPoly::parse("1+x+x^2"));
  const auto z = solve_artin_schreier(f4.zero(), f4);
  ASSERT_TRUE(z.has_value());
  EXPECT_TRUE(*z == f4.zero() || *z == f4.one());
  std::mt19937_64 rng(9);
  for (std::size_t n = 1; n <= 14; ++n) {
    const FieldCtx ctx(least_sparse_irreducible(n));
    for (int t = 0; t < 40; ++t) {
      const Gf2nElem c = random_elem(ctx, rng);
      const auto y = solve_artin_schreier(c, ctx);
      EXPECT_EQ(y.has_value(), !trace(c, ctx));
      if (y) {
        EXPECT_EQ(oracle_mul(*y, *y, ctx) ^ *y, c);
        EXPECT_FALSE(y->get(0));
      }
    }
  }
}

TEST(ArtinSchreier, SolutionSetHasTwoElements) {
  for (std::size_t n : {3U, 4U, 5U}) {
    const FieldCtx ctx(least_sparse_irreducible(n));
    for (std::uint64_t cv = 0; cv < (std::uint64_t{1} << n); ++cv) {
      const Gf2nElem c = Gf2nElem::from_words(n, std::vector<std::uint64_t>{cv});
      int count = 0;
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        const Gf2nElem y = Gf2nElem::from_words(n, std::vector<std::uint64_t>{v});
        if ((ctx.square(y) ^ y) == c) ++count;
      }
      EXPECT_EQ(count, trace(c, ctx) ? 0 : 2);
    }
  }
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(10);
  for (std::size_t n : {2U, 7U, 26U, 64U, 100U}) {
    const FieldCtx ctx(least_sparse_irreducible(n));
    for (int t = 0; t < 30; ++t) {
      const Gf2nElem a = random_elem(ctx, rng);
      if (a.none()) continue;
      EXPECT_EQ(ctx.mul(a, inverse(a, ctx)), ctx.one());
    }
  }
  EXPECT_THROW(inverse(Gf2nElem(4), FieldCtx(BitPoly::parse("1+x+x^4"))), Error);
}

TEST(Pow, BigExponentAgreesWithSmall) {
  std::mt19937_64 rng(11);
  const FieldCtx ctx(least_sparse_irreducible(20));
  for (int t = 0; t < 20; ++t) {
    const Gf2nElem a = random_elem(ctx, rng);
    const std::uint64_t e = rng() % 5000;
    EXPECT_EQ(pow(a, e, ctx), pow(a, BigInt(e), ctx));
  }
}

TEST(Roots, FindsAllRootsOfSplitPolynomial) {
  std::mt19937_64 rng(12);
  const FieldCtx ctx(least_sparse_irreducible(10));
  for (int t = 0; t < 10; ++t) {
    const Gf2nElem r1 = random_elem(ctx, rng);
    const Gf2nElem r2 = random_elem(ctx, rng);
    if (r1 == r2) continue;
    // (X + r1)(X + r2)(X^2 + X + c) with trace(c) = 1 has exactly two roots.
    Gf2nElem c = random_elem(ctx, rng);
    if (!trace(c, ctx)) c.flip(0);
    if (!trace(c, ctx)) continue;
    const Gf2nElem s = r1 ^ r2;
    const Gf2nElem p = ctx.mul(r1, r2);
    // (X^2 + sX + p)(X^2 + X + c)
    const std::vector<Gf2nElem> coeffs{ctx.mul(p, c), ctx.mul(s, c) ^ p, c ^ s ^ p, ctx.one() ^ s,
                                       ctx.one()};
    const auto roots = find_roots(coeffs, ctx);
    ASSERT_EQ(roots.size(), 2U);
    EXPECT_TRUE((roots[0] == r1 && roots[1] == r2) || (roots[0] == r2 && roots[1] == r1));
    EXPECT_TRUE(roots[0].less_numeric(roots[1]));
  }
}

TEST(Evaluate, ModulusVanishesAtX) {
  const FieldCtx ctx(BitPoly::parse("1+x^3+x^10"));
  EXPECT_EQ(evaluate(ctx.modulus(), ctx.x_power(1), ctx), ctx.zero());
  EXPECT_EQ(evaluate(BitPoly::parse("x^3"), ctx.x_power(1), ctx), ctx.x_power(3));
}

}  // namespace
}  // namespace charfield2
