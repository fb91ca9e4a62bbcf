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

#include "charfield2/witt_w2.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <string>

#include "charfield2/fixtures.hpp"
#include "test_util.hpp"

namespace charfield2 {
namespace {

using testing::random_elem;
using W = W2Vector<Gf2nElem>;

W random_w(const FieldCtx& ctx, std::mt19937_64& rng) { return {random_elem(ctx, rng), random_elem(ctx, rng)}; }

TEST(W2, AdditionExamples) {
  const FieldCtx ctx(BitPoly::parse("1+x+x^4"));
  const FieldRing r{&ctx};
  std::mt19937_64 rng(30);
  const W zero{ctx.zero(), ctx.zero()};
  for (int t = 0; t < 50; ++t) {
    const W x = random_w(ctx, rng);
    EXPECT_EQ(w2_add(x, zero, r), x);
    const Gf2nElem c = random_elem(ctx, rng);
    const W sum = w2_add(x, W{x.x0, c}, r);
    EXPECT_EQ(sum, (W{ctx.zero(), x.x1 ^ c ^ ctx.square(x.x0)}));
    const W y = random_w(ctx, rng);
    EXPECT_EQ(w2_add(x, y, r), w2_add(y, x, r));
  }
}

TEST(W2, MultiplicationExamples) {
  const FieldCtx ctx(BitPoly::parse("1+x^3+x^10"));
  const FieldRing r{&ctx};
  std::mt19937_64 rng(31);
  const W one{ctx.one(), ctx.zero()};
  const W zero{ctx.zero(), ctx.zero()};
  for (int t = 0; t < 50; ++t) {
    const W x = random_w(ctx, rng);
    EXPECT_EQ(w2_mul(x, one, r), x);
    EXPECT_EQ(w2_mul(x, zero, r), zero);
  }
}

TEST(W2, RingAxioms) {
  std::mt19937_64 rng(32);
  for (std::size_t n : {1U, 2U, 3U, 5U, 8U, 13U}) {
    const FieldCtx ctx(least_sparse_irreducible(n));
    const FieldRing r{&ctx};
    const W zero{ctx.zero(), ctx.zero()};
    for (int t = 0; t < 500; ++t) {
      const W x = random_w(ctx, rng);
      const W y = random_w(ctx, rng);
      const W z = random_w(ctx, rng);
      ASSERT_EQ(w2_add(w2_add(x, y, r), z, r), w2_add(x, w2_add(y, z, r), r));
      ASSERT_EQ(w2_add(x, w2_neg(x, r), r), zero);
      ASSERT_EQ(w2_mul(x, y, r), w2_mul(y, x, r));
      ASSERT_EQ(w2_mul(w2_mul(x, y, r), z, r), w2_mul(x, w2_mul(y, z, r), r));
      ASSERT_EQ(w2_mul(x, w2_add(y, z, r), r), w2_add(w2_mul(x, y, r), w2_mul(x, z, r), r));
    }
  }
}

TEST(W2, NegationIsNotComponentwise) {
  const FieldCtx ctx(BitPoly::parse("1+x+x^2"));
  const FieldRing r{&ctx};
  const W x{ctx.one(), ctx.zero()};
  EXPECT_EQ(w2_neg(x, r), (W{ctx.one(), ctx.one()}));
}

TEST(WpMap, Examples) {
  const FieldCtx ctx(BitPoly::parse("1+x+x^4"));
  const FieldRing r{&ctx};
  const W zero{ctx.zero(), ctx.zero()};
  EXPECT_EQ(wp_map(zero, r), zero);
  EXPECT_EQ(wp_map(W{ctx.one(), ctx.zero()}, r), (W{ctx.zero(), ctx.one()}));
  std::mt19937_64 rng(33);
  for (int t = 0; t < 100; ++t) {
    const W x = random_w(ctx, rng);
    const Gf2nElem p = ctx.square(x.x0) ^ x.x0;
    const Gf2nElem q = ctx.square(x.x1) ^ x.x1 ^ ctx.mul(ctx.square(x.x0), x.x0);
    EXPECT_EQ(wp_map(x, r), (W{p, q}));
  }
}

TEST(WpMap, Additive) {
  std::mt19937_64 rng(34);
  for (std::size_t n : {2U, 3U, 7U, 12U}) {
    const FieldCtx ctx(least_sparse_irreducible(n));
    const FieldRing r{&ctx};
    for (int t = 0; t < 200; ++t) {
      const W x = random_w(ctx, rng);
      const W y = random_w(ctx, rng);
      EXPECT_EQ(wp_map(w2_add(x, y, r), r), w2_add(wp_map(x, r), wp_map(y, r), r));
      EXPECT_EQ(frobenius_minus_id(w2_add(x, y, r), r),
                w2_add(frobenius_minus_id(x, r), frobenius_minus_id(y, r), r));
    }
  }
}

// Preimage counts of every attained value of f over all of W_2(F_{2^n}).
template <class F>
std::map<std::size_t, std::size_t> fiber_sizes(const FieldCtx& ctx, F f) {
  const std::size_t n = ctx.n();
  std::map<std::string, std::size_t> counts;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      const W x{Gf2nElem::from_words(n, std::vector<std::uint64_t>{a}),
                Gf2nElem::from_words(n, std::vector<std::uint64_t>{b})};
      const W y = f(x);
      ++counts[y.x0.to_bitstring() + y.x1.to_bitstring()];
    }
  }
  std::map<std::size_t, std::size_t> hist;
  for (const auto& [k, c] : counts) ++hist[c];
  return hist;
}

TEST(WpMap, FrobeniusMinusIdentityHasFibersOfFour) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const FieldCtx ctx(least_sparse_irreducible(n));
    const FieldRing r{&ctx};
    const auto hist = fiber_sizes(ctx, [&](const W& x) { return frobenius_minus_id(x, r); });
    ASSERT_EQ(hist.size(), 1U) << "n=" << n;
    EXPECT_EQ(hist.begin()->first, 4U) << "n=" << n;
  }
}

TEST(WpMap, FrobeniusPlusIdentityFibersDependOnParity) {
  // The kernel of F + id is {(0,0), (0,1)} plus, when Tr(1) = 0 (n even),
  // the two solutions of x1^2 + x1 = 1 over x0 = 1.
  for (std::size_t n = 1; n <= 4; ++n) {
    const FieldCtx ctx(least_sparse_irreducible(n));
    const FieldRing r{&ctx};
    const auto hist = fiber_sizes(ctx, [&](const W& x) { return wp_map(x, r); });
    ASSERT_EQ(hist.size(), 1U);
    EXPECT_EQ(hist.begin()->first, n % 2 == 0 ? 4U : 2U) << "n=" << n;
  }
}

NormalBasisCtx basis(std::size_t n) {
  const Fixtures fx = load_fixtures();
  const NormalBasisFixture* f = fx.find_basis(n);
  const FieldCtx ctx(f->modulus);
  return build_normal_basis(ctx.element(f->alpha), ctx);
}

TEST(Asw4Rules, DerivedRelations) {
  for (std::size_t n : {2U, 4U, 6U, 8U}) {
    const NormalBasisCtx nb = basis(n);
    const NormalCoords alpha = nb.alpha_coords();
    const Asw4Rules rules = asw4_reduction_rules(alpha, nb);
    EXPECT_EQ(rules.b0.generator, 0U);
    EXPECT_EQ(rules.b0.degree, 2U);
    EXPECT_EQ(rules.b0.rhs.coefficient({0, 0}), NormalCoords::unit(n, 0));
    EXPECT_EQ(rules.b0.rhs.coefficient({1, 0}), nb.one());
    EXPECT_EQ(rules.b0.rhs.terms().size(), 2U);
    EXPECT_EQ(rules.b1.generator, 1U);
    EXPECT_EQ(rules.b1.rhs.coefficient({0, 1}), nb.one());
    EXPECT_EQ(rules.b1.rhs.coefficient({1, 0}), nb.one() ^ alpha);
    EXPECT_EQ(rules.b1.rhs.coefficient({0, 0}), nb.mul(alpha, alpha));
    EXPECT_EQ(rules.b1.rhs.terms().size(), 3U);
  }
}

TEST(Asw4Rules, PlugBack) {
  const NormalBasisCtx nb = basis(4);
  const Asw4Rules rules = asw4_reduction_rules(nb.alpha_coords(), nb);
  const SymRing ring{&nb};
  const W2Vector<SymPoly> xi{SymPoly::variable(2, 0, nb), SymPoly::variable(2, 1, nb)};
  const SymPoly a = SymPoly::constant(2, nb.alpha_coords());
  const auto s = wp_map(xi, ring);
  // wp_map(xi) reduces to the Witt negative of (alpha, alpha).
  const auto neg = w2_neg(W2Vector<SymPoly>{a, a}, ring);
  EXPECT_EQ(reduce(s.x0, {rules.b0, rules.b1}, nb), reduce(neg.x0, {rules.b0, rules.b1}, nb));
  EXPECT_EQ(reduce(s.x1, {rules.b0, rules.b1}, nb), reduce(neg.x1, {rules.b0, rules.b1}, nb));
  const auto sum = w2_add(s, W2Vector<SymPoly>{a, a}, ring);
  EXPECT_TRUE(reduce(sum.x0, {rules.b0, rules.b1}, nb).is_zero());
  EXPECT_TRUE(reduce(sum.x1, {rules.b0, rules.b1}, nb).is_zero());
}

TEST(Asw4Rules, RuleText) {
  const NormalBasisCtx nb = basis(2);
  const Asw4Rules rules = asw4_reduction_rules(nb.alpha_coords(), nb);
  EXPECT_EQ(rules.b0.to_string({"b0", "b1"}), "b0^2 = [10] + [11] b0");
}

}  // namespace
}  // namespace charfield2
