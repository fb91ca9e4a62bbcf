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

#include "charfield2/mult_tables.hpp"

#include <gtest/gtest.h>

#include <random>

#include "charfield2/error.hpp"
#include "test_util.hpp"

namespace charfield2 {
namespace {

using testing::base_for;
using testing::random_bits;

ExtElem random_ext(const ExtBasisCtx& ctx, std::mt19937_64& rng) {
  ExtElem x;
  for (std::size_t b = 0; b < ctx.d(); ++b) x.blocks.push_back(random_bits<NormalBasisTag>(ctx.n(), rng));
  return x;
}

// Independent count: multiply every pair of basis vectors with the
// extended-basis formula and tally coordinates.
std::vector<std::size_t> counts_by_formula(const ExtBasisCtx& ctx) {
  const std::size_t m = ctx.m();
  std::vector<std::size_t> counts(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const ExtElem bi = unflatten(BitVec::unit(m, i), ctx.n(), ctx.d());
      const ExtElem bj = unflatten(BitVec::unit(m, j), ctx.n(), ctx.d());
      const BitVec z = flatten(mul(bi, bj, ctx).first);
      for (std::size_t k = 0; k < m; ++k) counts[k] += z.get(k) ? 1 : 0;
    }
  }
  return counts;
}

TEST(Embedding, RulesHoldInBigField) {
  const ExtBasisCtx as2 = build_as2(base_for(2));
  const OracleEmbedding e = build_embedding(as2);
  const FieldCtx& big = e.big();
  EXPECT_EQ(big.n(), 4U);
  const Gf2nElem b = e.generator_images()[0];
  EXPECT_EQ(big.square(b) ^ b, e.image_base(as2.base().alpha_coords()));

  const ExtBasisCtx k3 = build_kummer3(base_for(2));
  const OracleEmbedding ek = build_embedding(k3);
  const Gf2nElem g = ek.generator_images()[0];
  EXPECT_EQ(ek.big().mul(g, ek.big().square(g)), ek.image_base(k3.base().alpha_coords()));
}

TEST(Embedding, BaseRootIsRootOfModulus) {
  const NormalBasisCtx nb = base_for(6);
  const OracleEmbedding e = build_embedding(build_as2(nb));
  EXPECT_EQ(evaluate(nb.field().modulus(), e.base_root(), e.big()), e.big().zero());
  EXPECT_EQ(e.image_base(nb.one()), e.big().one());
}

TEST(Embedding, FullRankAndRoundTrip) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (ExtKind kind : {ExtKind::kAs2, ExtKind::kK3, ExtKind::kAsw4, ExtKind::kKa6}) {
      std::optional<ExtBasisCtx> ctx;
      try {
        ctx = build_extension(base_for(n), kind);
      } catch (const Error&) {
        continue;
      }
      const OracleEmbedding e = build_embedding(*ctx);
      std::vector<BitVec> cols;
      for (const auto& b : e.basis_images()) cols.push_back(b.retag<RawTag>());
      EXPECT_EQ(BitMatrix::from_columns(cols, ctx->m()).rank(), ctx->m());
      const ExtElem x = random_ext(*ctx, rng);
      EXPECT_EQ(e.preimage(e.image(x)), x);
    }
  }
}

TEST(Embedding, Deterministic) {
  const ExtBasisCtx ctx = build_asw4(base_for(4));
  const OracleEmbedding a = build_embedding(ctx);
  const OracleEmbedding b = build_embedding(ctx);
  EXPECT_EQ(a.basis_images(), b.basis_images());
  EXPECT_EQ(a.big().modulus(), least_sparse_irreducible(16));
}

TEST(Tables, TrivialBasis) {
  const TableSet ts = build_tables(base_for(1));
  ASSERT_EQ(ts.m, 1U);
  EXPECT_TRUE(ts.tables[0].get(0, 0));
  EXPECT_EQ(ts.density, 1U);
}

TEST(Tables, AgreeWithFormulaCounts) {
  for (std::size_t n : {2U, 4U}) {
    for (ExtKind kind : {ExtKind::kAs2, ExtKind::kAsw4, ExtKind::kKa6}) {
      // b is a cube in F_256 for the n = 4 basis.
      if (kind == ExtKind::kKa6 && n == 4) continue;
      const ExtBasisCtx ctx = build_extension(base_for(n), kind);
      const TableSet ts = build_tables(ctx);
      EXPECT_EQ(ts.per_table_nonzeros, counts_by_formula(ctx)) << to_string(kind) << " n=" << n;
      EXPECT_TRUE(symmetry_violations(ts).empty());
    }
  }
}

TEST(Tables, TableMulAgreesWithFormulas) {
  std::mt19937_64 rng(12);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (ExtKind kind : {ExtKind::kAs2, ExtKind::kK3, ExtKind::kAsw4, ExtKind::kKa6}) {
      std::optional<ExtBasisCtx> ctx;
      try {
        ctx = build_extension(base_for(n), kind);
      } catch (const Error&) {
        continue;
      }
      const TableSet ts = build_tables(*ctx);
      for (int t = 0; t < 200; ++t) {
        const ExtElem x = random_ext(*ctx, rng);
        const ExtElem y = random_ext(*ctx, rng);
        ASSERT_EQ(table_mul(x, y, ts, *ctx), mul(x, y, *ctx).first) << to_string(kind) << " n=" << n;
      }
      EXPECT_EQ(table_mul(ctx->one(), ctx->one(), ts, *ctx), ctx->one());
    }
  }
}

TEST(Tables, LengthMismatchThrows) {
  const TableSet ts = build_tables(base_for(2));
  EXPECT_THROW(table_mul(BitVec(3), BitVec(2), ts), Error);
}

TEST(Counts, ArtinSchreierSmallest) {
  const NormalBasisCtx nb = base_for(2);
  const TableSet ts = build_tables(build_as2(nb));
  EXPECT_EQ(ts.density, 29U);
  EXPECT_EQ(as2_density_formula(nb), 29U);
  for (std::size_t k = 2; k < 4; ++k) EXPECT_EQ(ts.per_table_nonzeros[k], 9U);
  EXPECT_TRUE(verify_as2_counts(ts, nb).ok());
}

TEST(Counts, KummerDensities) {
  EXPECT_EQ(build_tables(build_kummer3(base_for(2))).density, 51U);
  const NormalBasisCtx nb6 = base_for(6);
  EXPECT_EQ(k3_density_formula(nb6), 699U);
  const TableSet ts = build_tables(build_kummer3(nb6));
  EXPECT_EQ(ts.density, 699U);
  const CountReport r = verify_k3_counts(ts, nb6);
  EXPECT_TRUE(r.ok()) << r.to_string();
}

TEST(Counts, ClosedFormsOnSmallFixtures) {
  for (std::size_t n : {2U, 4U, 6U, 8U}) {
    const NormalBasisCtx nb = base_for(n);
    const CountReport a = verify_as2_counts(build_tables(build_as2(nb)), nb);
    EXPECT_TRUE(a.ok()) << "as2 n=" << n << ": " << a.to_string();
    if (is_cube(nb.alpha(), nb.field())) continue;
    const CountReport k = verify_k3_counts(build_tables(build_kummer3(nb)), nb);
    EXPECT_TRUE(k.ok()) << "k3 n=" << n << ": " << k.to_string();
  }
  for (std::size_t n : {2U, 4U}) {
    const NormalBasisCtx nb = base_for(n);
    const CountReport r = verify_asw4_counts(build_tables(build_asw4(nb)), nb);
    EXPECT_TRUE(r.ok()) << "asw4 n=" << n << ": " << r.to_string();
    const auto expected = expected_asw4_counts(nb);
    for (std::size_t l = 3 * n; l < 4 * n; ++l) EXPECT_EQ(expected[l], 9 * nb.weight());
  }
}

TEST(Counts, PhiSumsMatchCrossSums) {
  for (std::size_t n : {2U, 6U, 10U}) {
    const NormalBasisCtx nb = base_for(n);
    EXPECT_EQ(phi_sums(nb, 0b10), cross_product_sums(nb));
  }
  // P(T) = 1 gives e_{ij} itself: row weights summed over all shifts.
  const NormalBasisCtx nb = base_for(4);
  std::size_t total = 0;
  for (std::size_t s : phi_sums(nb, 0b1)) total += s;
  EXPECT_EQ(total, 4 * nb.weight());
}

TEST(Counts, CorruptedTableIsReported) {
  const NormalBasisCtx nb = base_for(4);
  TableSet ts = build_tables(build_as2(nb));
  std::vector<BitMatrix> tables = ts.tables;
  tables[5].set(1, 6, !tables[5].get(1, 6));
  const CountReport r = verify_as2_counts(TableSet::from_tables(std::move(tables)), nb);
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.mismatches.size(), 1U);
  EXPECT_EQ(r.mismatches[0].k, 5U);
  ASSERT_EQ(r.asymmetric.size(), 1U);
  EXPECT_EQ(r.asymmetric[0].k, 5U);
}

TEST(Export, Manifest) {
  const TableSet ts = build_tables(build_as2(base_for(2)));
  const std::string j = tables_manifest_json(ts, "as2", 2);
  EXPECT_NE(j.find("\"m\": 4"), std::string::npos);
  EXPECT_NE(j.find("\"density\": 29"), std::string::npos);
  EXPECT_NE(j.find("\"kind\": \"as2\""), std::string::npos);
}

}  // namespace
}  // namespace charfield2
