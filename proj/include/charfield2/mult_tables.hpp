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

// Full multiplication tables of extended bases, computed through an
// isomorphic copy of F_{2^m} in the polynomial basis, and the closed-form
// per-table nonzero counts they are checked against.

#ifndef CHARFIELD2_MULT_TABLES_HPP_
#define CHARFIELD2_MULT_TABLES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "charfield2/bits.hpp"
#include "charfield2/extended_basis.hpp"
#include "charfield2/field.hpp"
#include "charfield2/normal_basis.hpp"
#include "charfield2/table_set.hpp"

namespace charfield2 {

// iota: extended-basis coordinates -> F_2[x]/(g), deg g = m.
class OracleEmbedding {
 public:
  OracleEmbedding(FieldCtx big, std::size_t n, std::size_t d, Gf2nElem base_root,
                  std::vector<Gf2nElem> generator_images, std::vector<Gf2nElem> basis_images);

  const FieldCtx& big() const { return big_; }
  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  // The root of the base modulus that x is sent to.
  const Gf2nElem& base_root() const { return base_root_; }
  const std::vector<Gf2nElem>& generator_images() const { return generator_images_; }
  // Image of basis vector i + n*b.
  const std::vector<Gf2nElem>& basis_images() const { return basis_images_; }
  const BitMatrix& to_ext_matrix() const { return to_ext_; }

  Gf2nElem image(const ExtElem& x) const;
  Gf2nElem image_base(const NormalCoords& v) const;
  ExtElem preimage(const Gf2nElem& a) const;

 private:
  FieldCtx big_;
  std::size_t n_;
  std::size_t d_;
  Gf2nElem base_root_;
  std::vector<Gf2nElem> generator_images_;
  std::vector<Gf2nElem> basis_images_;
  BitMatrix to_poly_;
  BitMatrix to_ext_;
};

// Throws kConstructionContradiction when a rule cannot be satisfied or the
// images are dependent.
OracleEmbedding build_embedding(const ExtBasisCtx& ctx);

TableSet build_tables(const ExtBasisCtx& ctx, const OracleEmbedding& emb);
TableSet build_tables(const ExtBasisCtx& ctx);
TableSet build_tables(const NormalBasisCtx& nb);

ExtElem table_mul(const ExtElem& x, const ExtElem& y, const TableSet& ts, const ExtBasisCtx& ctx);

// For a polynomial P(T) = sum_k c_k T^k given by the coefficient mask,
// entry l is sum_{i,j} phi((e_{ij} P(T))_l) where e_{ij}[r] = t_{j-i,r-i}.
std::vector<std::size_t> phi_sums(const NormalBasisCtx& nb, unsigned mask);

// Closed-form nonzero count of every table T_0, ..., T_{m-1}.
std::vector<std::size_t> expected_as2_counts(const NormalBasisCtx& nb);
std::vector<std::size_t> expected_k3_counts(const NormalBasisCtx& nb);
std::vector<std::size_t> expected_asw4_counts(const NormalBasisCtx& nb);

// 4 d(N) + S and 6 d(N) + 3 S.
std::size_t as2_density_formula(const NormalBasisCtx& nb);
std::size_t k3_density_formula(const NormalBasisCtx& nb);

struct CountMismatch {
  std::size_t k;
  std::size_t expected;
  std::size_t actual;
};

struct CountReport {
  std::vector<CountMismatch> mismatches;
  std::size_t expected_density = 0;
  std::size_t actual_density = 0;
  // Asymmetric entries found while checking.
  std::vector<TableWitness> asymmetric;

  bool ok() const { return mismatches.empty() && asymmetric.empty() && expected_density == actual_density; }
  std::string to_string() const;
};

CountReport verify_as2_counts(const TableSet& ts, const NormalBasisCtx& nb);
CountReport verify_k3_counts(const TableSet& ts, const NormalBasisCtx& nb);
CountReport verify_asw4_counts(const TableSet& ts, const NormalBasisCtx& nb);

// {"m", "kind", "n", "density", "per_table_nonzeros"}.
std::string tables_manifest_json(const TableSet& ts, std::string_view kind, std::size_t n);

}  // namespace charfield2

#endif  // CHARFIELD2_MULT_TABLES_HPP_
