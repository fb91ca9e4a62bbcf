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

// Full multiplication tables T_0, ..., T_{m-1} of a basis (b_0, ..., b_{m-1})
// of F_{2^m}/F_2: b_i b_j = sum_k t^k_{i,j} b_k.

#ifndef CHARFIELD2_TABLE_SET_HPP_
#define CHARFIELD2_TABLE_SET_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "charfield2/bits.hpp"
#include "charfield2/error.hpp"

namespace charfield2 {

struct TableSet {
  std::size_t m = 0;
  std::vector<BitMatrix> tables;
  std::vector<std::size_t> per_table_nonzeros;
  std::size_t density = 0;

  // Fills the counts from the matrices.
  static TableSet from_tables(std::vector<BitMatrix> tables);
};

// z_k = x T_k y^t for every k.
template <class Tag>
Bits<Tag> table_mul(const Bits<Tag>& x, const Bits<Tag>& y, const TableSet& ts) {
  if (x.size() != ts.m || y.size() != ts.m) {
    throw Error(ErrorCode::kInvalidElement, "table_mul operand length does not match the table set");
  }
  Bits<Tag> z(ts.m);
  for (std::size_t k = 0; k < ts.m; ++k) {
    if (ts.tables[k].left_apply(x).dot(y)) z.set(k, true);
  }
  return z;
}

// First (k, i, j) with t^k_{i,j} != t^k_{j,i}, if any.
struct TableWitness {
  std::size_t k;
  std::size_t i;
  std::size_t j;
};
std::vector<TableWitness> symmetry_violations(const TableSet& ts, std::size_t limit = 1);

// Header "i,0,1,...,m-1" then one row per i with 0/1 entries.
std::string matrix_to_csv(const BitMatrix& t);
// Row-major bits packed little-endian into bytes, lowercase hex, rows
// separated by newlines.
std::string matrix_to_hex(const BitMatrix& t);
// "k,nonzeros" rows.
std::string table_summary_csv(const TableSet& ts);

}  // namespace charfield2

#endif  // CHARFIELD2_TABLE_SET_HPP_
