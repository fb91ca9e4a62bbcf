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

#include "charfield2/table_set.hpp"

#include <utility>

#include "charfield2/bitpoly.hpp"

namespace charfield2 {

TableSet TableSet::from_tables(std::vector<BitMatrix> tables) {
  TableSet ts;
  ts.m = tables.size();
  ts.tables = std::move(tables);
  for (const auto& t : ts.tables) {
    ts.per_table_nonzeros.push_back(t.popcount());
    ts.density += ts.per_table_nonzeros.back();
  }
  return ts;
}

std::vector<TableWitness> symmetry_violations(const TableSet& ts, std::size_t limit) {
  std::vector<TableWitness> out;
  for (std::size_t k = 0; k < ts.m; ++k) {
    const BitMatrix& t = ts.tables[k];
    for (std::size_t i = 0; i < ts.m; ++i) {
      for (std::size_t j = i + 1; j < ts.m; ++j) {
        if (t.get(i, j) != t.get(j, i)) {
          out.push_back({k, i, j});
          if (out.size() >= limit) return out;
        }
      }
    }
  }
  return out;
}

std::string matrix_to_csv(const BitMatrix& t) {
  std::string s = "i";
  for (std::size_t j = 0; j < t.cols(); ++j) s += "," + std::to_string(j);
  s += '\n';
  for (std::size_t i = 0; i < t.rows(); ++i) {
    s += std::to_string(i);
    for (std::size_t j = 0; j < t.cols(); ++j) s += t.get(i, j) ? ",1" : ",0";
    s += '\n';
  }
  return s;
}

std::string matrix_to_hex(const BitMatrix& t) {
  std::string s;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    std::string row = BitPoly::from_bits(t.row(i)).to_hex();
    const std::size_t bytes = (t.cols() + 7) / 8;
    row.resize(2 * bytes, '0');
    s += row;
    s += '\n';
  }
  return s;
}

std::string table_summary_csv(const TableSet& ts) {
  std::string s = "k,nonzeros\n";
  for (std::size_t k = 0; k < ts.m; ++k) {
    s += std::to_string(k) + "," + std::to_string(ts.per_table_nonzeros[k]) + "\n";
  }
  return s;
}

}  // namespace charfield2
