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

#include <cstdlib>
#include <string>
#include <utility>

#include "charfield2/error.hpp"

namespace charfield2 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidElement: return "invalid-element";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kUnsupportedDegree: return "unsupported-degree";
    case ErrorCode::kNotNormal: return "not-normal";
    case ErrorCode::kNoKummerExtension: return "no-kummer-extension";
    case ErrorCode::kNoExtension: return "no-extension";
    case ErrorCode::kConstructionContradiction: return "construction-contradiction";
    case ErrorCode::kContextMismatch: return "context-mismatch";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kMissingFixture: return "missing-fixture";
    case ErrorCode::kDegreeCap: return "degree-cap";
  }
  return "unknown";
}

std::size_t max_base_degree() {
  if (const char* env = std::getenv("CHARFIELD2_MAX_N")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 64;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_columns(std::span<const BitVec> cols, std::size_t height) {
  BitMatrix m(height, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < height; ++i) {
      if (cols[j].get(i)) m.set(i, j, true);
    }
  }
  return m;
}

std::size_t BitMatrix::popcount() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.popcount();
  return c;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) t.set(j, i, true);
    }
  }
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  BitMatrix out(rows(), o.cols());
  for (std::size_t i = 0; i < rows(); ++i) out.rows_[i] = o.left_apply(rows_[i]);
  return out;
}

std::size_t BitMatrix::rank() const {
  std::vector<BitVec> work = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < work.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < work.size() && !work[pivot].get(col)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[rank], work[pivot]);
    for (std::size_t r = rank + 1; r < work.size(); ++r) {
      if (work[r].get(col)) work[r] ^= work[rank];
    }
    ++rank;
  }
  return rank;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
  const std::size_t n = rows();
  if (n != cols_) return std::nullopt;
  std::vector<BitVec> a = rows_;
  BitMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !a[pivot].get(col)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(inv.rows_[col], inv.rows_[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && a[r].get(col)) {
        a[r] ^= a[col];
        inv.rows_[r] ^= inv.rows_[col];
      }
    }
  }
  return inv;
}

std::optional<BitVec> BitMatrix::solve(const BitVec& b) const {
  // Gauss-Jordan on the augmented system [M | b].
  const std::size_t m = rows();
  std::vector<BitVec> a = rows_;
  BitVec rhs = b;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < m; ++col) {
    std::size_t pivot = r;
    while (pivot < m && !a[pivot].get(col)) ++pivot;
    if (pivot == m) continue;
    std::swap(a[r], a[pivot]);
    {
      const bool tmp = rhs.get(r);
      rhs.set(r, rhs.get(pivot));
      rhs.set(pivot, tmp);
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (k != r && a[k].get(col)) {
        a[k] ^= a[r];
        if (rhs.get(r)) rhs.flip(k);
      }
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t k = r; k < m; ++k) {
    if (rhs.get(k)) return std::nullopt;
  }
  BitVec x(cols_);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    if (rhs.get(k)) x.set(pivot_cols[k], true);
  }
  return x;
}

}  // namespace charfield2
