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

#include "charfield2/normal_basis.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <thread>
#include <utility>

#include "charfield2/error.hpp"

namespace charfield2 {
namespace {

std::vector<Gf2nElem> conjugates(const Gf2nElem& a, const FieldCtx& ctx) {
  std::vector<Gf2nElem> out{a};
  for (std::size_t i = 1; i < ctx.n(); ++i) out.push_back(ctx.square(out.back()));
  return out;
}

BitMatrix column_matrix(const std::vector<Gf2nElem>& cols, std::size_t height) {
  std::vector<BitVec> raw;
  raw.reserve(cols.size());
  for (const auto& c : cols) raw.push_back(c.retag<RawTag>());
  return BitMatrix::from_columns(raw, height);
}

std::optional<std::size_t> weight_of(const Gf2nElem& a, const FieldCtx& ctx) {
  const auto conj = conjugates(a, ctx);
  const auto inv = column_matrix(conj, ctx.n()).inverse();
  if (!inv) return std::nullopt;
  std::size_t w = 0;
  for (const auto& c : conj) w += inv->apply(ctx.mul(a, c)).popcount();
  return w;
}

Gf2nElem candidate(std::uint64_t v, std::size_t n) {
  return Gf2nElem::from_words(n, std::vector<std::uint64_t>{v});
}

// Evaluates candidates first, first+1, ... in batches spread over worker
// threads; `consume` sees the results in candidate order and returns false
// to stop.
void scan_candidates(std::uint64_t first, std::uint64_t last, unsigned workers,
                     const std::function<std::optional<NormalElementHit>(std::uint64_t)>& eval,
                     const std::function<bool(NormalElementHit)>& consume) {
  workers = std::max(1U, workers);
  const std::uint64_t batch = 256 * static_cast<std::uint64_t>(workers);
  for (std::uint64_t start = first; start <= last;) {
    const std::uint64_t count = std::min<std::uint64_t>(batch, last - start + 1);
    std::vector<std::optional<NormalElementHit>> results(count);
    auto work = [&](unsigned t) {
      for (std::uint64_t i = t; i < count; i += workers) results[i] = eval(start + i);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned t = 0; t < workers; ++t) threads.emplace_back(work, t);
      for (auto& th : threads) th.join();
    }
    for (auto& r : results) {
      if (r && !consume(std::move(*r))) return;
    }
    if (last - start + 1 <= count) break;
    start += count;
  }
}

}  // namespace

bool is_normal_element(const Gf2nElem& a, const FieldCtx& ctx) {
  ctx.check(a);
  if (a.none()) return false;
  return column_matrix(conjugates(a, ctx), ctx.n()).rank() == ctx.n();
}

NormalBasisCtx::NormalBasisCtx(FieldCtx field, Gf2nElem alpha)
    : field_(std::move(field)), alpha_(std::move(alpha)) {
  const std::size_t n = field_.n();
  if (n > max_base_degree()) {
    throw Error(ErrorCode::kDegreeCap, "base degree " + std::to_string(n) + " exceeds the cap " +
                                           std::to_string(max_base_degree()));
  }
  field_.check(alpha_);
  const auto conj = conjugates(alpha_, field_);
  to_poly_ = column_matrix(conj, n);
  auto inv = to_poly_.inverse();
  if (alpha_.none() || !inv) throw Error(ErrorCode::kNotNormal, "element is not normal");
  to_normal_ = std::move(*inv);

  table_ = BitMatrix(n, n);
  std::vector<BitMatrix> tk(n, BitMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const BitVec c = to_normal_.apply(field_.mul(conj[i], conj[j]));
      for (std::size_t k = 0; k < n; ++k) {
        if (!c.get(k)) continue;
        tk[k].set(i, j, true);
        tk[k].set(j, i, true);
      }
      if (i == 0) table_.row(j) = c;
    }
  }
  weight_ = table_.popcount();
  tables_ = TableSet::from_tables(std::move(tk));
  one_ = to_normal(field_.one());
}

NormalCoords NormalBasisCtx::to_normal(const Gf2nElem& a) const {
  field_.check(a);
  return to_normal_.apply(a).retag<NormalBasisTag>();
}

Gf2nElem NormalBasisCtx::to_poly(const NormalCoords& v) const {
  check(v);
  return to_poly_.apply(v).retag<PolyBasisTag>();
}

void NormalBasisCtx::check(const NormalCoords& v) const {
  if (v.size() != n()) {
    throw Error(ErrorCode::kInvalidElement, "normal coordinates of length " + std::to_string(v.size()) +
                                                " for a basis of size " + std::to_string(n()));
  }
}

NormalCoords NormalBasisCtx::mul_alpha(const NormalCoords& v) const {
  check(v);
  return table_.left_apply(v);
}

NormalCoords NormalBasisCtx::mul(const NormalCoords& x, const NormalCoords& y) const {
  check(x);
  check(y);
  return table_mul(x, y, tables_);
}

NormalBasisCtx build_normal_basis(const Gf2nElem& a, const FieldCtx& ctx) { return NormalBasisCtx(ctx, a); }

NormalCoords frobenius_shift(const NormalCoords& v) { return v.rotated_right(1); }

std::vector<std::size_t> cross_product_sums(const NormalBasisCtx& nb) {
  const std::size_t n = nb.n();
  std::vector<std::size_t> sums(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // e[r] = t_{j-i, r-i}: row j-i of T rotated right by i.
      const BitVec e = nb.table().row((j + n - i) % n).rotated_right(i);
      const BitVec et = nb.table().left_apply(e);
      for (std::size_t l = 0; l < n; ++l) sums[l] += et.get(l) ? 1 : 0;
    }
  }
  return sums;
}

std::size_t cross_product_sum(const NormalBasisCtx& nb) {
  std::size_t total = 0;
  for (std::size_t s : cross_product_sums(nb)) total += s;
  return total;
}

std::vector<NormalElementHit> search_normal_elements(const FieldCtx& ctx, bool require_primitive,
                                                     std::size_t limit, unsigned workers) {
  std::vector<NormalElementHit> hits;
  if (limit == 0) return hits;
  const std::size_t n = ctx.n();
  const std::uint64_t last = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  scan_candidates(
      1, last, workers,
      [&](std::uint64_t v) -> std::optional<NormalElementHit> {
        const Gf2nElem a = candidate(v, n);
        const auto w = weight_of(a, ctx);
        if (!w) return std::nullopt;
        if (require_primitive && !is_primitive(a, ctx)) return std::nullopt;
        return NormalElementHit{a, *w};
      },
      [&](NormalElementHit h) {
        hits.push_back(std::move(h));
        return hits.size() < limit;
      });
  return hits;
}

std::optional<NormalElementHit> best_normal_element(const FieldCtx& ctx, bool require_primitive,
                                                    unsigned workers) {
  const std::size_t n = ctx.n();
  if (n > 24) throw Error(ErrorCode::kUnsupportedDegree, "exhaustive search is limited to n <= 24");
  std::optional<NormalElementHit> best;
  scan_candidates(
      1, (std::uint64_t{1} << n) - 1, workers,
      [&](std::uint64_t v) -> std::optional<NormalElementHit> {
        const Gf2nElem a = candidate(v, n);
        const auto w = weight_of(a, ctx);
        if (!w) return std::nullopt;
        if (require_primitive && !is_primitive(a, ctx)) return std::nullopt;
        return NormalElementHit{a, *w};
      },
      [&](NormalElementHit h) {
        if (!best || h.weight < best->weight) best = std::move(h);
        return true;
      });
  return best;
}

NormalBasisCtx first_normal_basis(std::size_t n, bool require_primitive) {
  FieldCtx ctx(least_sparse_irreducible(n));
  auto hits = search_normal_elements(ctx, require_primitive, 1);
  if (hits.empty()) throw Error(ErrorCode::kNotNormal, "no suitable normal element of degree " + std::to_string(n));
  return NormalBasisCtx(std::move(ctx), hits.front().element);
}

}  // namespace charfield2
