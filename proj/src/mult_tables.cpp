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

#include <algorithm>
#include <sstream>
#include <utility>

#include "charfield2/bitpoly.hpp"
#include "charfield2/error.hpp"
#include "json.hpp"

namespace charfield2 {
namespace {

[[noreturn]] void contradiction(const std::string& what) {
  throw Error(ErrorCode::kConstructionContradiction, what);
}

Gf2nElem monomial_image(const MonomialExps& e, const std::vector<Gf2nElem>& gens, const FieldCtx& big) {
  Gf2nElem acc = big.one();
  for (std::size_t v = 0; v < e.size(); ++v) {
    for (unsigned k = 0; k < e[v]; ++k) {
      if (v >= gens.size()) contradiction("rule refers to a generator that has no image yet");
      acc = big.mul(acc, gens[v]);
    }
  }
  return acc;
}

class BaseImage {
 public:
  BaseImage(const FieldCtx& big, const Gf2nElem& alpha_image, std::size_t n) : big_(big) {
    Gf2nElem c = alpha_image;
    for (std::size_t i = 0; i < n; ++i) {
      conjugates_.push_back(c);
      c = big.square(c);
    }
  }
  Gf2nElem operator()(const NormalCoords& v) const {
    Gf2nElem acc = big_.zero();
    for (std::size_t i = 0; i < conjugates_.size(); ++i) {
      if (v.get(i)) acc ^= conjugates_[i];
    }
    return acc;
  }
  const std::vector<Gf2nElem>& conjugates() const { return conjugates_; }

 private:
  const FieldCtx& big_;
  std::vector<Gf2nElem> conjugates_;
};

Gf2nElem evaluate_rhs(const SymPoly& p, const std::vector<Gf2nElem>& gens, const BaseImage& base,
                      const FieldCtx& big) {
  Gf2nElem acc = big.zero();
  for (const auto& [e, c] : p.terms()) acc ^= big.mul(base(c), monomial_image(e, gens, big));
  return acc;
}

std::vector<std::size_t> ranges_of(std::size_t n, std::size_t d, const std::vector<std::size_t>& per_range_w,
                                   const std::vector<std::vector<std::size_t>>& extra) {
  std::vector<std::size_t> out(n * d, 0);
  for (std::size_t b = 0; b < d; ++b) {
    for (std::size_t l = 0; l < n; ++l) out[l + n * b] = per_range_w[b] + extra[b][l];
  }
  return out;
}

std::vector<std::size_t> combine(std::initializer_list<std::pair<std::size_t, const std::vector<std::size_t>*>> parts,
                                 std::size_t n) {
  std::vector<std::size_t> out(n, 0);
  for (const auto& [mult, v] : parts) {
    for (std::size_t l = 0; l < n; ++l) out[l] += mult * (*v)[l];
  }
  return out;
}

CountReport compare(const TableSet& ts, const std::vector<std::size_t>& expected, std::size_t expected_density) {
  CountReport r;
  if (ts.m != expected.size()) {
    throw Error(ErrorCode::kContextMismatch, "table set dimension does not match the basis");
  }
  for (std::size_t k = 0; k < ts.m; ++k) {
    if (ts.per_table_nonzeros[k] != expected[k]) r.mismatches.push_back({k, expected[k], ts.per_table_nonzeros[k]});
  }
  r.expected_density = expected_density;
  r.actual_density = ts.density;
  r.asymmetric = symmetry_violations(ts, 1);
  return r;
}

std::size_t sum(const std::vector<std::size_t>& v) {
  std::size_t s = 0;
  for (std::size_t x : v) s += x;
  return s;
}

}  // namespace

OracleEmbedding::OracleEmbedding(FieldCtx big, std::size_t n, std::size_t d, Gf2nElem base_root,
                                 std::vector<Gf2nElem> generator_images, std::vector<Gf2nElem> basis_images)
    : big_(std::move(big)),
      n_(n),
      d_(d),
      base_root_(std::move(base_root)),
      generator_images_(std::move(generator_images)),
      basis_images_(std::move(basis_images)) {
  std::vector<BitVec> cols;
  cols.reserve(basis_images_.size());
  for (const auto& b : basis_images_) cols.push_back(b.retag<RawTag>());
  to_poly_ = BitMatrix::from_columns(cols, big_.n());
  auto inv = to_poly_.inverse();
  if (!inv) contradiction("basis images are linearly dependent");
  to_ext_ = std::move(*inv);
}

Gf2nElem OracleEmbedding::image(const ExtElem& x) const {
  return to_poly_.apply(flatten(x)).retag<PolyBasisTag>();
}

Gf2nElem OracleEmbedding::image_base(const NormalCoords& v) const {
  Gf2nElem acc = big_.zero();
  for (std::size_t i = 0; i < n_; ++i) {
    if (v.get(i)) acc ^= basis_images_[i];
  }
  return acc;
}

ExtElem OracleEmbedding::preimage(const Gf2nElem& a) const {
  big_.check(a);
  return unflatten(to_ext_.apply(a), n_, d_);
}

OracleEmbedding build_embedding(const ExtBasisCtx& ctx) {
  const std::size_t n = ctx.n();
  const std::size_t m = ctx.m();
  FieldCtx big(least_sparse_irreducible(m));

  std::vector<Gf2nElem> f_coeffs;
  const BitPoly& f = ctx.base().field().modulus();
  for (std::size_t i = 0; i <= *f.degree(); ++i) f_coeffs.push_back(f.coeff(i) ? big.one() : big.zero());
  const std::vector<Gf2nElem> roots = find_roots(f_coeffs, big);
  if (roots.empty()) contradiction("base modulus has no root in the big field");
  const Gf2nElem root = roots.front();

  const BitPoly alpha_poly = BitPoly::from_bits(ctx.base().alpha());
  const BaseImage base(big, evaluate(alpha_poly, root, big), n);

  std::vector<Gf2nElem> gens;
  for (const ExtRule& rule : ctx.rules()) {
    if (rule.generator != gens.size()) contradiction("rules are not listed in generator order");
    MonomialExps self(ctx.generator_names().size(), 0);
    self[rule.generator] = 1;
    Gf2nElem g;
    if (rule.degree == 2) {
      if (rule.rhs.coefficient(self) != ctx.base().one()) contradiction("quadratic rule is not of Artin-Schreier form");
      SymPoly rest = rule.rhs;
      rest.add_term(self, ctx.base().one());
      auto s = solve_artin_schreier(evaluate_rhs(rest, gens, base, big), big);
      if (!s) contradiction("Artin-Schreier rule has no root in the big field");
      g = *s;
    } else if (rule.degree == 3) {
      auto cr = cube_roots(evaluate_rhs(rule.rhs, gens, base, big), big);
      if (cr.empty()) contradiction("Kummer rule has no root in the big field");
      g = cr.front();
    } else {
      contradiction("unsupported rule degree " + std::to_string(rule.degree));
    }
    gens.push_back(g);
    Gf2nElem lhs = big.one();
    for (unsigned k = 0; k < rule.degree; ++k) lhs = big.mul(lhs, g);
    if (lhs != evaluate_rhs(rule.rhs, gens, base, big)) contradiction("generator image fails its rule");
  }

  std::vector<Gf2nElem> images;
  images.reserve(m);
  for (const auto& mono : ctx.monomials()) {
    const Gf2nElem mi = monomial_image(mono, gens, big);
    for (std::size_t i = 0; i < n; ++i) images.push_back(big.mul(base.conjugates()[i], mi));
  }
  return OracleEmbedding(std::move(big), n, ctx.d(), root, std::move(gens), std::move(images));
}

TableSet build_tables(const ExtBasisCtx& ctx, const OracleEmbedding& emb) {
  const std::size_t m = ctx.m();
  std::vector<BitMatrix> tables(m, BitMatrix(m, m));
  const auto& img = emb.basis_images();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const BitVec z = emb.to_ext_matrix().apply(emb.big().mul(img[i], img[j]));
      for (std::size_t k = 0; k < m; ++k) {
        if (!z.get(k)) continue;
        tables[k].set(i, j, true);
        tables[k].set(j, i, true);
      }
    }
  }
  return TableSet::from_tables(std::move(tables));
}

TableSet build_tables(const ExtBasisCtx& ctx) { return build_tables(ctx, build_embedding(ctx)); }

TableSet build_tables(const NormalBasisCtx& nb) { return nb.tables(); }

ExtElem table_mul(const ExtElem& x, const ExtElem& y, const TableSet& ts, const ExtBasisCtx& ctx) {
  ctx.check(x);
  ctx.check(y);
  return unflatten(table_mul(flatten(x), flatten(y), ts), ctx.n(), ctx.d());
}

std::vector<std::size_t> phi_sums(const NormalBasisCtx& nb, unsigned mask) {
  const std::size_t n = nb.n();
  std::vector<std::size_t> sums(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BitVec power = nb.table().row((j + n - i) % n).rotated_right(i);
      BitVec acc(n);
      for (unsigned k = 0; (mask >> k) != 0; ++k) {
        if ((mask >> k) & 1U) acc ^= power;
        power = nb.table().left_apply(power);
      }
      for (std::size_t l = 0; l < n; ++l) sums[l] += acc.get(l) ? 1 : 0;
    }
  }
  return sums;
}

std::vector<std::size_t> expected_as2_counts(const NormalBasisCtx& nb) {
  const std::size_t n = nb.n();
  const std::size_t w = nb.weight();
  const auto s = phi_sums(nb, 0b10);
  return ranges_of(n, 2, {w, 3 * w}, {s, std::vector<std::size_t>(n, 0)});
}

std::vector<std::size_t> expected_k3_counts(const NormalBasisCtx& nb) {
  const std::size_t n = nb.n();
  const std::size_t w = nb.weight();
  const auto s = phi_sums(nb, 0b10);
  return ranges_of(n, 3, {w, 2 * w, 3 * w}, {combine({{2, &s}}, n), s, std::vector<std::size_t>(n, 0)});
}

std::vector<std::size_t> expected_asw4_counts(const NormalBasisCtx& nb) {
  const std::size_t n = nb.n();
  const std::size_t w = nb.weight();
  const auto t1 = phi_sums(nb, 0b10);
  const auto t2 = phi_sums(nb, 0b100);
  const auto t21 = phi_sums(nb, 0b110);
  const auto t321 = phi_sums(nb, 0b1110);
  const auto t10 = phi_sums(nb, 0b11);
  const auto t210 = phi_sums(nb, 0b111);
  return ranges_of(n, 4, {w, 4 * w, 3 * w, 9 * w},
                   {combine({{1, &t1}, {1, &t2}, {2, &t21}, {1, &t321}}, n), combine({{1, &t10}, {2, &t210}}, n),
                    combine({{3, &t1}}, n), std::vector<std::size_t>(n, 0)});
}

std::size_t as2_density_formula(const NormalBasisCtx& nb) { return 4 * nb.density() + cross_product_sum(nb); }

std::size_t k3_density_formula(const NormalBasisCtx& nb) { return 6 * nb.density() + 3 * cross_product_sum(nb); }

std::string CountReport::to_string() const {
  std::ostringstream os;
  os << "density " << actual_density << " (expected " << expected_density << ")";
  for (const auto& mm : mismatches) {
    os << "; T_" << mm.k << " has " << mm.actual << " nonzeros, expected " << mm.expected;
  }
  for (const auto& a : asymmetric) os << "; asymmetric at (k,i,j) = (" << a.k << "," << a.i << "," << a.j << ")";
  return os.str();
}

CountReport verify_as2_counts(const TableSet& ts, const NormalBasisCtx& nb) {
  return compare(ts, expected_as2_counts(nb), as2_density_formula(nb));
}

CountReport verify_k3_counts(const TableSet& ts, const NormalBasisCtx& nb) {
  return compare(ts, expected_k3_counts(nb), k3_density_formula(nb));
}

CountReport verify_asw4_counts(const TableSet& ts, const NormalBasisCtx& nb) {
  const auto expected = expected_asw4_counts(nb);
  return compare(ts, expected, sum(expected));
}

std::string tables_manifest_json(const TableSet& ts, std::string_view kind, std::size_t n) {
  nlohmann::ordered_json j;
  j["m"] = ts.m;
  j["kind"] = std::string(kind);
  j["n"] = n;
  j["density"] = ts.density;
  j["per_table_nonzeros"] = ts.per_table_nonzeros;
  return j.dump(2) + "\n";
}

}  // namespace charfield2
