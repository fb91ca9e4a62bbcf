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

#include "charfield2/extended_basis.hpp"

#include <utility>

#include "charfield2/bitpoly.hpp"
#include "charfield2/error.hpp"
#include "charfield2/mult_tables.hpp"
#include "charfield2/witt_w2.hpp"

namespace charfield2 {
namespace {

// Base-field operations with accounting.
class Ops {
 public:
  explicit Ops(const NormalBasisCtx& nb) : nb_(nb) {}

  NormalCoords add(const NormalCoords& a, const NormalCoords& b) {
    ++count_.base_adds;
    return a ^ b;
  }
  NormalCoords mul(const NormalCoords& a, const NormalCoords& b) {
    ++count_.base_mults;
    return nb_.mul(a, b);
  }
  NormalCoords alpha(const NormalCoords& a) {
    ++count_.table_vector_products;
    return nb_.mul_alpha(a);
  }
  static NormalCoords shift(const NormalCoords& a) { return frobenius_shift(a); }

  const OpCounter& count() const { return count_; }

 private:
  const NormalBasisCtx& nb_;
  OpCounter count_;
};

// An element U0 + b U1 of the degree-2 Artin-Schreier step.
struct As2Pair {
  NormalCoords u0;
  NormalCoords u1;
};

As2Pair as2_add(const As2Pair& x, const As2Pair& y, Ops& ops) {
  return {ops.add(x.u0, y.u0), ops.add(x.u1, y.u1)};
}

// (C0 + b C1)(D0 + b D1) = (C0 D0 + alpha C1 D1) + b ((C1 + C0)(D1 + D0) + C0 D0).
As2Pair as2_mul(const As2Pair& c, const As2Pair& d, Ops& ops) {
  const NormalCoords c0d0 = ops.mul(c.u0, d.u0);
  const NormalCoords c1d1 = ops.mul(c.u1, d.u1);
  const NormalCoords cross = ops.mul(ops.add(c.u1, c.u0), ops.add(d.u1, d.u0));
  return {ops.add(c0d0, ops.alpha(c1d1)), ops.add(cross, c0d0)};
}

// b (U0 + b U1) = alpha U1 + b (U0 + U1).
As2Pair as2_mul_b(const As2Pair& x, Ops& ops) { return {ops.alpha(x.u1), ops.add(x.u0, x.u1)}; }

ExtElem square_as2(const ExtElem& x, Ops& ops) {
  const NormalCoords c = Ops::shift(x.blocks[0]);
  const NormalCoords d = Ops::shift(x.blocks[1]);
  return {{ops.add(c, ops.alpha(d)), d}};
}

ExtElem mul_as2(const ExtElem& x, const ExtElem& y, Ops& ops) {
  const As2Pair p = as2_mul({x.blocks[0], x.blocks[1]}, {y.blocks[0], y.blocks[1]}, ops);
  return {{p.u0, p.u1}};
}

// (C0 + b C1 + b^2 C2)^2 = C0> + b alpha C2> + b^2 C1>.
ExtElem square_k3(const ExtElem& x, Ops& ops) {
  return {{Ops::shift(x.blocks[0]), ops.alpha(Ops::shift(x.blocks[2])), Ops::shift(x.blocks[1])}};
}

ExtElem mul_k3(const ExtElem& x, const ExtElem& y, Ops& ops) {
  const NormalCoords& c0 = x.blocks[0];
  const NormalCoords& c1 = x.blocks[1];
  const NormalCoords& c2 = x.blocks[2];
  const NormalCoords& d0 = y.blocks[0];
  const NormalCoords& d1 = y.blocks[1];
  const NormalCoords& d2 = y.blocks[2];
  const NormalCoords c01 = ops.add(c0, c1);
  const NormalCoords d01 = ops.add(d0, d1);
  const NormalCoords c02 = ops.add(c0, c2);
  const NormalCoords d02 = ops.add(d0, d2);
  const NormalCoords c012 = ops.add(c01, c2);
  const NormalCoords d012 = ops.add(d01, d2);
  const NormalCoords p00 = ops.mul(c0, d0);
  const NormalCoords p11 = ops.mul(c1, d1);
  const NormalCoords p22 = ops.mul(c2, d2);
  const NormalCoords p01 = ops.mul(c01, d01);
  const NormalCoords p02 = ops.mul(c02, d02);
  const NormalCoords p012 = ops.mul(c012, d012);
  const NormalCoords x12 = ops.add(ops.add(ops.add(p00, p01), p02), p012);
  const NormalCoords out0 = ops.add(p00, ops.alpha(x12));
  const NormalCoords p00_11 = ops.add(p00, p11);
  const NormalCoords out1 = ops.add(ops.add(p00_11, ops.alpha(p22)), p01);
  const NormalCoords out2 = ops.add(ops.add(p00_11, p22), p02);
  return {{out0, out1, out2}};
}

ExtElem square_asw4(const ExtElem& x, Ops& ops) {
  const NormalCoords a = Ops::shift(x.blocks[0]);
  const NormalCoords b = Ops::shift(x.blocks[1]);
  const NormalCoords c = Ops::shift(x.blocks[2]);
  const NormalCoords d = Ops::shift(x.blocks[3]);
  const NormalCoords ab = ops.alpha(b);
  const NormalCoords ac = ops.alpha(c);
  const NormalCoords a2c = ops.alpha(ac);
  const NormalCoords ad = ops.alpha(d);
  const NormalCoords a2d = ops.alpha(ad);
  const NormalCoords a3d = ops.alpha(a2d);
  const NormalCoords d_poly = ops.add(ops.add(a3d, a2d), ad);
  const NormalCoords block0 = ops.add(ops.add(ops.add(a, ab), a2c), d_poly);
  const NormalCoords block1 = ops.add(ops.add(b, ops.add(c, ac)), d);
  const NormalCoords block2 = ops.add(c, ad);
  return {{block0, block1, block2, d}};
}

// With a = A1A2, b = B1B2, c = C1C2, d = D1D2, ab = (A1+B1)(A2+B2),
// cd = (C1+D1)(C2+D2), ac = (A1+C1)(A2+C2), bd = (B1+D1)(B2+D2),
// abcd = (A1+B1+C1+D1)(A2+B2+C2+D2) and G = cd + c + d:
//   1      a + alpha b + alpha^2 c + (alpha^3+alpha^2+alpha) d + (alpha^2+alpha) G
//   b0     a + (alpha+1) c + d + ab + (alpha^2+alpha+1) G
//   b1     a + alpha b + ac + alpha bd
//   b0 b1  a + ab + ac + abcd
ExtElem mul_asw4(const ExtElem& x, const ExtElem& y, Ops& ops) {
  const NormalCoords& a1 = x.blocks[0];
  const NormalCoords& b1 = x.blocks[1];
  const NormalCoords& c1 = x.blocks[2];
  const NormalCoords& d1 = x.blocks[3];
  const NormalCoords& a2 = y.blocks[0];
  const NormalCoords& b2 = y.blocks[1];
  const NormalCoords& c2 = y.blocks[2];
  const NormalCoords& d2 = y.blocks[3];

  const NormalCoords ab1 = ops.add(a1, b1);
  const NormalCoords ab2 = ops.add(a2, b2);
  const NormalCoords cd1 = ops.add(c1, d1);
  const NormalCoords cd2 = ops.add(c2, d2);
  const NormalCoords ac1 = ops.add(a1, c1);
  const NormalCoords ac2 = ops.add(a2, c2);
  const NormalCoords bd1 = ops.add(b1, d1);
  const NormalCoords bd2 = ops.add(b2, d2);
  const NormalCoords abcd1 = ops.add(ab1, cd1);
  const NormalCoords abcd2 = ops.add(ab2, cd2);

  const NormalCoords pa = ops.mul(a1, a2);
  const NormalCoords pb = ops.mul(b1, b2);
  const NormalCoords pc = ops.mul(c1, c2);
  const NormalCoords pd = ops.mul(d1, d2);
  const NormalCoords pab = ops.mul(ab1, ab2);
  const NormalCoords pcd = ops.mul(cd1, cd2);
  const NormalCoords pac = ops.mul(ac1, ac2);
  const NormalCoords pbd = ops.mul(bd1, bd2);
  const NormalCoords pabcd = ops.mul(abcd1, abcd2);

  const NormalCoords g = ops.add(ops.add(pcd, pc), pd);

  const NormalCoords alpha_b = ops.alpha(pb);
  const NormalCoords alpha_c = ops.alpha(pc);
  const NormalCoords alpha2_c = ops.alpha(alpha_c);
  const NormalCoords alpha_d = ops.alpha(pd);
  const NormalCoords alpha2_d = ops.alpha(alpha_d);
  const NormalCoords alpha3_d = ops.alpha(alpha2_d);
  const NormalCoords alpha_g = ops.alpha(g);
  const NormalCoords alpha2_g = ops.alpha(alpha_g);
  const NormalCoords alpha_bd = ops.alpha(pbd);

  const NormalCoords d_poly = ops.add(ops.add(alpha3_d, alpha2_d), alpha_d);
  const NormalCoords g_poly = ops.add(alpha2_g, alpha_g);
  const NormalCoords a_alpha_b = ops.add(pa, alpha_b);
  const NormalCoords block0 = ops.add(ops.add(ops.add(a_alpha_b, alpha2_c), d_poly), g_poly);

  const NormalCoords c_poly = ops.add(alpha_c, pc);
  const NormalCoords g_poly1 = ops.add(g_poly, g);
  const NormalCoords block1 = ops.add(ops.add(ops.add(ops.add(pa, c_poly), pd), pab), g_poly1);

  const NormalCoords block2 = ops.add(ops.add(a_alpha_b, pac), alpha_bd);
  const NormalCoords block3 = ops.add(ops.add(ops.add(pa, pab), pac), pabcd);
  return {{block0, block1, block2, block3}};
}

// (A + bB) + g (C + bD) + g^2 (E + bF), squared with g^4 = g b:
//   U^2 = (A> + alpha B>) + b B>
//   g (b W^2) = g (alpha F> + b (E> + alpha F> + F>))
//   g^2 V^2 = g^2 ((C> + alpha D>) + b D>)
ExtElem square_ka6(const ExtElem& x, Ops& ops) {
  const NormalCoords a = Ops::shift(x.blocks[0]);
  const NormalCoords b = Ops::shift(x.blocks[1]);
  const NormalCoords c = Ops::shift(x.blocks[2]);
  const NormalCoords d = Ops::shift(x.blocks[3]);
  const NormalCoords e = Ops::shift(x.blocks[4]);
  const NormalCoords f = Ops::shift(x.blocks[5]);
  const NormalCoords alpha_f = ops.alpha(f);
  return {{ops.add(a, ops.alpha(b)), b, alpha_f, ops.add(ops.add(e, alpha_f), f), ops.add(c, ops.alpha(d)), d}};
}

// The Kummer product of mul_k3 with coefficients in the Artin-Schreier
// step and b in place of alpha.
ExtElem mul_ka6(const ExtElem& x, const ExtElem& y, Ops& ops) {
  const As2Pair c0{x.blocks[0], x.blocks[1]};
  const As2Pair c1{x.blocks[2], x.blocks[3]};
  const As2Pair c2{x.blocks[4], x.blocks[5]};
  const As2Pair d0{y.blocks[0], y.blocks[1]};
  const As2Pair d1{y.blocks[2], y.blocks[3]};
  const As2Pair d2{y.blocks[4], y.blocks[5]};
  const As2Pair c01 = as2_add(c0, c1, ops);
  const As2Pair d01 = as2_add(d0, d1, ops);
  const As2Pair c02 = as2_add(c0, c2, ops);
  const As2Pair d02 = as2_add(d0, d2, ops);
  const As2Pair c012 = as2_add(c01, c2, ops);
  const As2Pair d012 = as2_add(d01, d2, ops);
  const As2Pair p00 = as2_mul(c0, d0, ops);
  const As2Pair p11 = as2_mul(c1, d1, ops);
  const As2Pair p22 = as2_mul(c2, d2, ops);
  const As2Pair p01 = as2_mul(c01, d01, ops);
  const As2Pair p02 = as2_mul(c02, d02, ops);
  const As2Pair p012 = as2_mul(c012, d012, ops);
  const As2Pair x12 = as2_add(as2_add(as2_add(p00, p01, ops), p02, ops), p012, ops);
  const As2Pair out0 = as2_add(p00, as2_mul_b(x12, ops), ops);
  const As2Pair p00_11 = as2_add(p00, p11, ops);
  const As2Pair out1 = as2_add(as2_add(p00_11, as2_mul_b(p22, ops), ops), p01, ops);
  const As2Pair out2 = as2_add(as2_add(p00_11, p22, ops), p02, ops);
  return {{out0.u0, out0.u1, out1.u0, out1.u1, out2.u0, out2.u1}};
}

SymPoly to_sym(const ExtElem& x, const ExtBasisCtx& ctx) {
  const std::size_t vars = ctx.generator_names().size();
  SymPoly p(vars, ctx.n());
  for (std::size_t b = 0; b < ctx.d(); ++b) p.add_term(ctx.monomials()[b], x.blocks[b]);
  return p;
}

SymPoly monomial_rhs(std::size_t vars, std::initializer_list<std::pair<MonomialExps, NormalCoords>> terms,
                     std::size_t n) {
  SymPoly p(vars, n);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

std::string_view to_string(ExtKind kind) {
  switch (kind) {
    case ExtKind::kAs2: return "as2";
    case ExtKind::kK3: return "k3";
    case ExtKind::kAsw4: return "asw4";
    case ExtKind::kKa6: return "ka6";
  }
  return "unknown";
}

std::optional<ExtKind> parse_ext_kind(std::string_view s) {
  for (ExtKind k : {ExtKind::kAs2, ExtKind::kK3, ExtKind::kAsw4, ExtKind::kKa6}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::size_t block_count(ExtKind kind) {
  switch (kind) {
    case ExtKind::kAs2: return 2;
    case ExtKind::kK3: return 3;
    case ExtKind::kAsw4: return 4;
    case ExtKind::kKa6: return 6;
  }
  return 0;
}

OpCounter& OpCounter::operator+=(const OpCounter& o) {
  base_mults += o.base_mults;
  base_adds += o.base_adds;
  table_vector_products += o.table_vector_products;
  return *this;
}

std::string ExtElem::to_string() const {
  std::string s;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b != 0) s += ':';
    std::string hex = BitPoly::from_bits(blocks[b]).to_hex();
    hex.resize(std::max(hex.size(), 2 * ((blocks[b].size() + 7) / 8)), '0');
    s += hex;
  }
  return s;
}

ExtElem ExtElem::parse(std::string_view s, std::size_t n, std::size_t d) {
  ExtElem x;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(s.find(':', pos), s.size());
    const BitPoly p = BitPoly::parse(s.substr(pos, end - pos));
    if (p.degree() && *p.degree() >= n) throw Error(ErrorCode::kInvalidElement, "block exceeds n bits");
    x.blocks.push_back(p.to_bits<NormalBasisTag>(n));
    if (end == s.size()) break;
    pos = end + 1;
  }
  if (x.blocks.size() != d) throw Error(ErrorCode::kInvalidElement, "wrong number of blocks");
  return x;
}

BitVec flatten(const ExtElem& x) {
  const std::size_t n = x.blocks.empty() ? 0 : x.blocks[0].size();
  BitVec v(n * x.blocks.size());
  for (std::size_t b = 0; b < x.blocks.size(); ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x.blocks[b].get(i)) v.set(i + n * b, true);
    }
  }
  return v;
}

ExtElem unflatten(const BitVec& v, std::size_t n, std::size_t d) {
  if (v.size() != n * d) throw Error(ErrorCode::kInvalidElement, "flat vector length is not n*d");
  ExtElem x;
  for (std::size_t b = 0; b < d; ++b) {
    NormalCoords block(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (v.get(i + n * b)) block.set(i, true);
    }
    x.blocks.push_back(std::move(block));
  }
  return x;
}

ExtBasisCtx::ExtBasisCtx(NormalBasisCtx base, ExtKind kind, std::vector<ExtRule> rules)
    : base_(std::move(base)), kind_(kind), rules_(std::move(rules)) {
  switch (kind_) {
    case ExtKind::kAs2:
      names_ = {"b"};
      monomials_ = {{0}, {1}};
      break;
    case ExtKind::kK3:
      names_ = {"b"};
      monomials_ = {{0}, {1}, {2}};
      break;
    case ExtKind::kAsw4:
      names_ = {"b0", "b1"};
      monomials_ = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
      break;
    case ExtKind::kKa6:
      names_ = {"b", "g"};
      monomials_ = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}};
      break;
  }
  alpha_ = base_.alpha_coords();
  alpha2_ = base_.mul_alpha(alpha_);
  alpha3_ = base_.mul_alpha(alpha2_);
  one_plus_alpha_ = base_.one() ^ alpha_;
}

ExtElem ExtBasisCtx::zero() const { return ExtElem{std::vector<NormalCoords>(d(), base_.zero())}; }

ExtElem ExtBasisCtx::one() const { return embed_base(base_.one(), *this); }

void ExtBasisCtx::check(const ExtElem& x) const {
  if (x.blocks.size() != d()) {
    throw Error(ErrorCode::kInvalidElement, "element has " + std::to_string(x.blocks.size()) + " blocks, expected " +
                                                std::to_string(d()));
  }
  for (const auto& b : x.blocks) base_.check(b);
}

ExtBasisCtx build_as2(const NormalBasisCtx& nb) {
  const std::size_t n = nb.n();
  ExtRule rule{0, 2, monomial_rhs(1, {{{1}, nb.one()}, {{0}, nb.alpha_coords()}}, n)};
  return ExtBasisCtx(nb, ExtKind::kAs2, {rule});
}

ExtBasisCtx build_kummer3(const NormalBasisCtx& nb) {
  if (nb.n() % 2 != 0) {
    throw Error(ErrorCode::kUnsupportedDegree, "3 does not divide 2^n - 1 for odd n = " + std::to_string(nb.n()));
  }
  if (is_cube(nb.alpha(), nb.field())) {
    throw Error(ErrorCode::kNoKummerExtension, "alpha is a cube, so x^3 - alpha is reducible");
  }
  ExtRule rule{0, 3, monomial_rhs(1, {{{0}, nb.alpha_coords()}}, nb.n())};
  return ExtBasisCtx(nb, ExtKind::kK3, {rule});
}

ExtBasisCtx build_asw4(const NormalBasisCtx& nb) {
  Asw4Rules rules = asw4_reduction_rules(nb.alpha_coords(), nb);
  // b1^2 + b1 = (1 + alpha) b0 + alpha^2 has a root in F_{2^{2n}} exactly
  // when the right side has absolute trace 0 there.
  const ExtBasisCtx as2 = build_as2(nb);
  const OracleEmbedding emb = build_embedding(as2);
  SymPoly rest = rules.b1.rhs;
  rest.add_term({0, 1}, nb.one());
  ExtElem c = as2.zero();
  c.blocks[0] = rest.coefficient({0, 0});
  c.blocks[1] = rest.coefficient({1, 0});
  if (!trace(emb.image(c), emb.big())) {
    throw Error(ErrorCode::kNoExtension, "b1 relation splits over F_{2^{2n}} (n = " + std::to_string(nb.n()) + ")");
  }
  return ExtBasisCtx(nb, ExtKind::kAsw4, {std::move(rules.b0), std::move(rules.b1)});
}

ExtBasisCtx build_ka6(const NormalBasisCtx& nb) {
  const ExtBasisCtx as2 = build_as2(nb);
  const OracleEmbedding emb = build_embedding(as2);
  if (is_cube(emb.generator_images()[0], emb.big())) {
    throw Error(ErrorCode::kNoKummerExtension, "b is a cube in F_{2^{2n}}");
  }
  const std::size_t n = nb.n();
  ExtRule b_rule{0, 2, monomial_rhs(2, {{{1, 0}, nb.one()}, {{0, 0}, nb.alpha_coords()}}, n)};
  ExtRule g_rule{1, 3, monomial_rhs(2, {{{1, 0}, nb.one()}}, n)};
  return ExtBasisCtx(nb, ExtKind::kKa6, {b_rule, g_rule});
}

ExtBasisCtx build_extension(const NormalBasisCtx& nb, ExtKind kind) {
  switch (kind) {
    case ExtKind::kAs2: return build_as2(nb);
    case ExtKind::kK3: return build_kummer3(nb);
    case ExtKind::kAsw4: return build_asw4(nb);
    case ExtKind::kKa6: return build_ka6(nb);
  }
  throw Error(ErrorCode::kDomain, "unknown extension kind");
}

std::pair<ExtElem, OpCounter> square(const ExtElem& x, const ExtBasisCtx& ctx) {
  ctx.check(x);
  Ops ops(ctx.base());
  ExtElem out;
  switch (ctx.kind()) {
    case ExtKind::kAs2: out = square_as2(x, ops); break;
    case ExtKind::kK3: out = square_k3(x, ops); break;
    case ExtKind::kAsw4: out = square_asw4(x, ops); break;
    case ExtKind::kKa6: out = square_ka6(x, ops); break;
  }
  return {std::move(out), ops.count()};
}

std::pair<ExtElem, OpCounter> mul(const ExtElem& x, const ExtElem& y, const ExtBasisCtx& ctx) {
  ctx.check(x);
  ctx.check(y);
  Ops ops(ctx.base());
  ExtElem out;
  switch (ctx.kind()) {
    case ExtKind::kAs2: out = mul_as2(x, y, ops); break;
    case ExtKind::kK3: out = mul_k3(x, y, ops); break;
    case ExtKind::kAsw4: out = mul_asw4(x, y, ops); break;
    case ExtKind::kKa6: out = mul_ka6(x, y, ops); break;
  }
  return {std::move(out), ops.count()};
}

ExtElem reference_mul(const ExtElem& x, const ExtElem& y, const ExtBasisCtx& ctx) {
  ctx.check(x);
  ctx.check(y);
  const SymPoly p = reduce(sym_mul(to_sym(x, ctx), to_sym(y, ctx), ctx.base()), ctx.rules(), ctx.base());
  ExtElem out;
  for (const auto& mono : ctx.monomials()) out.blocks.push_back(p.coefficient(mono));
  for (const auto& [e, c] : p.terms()) {
    bool known = false;
    for (const auto& mono : ctx.monomials()) known = known || mono == e;
    if (!known) throw Error(ErrorCode::kConstructionContradiction, "reduction left a monomial outside the basis");
  }
  return out;
}

ExtElem embed_base(const NormalCoords& v, const ExtBasisCtx& ctx) {
  ctx.base().check(v);
  ExtElem x = ctx.zero();
  x.blocks[0] = v;
  return x;
}

std::optional<NormalCoords> project_base(const ExtElem& x) {
  if (x.blocks.empty()) return std::nullopt;
  for (std::size_t b = 1; b < x.blocks.size(); ++b) {
    if (x.blocks[b].any()) return std::nullopt;
  }
  return x.blocks[0];
}

}  // namespace charfield2
