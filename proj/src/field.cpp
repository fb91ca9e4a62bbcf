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

#include <algorithm>
#include <string>
#include <utility>

#include "charfield2/error.hpp"

namespace charfield2 {

FieldCtx::FieldCtx(BitPoly modulus) : modulus_(std::move(modulus)) {
  const auto deg = modulus_.degree();
  if (!deg || *deg == 0) throw Error(ErrorCode::kDomain, "field modulus must have degree >= 1");
  if (!is_irreducible(modulus_)) {
    throw Error(ErrorCode::kDomain, "modulus " + modulus_.to_string() + " is reducible");
  }
  n_ = *deg;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    reduction_.push_back((BitPoly::monomial(n_ + k) % modulus_).to_bits<PolyBasisTag>(n_));
  }
  if (n_ <= 64) factors_ = factor_two_power_minus_one(static_cast<unsigned>(n_));
}

BigInt FieldCtx::group_order() const { return (BigInt(1) << n_) - 1; }

Gf2nElem FieldCtx::element(const BitPoly& p) const {
  return (p % modulus_).to_bits<PolyBasisTag>(n_);
}

Gf2nElem FieldCtx::x_power(std::size_t k) const { return element(BitPoly::monomial(k)); }

void FieldCtx::check(const Gf2nElem& a) const {
  if (a.size() != n_) {
    throw Error(ErrorCode::kInvalidElement, "element of length " + std::to_string(a.size()) +
                                                " in a field of degree " + std::to_string(n_));
  }
}

Gf2nElem FieldCtx::reduce(std::span<const std::uint64_t> wide) const {
  Gf2nElem out = Gf2nElem::from_words(n_, wide);
  for (std::size_t w = n_ / 64; w < wide.size(); ++w) {
    std::uint64_t bits = wide[w];
    if (w == n_ / 64) bits &= ~((std::uint64_t{1} << (n_ % 64)) - 1);
    while (bits != 0) {
      const std::size_t pos = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      out ^= reduction_[pos - n_];
      bits &= bits - 1;
    }
  }
  return out;
}

Gf2nElem FieldCtx::mul(const Gf2nElem& a, const Gf2nElem& b) const {
  check(a);
  check(b);
  const auto aw = a.words();
  const auto bw = b.words();
  std::vector<std::uint64_t> wide(aw.size() + bw.size(), 0);
  for (std::size_t i = 0; i < aw.size(); ++i) {
    if (aw[i] == 0) continue;
    for (std::size_t j = 0; j < bw.size(); ++j) {
      const auto [lo, hi] = clmul64(aw[i], bw[j]);
      wide[i + j] ^= lo;
      wide[i + j + 1] ^= hi;
    }
  }
  return reduce(wide);
}

Gf2nElem poly_mul_mod(const Gf2nElem& a, const Gf2nElem& b, const FieldCtx& ctx) {
  return ctx.mul(a, b);
}

Gf2nElem frobenius(const Gf2nElem& a, const FieldCtx& ctx) { return ctx.square(a); }

bool trace(const Gf2nElem& a, const FieldCtx& ctx) {
  ctx.check(a);
  Gf2nElem acc = a;
  Gf2nElem cur = a;
  for (std::size_t i = 1; i < ctx.n(); ++i) {
    cur = ctx.square(cur);
    acc ^= cur;
  }
  // The trace lies in F_2, so only the constant coefficient can be set.
  return acc.get(0);
}

Gf2nElem pow(const Gf2nElem& a, std::uint64_t e, const FieldCtx& ctx) {
  ctx.check(a);
  Gf2nElem result = ctx.one();
  Gf2nElem base = a;
  while (e != 0) {
    if (e & 1U) result = ctx.mul(result, base);
    base = ctx.square(base);
    e >>= 1;
  }
  return result;
}

Gf2nElem pow(const Gf2nElem& a, const BigInt& e, const FieldCtx& ctx) {
  ctx.check(a);
  if (e < 0) throw Error(ErrorCode::kDomain, "negative exponent");
  Gf2nElem result = ctx.one();
  if (e == 0) return result;
  const std::size_t top = boost::multiprecision::msb(e);
  for (std::size_t i = top + 1; i-- > 0;) {
    result = ctx.square(result);
    if (boost::multiprecision::bit_test(e, i)) result = ctx.mul(result, a);
  }
  return result;
}

Gf2nElem inverse(const Gf2nElem& a, const FieldCtx& ctx) {
  ctx.check(a);
  if (a.none()) throw Error(ErrorCode::kDomain, "inverse of zero");
  // Extended Euclid: track u with u * a = r (mod f).
  BitPoly r0 = ctx.modulus();
  BitPoly r1 = BitPoly::from_bits(a);
  BitPoly u0;
  BitPoly u1 = BitPoly::monomial(0);
  while (r1.degree() && *r1.degree() > 0) {
    auto [q, r] = r0.divmod(r1);
    BitPoly u = u0 ^ (q * u1);
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u);
  }
  return ctx.element(u1);
}

std::uint64_t multiplicative_order(const Gf2nElem& a, const FieldCtx& ctx) {
  ctx.check(a);
  if (a.none()) throw Error(ErrorCode::kDomain, "order of zero");
  if (!ctx.order_factors()) {
    throw Error(ErrorCode::kUnsupportedDegree, "multiplicative order needs n <= 64");
  }
  std::uint64_t order = ctx.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ctx.n()) - 1;
  for (const auto& [p, e] : *ctx.order_factors()) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow(a, order / p, ctx) == ctx.one()) {
        order /= p;
      } else {
        break;
      }
    }
  }
  return order;
}

bool is_primitive(const Gf2nElem& a, const FieldCtx& ctx) {
  const std::uint64_t full = ctx.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ctx.n()) - 1;
  return multiplicative_order(a, ctx) == full;
}

bool is_cube(const Gf2nElem& a, const FieldCtx& ctx) {
  ctx.check(a);
  // 3 | 2^n - 1 exactly when n is even.
  if (ctx.n() % 2 != 0) {
    throw Error(ErrorCode::kUnsupportedDegree, "3 does not divide 2^n - 1 for odd n");
  }
  if (a.none()) throw Error(ErrorCode::kDomain, "cube test of zero");
  return pow(a, ctx.group_order() / 3, ctx) == ctx.one();
}

std::optional<Gf2nElem> solve_artin_schreier(const Gf2nElem& c, const FieldCtx& ctx) {
  ctx.check(c);
  const std::size_t n = ctx.n();
  std::vector<BitVec> cols;
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Gf2nElem xi = Gf2nElem::unit(n, i);
    cols.push_back((ctx.square(xi) ^ xi).retag<RawTag>());
  }
  const BitMatrix map = BitMatrix::from_columns(cols, n);
  auto sol = map.solve(c.retag<RawTag>());
  if (!sol) return std::nullopt;
  Gf2nElem y = sol->retag<PolyBasisTag>();
  if (y.get(0)) y.flip(0);
  return y;
}

Gf2nElem evaluate(const BitPoly& p, const Gf2nElem& a, const FieldCtx& ctx) {
  ctx.check(a);
  Gf2nElem acc = ctx.zero();
  const auto deg = p.degree();
  if (!deg) return acc;
  for (std::size_t i = *deg + 1; i-- > 0;) {
    acc = ctx.mul(acc, a);
    if (p.coeff(i)) acc ^= ctx.one();
  }
  return acc;
}

namespace {

// Polynomials over the field, coefficients low to high, no trailing zeros.
using FieldPoly = std::vector<Gf2nElem>;

void trim(FieldPoly& p) {
  while (!p.empty() && p.back().none()) p.pop_back();
}

FieldPoly make_monic(FieldPoly p, const FieldCtx& ctx) {
  trim(p);
  if (p.empty()) return p;
  const Gf2nElem lead_inv = inverse(p.back(), ctx);
  for (auto& c : p) c = ctx.mul(c, lead_inv);
  return p;
}

// Remainder of a modulo a monic m.
FieldPoly poly_mod(FieldPoly a, const FieldPoly& m, const FieldCtx& ctx) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const Gf2nElem lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] ^= ctx.mul(lead, m[i]);
    trim(a);
  }
  return a;
}

std::pair<FieldPoly, FieldPoly> poly_divmod(FieldPoly a, const FieldPoly& m, const FieldCtx& ctx) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  FieldPoly q(a.size() > dm ? a.size() - dm : 0, ctx.zero());
  while (a.size() > dm) {
    const Gf2nElem lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    q[shift] ^= lead;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] ^= ctx.mul(lead, m[i]);
    trim(a);
  }
  trim(q);
  return {q, a};
}

FieldPoly poly_mul_mod_m(const FieldPoly& a, const FieldPoly& b, const FieldPoly& m, const FieldCtx& ctx) {
  if (a.empty() || b.empty()) return {};
  FieldPoly prod(a.size() + b.size() - 1, ctx.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].none()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] ^= ctx.mul(a[i], b[j]);
  }
  return poly_mod(std::move(prod), m, ctx);
}

FieldPoly poly_add(FieldPoly a, const FieldPoly& b, const FieldCtx& ctx) {
  if (a.size() < b.size()) a.resize(b.size(), ctx.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
  trim(a);
  return a;
}

FieldPoly poly_gcd(FieldPoly a, FieldPoly b, const FieldCtx& ctx) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    b = make_monic(std::move(b), ctx);
    FieldPoly r = poly_mod(a, b, ctx);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), ctx);
}

std::size_t degree(const FieldPoly& p) { return p.size() - 1; }

void split_roots(const FieldPoly& g, const FieldCtx& ctx, std::vector<Gf2nElem>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(g[0]);  // X + c has root c in characteristic 2
    return;
  }
  const std::size_t n = ctx.n();
  for (std::size_t k = 0; k < n; ++k) {
    // acc = Tr(delta * X) mod g with delta = x^k
    FieldPoly t = poly_mod(FieldPoly{ctx.zero(), Gf2nElem::unit(n, k)}, g, ctx);
    FieldPoly acc = t;
    for (std::size_t i = 1; i < n; ++i) {
      t = poly_mul_mod_m(t, t, g, ctx);
      acc = poly_add(std::move(acc), t, ctx);
    }
    FieldPoly h = poly_gcd(g, acc, ctx);
    if (!h.empty() && degree(h) > 0 && degree(h) < degree(g)) {
      auto [q, r] = poly_divmod(g, h, ctx);
      if (!r.empty()) throw Error(ErrorCode::kConstructionContradiction, "inexact factor split");
      split_roots(h, ctx, out);
      split_roots(make_monic(std::move(q), ctx), ctx, out);
      return;
    }
  }
  throw Error(ErrorCode::kConstructionContradiction, "root splitting did not separate factors");
}

}  // namespace

std::vector<Gf2nElem> find_roots(std::span<const Gf2nElem> coeffs, const FieldCtx& ctx) {
  for (const auto& c : coeffs) ctx.check(c);
  FieldPoly p = make_monic(FieldPoly(coeffs.begin(), coeffs.end()), ctx);
  if (p.empty()) throw Error(ErrorCode::kDomain, "roots of the zero polynomial");
  if (p.size() == 1) return {};
  // Linear part: gcd(p, X^{2^n} - X).
  FieldPoly h = poly_mod(FieldPoly{ctx.zero(), ctx.one()}, p, ctx);
  for (std::size_t i = 0; i < ctx.n(); ++i) h = poly_mul_mod_m(h, h, p, ctx);
  h = poly_add(std::move(h), FieldPoly{ctx.zero(), ctx.one()}, ctx);
  const FieldPoly g = poly_gcd(p, h, ctx);
  std::vector<Gf2nElem> roots;
  split_roots(g, ctx, roots);
  std::sort(roots.begin(), roots.end(),
            [](const Gf2nElem& a, const Gf2nElem& b) { return a.less_numeric(b); });
  return roots;
}

std::vector<Gf2nElem> cube_roots(const Gf2nElem& a, const FieldCtx& ctx) {
  const std::vector<Gf2nElem> coeffs{a, ctx.zero(), ctx.zero(), ctx.one()};
  return find_roots(coeffs, ctx);
}

}  // namespace charfield2
