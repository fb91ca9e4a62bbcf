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

// Truncated Witt vectors of length 2 over a ring of characteristic 2.
//
// The operations are templates over a ring adaptor exposing Elem, add, mul,
// neg and check, so the same code runs on field elements and on symbolic
// polynomials in the extension generators.

#ifndef CHARFIELD2_WITT_W2_HPP_
#define CHARFIELD2_WITT_W2_HPP_

#include <utility>

#include "charfield2/ext_rule.hpp"
#include "charfield2/field.hpp"
#include "charfield2/normal_basis.hpp"

namespace charfield2 {

template <class T>
struct W2Vector {
  T x0;
  T x1;
  friend bool operator==(const W2Vector&, const W2Vector&) = default;
};

// F_{2^n} in the polynomial basis.
struct FieldRing {
  using Elem = Gf2nElem;
  const FieldCtx* ctx;

  Elem add(const Elem& a, const Elem& b) const { return a ^ b; }
  Elem mul(const Elem& a, const Elem& b) const { return ctx->mul(a, b); }
  Elem neg(const Elem& a) const { return a; }
  void check(const Elem& a) const { ctx->check(a); }
};

// F_{2^n}[generators] with normal-coordinate coefficients, unreduced.
struct SymRing {
  using Elem = SymPoly;
  const NormalBasisCtx* nb;

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return sym_mul(a, b, *nb); }
  Elem neg(const Elem& a) const { return a; }
  void check(const Elem& a) const {
    if (a.n() != nb->n()) throw Error(ErrorCode::kContextMismatch, "coefficient length differs from the basis");
  }
};

template <class Ring>
void w2_check(const W2Vector<typename Ring::Elem>& x, const Ring& r) {
  r.check(x.x0);
  r.check(x.x1);
}

// (x0 + y0, x1 + y1 + x0 y0).
template <class Ring>
W2Vector<typename Ring::Elem> w2_add(const W2Vector<typename Ring::Elem>& x,
                                     const W2Vector<typename Ring::Elem>& y, const Ring& r) {
  w2_check(x, r);
  w2_check(y, r);
  return {r.add(x.x0, y.x0), r.add(r.add(x.x1, y.x1), r.mul(x.x0, y.x0))};
}

// Additive inverse read off the addition law: with y0 = -x0, the second
// component must cancel x1 + x0 y0.
template <class Ring>
W2Vector<typename Ring::Elem> w2_neg(const W2Vector<typename Ring::Elem>& x, const Ring& r) {
  w2_check(x, r);
  auto y0 = r.neg(x.x0);
  auto y1 = r.neg(r.add(x.x1, r.mul(x.x0, y0)));
  return {std::move(y0), std::move(y1)};
}

template <class Ring>
W2Vector<typename Ring::Elem> w2_sub(const W2Vector<typename Ring::Elem>& x,
                                     const W2Vector<typename Ring::Elem>& y, const Ring& r) {
  return w2_add(x, w2_neg(y, r), r);
}

// (x0 y0, x1 y0^2 + y1 x0^2).
template <class Ring>
W2Vector<typename Ring::Elem> w2_mul(const W2Vector<typename Ring::Elem>& x,
                                     const W2Vector<typename Ring::Elem>& y, const Ring& r) {
  w2_check(x, r);
  w2_check(y, r);
  return {r.mul(x.x0, y.x0),
          r.add(r.mul(x.x1, r.mul(y.x0, y.x0)), r.mul(y.x1, r.mul(x.x0, x.x0)))};
}

// Componentwise squaring.
template <class Ring>
W2Vector<typename Ring::Elem> w2_frobenius(const W2Vector<typename Ring::Elem>& x, const Ring& r) {
  w2_check(x, r);
  return {r.mul(x.x0, x.x0), r.mul(x.x1, x.x1)};
}

// (x0^2 + x0, x1^2 + x1 + x0^3), the Witt sum of F(x) and x.
template <class Ring>
W2Vector<typename Ring::Elem> wp_map(const W2Vector<typename Ring::Elem>& x, const Ring& r) {
  return w2_add(w2_frobenius(x, r), x, r);
}

// F(x) - x.
template <class Ring>
W2Vector<typename Ring::Elem> frobenius_minus_id(const W2Vector<typename Ring::Elem>& x, const Ring& r) {
  return w2_sub(w2_frobenius(x, r), x, r);
}

struct Asw4Rules {
  ExtRule b0;
  ExtRule b1;
};

// Expands wp_map((b0, b1)) + (alpha, alpha) = 0 over the generators b0, b1,
// solves the first component for b0^2, reduces the second with it and solves
// for b1^2. Yields b0^2 = b0 + alpha and b1^2 = b1 + (1 + alpha) b0 + alpha^2.
Asw4Rules asw4_reduction_rules(const NormalCoords& alpha_coords, const NormalBasisCtx& nb);

}  // namespace charfield2

#endif  // CHARFIELD2_WITT_W2_HPP_
