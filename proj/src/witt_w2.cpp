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

#include "charfield2/witt_w2.hpp"

#include "charfield2/error.hpp"

namespace charfield2 {
namespace {

// p = g^degree + rest with unit leading coefficient; returns g^degree = rest.
ExtRule solve_for_power(const SymPoly& p, std::size_t generator, unsigned degree, const NormalBasisCtx& nb) {
  MonomialExps lead(p.vars(), 0);
  lead[generator] = degree;
  if (p.coefficient(lead) != nb.one()) {
    throw Error(ErrorCode::kConstructionContradiction, "leading coefficient of the relation is not 1");
  }
  ExtRule rule{generator, degree, SymPoly(p.vars(), p.n())};
  for (const auto& [e, c] : p.terms()) {
    if (e == lead) continue;
    if (e[generator] >= degree) {
      throw Error(ErrorCode::kConstructionContradiction, "relation has a term above the leading power");
    }
    rule.rhs.add_term(e, c);
  }
  return rule;
}

}  // namespace

Asw4Rules asw4_reduction_rules(const NormalCoords& alpha_coords, const NormalBasisCtx& nb) {
  nb.check(alpha_coords);
  const SymRing ring{&nb};
  const W2Vector<SymPoly> xi{SymPoly::variable(2, 0, nb), SymPoly::variable(2, 1, nb)};
  const SymPoly a = SymPoly::constant(2, alpha_coords);
  const W2Vector<SymPoly> s = w2_add(wp_map(xi, ring), W2Vector<SymPoly>{a, a}, ring);
  ExtRule b0 = solve_for_power(s.x0, 0, 2, nb);
  const SymPoly second = reduce(s.x1, {b0}, nb);
  ExtRule b1 = solve_for_power(second, 1, 2, nb);
  return {std::move(b0), std::move(b1)};
}

}  // namespace charfield2
