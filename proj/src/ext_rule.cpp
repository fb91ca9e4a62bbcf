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

#include "charfield2/ext_rule.hpp"

#include "charfield2/bitpoly.hpp"
#include "charfield2/error.hpp"

namespace charfield2 {

SymPoly SymPoly::constant(std::size_t vars, const NormalCoords& c) {
  SymPoly p(vars, c.size());
  p.add_term(MonomialExps(vars, 0), c);
  return p;
}

SymPoly SymPoly::variable(std::size_t vars, std::size_t index, const NormalBasisCtx& nb) {
  SymPoly p(vars, nb.n());
  MonomialExps e(vars, 0);
  e[index] = 1;
  p.add_term(e, nb.one());
  return p;
}

NormalCoords SymPoly::coefficient(const MonomialExps& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? NormalCoords(n_) : it->second;
}

void SymPoly::add_term(const MonomialExps& e, const NormalCoords& c) {
  if (e.size() != vars_ || c.size() != n_) {
    throw Error(ErrorCode::kContextMismatch, "monomial or coefficient does not fit the polynomial ring");
  }
  if (c.none()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second ^= c;
    if (it->second.none()) terms_.erase(it);
  }
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
  if (a.vars_ != b.vars_ || a.n_ != b.n_) throw Error(ErrorCode::kContextMismatch, "polynomial rings differ");
  SymPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

SymPoly sym_mul(const SymPoly& a, const SymPoly& b, const NormalBasisCtx& nb) {
  if (a.vars() != b.vars() || a.n() != b.n()) throw Error(ErrorCode::kContextMismatch, "polynomial rings differ");
  SymPoly out(a.vars(), a.n());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      MonomialExps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, nb.mul(ca, cb));
    }
  }
  return out;
}

std::string ExtRule::to_string(const std::vector<std::string>& names) const {
  auto monomial = [&](const MonomialExps& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += names[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? std::string("1") : s;
  };
  MonomialExps lhs(rhs.vars(), 0);
  lhs[generator] = degree;
  std::string s = monomial(lhs) + " =";
  bool first = true;
  for (const auto& [e, c] : rhs.terms()) {
    s += first ? " " : " + ";
    first = false;
    s += "[" + c.to_bitstring() + "]";
    if (monomial(e) != "1") s += " " + monomial(e);
  }
  if (first) s += " 0";
  return s;
}

SymPoly reduce(const SymPoly& p, const std::vector<ExtRule>& rules, const NormalBasisCtx& nb) {
  SymPoly cur = p;
  // Each pass lowers the exponent of one generator in every offending term.
  for (std::size_t guard = 0; guard < 1000; ++guard) {
    SymPoly next(cur.vars(), cur.n());
    bool changed = false;
    for (const auto& [e, c] : cur.terms()) {
      const ExtRule* hit = nullptr;
      for (const auto& r : rules) {
        if (e[r.generator] >= r.degree) {
          hit = &r;
          break;
        }
      }
      if (hit == nullptr) {
        next.add_term(e, c);
        continue;
      }
      changed = true;
      MonomialExps rest = e;
      rest[hit->generator] -= hit->degree;
      SymPoly mono(cur.vars(), cur.n());
      mono.add_term(rest, c);
      next = next + sym_mul(mono, hit->rhs, nb);
    }
    cur = std::move(next);
    if (!changed) return cur;
  }
  throw Error(ErrorCode::kConstructionContradiction, "reduction rules do not terminate");
}

}  // namespace charfield2
