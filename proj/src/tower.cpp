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

#include "charfield2/tower.hpp"

#include <utility>

#include "charfield2/bitpoly.hpp"
#include "charfield2/error.hpp"
#include "charfield2/mult_tables.hpp"
#include "json.hpp"

namespace charfield2 {
namespace {

void require_kind(const ExtBasisCtx& ctx, ExtKind kind) {
  if (ctx.kind() != kind) {
    throw Error(ErrorCode::kContextMismatch,
                "expected a " + std::string(to_string(kind)) + " context, got " + std::string(to_string(ctx.kind())));
  }
}

std::optional<ExtBasisCtx> try_kummer3(const NormalBasisCtx& nb) {
  try {
    return build_kummer3(nb);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNoKummerExtension || e.code() == ErrorCode::kUnsupportedDegree) return std::nullopt;
    throw;
  }
}

}  // namespace

bool biquadratic_possible(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kDomain, "base degree must be positive");
  return n % 2 == 1;
}

bool biquadratic_direct(const ExtBasisCtx& as2) {
  require_kind(as2, ExtKind::kAs2);
  const OracleEmbedding emb = build_embedding(as2);
  return trace(emb.generator_images()[0], emb.big());
}

bool kummer_over_as2_possible(const ExtBasisCtx& as2) {
  require_kind(as2, ExtKind::kAs2);
  const OracleEmbedding emb = build_embedding(as2);
  return !is_cube(emb.generator_images()[0], emb.big());
}

bool as2_over_k3_possible(const ExtBasisCtx& k3) {
  require_kind(k3, ExtKind::kK3);
  return false;
}

std::optional<Gf2nElem> as2_over_k3_witness(const ExtBasisCtx& k3) {
  require_kind(k3, ExtKind::kK3);
  const OracleEmbedding emb = build_embedding(k3);
  return solve_artin_schreier(emb.generator_images()[0], emb.big());
}

unsigned bicubic_v3(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kDomain, "base degree must be positive");
  const BigInt one = 1;
  BigInt q = ((one << (3 * n)) - 1) / ((one << n) - 1);
  unsigned v = 0;
  while (q % 3 == 0) {
    q /= 3;
    ++v;
  }
  return v;
}

bool bicubic_possible(std::size_t n) {
  if (n == 0 || n % 2 != 0) {
    throw Error(ErrorCode::kUnsupportedDegree, "3 does not divide 2^n - 1 for n = " + std::to_string(n));
  }
  return bicubic_v3(n) == 1;
}

bool bicubic_direct(const ExtBasisCtx& k3) {
  require_kind(k3, ExtKind::kK3);
  if (!is_primitive(k3.base().alpha(), k3.base().field())) {
    throw Error(ErrorCode::kDomain, "the bicubic criterion needs a primitive normal basis");
  }
  const OracleEmbedding emb = build_embedding(k3);
  return !is_cube(emb.generator_images()[0], emb.big());
}

std::string TowerReport::to_json() const {
  nlohmann::ordered_json j;
  j["base_n"] = base_n;
  j["as2_over_as2"] = as2_over_as2;
  j["k3_over_as2"] = k3_over_as2;
  j["as2_over_k3"] = as2_over_k3;
  j["k3_over_k3"] = k3_over_k3 ? nlohmann::ordered_json(*k3_over_k3) : nlohmann::ordered_json();
  nlohmann::ordered_json w;
  w["v3"] = v3 ? nlohmann::ordered_json(*v3) : nlohmann::ordered_json();
  w["as2_over_as2_direct"] = as2_over_as2_direct ? nlohmann::ordered_json(*as2_over_as2_direct) : nlohmann::ordered_json();
  w["as2_over_k3_witness"] = as2_over_k3_witness ? nlohmann::ordered_json(*as2_over_k3_witness) : nlohmann::ordered_json();
  w["k3_over_k3_direct"] = k3_over_k3_direct ? nlohmann::ordered_json(*k3_over_k3_direct) : nlohmann::ordered_json();
  j["witnesses"] = std::move(w);
  return j.dump(2) + "\n";
}

TowerReport tower_report(const NormalBasisCtx& nb) {
  TowerReport r;
  r.base_n = nb.n();
  const ExtBasisCtx as2 = build_as2(nb);
  r.as2_over_as2 = biquadratic_possible(nb.n());
  r.as2_over_as2_direct = biquadratic_direct(as2);
  r.k3_over_as2 = kummer_over_as2_possible(as2);
  if (nb.n() % 2 == 0) {
    r.v3 = bicubic_v3(nb.n());
    r.k3_over_k3 = bicubic_possible(nb.n());
  }
  if (const auto k3 = try_kummer3(nb)) {
    r.as2_over_k3 = as2_over_k3_possible(*k3);
    if (const auto y = as2_over_k3_witness(*k3)) r.as2_over_k3_witness = BitPoly::from_bits(*y).to_string();
    if (is_primitive(nb.alpha(), nb.field())) r.k3_over_k3_direct = bicubic_direct(*k3);
  }
  return r;
}

}  // namespace charfield2
