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

// charfield2: batch front end for the normal-basis and extended-basis
// tooling.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 missing fixture.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "charfield2/bitpoly.hpp"
#include "charfield2/error.hpp"
#include "charfield2/extended_basis.hpp"
#include "charfield2/field.hpp"
#include "charfield2/fixtures.hpp"
#include "charfield2/mult_tables.hpp"
#include "charfield2/normal_basis.hpp"
#include "charfield2/table_set.hpp"
#include "charfield2/tower.hpp"
#include "json.hpp"

namespace cf = charfield2;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMissingFixture = 3;

struct RunConfig {
  std::vector<std::size_t> n;
  std::vector<std::size_t> m;
  std::string modulus = "auto";
  std::string alpha = "fixture";
  std::vector<std::string> kinds;
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::size_t limit = 0;
  std::string fixtures;
  bool primitive = false;
  bool best = false;
  std::string corrupt;
};

const cf::Fixtures& fixtures(const RunConfig& cfg) {
  static const cf::Fixtures fx = cfg.fixtures.empty() ? cf::load_fixtures() : cf::load_fixtures(cfg.fixtures);
  return fx;
}

std::string poly_text(const cf::Gf2nElem& a) { return cf::BitPoly::from_bits(a).to_string(); }

// Writes to --out or stdout.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw cf::Error(cf::ErrorCode::kDomain, "cannot write " + cfg.out);
  f << text;
}

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << '\n';
  }
  return os.str();
}

std::string to_json_rows(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json o;
    for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string render(const RunConfig& cfg, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  return cfg.format == "json" ? to_json_rows(header, rows) : to_csv(header, rows);
}

std::string opt_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }

cf::FieldCtx resolve_field(std::size_t n, const std::string& modulus) {
  if (modulus == "auto") return cf::FieldCtx(cf::least_sparse_irreducible(n));
  cf::BitPoly f = cf::BitPoly::parse(modulus);
  if (f.degree() != n) throw cf::Error(cf::ErrorCode::kDomain, "modulus degree differs from --n");
  return cf::FieldCtx(std::move(f));
}

// --alpha: "fixture", "search" (minimum weight), "first", or an element.
cf::NormalBasisCtx resolve_basis(const RunConfig& cfg, std::size_t n) {
  if (cfg.alpha == "fixture") {
    const cf::NormalBasisFixture* f = fixtures(cfg).find_basis(n);
    if (f == nullptr) {
      throw cf::Error(cf::ErrorCode::kMissingFixture, "no fixture for n = " + std::to_string(n));
    }
    if (cfg.modulus != "auto" && cf::BitPoly::parse(cfg.modulus) != f->modulus) {
      throw cf::Error(cf::ErrorCode::kMissingFixture, "no fixture for n = " + std::to_string(n) + " with that modulus");
    }
    cf::FieldCtx ctx(f->modulus);
    cf::Gf2nElem a = ctx.element(f->alpha);
    return cf::NormalBasisCtx(std::move(ctx), std::move(a));
  }
  cf::FieldCtx ctx = resolve_field(n, cfg.modulus);
  if (cfg.alpha == "search" || cfg.alpha == "first") {
    std::optional<cf::NormalElementHit> hit;
    if (cfg.alpha == "search" && n <= 24) {
      hit = cf::best_normal_element(ctx, cfg.primitive, cfg.workers);
    } else {
      auto hits = cf::search_normal_elements(ctx, cfg.primitive, 1, cfg.workers);
      if (!hits.empty()) hit = hits.front();
    }
    if (!hit) throw cf::Error(cf::ErrorCode::kNotNormal, "no normal element found");
    return cf::NormalBasisCtx(std::move(ctx), hit->element);
  }
  const cf::Gf2nElem a = ctx.element(cf::BitPoly::parse(cfg.alpha));
  return cf::NormalBasisCtx(std::move(ctx), a);
}

std::vector<cf::ExtKind> resolve_kinds(const RunConfig& cfg) {
  std::vector<cf::ExtKind> out;
  for (const auto& k : cfg.kinds) out.push_back(*cf::parse_ext_kind(k));
  if (out.empty()) out = {cf::ExtKind::kAs2, cf::ExtKind::kK3, cf::ExtKind::kAsw4, cf::ExtKind::kKa6};
  return out;
}

std::optional<cf::ExtBasisCtx> try_build(const cf::NormalBasisCtx& nb, cf::ExtKind kind) {
  try {
    return cf::build_extension(nb, kind);
  } catch (const cf::Error& e) {
    if (e.code() == cf::ErrorCode::kUnsupportedDegree || e.code() == cf::ErrorCode::kNoKummerExtension ||
        e.code() == cf::ErrorCode::kNoExtension) {
      return std::nullopt;
    }
    throw;
  }
}

cf::ExtElem random_ext(const cf::ExtBasisCtx& ctx, std::mt19937_64& rng) {
  cf::ExtElem x;
  for (std::size_t b = 0; b < ctx.d(); ++b) {
    cf::NormalCoords v(ctx.n());
    for (std::size_t i = 0; i < ctx.n(); ++i) {
      if (rng() & 1U) v.set(i, true);
    }
    x.blocks.push_back(std::move(v));
  }
  return x;
}

// ---- cross-sums -------------------------------------------------------------

int cmd_cross_sums(const RunConfig& cfg) {
  std::vector<std::size_t> ns = cfg.n;
  if (ns.empty()) {
    for (const auto& f : fixtures(cfg).normal_bases) ns.push_back(f.n);
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t n : ns) {
    const cf::NormalBasisCtx nb = resolve_basis(cfg, n);
    const cf::NormalBasisFixture* f = fixtures(cfg).find_basis(n);
    const bool from_fixture = cfg.alpha == "fixture";
    rows.push_back({std::to_string(n), nb.field().modulus().to_string(), poly_text(nb.alpha()),
                    std::to_string(cf::cross_product_sum(nb)),
                    from_fixture && f != nullptr ? std::to_string(f->cross_sum) : ""});
  }
  emit(cfg, render(cfg, {"n", "modulus", "normal_element", "cross_sum", "expected"}, rows));
  return kExitOk;
}

// ---- densities --------------------------------------------------------------

constexpr std::size_t kSearchDegreeLimit = 18;

std::optional<cf::NormalBasisCtx> density_basis(const RunConfig& cfg, std::size_t n, bool allow_search) {
  if (const cf::NormalBasisFixture* f = fixtures(cfg).find_basis(n)) {
    cf::FieldCtx ctx(f->modulus);
    cf::Gf2nElem a = ctx.element(f->alpha);
    return cf::NormalBasisCtx(std::move(ctx), std::move(a));
  }
  if (!allow_search || n > kSearchDegreeLimit) return std::nullopt;
  cf::FieldCtx ctx(cf::least_sparse_irreducible(n));
  const auto hit = cf::best_normal_element(ctx, false, cfg.workers);
  return cf::NormalBasisCtx(std::move(ctx), hit->element);
}

int cmd_densities(const RunConfig& cfg) {
  std::vector<std::size_t> ms = cfg.m;
  if (ms.empty()) {
    for (const auto& d : fixtures(cfg).densities) ms.push_back(d.m);
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t m : ms) {
    if (m == 0 || m % 6 != 0) throw cf::Error(cf::ErrorCode::kDomain, "m must be a positive multiple of 6");
    std::string d_n;
    if (m <= kSearchDegreeLimit) {
      const auto hit = cf::best_normal_element(cf::FieldCtx(cf::least_sparse_irreducible(m)), false, cfg.workers);
      d_n = std::to_string(m * hit->weight);
    }
    std::string d_a;
    if (const auto nb = density_basis(cfg, m / 2, true)) d_a = std::to_string(cf::as2_density_formula(*nb));
    std::string d_k;
    if (const auto nb = density_basis(cfg, m / 3, false)) {
      try {
        cf::build_kummer3(*nb);
        d_k = std::to_string(cf::k3_density_formula(*nb));
      } catch (const cf::Error& e) {
        if (e.code() != cf::ErrorCode::kNoKummerExtension) throw;
        d_k = "-";
      }
    }
    const cf::DensityFixture* exp = fixtures(cfg).find_density(m);
    std::string e_n;
    std::string e_a;
    std::string e_k;
    if (exp != nullptr) {
      e_n = opt_text(exp->d_n);
      e_a = opt_text(exp->d_a);
      e_k = exp->d_k_absent ? "-" : opt_text(exp->d_k);
    }
    rows.push_back({std::to_string(m), d_n, d_a, d_k, e_n, e_a, e_k});
  }
  emit(cfg, render(cfg, {"m", "d_N", "d_A", "d_K", "expected_d_N", "expected_d_A", "expected_d_K"}, rows));
  return kExitOk;
}

// ---- tables -----------------------------------------------------------------

int cmd_tables(const RunConfig& cfg) {
  if (cfg.n.size() != 1) throw CLI::ValidationError("--n", "tables takes exactly one --n");
  const cf::NormalBasisCtx nb = resolve_basis(cfg, cfg.n[0]);
  cf::TableSet ts;
  std::string kind = "normal";
  if (cfg.kinds.empty()) {
    ts = cf::build_tables(nb);
  } else {
    if (cfg.kinds.size() != 1) throw CLI::ValidationError("--kind", "tables takes at most one --kind");
    const cf::ExtKind k = *cf::parse_ext_kind(cfg.kinds[0]);
    ts = cf::build_tables(cf::build_extension(nb, k));
    kind = std::string(cf::to_string(k));
  }
  const std::string manifest = cf::tables_manifest_json(ts, kind, nb.n());
  if (cfg.out.empty()) {
    std::cout << (cfg.format == "json" ? manifest : cf::table_summary_csv(ts));
    return kExitOk;
  }
  namespace fs = std::filesystem;
  const fs::path dir(cfg.out);
  fs::create_directories(dir);
  for (std::size_t k = 0; k < ts.m; ++k) {
    std::ofstream(dir / ("T_" + std::to_string(k) + ".csv"), std::ios::binary) << cf::matrix_to_csv(ts.tables[k]);
  }
  std::ofstream(dir / "summary.csv", std::ios::binary) << cf::table_summary_csv(ts);
  std::ofstream(dir / "manifest.json", std::ios::binary) << manifest;
  return kExitOk;
}

// ---- verify -----------------------------------------------------------------

struct Suite {
  std::string name;
  std::size_t checks = 0;
  json failures = json::array();

  void check(bool ok, json witness) {
    ++checks;
    if (!ok) failures.push_back(std::move(witness));
  }
};

std::optional<cf::TableWitness> parse_corruption(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::vector<std::size_t> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(std::stoul(part));
  if (v.size() != 3) throw CLI::ValidationError("--corrupt", "expects k,i,j");
  return cf::TableWitness{v[0], v[1], v[2]};
}

// Table sets too small to hold the entry are left alone.
cf::TableSet maybe_corrupt(cf::TableSet ts, const std::optional<cf::TableWitness>& c) {
  if (!c || c->k >= ts.m || c->i >= ts.m || c->j >= ts.m) return ts;
  std::vector<cf::BitMatrix> tables = std::move(ts.tables);
  tables[c->k].set(c->i, c->j, !tables[c->k].get(c->i, c->j));
  return cf::TableSet::from_tables(std::move(tables));
}

json count_failure(const std::string& kind, std::size_t n, const cf::CountReport& r) {
  json w;
  w["kind"] = kind;
  w["n"] = n;
  w["detail"] = r.to_string();
  json tables = json::array();
  for (const auto& mm : r.mismatches) tables.push_back({{"k", mm.k}, {"expected", mm.expected}, {"actual", mm.actual}});
  w["mismatched_tables"] = std::move(tables);
  json asym = json::array();
  for (const auto& a : r.asymmetric) asym.push_back({{"k", a.k}, {"i", a.i}, {"j", a.j}});
  w["asymmetric_entries"] = std::move(asym);
  return w;
}

// Bounds stated for one product: base mults, base adds, table-vector products.
std::optional<cf::OpCounter> stated_bound(cf::ExtKind kind) {
  switch (kind) {
    case cf::ExtKind::kAs2: return cf::OpCounter{3, 4, 1};
    case cf::ExtKind::kK3: return cf::OpCounter{6, 15, 2};
    case cf::ExtKind::kAsw4: return cf::OpCounter{9, 33, 9};
    case cf::ExtKind::kKa6: return std::nullopt;
  }
  return std::nullopt;
}

json counter_json(const cf::OpCounter& c) {
  return {{"base_mults", c.base_mults}, {"base_adds", c.base_adds}, {"table_vector_products", c.table_vector_products}};
}

int cmd_verify(const RunConfig& cfg) {
  const std::size_t n_max = cfg.n.empty() ? 8 : cfg.n[0];
  const std::size_t pairs = cfg.limit == 0 ? 200 : cfg.limit;
  const std::vector<cf::ExtKind> kinds = resolve_kinds(cfg);
  const auto corruption = parse_corruption(cfg.corrupt);

  auto base = [&](std::size_t n) {
    if (fixtures(cfg).find_basis(n) != nullptr) {
      RunConfig c = cfg;
      c.alpha = "fixture";
      c.modulus = "auto";
      return resolve_basis(c, n);
    }
    return cf::first_normal_basis(n);
  };

  Suite oracle{"oracle-equivalence"};
  Suite tables{"table-product"};
  Suite counts{"closed-form-counts"};
  Suite ops{"operation-counts"};
  Suite tower{"tower-predicates"};

  for (std::size_t n = 1; n <= n_max; ++n) {
    const cf::NormalBasisCtx nb = base(n);
    for (cf::ExtKind kind : kinds) {
      const auto ctx = try_build(nb, kind);
      if (!ctx) continue;
      const std::string kname(cf::to_string(kind));
      const cf::OracleEmbedding emb = cf::build_embedding(*ctx);
      const cf::TableSet ts = maybe_corrupt(cf::build_tables(*ctx, emb), corruption);
      std::mt19937_64 rng(cfg.seed * 1000003 + 97 * n + static_cast<unsigned>(kind));
      std::optional<cf::OpCounter> first_count;
      for (std::size_t t = 0; t < pairs; ++t) {
        const cf::ExtElem x = random_ext(*ctx, rng);
        const cf::ExtElem y = random_ext(*ctx, rng);
        const auto [xy, cost] = cf::mul(x, y, *ctx);
        const cf::ExtElem xx = cf::square(x, *ctx).first;
        const json w = {{"kind", kname}, {"n", n}, {"x", x.to_string()}, {"y", y.to_string()}};
        oracle.check(emb.image(xy) == emb.big().mul(emb.image(x), emb.image(y)), w);
        oracle.check(emb.image(xx) == emb.big().square(emb.image(x)), w);
        tables.check(cf::table_mul(x, y, ts, *ctx) == xy, w);
        if (!first_count) first_count = cost;
        ops.check(cost == *first_count, {{"kind", kname}, {"n", n}, {"x", x.to_string()}, {"y", y.to_string()},
                                         {"cost", counter_json(cost)}, {"first_cost", counter_json(*first_count)}});
      }
      if (const auto bound = stated_bound(kind); bound && first_count) {
        const bool within = first_count->base_mults <= bound->base_mults &&
                            first_count->base_adds <= bound->base_adds &&
                            first_count->table_vector_products <= bound->table_vector_products;
        ops.check(within, {{"kind", kname}, {"n", n}, {"cost", counter_json(*first_count)},
                           {"bound", counter_json(*bound)}});
      }
      tables.check(cf::symmetry_violations(ts).empty(),
                   [&] {
                     json w = {{"kind", kname}, {"n", n}};
                     for (const auto& a : cf::symmetry_violations(ts)) w["asymmetric"] = {a.k, a.i, a.j};
                     return w;
                   }());
      const bool fixture_n = fixtures(cfg).find_basis(n) != nullptr;
      if (kind == cf::ExtKind::kAs2 && fixture_n) {
        const auto r = cf::verify_as2_counts(ts, nb);
        counts.check(r.ok(), count_failure(kname, n, r));
      } else if (kind == cf::ExtKind::kK3 && fixture_n) {
        const auto r = cf::verify_k3_counts(ts, nb);
        counts.check(r.ok(), count_failure(kname, n, r));
      } else if (kind == cf::ExtKind::kAsw4 && fixture_n && n <= 4) {
        const auto r = cf::verify_asw4_counts(ts, nb);
        counts.check(r.ok(), count_failure(kname, n, r));
      }
    }
    if (n <= 6) {
      const cf::ExtBasisCtx as2 = cf::build_as2(nb);
      tower.check(cf::biquadratic_direct(as2) == cf::biquadratic_possible(n), {{"predicate", "biquadratic"}, {"n", n}});
      if (const auto k3 = try_build(nb, cf::ExtKind::kK3)) {
        const auto y = cf::as2_over_k3_witness(*k3);
        tower.check(!cf::as2_over_k3_possible(*k3) && y.has_value(), {{"predicate", "as2_over_k3"}, {"n", n}});
      }
    }
  }
  for (std::size_t n : {2U, 4U}) {
    if (n > n_max) continue;
    const cf::ExtBasisCtx k3 = cf::build_kummer3(cf::first_normal_basis(n, true));
    tower.check(cf::bicubic_direct(k3) == cf::bicubic_possible(n), {{"predicate", "bicubic"}, {"n", n}});
  }

  json report;
  report["seed"] = cfg.seed;
  report["n_max"] = n_max;
  report["pairs"] = pairs;
  std::size_t total = 0;
  json suites = json::array();
  for (Suite* s : {&oracle, &tables, &counts, &ops, &tower}) {
    total += s->failures.size();
    suites.push_back({{"name", s->name}, {"checks", s->checks}, {"failures", s->failures}});
  }
  report["suites"] = std::move(suites);
  report["failures"] = total;
  emit(cfg, report.dump(2) + "\n");
  return total == 0 ? kExitOk : kExitVerifyFailed;
}

// ---- bench ------------------------------------------------------------------

int cmd_bench(const RunConfig& cfg) {
  const std::size_t iterations = cfg.limit == 0 ? 1000 : cfg.limit;
  std::vector<std::size_t> ns = cfg.n.empty() ? std::vector<std::size_t>{8} : cfg.n;
  std::vector<std::vector<std::string>> rows;
  for (std::size_t n : ns) {
    const cf::NormalBasisCtx nb = resolve_basis(cfg, n);
    for (cf::ExtKind kind : resolve_kinds(cfg)) {
      const auto ctx = try_build(nb, kind);
      if (!ctx) {
        if (!cfg.kinds.empty()) cf::build_extension(nb, kind);
        continue;
      }
      std::mt19937_64 rng(cfg.seed);
      std::vector<cf::ExtElem> xs;
      for (std::size_t i = 0; i < iterations + 1; ++i) xs.push_back(random_ext(*ctx, rng));
      cf::OpCounter per_mul;
      cf::ExtElem acc = ctx->one();
      const auto start = std::chrono::steady_clock::now();
      for (std::size_t i = 0; i < iterations; ++i) {
        auto [z, cost] = cf::mul(xs[i], xs[i + 1], *ctx);
        per_mul = cost;
        acc.blocks[0] ^= z.blocks[0];
      }
      const auto elapsed = std::chrono::steady_clock::now() - start;
      const auto ns_total = std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count();
      const cf::OpCounter sq = cf::square(xs[0], *ctx).second;
      rows.push_back({std::string(cf::to_string(kind)), std::to_string(n), std::to_string(iterations),
                      std::to_string(per_mul.base_mults), std::to_string(per_mul.base_adds),
                      std::to_string(per_mul.table_vector_products), std::to_string(sq.base_adds),
                      std::to_string(sq.table_vector_products),
                      std::to_string(static_cast<double>(ns_total) / static_cast<double>(iterations)),
                      std::to_string(acc.blocks[0].popcount())});
    }
  }
  emit(cfg, render(cfg,
                   {"kind", "n", "iterations", "base_mults", "base_adds", "table_vector_products", "square_adds",
                    "square_table_vector_products", "mean_ns_per_mul", "checksum"},
                   rows));
  return kExitOk;
}

// ---- search -----------------------------------------------------------------

int cmd_search(const RunConfig& cfg) {
  if (cfg.n.size() != 1) throw CLI::ValidationError("--n", "search takes exactly one --n");
  const std::size_t n = cfg.n[0];
  if (n > cf::max_base_degree()) {
    throw cf::Error(cf::ErrorCode::kDegreeCap, "n exceeds CHARFIELD2_MAX_N = " + std::to_string(cf::max_base_degree()));
  }
  const cf::FieldCtx ctx = resolve_field(n, cfg.modulus);
  std::vector<cf::NormalElementHit> hits;
  if (cfg.best) {
    if (auto h = cf::best_normal_element(ctx, cfg.primitive, cfg.workers)) hits.push_back(*h);
  } else {
    hits = cf::search_normal_elements(ctx, cfg.primitive, cfg.limit == 0 ? 10 : cfg.limit, cfg.workers);
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& h : hits) {
    const cf::NormalBasisCtx nb(ctx, h.element);
    rows.push_back({std::to_string(n), ctx.modulus().to_string(), poly_text(h.element), std::to_string(h.weight),
                    std::to_string(n * h.weight), std::to_string(cf::cross_product_sum(nb)),
                    cf::is_primitive(h.element, ctx) ? "1" : "0"});
  }
  emit(cfg, render(cfg, {"n", "modulus", "normal_element", "weight", "density", "cross_sum", "primitive"}, rows));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal bases, extended bases and their multiplication tables over F_2."};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::string> kind_names = {"as2", "k3", "asw4", "ka6"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Base degree(s)")->check(CLI::PositiveNumber);
    sub->add_option("--modulus", cfg.modulus, "Base modulus, or auto for the least sparse irreducible");
    sub->add_option("--alpha", cfg.alpha, "Normal element: fixture, search, first, or a polynomial");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "Output path");
    sub->add_option("--workers", cfg.workers, "Search threads")->check(CLI::Range(1U, 256U));
    sub->add_option("--fixtures", cfg.fixtures, "Fixture file");
    sub->add_flag("--primitive", cfg.primitive, "Require a primitive normal element");
  };

  auto* cross = app.add_subcommand("cross-sums", "Cross-product sums of the fixture normal bases");
  common(cross);
  auto* dens = app.add_subcommand("densities", "Densities of normal, Artin-Schreier and Kummer bases");
  common(dens);
  dens->add_option("--m", cfg.m, "Extension degree(s), multiples of 6")->check(CLI::PositiveNumber);
  auto* tab = app.add_subcommand("tables", "Multiplication tables of a basis");
  common(tab);
  tab->add_option("--kind", cfg.kinds, "Extension kind; omit for the normal basis")->check(CLI::IsMember(kind_names));
  auto* ver = app.add_subcommand("verify", "Run the invariant suites");
  common(ver);
  ver->add_option("--kind", cfg.kinds, "Extension kinds")->check(CLI::IsMember(kind_names));
  ver->add_option("--seed", cfg.seed, "RNG seed");
  ver->add_option("--limit", cfg.limit, "Random pairs per context (default 200)");
  ver->add_option("--corrupt", cfg.corrupt, "Flip table entry k,i,j before checking (negative control)");
  auto* bench = app.add_subcommand("bench", "Operation counts and timing of extended-basis products");
  common(bench);
  bench->add_option("--kind", cfg.kinds, "Extension kinds")->check(CLI::IsMember(kind_names));
  bench->add_option("--seed", cfg.seed, "RNG seed");
  bench->add_option("--limit", cfg.limit, "Iterations (default 1000)");
  auto* search = app.add_subcommand("search", "Normal element search");
  common(search);
  search->add_option("--limit", cfg.limit, "Number of elements (default 10)");
  search->add_flag("--best", cfg.best, "Exhaustive minimum-weight search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cross->parsed()) return cmd_cross_sums(cfg);
    if (dens->parsed()) return cmd_densities(cfg);
    if (tab->parsed()) return cmd_tables(cfg);
    if (ver->parsed()) return cmd_verify(cfg);
    if (bench->parsed()) return cmd_bench(cfg);
    if (search->parsed()) return cmd_search(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == cf::ErrorCode::kMissingFixture ? kExitMissingFixture : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
