// Copyright 2026 The treelike Authors.
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

// Verification campaigns: named property suites replayed over enumerated and
// seeded random graphs.

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "treelike/classify.hpp"
#include "treelike/constructions.hpp"
#include "treelike/generators.hpp"
#include "treelike/hyperbolicity.hpp"
#include "treelike/io.hpp"
#include "treelike/quadrangle.hpp"
#include "treelike/treelength.hpp"

namespace treelike {

struct CampaignFailure {
  /// Instance label, e.g. "n=7 #12" or "random #31".
  std::string instance;
  /// graph6 of the offending graph.
  std::string graph;
  std::string expected;
  std::string got;

  friend bool operator==(const CampaignFailure&, const CampaignFailure&) = default;
};

struct CampaignConfig {
  std::string campaign;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  /// Largest random instance; enumerated inputs stop at min(max_n, 8).
  std::size_t max_n = 12;
  unsigned threads = 1;
  /// Directory holding connected<n>.g6 files.
  std::string data_dir = "tests/data";
  Budget budget{};

  friend bool operator==(const CampaignConfig&, const CampaignConfig&) = default;
};

struct CampaignReport {
  std::string campaign;
  std::size_t instances = 0;
  std::size_t skipped = 0;
  /// Quadrangle diagnostics run on delta* witnesses.
  std::size_t witness_checks = 0;
  std::vector<CampaignFailure> failures;
  /// Conjecture disagreements; never counted as failures.
  std::vector<CampaignFailure> findings;
  double wall_time_ms = 0;
  CampaignConfig config;

  bool passed() const { return failures.empty(); }
  friend bool operator==(const CampaignReport&, const CampaignReport&) = default;
};

inline void to_json(nlohmann::json& j, const CampaignFailure& f) {
  j = {{"instance", f.instance}, {"graph6", f.graph}, {"expected", f.expected}, {"got", f.got}};
}
inline void from_json(const nlohmann::json& j, CampaignFailure& f) {
  j.at("instance").get_to(f.instance);
  j.at("graph6").get_to(f.graph);
  j.at("expected").get_to(f.expected);
  j.at("got").get_to(f.got);
}
inline void to_json(nlohmann::json& j, const CampaignConfig& c) {
  j = {{"campaign", c.campaign}, {"samples", c.samples}, {"seed", c.seed}, {"max_n", c.max_n},
       {"threads", c.threads}, {"data_dir", c.data_dir}, {"max_nodes", c.budget.max_nodes}};
  if (c.budget.time_limit) j["budget_ms"] = c.budget.time_limit->count();
}
inline void from_json(const nlohmann::json& j, CampaignConfig& c) {
  j.at("campaign").get_to(c.campaign);
  j.at("samples").get_to(c.samples);
  j.at("seed").get_to(c.seed);
  j.at("max_n").get_to(c.max_n);
  j.at("threads").get_to(c.threads);
  j.at("data_dir").get_to(c.data_dir);
  j.at("max_nodes").get_to(c.budget.max_nodes);
  c.budget.time_limit.reset();
  if (j.contains("budget_ms")) c.budget.time_limit = std::chrono::milliseconds(j.at("budget_ms").get<std::int64_t>());
}
inline void to_json(nlohmann::json& j, const CampaignReport& r) {
  j = {{"campaign", r.campaign}, {"instances", r.instances}, {"skipped", r.skipped},
       {"witness_checks", r.witness_checks}, {"failures", r.failures}, {"findings", r.findings},
       {"wall_time_ms", r.wall_time_ms}, {"config", r.config}, {"passed", r.passed()}};
}
inline void from_json(const nlohmann::json& j, CampaignReport& r) {
  j.at("campaign").get_to(r.campaign);
  j.at("instances").get_to(r.instances);
  j.at("skipped").get_to(r.skipped);
  j.at("witness_checks").get_to(r.witness_checks);
  j.at("failures").get_to(r.failures);
  j.at("findings").get_to(r.findings);
  j.at("wall_time_ms").get_to(r.wall_time_ms);
  j.at("config").get_to(r.config);
}

inline constexpr std::string_view kCampaigns[] = {"main-bound",    "main1-equiv", "diam-bound", "block-zero",
                                                  "basepoint",     "product-trees", "bound-chain", "bc-equiv",
                                                  "conj14-scan",   "family-table", "catalog"};

/// Deterministic per-instance seed, independent of scheduling.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t id) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(seed ^ mix(id));
}

/// Connected graphs on n vertices from `dir`/connected<n>.g6.
inline std::vector<Graph> load_enumerated(const std::string& dir, std::size_t n) {
  const std::filesystem::path path = std::filesystem::path(dir) / ("connected" + std::to_string(n) + ".g6");
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open enumerated graphs " + path.string());
  std::vector<Graph> out;
  for_each_graph6(in, [&](std::size_t, const Graph& g) { out.push_back(g); });
  return out;
}

/// Enumerated connected graphs with lo <= n <= hi, labelled "n=<n> #<i>".
inline std::vector<std::pair<std::string, Graph>> load_enumerated_range(const std::string& dir, std::size_t lo,
                                                                        std::size_t hi) {
  std::vector<std::pair<std::string, Graph>> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    std::vector<Graph> level = load_enumerated(dir, n);
    for (std::size_t i = 0; i < level.size(); ++i) out.emplace_back("n=" + std::to_string(n) + " #" + std::to_string(i), level[i]);
  }
  return out;
}

/// Outcome of checking one instance.
struct InstanceOutcome {
  enum class Kind { kPass, kFail, kSkip, kFinding };
  Kind kind = Kind::kPass;
  CampaignFailure detail;
  std::size_t witness_checks = 0;

  static InstanceOutcome fail(std::string instance, const Graph& g, std::string expected, std::string got) {
    return {Kind::kFail, {std::move(instance), to_graph6(g), std::move(expected), std::move(got)}, 0};
  }
};

/// Runs check(id) for id in [0, count) on `threads` workers and folds the
/// outcomes in id order. Budget errors mark the instance skipped; any other
/// library error is a failure.
inline void run_instances(std::size_t count, unsigned threads,
                          const std::function<InstanceOutcome(std::size_t)>& check, CampaignReport& report) {
  std::vector<InstanceOutcome> outcomes(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t id = next++; id < count; id = next++) {
      try {
        outcomes[id] = check(id);
      } catch (const BudgetError&) {
        outcomes[id].kind = InstanceOutcome::Kind::kSkip;
      } catch (const std::exception& e) {
        outcomes[id] = {InstanceOutcome::Kind::kFail, {"#" + std::to_string(id), "", "no error", e.what()}, 0};
      }
    }
  };
  const unsigned workers = std::max(1u, threads);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (InstanceOutcome& o : outcomes) {
    ++report.instances;
    report.witness_checks += o.witness_checks;
    switch (o.kind) {
      case InstanceOutcome::Kind::kPass: break;
      case InstanceOutcome::Kind::kSkip: ++report.skipped; break;
      case InstanceOutcome::Kind::kFail: report.failures.push_back(std::move(o.detail)); break;
      case InstanceOutcome::Kind::kFinding: report.findings.push_back(std::move(o.detail)); break;
    }
  }
}

namespace detail {

// Quadrangle diagnostics on the delta* witness; throws InvariantError on a
// failed bound. Returns the number of quadruples checked.
inline std::size_t check_witness(const Graph& g, const DistanceMatrix& dm, const HypResult& h) {
  if (!h.witness) return 0;
  quadrangle_diagnostics(g, dm, *h.witness);
  return 1;
}

inline Graph random_connected(std::uint64_t seed, std::size_t min_n, std::size_t max_n) {
  Rng rng(seed);
  const std::size_t n = min_n + rng.below(max_n - min_n + 1);
  const double p = 0.15 + 0.5 * static_cast<double>(rng.below(1001)) / 1000.0;
  return gen_gnp(n, p, rng.fork());
}

inline std::string half(HalfInt h) { return h.str(); }

struct FamilyRow {
  std::string label;
  std::function<Graph()> build;
  int lc;
  HalfInt delta;
  /// 0 when the tree-length is not part of the row.
  int tl = 0;
};

}  // namespace detail

/// The rows behind the family-table campaign: every paper-valued family
/// instance with its published (lc, delta*, tl).
inline std::vector<detail::FamilyRow> family_table_rows() {
  using detail::FamilyRow;
  std::vector<FamilyRow> rows;
  for (std::size_t n = 3; n <= 24; ++n) {
    const std::int64_t doubled = n % 4 == 1 ? 2 * static_cast<std::int64_t>(n / 4) - 1 : 2 * static_cast<std::int64_t>(n / 4);
    rows.push_back({"C" + std::to_string(n), [n] { return gen_cycle(n); }, static_cast<int>(n), HalfInt::from_doubled(doubled)});
  }
  for (std::size_t m = 2; m <= 5; ++m)
    for (std::size_t k = 2; k <= 5; ++k) {
      int tl = 0;
      if (m == 3 && k == 3) tl = 2;
      if (m == 2 && k >= 3) tl = 2;
      rows.push_back({"grid(" + std::to_string(m) + "," + std::to_string(k) + ")", [m, k] { return gen_grid({m, k}); },
                      -1, HalfInt::from_int(static_cast<std::int64_t>(std::min(m, k)) - 1), tl});
    }
  for (std::size_t t = 2; t <= 3; ++t) {
    rows.push_back({"F" + std::to_string(t), [t] { return gen_f(t); }, static_cast<int>(4 * t - 2),
                    HalfInt::from_doubled(2 * static_cast<std::int64_t>(t) - 1), t == 2 ? 2 : 0});
  }
  for (auto [t, q] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}, {3, 2}}) {
    const std::string tq = "(" + std::to_string(t) + "," + std::to_string(q) + ")";
    rows.push_back({"G4t" + tq, [t, q] { return gen_g4t(t, q); }, static_cast<int>(4 * t), HalfInt::from_int(t)});
    rows.push_back({"G4t1" + tq, [t, q] { return gen_g4t1(t, q); }, static_cast<int>(4 * t + 1), HalfInt::from_int(t)});
  }
  rows.push_back({"G6(2,1)", [] { return gen_g6(2, 1); }, 30, HalfInt::from_doubled(15)});
  rows.push_back({"G61(2,1)", [] { return gen_g61(2, 1); }, 31, HalfInt::from_doubled(15)});
  for (const CatalogEntry& e : catalog()) {
    rows.push_back({e.name, [&e] { return e.graph; }, e.expected_lc, e.expected_delta_star});
  }
  return rows;
}

/// Runs one named campaign. Unknown names throw ArgumentError.
inline CampaignReport run_campaign(const CampaignConfig& config) {
  using Kind = InstanceOutcome::Kind;
  CampaignReport report;
  report.campaign = config.campaign;
  report.config = config;
  const auto start = std::chrono::steady_clock::now();
  const std::string_view name = config.campaign;
  const std::size_t enum_max = std::min<std::size_t>(config.max_n, 8);
  CycleSearchOptions cycles;
  cycles.budget = config.budget;
  const std::size_t max_n = std::max<std::size_t>(config.max_n, 4);

  if (name == "main-bound") {
    const auto rows = family_table_rows();
    const std::size_t total = config.samples + rows.size();
    run_instances(total, config.threads, [&](std::size_t id) {
      Graph g = id < config.samples ? detail::random_connected(instance_seed(config.seed, id), 4, max_n)
                                    : rows[id - config.samples].build();
      const std::string label = id < config.samples ? "random #" + std::to_string(id) : rows[id - config.samples].label;
      DistanceMatrix dm = all_pairs_distances(g);
      HypResult h = hyperbolicity(g, dm);
      const int lc = longest_induced_cycle(g, cycles).lc;
      InstanceOutcome o;
      o.witness_checks = detail::check_witness(g, dm, h);
      if (lc >= 4 && h.delta_star.doubled() > lc / 2) {
        return InstanceOutcome::fail(label, g, "2 delta* <= floor(lc/2) = " + std::to_string(lc / 2),
                                     "2 delta* = " + std::to_string(h.delta_star.doubled()));
      }
      if (lc <= 3 && h.delta_star > HalfInt::from_int(1)) {
        return InstanceOutcome::fail(label, g, "chordal delta* <= 1", "delta* = " + h.delta_star.str());
      }
      if (lc >= 3 && h.delta_star > HalfInt::from_int(lc / 2)) {
        return InstanceOutcome::fail(label, g, "delta* <= floor(lc/2)", "delta* = " + h.delta_star.str());
      }
      return o;
    }, report);
  } else if (name == "main1-equiv") {
    auto enumerated = load_enumerated_range(config.data_dir, 4, enum_max);
    const std::size_t total = enumerated.size() + config.samples;
    run_instances(total, config.threads, [&](std::size_t id) {
      InstanceOutcome o;
      Graph g;
      std::string label;
      if (id < enumerated.size()) {
        label = enumerated[id].first;
        g = enumerated[id].second;
        if (!is_k_chordal(g, 5, cycles).holds) return o;
      } else {
        label = "random #" + std::to_string(id - enumerated.size());
        Rng rng(instance_seed(config.seed, id));
        const std::size_t n = 4 + rng.below(max_n - 3);
        g = gen_k_chordal_random(n, 5, rng.fork());
      }
      DistanceMatrix dm = all_pairs_distances(g);
      ClassifyOptions options;
      options.cycles = cycles;
      ClassificationReport r;
      try {
        r = classify_5_chordal(g, dm, options);
      } catch (const InvariantError& e) {
        return InstanceOutcome::fail(label, g, "agreement", e.what());
      }
      o.witness_checks = detail::check_witness(g, dm, r.direct);
      return o;
    }, report);
  } else if (name == "diam-bound") {
    run_instances(config.samples, config.threads, [&](std::size_t id) {
      Graph g = detail::random_connected(instance_seed(config.seed, id), 4, max_n);
      DistanceMatrix dm = all_pairs_distances(g);
      HypResult h = hyperbolicity(g, dm, {.threads = 1, .stop_at_diameter_bound = false});
      const int diam = diameter(dm);
      InstanceOutcome o;
      o.witness_checks = detail::check_witness(g, dm, h);
      const std::string label = "random #" + std::to_string(id);
      if (h.delta_star.doubled() > 2 * (diam / 2)) {
        return InstanceOutcome::fail(label, g, "delta* <= floor(diam/2) = " + std::to_string(diam / 2),
                                     "delta* = " + h.delta_star.str());
      }
      if (h.delta_star.doubled() == diam && diam % 2 != 0) {
        return InstanceOutcome::fail(label, g, "delta* = diam/2 only for even diam", "diam = " + std::to_string(diam));
      }
      return o;
    }, report);
  } else if (name == "block-zero") {
    auto enumerated = load_enumerated_range(config.data_dir, 1, std::min<std::size_t>(enum_max, 7));
    run_instances(config.samples + enumerated.size(), config.threads, [&](std::size_t id) {
      InstanceOutcome o;
      if (id < config.samples) {
        Rng rng(instance_seed(config.seed, id));
        Graph g = gen_block_random(1 + rng.below(max_n), rng.fork());
        DistanceMatrix dm = all_pairs_distances(g);
        HypResult h = hyperbolicity(g, dm);
        o.witness_checks = detail::check_witness(g, dm, h);
        if (h.delta_star != HalfInt{}) {
          return InstanceOutcome::fail("block #" + std::to_string(id), g, "delta* = 0", "delta* = " + h.delta_star.str());
        }
        return o;
      }
      const auto& [label, g] = enumerated[id - config.samples];
      DistanceMatrix dm = all_pairs_distances(g);
      HypResult h = hyperbolicity(g, dm);
      o.witness_checks = detail::check_witness(g, dm, h);
      const bool zero = h.delta_star == HalfInt{};
      if (zero != is_block_graph(g)) {
        return InstanceOutcome::fail(label, g, std::string("block graph = ") + (zero ? "true" : "false"),
                                     std::string("block graph = ") + (zero ? "false" : "true"));
      }
      return o;
    }, report);
  } else if (name == "basepoint") {
    run_instances(config.samples, config.threads, [&](std::size_t id) {
      Graph g = detail::random_connected(instance_seed(config.seed, id), 4, max_n);
      DistanceMatrix dm = all_pairs_distances(g);
      HypResult h = hyperbolicity(g, dm);
      HalfInt lo = base_point_delta(g, dm, 0), hi = lo;
      for (Vertex u = 1; u < g.order(); ++u) {
        HalfInt b = base_point_delta(g, dm, u);
        lo = std::min(lo, b);
        hi = std::max(hi, b);
      }
      InstanceOutcome o;
      o.witness_checks = detail::check_witness(g, dm, h);
      const std::string label = "random #" + std::to_string(id);
      if (h.delta_star > lo * 2) {
        return InstanceOutcome::fail(label, g, "delta* <= 2 min_u delta_u = " + (lo * 2).str(), "delta* = " + h.delta_star.str());
      }
      if (h.delta_star != hi) {
        return InstanceOutcome::fail(label, g, "delta* = max_u delta_u = " + hi.str(), "delta* = " + h.delta_star.str());
      }
      return o;
    }, report);
  } else if (name == "product-trees") {
    run_instances(config.samples, config.threads, [&](std::size_t id) {
      Rng rng(instance_seed(config.seed, id));
      const std::size_t tree_max = std::min<std::size_t>(8, max_n);
      Graph t1 = gen_tree_random(1 + rng.below(tree_max), rng.fork());
      Graph t2 = gen_tree_random(1 + rng.below(tree_max), rng.fork());
      const int d1 = diameter(all_pairs_distances(t1)), d2 = diameter(all_pairs_distances(t2));
      Graph g = cartesian_product(t1, t2);
      DistanceMatrix dm = all_pairs_distances(g);
      HypResult h = hyperbolicity(g, dm);
      InstanceOutcome o;
      o.witness_checks = detail::check_witness(g, dm, h);
      if (h.delta_star != HalfInt::from_int(std::min(d1, d2))) {
        return InstanceOutcome::fail("pair #" + std::to_string(id), g, "delta* = min(D1, D2) = " + std::to_string(std::min(d1, d2)),
                                     "delta* = " + h.delta_star.str());
      }
      return o;
    }, report);
  } else if (name == "bound-chain") {
    const std::size_t tl_max = std::min<std::size_t>(max_n, 10);
    run_instances(config.samples, config.threads, [&](std::size_t id) {
      Graph g = detail::random_connected(instance_seed(config.seed, id), 4, tl_max);
      DistanceMatrix dm = all_pairs_distances(g);
      HypResult h = hyperbolicity(g, dm);
      const int lc = longest_induced_cycle(g, cycles).lc;
      TreeLengthOptions options;
      options.budget = config.budget;
      TreeLengthResult tl = tree_length_exact(g, dm, options);
      InstanceOutcome o;
      o.witness_checks = detail::check_witness(g, dm, h);
      const std::string label = "random #" + std::to_string(id);
      const int lower = std::max<int>(1, h.delta_star.ceil()), upper = std::max(1, lc / 2);
      if (tl.tl < lower || tl.tl > upper) {
        return InstanceOutcome::fail(label, g, "ceil(delta*) <= tl <= floor(lc/2): " + std::to_string(lower) + ".." + std::to_string(upper),
                                     "tl = " + std::to_string(tl.tl));
      }
      if (!verify_tree_length_witness(g, dm, tl)) {
        return InstanceOutcome::fail(label, g, "valid triangulation witness", "witness rejected");
      }
      return o;
    }, report);
  } else if (name == "bc-equiv") {
    auto enumerated = load_enumerated_range(config.data_dir, 1, enum_max);
    run_instances(enumerated.size(), config.threads, [&](std::size_t id) {
      const auto& g = enumerated[id].second;
      DistanceMatrix dm = all_pairs_distances(g);
      ClassifyOptions options;
      options.cycles = cycles;
      ClassificationReport r;
      try {
        r = half_hyperbolicity_test_bc(g, dm, options);
      } catch (const InvariantError& e) {
        return InstanceOutcome::fail(enumerated[id].first, g, "agreement", e.what());
      }
      InstanceOutcome o;
      o.witness_checks = detail::check_witness(g, dm, r.direct);
      return o;
    }, report);
  } else if (name == "conj14-scan") {
    auto enumerated = load_enumerated_range(config.data_dir, 1, enum_max);
    run_instances(enumerated.size(), config.threads, [&](std::size_t id) {
      const auto& [label, g] = enumerated[id];
      InstanceOutcome o;
      if (!is_k_chordal(g, 6, cycles).holds) return o;
      DistanceMatrix dm = all_pairs_distances(g);
      ClassifyOptions options;
      options.cycles = cycles;
      ClassificationReport r = conjecture14_probe(g, dm, options);
      o.witness_checks = detail::check_witness(g, dm, r.direct);
      if (!r.agrees) {
        o.kind = Kind::kFinding;
        o.detail = {label, to_graph6(g), std::string("delta* <= 1/2 = ") + (r.predicted ? "true" : "false"),
                    "delta* = " + r.direct.delta_star.str()};
      }
      return o;
    }, report);
  } else if (name == "family-table") {
    const auto rows = family_table_rows();
    run_instances(rows.size(), config.threads, [&](std::size_t id) {
      const auto& row = rows[id];
      Graph g = row.build();
      DistanceMatrix dm = all_pairs_distances(g);
      HypResult h = hyperbolicity(g, dm);
      InstanceOutcome o;
      o.witness_checks = detail::check_witness(g, dm, h);
      std::string expected = "delta* = " + row.delta.str(), got = "delta* = " + h.delta_star.str();
      bool ok = h.delta_star == row.delta;
      if (row.lc >= 0) {
        const int lc = longest_induced_cycle(g, cycles).lc;
        expected += ", lc = " + std::to_string(row.lc);
        got += ", lc = " + std::to_string(lc);
        ok = ok && lc == row.lc;
      }
      if (row.tl > 0) {
        const int tl = tree_length_exact(g, dm).tl;
        expected += ", tl = " + std::to_string(row.tl);
        got += ", tl = " + std::to_string(tl);
        ok = ok && tl == row.tl;
      }
      if (!ok) return InstanceOutcome::fail(row.label, g, expected, got);
      return o;
    }, report);
  } else if (name == "catalog") {
    CatalogSelftest st = catalog_selftest(false);
    for (const CatalogCheck& c : st.entries) {
      ++report.instances;
      if (!c.ok()) {
        report.failures.push_back({c.name, to_graph6(catalog_entry(c.name).graph),
                                   "(lc, delta*) = (" + std::to_string(c.expected_lc) + ", " + c.expected_delta_star.str() + ")",
                                   "(" + std::to_string(c.lc) + ", " + c.delta_star.str() + ")"});
      }
    }
    for (const auto& [p, q] : st.isomorphic) report.failures.push_back({p + "/" + q, "", "non-isomorphic", "isomorphic"});
  } else {
    throw ArgumentError("unknown campaign '" + std::string(name) + "'");
  }
  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace treelike
