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

// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "treelike/treelike.hpp"

namespace {

using namespace treelike;

constexpr std::uint64_t kSeed = 20260101;
constexpr std::size_t kMaxDetails = 8;

struct Outcome {
  std::size_t checked = 0;
  std::vector<std::string> mismatches;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) mismatches.push_back(what);
  }
};

// Quadrangle diagnostics on every delta* witness seen by criteria 1-13.
struct WitnessLog {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void record(const Graph& g, const DistanceMatrix& dm, const HypResult& h, const std::string& where) {
    if (!h.witness) return;
    ++checked;
    QuadrangleReport r = quadrangle_diagnostics(g, dm, *h.witness, {.orient = true, .throw_on_failure = false});
    if (r.all_hold()) return;
    std::ostringstream os;
    os << where << " " << to_graph6(g) << ":";
    for (const auto& c : r.bound_checks)
      if (!c.holds) os << " [" << c.name << ": " << c.lhs << " > " << c.rhs << "]";
    failures.push_back(os.str());
  }
};

WitnessLog witnesses;

HypResult delta_star(const Graph& g, const DistanceMatrix& dm, const std::string& where) {
  HypResult h = hyperbolicity(g, dm);
  witnesses.record(g, dm, h, where);
  return h;
}

std::string half(std::int64_t doubled) { return HalfInt::from_doubled(doubled).str(); }

std::string data_dir() {
  if (const char* env = std::getenv("TREELIKE_DATA_DIR")) return env;
  return TREELIKE_DATA_DIR;
}

std::vector<std::pair<std::string, Graph>> enumerated(std::size_t lo, std::size_t hi) {
  return load_enumerated_range(data_dir(), lo, hi);
}

Graph random_connected(std::uint64_t seed, std::size_t lo, std::size_t hi) {
  Rng rng(seed);
  const std::size_t n = lo + rng.below(hi - lo + 1);
  const double p = 0.15 + 0.5 * static_cast<double>(rng.below(1001)) / 1000.0;
  return gen_gnp(n, p, rng.fork());
}

Outcome cycle_formula() {
  Outcome o;
  for (std::size_t n = 3; n <= 24; ++n) {
    Graph g = gen_cycle(n);
    DistanceMatrix dm = all_pairs_distances(g);
    const std::int64_t expected = n % 4 == 1 ? 2 * static_cast<std::int64_t>(n / 4) - 1 : 2 * static_cast<std::int64_t>(n / 4);
    const HypResult h = delta_star(g, dm, "C" + std::to_string(n));
    const int lc = longest_induced_cycle(g).lc;
    const int brute = oracle::delta_star_doubled(oracle::distances(g));
    o.expect(h.delta_star.doubled() == expected && brute == expected,
             "C" + std::to_string(n) + ": delta* expected " + half(expected) + ", got " + h.delta_star.str() +
                 " (brute force " + half(brute) + ")");
    o.expect(lc == static_cast<int>(n), "C" + std::to_string(n) + ": lc " + std::to_string(lc));
  }
  return o;
}

Outcome grid_law() {
  Outcome o;
  for (std::size_t m = 2; m <= 5; ++m)
    for (std::size_t k = 2; k <= 5; ++k) {
      Graph g = gen_grid({m, k});
      DistanceMatrix dm = all_pairs_distances(g);
      const HypResult h = delta_star(g, dm, g.name());
      const std::int64_t expected = static_cast<std::int64_t>(std::min(m, k)) - 1;
      o.expect(h.delta_star == HalfInt::from_int(expected),
               g.name() + ": delta* expected " + std::to_string(expected) + ", got " + h.delta_star.str());
    }
  std::vector<Graph> tl_cases = {gen_grid({3, 3}), gen_grid({2, 3}), gen_grid({2, 4}), gen_grid({2, 5})};
  for (const Graph& g : tl_cases) {
    const int tl = tree_length_exact(g, all_pairs_distances(g)).tl;
    o.expect(tl == 2, g.name() + ": tl expected 2, got " + std::to_string(tl));
  }
  return o;
}

Outcome f_family() {
  Outcome o;
  for (std::size_t t = 2; t <= 3; ++t) {
    Graph g = gen_f(t);
    DistanceMatrix dm = all_pairs_distances(g);
    const HypResult h = delta_star(g, dm, g.name());
    const int lc = longest_induced_cycle(g).lc;
    o.expect(lc == static_cast<int>(4 * t - 2), g.name() + ": lc " + std::to_string(lc));
    o.expect(h.delta_star.doubled() == static_cast<std::int64_t>(2 * t - 1),
             g.name() + ": delta* expected " + half(2 * t - 1) + ", got " + h.delta_star.str());
    if (t == 2) {
      const int tl = tree_length_exact(g, dm).tl;
      o.expect(tl == 2, "F2: tl expected 2, got " + std::to_string(tl));
    }
  }
  return o;
}

Outcome gavoille_family() {
  Outcome o;
  for (auto [t, q] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}, {3, 2}}) {
    for (bool shifted : {false, true}) {
      Graph g = shifted ? gen_g4t1(t, q) : gen_g4t(t, q);
      DistanceMatrix dm = all_pairs_distances(g);
      const HypResult h = delta_star(g, dm, g.name());
      const int lc = longest_induced_cycle(g).lc;
      const int want_lc = static_cast<int>(4 * t + (shifted ? 1 : 0));
      o.expect(lc == want_lc, g.name() + ": lc expected " + std::to_string(want_lc) + ", got " + std::to_string(lc));
      o.expect(h.delta_star == HalfInt::from_int(static_cast<std::int64_t>(t)),
               g.name() + ": delta* expected " + std::to_string(t) + ", got " + h.delta_star.str());
    }
  }
  return o;
}

Outcome outerplanar_family() {
  Outcome o;
  const std::size_t t = 2, q = 1;
  for (bool shifted : {false, true}) {
    Graph g = shifted ? gen_g61(t, q) : gen_g6(t, q);
    DistanceMatrix dm = all_pairs_distances(g);
    const HypResult h = delta_star(g, dm, g.name());
    const int lc = longest_induced_cycle(g).lc;
    const int want_lc = static_cast<int>(6 * (2 * t + 1) + (shifted ? 1 : 0));
    const std::int64_t want_doubled = static_cast<std::int64_t>(6 * t + 3);
    o.expect(lc == want_lc, g.name() + ": lc expected " + std::to_string(want_lc) + ", got " + std::to_string(lc));
    o.expect(h.delta_star.doubled() == want_doubled,
             g.name() + ": delta* expected " + half(want_doubled) + ", got " + h.delta_star.str());
  }
  return o;
}

Outcome catalog_table() {
  const std::vector<std::pair<std::string, std::pair<int, std::int64_t>>> table = {
      {"C4", {4, 2}}, {"H1", {3, 2}}, {"H2", {3, 2}}, {"H3", {5, 2}}, {"H4", {5, 2}}, {"H5", {5, 2}}, {"H6", {5, 2}},
      {"G1", {6, 2}}, {"G2", {6, 2}}, {"G3", {6, 2}}, {"C6", {6, 2}}, {"E1", {7, 2}}, {"E2", {8, 2}}};
  Outcome o;
  for (const auto& [name, want] : table) {
    const CatalogEntry& e = catalog_entry(name);
    const HypResult h = delta_star(e.graph, e.distances, name);
    const int lc = longest_induced_cycle(e.graph).lc;
    o.expect(lc == want.first && h.delta_star.doubled() == want.second,
             name + ": expected (" + std::to_string(want.first) + ", " + half(want.second) + "), got (" +
                 std::to_string(lc) + ", " + h.delta_star.str() + ")");
  }
  return o;
}

Outcome main_theorem() {
  Outcome o;
  std::vector<std::pair<std::string, Graph>> instances;
  for (std::size_t i = 0; i < 500; ++i)
    instances.emplace_back("random #" + std::to_string(i), random_connected(instance_seed(kSeed, i), 4, 14));
  for (const auto& row : family_table_rows()) instances.emplace_back(row.label, row.build());
  for (const auto& [label, g] : instances) {
    DistanceMatrix dm = all_pairs_distances(g);
    const HypResult h = delta_star(g, dm, label);
    const int lc = longest_induced_cycle(g).lc;
    if (lc >= 4) {
      o.expect(h.delta_star.doubled() <= lc / 2, label + " " + to_graph6(g) + ": 2 delta* = " +
                                                     std::to_string(h.delta_star.doubled()) + " > floor(lc/2) = " +
                                                     std::to_string(lc / 2));
    } else {
      o.expect(h.delta_star <= HalfInt::from_int(1), label + ": chordal with delta* = " + h.delta_star.str());
    }
  }
  return o;
}

std::optional<std::string> isometric_obstruction(const Graph& g, const DistanceMatrix& dm,
                                                 const std::vector<const CatalogEntry*>& patterns) {
  DistanceRings rings(g, dm);
  for (const CatalogEntry* p : patterns)
    if (find_isometric_embedding(rings, p->distances)) return p->name;
  return std::nullopt;
}

Outcome main1_equivalence() {
  Outcome o;
  const auto patterns = catalog_entries({"C4", "H1", "H2", "H3", "H4", "H5"});
  auto check = [&](const std::string& label, const Graph& g, bool brute) {
    DistanceMatrix dm = all_pairs_distances(g);
    const HypResult h = delta_star(g, dm, label);
    const auto found = isometric_obstruction(g, dm, patterns);
    const bool one = h.delta_star == HalfInt::from_int(1);
    o.expect(one == found.has_value(), label + " " + to_graph6(g) + ": delta* = " + h.delta_star.str() +
                                           ", obstruction " + found.value_or("none"));
    o.expect(h.delta_star <= HalfInt::from_int(1), label + ": 5-chordal with delta* = " + h.delta_star.str());
    if (brute) {
      o.expect(h.delta_star.doubled() == oracle::delta_star_doubled(oracle::distances(g)),
               label + ": delta* differs from brute force");
    }
  };
  for (const auto& [label, g] : enumerated(1, 8)) {
    if (oracle::longest_induced_cycle(oracle::adjacency(g)) > 5) continue;
    check(label, g, true);
  }
  for (std::size_t i = 0; i < 10000; ++i) {
    Rng rng(instance_seed(kSeed + 8, i));
    const std::size_t n = 4 + rng.below(9);
    Graph g = gen_k_chordal_random(n, 5, rng.fork());
    check("random #" + std::to_string(i), g, false);
  }
  return o;
}

Outcome bc_equivalence() {
  Outcome o;
  for (const auto& [label, g] : enumerated(1, 8)) {
    DistanceMatrix dm = all_pairs_distances(g);
    const bool half_hyperbolic = oracle::delta_star_doubled(oracle::distances(g)) <= 1;
    try {
      ClassificationReport r = half_hyperbolicity_test_bc(g, dm);
      witnesses.record(g, dm, r.direct, label);
      o.expect(r.predicted == half_hyperbolic, label + " " + to_graph6(g) + ": conditions " +
                                                   (r.predicted ? "hold" : "fail") + ", delta* = " +
                                                   r.direct.delta_star.str());
    } catch (const InvariantError& e) {
      o.expect(false, label + ": " + e.what());
    }
  }
  return o;
}

Outcome bound_chain() {
  Outcome o;
  auto check = [&](const std::string& label, const Graph& g, bool brute) {
    DistanceMatrix dm = all_pairs_distances(g);
    const HypResult h = delta_star(g, dm, label);
    const int lc = longest_induced_cycle(g).lc;
    const TreeLengthResult tl = tree_length_exact(g, dm);
    o.expect(h.delta_star.ceil() <= tl.tl && tl.tl <= lc / 2,
             label + " " + to_graph6(g) + ": delta* = " + h.delta_star.str() + ", tl = " + std::to_string(tl.tl) +
                 ", lc = " + std::to_string(lc));
    o.expect(verify_tree_length_witness(g, dm, tl), label + ": witness triangulation rejected");
    if (brute) {
      const int exhaustive = oracle::tree_length(oracle::adjacency(g));
      o.expect(exhaustive == tl.tl, label + " " + to_graph6(g) + ": tl = " + std::to_string(tl.tl) +
                                        ", exhaustive = " + std::to_string(exhaustive));
    }
  };
  for (const auto& [label, g] : enumerated(2, 7)) check(label, g, true);
  for (std::size_t i = 0; i < 300; ++i) {
    check("random #" + std::to_string(i), random_connected(instance_seed(kSeed + 10, i), 8, 10), false);
  }
  return o;
}

Outcome cartesian_trees() {
  Outcome o;
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng(instance_seed(kSeed + 11, i));
    Graph t1 = gen_tree_random(1 + rng.below(8), rng.fork());
    Graph t2 = gen_tree_random(1 + rng.below(8), rng.fork());
    const int d1 = diameter(all_pairs_distances(t1)), d2 = diameter(all_pairs_distances(t2));
    Graph g = cartesian_product(t1, t2);
    DistanceMatrix dm = all_pairs_distances(g);
    const HypResult h = delta_star(g, dm, "pair #" + std::to_string(i));
    o.expect(h.delta_star == HalfInt::from_int(std::min(d1, d2)),
             "pair #" + std::to_string(i) + ": D1 = " + std::to_string(d1) + ", D2 = " + std::to_string(d2) +
                 ", delta* = " + h.delta_star.str());
  }
  return o;
}

Outcome zero_hyperbolicity() {
  Outcome o;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(instance_seed(kSeed + 12, i));
    Graph g = gen_block_random(1 + rng.below(16), rng.fork());
    DistanceMatrix dm = all_pairs_distances(g);
    const HypResult h = delta_star(g, dm, "block #" + std::to_string(i));
    o.expect(h.delta_star == HalfInt{} && oracle::is_block_graph(oracle::adjacency(g)),
             "block #" + std::to_string(i) + " " + to_graph6(g) + ": delta* = " + h.delta_star.str());
  }
  for (const auto& [label, g] : enumerated(1, 7)) {
    DistanceMatrix dm = all_pairs_distances(g);
    const HypResult h = delta_star(g, dm, label);
    if (h.delta_star != HalfInt{}) continue;
    o.expect(is_block_graph(g) && oracle::is_block_graph(oracle::adjacency(g)),
             label + " " + to_graph6(g) + ": delta* = 0 but not a block graph");
  }
  return o;
}

Outcome base_point() {
  Outcome o;
  for (std::size_t i = 0; i < 100; ++i) {
    Graph g = random_connected(instance_seed(kSeed + 13, i), 4, 12);
    DistanceMatrix dm = all_pairs_distances(g);
    const HypResult h = delta_star(g, dm, "random #" + std::to_string(i));
    HalfInt lo = base_point_delta(g, dm, 0), hi = lo;
    for (Vertex u = 1; u < g.order(); ++u) {
      const HalfInt b = base_point_delta(g, dm, u);
      lo = std::min(lo, b);
      hi = std::max(hi, b);
    }
    o.expect(h.delta_star <= lo * 2 && h.delta_star == hi,
             "random #" + std::to_string(i) + " " + to_graph6(g) + ": delta* = " + h.delta_star.str() +
                 ", min delta_u = " + lo.str() + ", max delta_u = " + hi.str());
  }
  return o;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cycle formula", cycle_formula},
      {2, "grid law", grid_law},
      {3, "F family", f_family},
      {4, "Gavoille family", gavoille_family},
      {5, "outerplanar family", outerplanar_family},
      {6, "catalog table", catalog_table},
      {7, "chordality bound", main_theorem},
      {8, "5-chordal obstruction equivalence", main1_equivalence},
      {9, "half-hyperbolicity conditions", bc_equivalence},
      {10, "tree-length bound chain", bound_chain},
      {11, "products of trees", cartesian_trees},
      {12, "zero hyperbolicity", zero_hyperbolicity},
      {13, "base-point inequality", base_point},
  };
  int failed = 0;
  auto report = [&](int id, const std::string& title, std::size_t checked, const std::vector<std::string>& bad,
                    double seconds) {
    const bool pass = bad.empty();
    failed += pass ? 0 : 1;
    std::printf("criterion %2d %s  %-34s %zu checks, %zu mismatches, %.1f s\n", id, pass ? "PASS" : "FAIL",
                title.c_str(), checked, bad.size(), seconds);
    for (std::size_t i = 0; i < bad.size() && i < kMaxDetails; ++i) std::printf("    %s\n", bad[i].c_str());
    if (bad.size() > kMaxDetails) std::printf("    ... %zu more\n", bad.size() - kMaxDetails);
    std::fflush(stdout);
  };
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.mismatches.push_back(std::string("error: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(c.id, c.title, o.checked, o.mismatches, seconds);
  }
  report(14, "quadrangle diagnostics", witnesses.checked, witnesses.failures, 0.0);
  return failed == 0 ? 0 : 1;
}
