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

// Deterministic graph families and seeded samplers.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "treelike/catalog.hpp"
#include "treelike/chordality.hpp"
#include "treelike/constructions.hpp"
#include "treelike/errors.hpp"
#include "treelike/graph.hpp"
#include "treelike/random.hpp"

namespace treelike {

inline Graph gen_path(std::size_t n) {
  if (n < 1) throw ArgumentError("path needs at least one vertex");
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return b.build("P" + std::to_string(n));
}

inline Graph gen_cycle(std::size_t n) {
  if (n < 3) throw ArgumentError("cycle needs at least three vertices");
  std::vector<Vertex> c(n);
  std::iota(c.begin(), c.end(), Vertex{0});
  return GraphBuilder(n).add_cycle(c).build("C" + std::to_string(n));
}

inline Graph gen_complete(std::size_t n) {
  if (n < 1) throw ArgumentError("complete graph needs at least one vertex");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build("K" + std::to_string(n));
}

/// Product of paths with m_1, ..., m_t vertices.
inline Graph gen_grid(const std::vector<std::size_t>& sides) {
  if (sides.empty()) throw ArgumentError("grid needs at least one side length");
  Graph g = gen_path(sides.front());
  std::string name = "grid";
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (i > 0) g = cartesian_product(g, gen_path(sides[i]));
    name += (i == 0 ? "(" : ",") + std::to_string(sides[i]);
  }
  return g.with_name(name + ")");
}

/// F_t: cycle v1..v4t (ids 0..4t-1) with chords v1v3 and v(2t+1)v(2t+3).
inline Graph gen_f(std::size_t t) {
  if (t < 2) throw ArgumentError("F_t needs t >= 2");
  const std::size_t n = 4 * t;
  std::vector<Vertex> c(n);
  std::iota(c.begin(), c.end(), Vertex{0});
  return GraphBuilder(n).add_cycle(c).add_edge(0, 2).add_edge(2 * t, 2 * t + 2).build("F" + std::to_string(t));
}

namespace detail {

inline void check_tq(std::size_t t, std::size_t q, std::string_view family) {
  if (q < 1 || q >= t) {
    throw ArgumentError(std::string(family) + " needs 0 < q < t, got t=" + std::to_string(t) +
                        ", q=" + std::to_string(q));
  }
}

inline Graph with_edges(const Graph& g, const std::vector<Edge>& add, const std::vector<Edge>& remove,
                        std::string name) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (std::find(remove.begin(), remove.end(), e) == remove.end()) edges.push_back(e);
  for (const Edge& e : add) edges.push_back(normalized(e));
  return Graph(g.order(), edges, std::move(name));
}

// S^t(H2) plus the four attachment edges; `shifted` moves the y-corner edge
// one step along the d-y path.
inline Graph gavoille(std::size_t t, std::size_t q, bool shifted) {
  check_tq(t, q, shifted ? "g4t1" : "g4t");
  const Subdivision s(catalog_entry("H2").graph, t);
  const Vertex u_a = s.at(kU, kA, q), u_c = s.at(kC, kU, q - 1);
  const Vertex y_c = s.at(kY, kC, q), y_d = s.at(kD, kY, q - 1);
  const Vertex v_d = s.at(kV, kD, q), v_b = s.at(kB, kV, q - 1);
  const Vertex x_b = s.at(kX, kB, q), x_a = s.at(kA, kX, q - 1);
  std::vector<Edge> add{{u_a, u_c}, {x_a, x_b}, {v_b, v_d}};
  std::vector<Edge> remove;
  if (shifted) {
    add.push_back({y_c, s.at(kD, kY, q)});
  } else {
    add.push_back({y_c, y_d});
  }
  const std::string name = (shifted ? "G4t1(" : "G4t(") + std::to_string(t) + "," + std::to_string(q) + ")";
  return with_edges(s.graph(), add, remove, name);
}

// S^(2t+1)(F_2) plus two attachment edges; `shifted` moves the first one a
// step along the v3-v2 path.
inline Graph outerplanar_g6(std::size_t t, std::size_t q, bool shifted) {
  check_tq(t, q, shifted ? "g61" : "g6");
  const Subdivision s(gen_f(2), 2 * t + 1);
  enum : Vertex { v1 = 0, v2 = 1, v3 = 2, v5 = 4, v6 = 5, v7 = 6 };
  const Vertex v21 = s.at(v2, v1, q), v23 = s.at(v3, v2, q - 1);
  const Vertex v65 = s.at(v6, v5, q), v67 = s.at(v7, v6, q - 1);
  std::vector<Edge> add{{v65, v67}};
  if (shifted) {
    add.push_back({v21, s.at(v3, v2, q)});
  } else {
    add.push_back({v21, v23});
  }
  const std::string name = (shifted ? "G61(" : "G6(") + std::to_string(t) + "," + std::to_string(q) + ")";
  return with_edges(s.graph(), add, {}, name);
}

}  // namespace detail

/// S^t(H2) with the four corner edges; lc = 4t.
inline Graph gen_g4t(std::size_t t, std::size_t q) { return detail::gavoille(t, q, false); }
/// The 4t+1 variant of gen_g4t.
inline Graph gen_g4t1(std::size_t t, std::size_t q) { return detail::gavoille(t, q, true); }
/// Outerplanar S^(2t+1)(F_2) with two extra edges; lc = 6(2t+1).
inline Graph gen_g6(std::size_t t, std::size_t q) { return detail::outerplanar_g6(t, q, false); }
/// The 6(2t+1)+1 variant of gen_g6.
inline Graph gen_g61(std::size_t t, std::size_t q) { return detail::outerplanar_g6(t, q, true); }

/// Vertex i > 0 attaches to a uniform earlier vertex, then ids are shuffled.
inline Graph gen_tree_random(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("tree needs at least one vertex");
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(perm[v], perm[rng.below(v)]);
  return b.build("tree(" + std::to_string(n) + ")");
}

/// Connected block graph: cliques of 2..5 vertices glued at uniform cut
/// vertices until n vertices exist.
inline Graph gen_block_random(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("block graph needs at least one vertex");
  Rng rng(seed);
  GraphBuilder b(1);
  while (b.order() < n) {
    const Vertex cut = rng.below(b.order());
    const std::size_t room = n - b.order();
    const std::size_t extra = 1 + rng.below(std::min<std::size_t>(4, room));
    std::vector<Vertex> clique{cut};
    for (std::size_t i = 0; i < extra; ++i) clique.push_back(b.add_vertex());
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j) b.add_edge(clique[i], clique[j]);
  }
  return b.build("block(" + std::to_string(n) + ")");
}

inline constexpr int kRejectionAttempts = 10000;

/// G(n, p) conditioned on connectivity by rejection.
inline Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("gnp needs at least one vertex");
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("gnp edge probability must lie in [0, 1]");
  Rng rng(seed);
  for (int attempt = 0; attempt < kRejectionAttempts; ++attempt) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.coin(p)) b.add_edge(u, v);
    Graph g = b.build("gnp(" + std::to_string(n) + ")");
    if (is_connected(g)) return g;
  }
  throw BudgetError("gnp: rejection budget exhausted without a connected sample");
}

/// Connected graph with lc <= k: G(n, p) with p drawn from [0.2, 0.8],
/// rejected until k-chordal. Not uniform over k-chordal graphs.
inline Graph gen_k_chordal_random(std::size_t n, int k, std::uint64_t seed) {
  if (k < 3) throw ArgumentError("k-chordal sampler needs k >= 3");
  Rng rng(seed);
  for (int attempt = 0; attempt < kRejectionAttempts; ++attempt) {
    const double p = 0.2 + 0.6 * static_cast<double>(rng.below(1001)) / 1000.0;
    Graph g;
    try {
      g = gen_gnp(n, p, rng.fork());
    } catch (const BudgetError&) {
      continue;
    }
    if (is_k_chordal(g, k).holds) {
      return g.with_name(std::to_string(k) + "-chordal(" + std::to_string(n) + ")");
    }
  }
  throw BudgetError("k-chordal sampler: rejection budget exhausted");
}

enum class Family { kCycle, kPath, kComplete, kGrid, kTreeRandom, kBlockRandom, kF, kG4t, kG4t1, kG6, kG61, kGnp, kKChordalRandom };

struct FamilySpec {
  Family family = Family::kCycle;
  /// Integer parameters; gnp takes (n, percent).
  std::vector<std::int64_t> params;
  std::uint64_t seed = 0;
};

inline constexpr std::pair<std::string_view, Family> kFamilyNames[] = {
    {"cycle", Family::kCycle}, {"path", Family::kPath}, {"complete", Family::kComplete},
    {"grid", Family::kGrid}, {"tree_random", Family::kTreeRandom}, {"block_random", Family::kBlockRandom},
    {"f", Family::kF}, {"g4t", Family::kG4t}, {"g4t1", Family::kG4t1}, {"g6", Family::kG6},
    {"g61", Family::kG61}, {"gnp", Family::kGnp}, {"k_chordal_random", Family::kKChordalRandom},
};

inline Family parse_family(std::string_view name) {
  for (auto [key, family] : kFamilyNames)
    if (key == name) return family;
  throw ArgumentError("unknown family '" + std::string(name) + "'");
}

inline std::string_view family_name(Family family) {
  for (auto [key, f] : kFamilyNames)
    if (f == family) return key;
  return "?";
}

/// Builds the family member described by `spec`, validating arity and ranges.
inline Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi) {
      throw ArgumentError(std::string(family_name(spec.family)) + " takes " + std::to_string(lo) +
                          (lo == hi ? "" : ".." + std::to_string(hi)) + " parameter(s), got " +
                          std::to_string(p.size()));
    }
    for (std::int64_t x : p)
      if (x < 0) throw ArgumentError("family parameters must be nonnegative");
  };
  auto u = [&](std::size_t i) { return static_cast<std::size_t>(p[i]); };
  switch (spec.family) {
    case Family::kCycle: need(1, 1); return gen_cycle(u(0));
    case Family::kPath: need(1, 1); return gen_path(u(0));
    case Family::kComplete: need(1, 1); return gen_complete(u(0));
    case Family::kGrid: {
      need(1, 8);
      std::vector<std::size_t> sides;
      for (std::size_t i = 0; i < p.size(); ++i) sides.push_back(u(i));
      return gen_grid(sides);
    }
    case Family::kTreeRandom: need(1, 1); return gen_tree_random(u(0), spec.seed);
    case Family::kBlockRandom: need(1, 1); return gen_block_random(u(0), spec.seed);
    case Family::kF: need(1, 1); return gen_f(u(0));
    case Family::kG4t: need(2, 2); return gen_g4t(u(0), u(1));
    case Family::kG4t1: need(2, 2); return gen_g4t1(u(0), u(1));
    case Family::kG6: need(2, 2); return gen_g6(u(0), u(1));
    case Family::kG61: need(2, 2); return gen_g61(u(0), u(1));
    case Family::kGnp:
      need(2, 2);
      if (p[1] > 100) throw ArgumentError("gnp percent must lie in [0, 100]");
      return gen_gnp(u(0), static_cast<double>(p[1]) / 100.0, spec.seed);
    case Family::kKChordalRandom: need(2, 2); return gen_k_chordal_random(u(0), static_cast<int>(p[1]), spec.seed);
  }
  throw ArgumentError("unhandled family");
}

}  // namespace treelike
