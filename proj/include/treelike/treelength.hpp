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

// Tree-length through chordal sandwiches G <= H <= G^k.
//
// A chordal H exists between G and G^k iff some elimination ordering of G
// only creates fill edges between vertices at distance <= k. The fill created
// by eliminating v depends only on the set S already eliminated: v's current
// neighbours are the vertices outside S reachable from v through S. The search
// is a memoized DP over eliminated sets.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "treelike/budget.hpp"
#include "treelike/chordality.hpp"
#include "treelike/distance.hpp"
#include "treelike/errors.hpp"
#include "treelike/graph.hpp"
#include "treelike/half_int.hpp"
#include "treelike/hyperbolicity.hpp"

namespace treelike {

struct TreeLengthStats {
  /// Sandwich problems solved, one per k tried.
  int levels = 0;
  std::uint64_t states = 0;
};

struct TreeLengthResult {
  int tl = 1;
  /// Chordal supergraph H of G with max_{uv in E(H)} d_G(u,v) = tl.
  std::vector<Edge> witness_triangulation;
  TreeLengthStats search_stats;
};

struct TreeLengthOptions {
  std::size_t max_vertices = 12;
  Budget budget{};
};

/// Budget or size-cap failure of the exact search, carrying the tree-length
/// of a greedy elimination as an (inexact) upper bound.
class TreeLengthBudgetError : public BudgetError {
 public:
  TreeLengthBudgetError(const std::string& what, int upper_bound)
      : BudgetError(what + " (greedy upper bound " + std::to_string(upper_bound) + ", inexact)"),
        upper_bound_(upper_bound) {}
  int upper_bound() const { return upper_bound_; }

 private:
  int upper_bound_;
};

namespace detail {

// Hard limit of the bitmask representation; the memo table has 2^n entries.
inline constexpr std::size_t kSandwichMaxVertices = 24;

class SandwichSearch {
 public:
  SandwichSearch(const Graph& g, const DistanceMatrix& dm, int k, BudgetMeter& meter)
      : n_(g.order()), meter_(meter), adj_(n_, 0), near_(n_, 0), memo_(std::size_t{1} << n_, kUnknown) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w = 0; w < n_; ++w) {
        if (g.adjacent(v, w)) adj_[v] |= bit(w);
        if (w != v && dm(v, w) <= k) near_[v] |= bit(w);
      }
    }
  }

  // Elimination order whose fill stays inside G^k, if any.
  std::optional<std::vector<Vertex>> solve() {
    if (!feasible(0)) return std::nullopt;
    std::vector<Vertex> order;
    std::uint32_t s = 0;
    while (s != full()) {
      Vertex v = choice_[s];
      order.push_back(v);
      s |= bit(v);
    }
    return order;
  }

  std::uint64_t states() const { return states_; }

  // Current neighbourhood of v once the vertices in s are eliminated.
  std::uint32_t filled_neighbors(Vertex v, std::uint32_t s) const {
    std::uint32_t comp = bit(v);
    std::uint32_t frontier = bit(v);
    std::uint32_t reach = 0;
    while (frontier) {
      std::uint32_t nb = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) nb |= adj_[std::countr_zero(f)];
      reach |= nb;
      frontier = nb & s & ~comp;
      comp |= frontier;
    }
    return reach & ~s & ~bit(v);
  }

 private:
  static constexpr std::int8_t kUnknown = -1;
  static std::uint32_t bit(Vertex v) { return std::uint32_t{1} << v; }
  std::uint32_t full() const { return n_ == 32 ? ~0u : (std::uint32_t{1} << n_) - 1; }

  bool within_k(std::uint32_t set) const {
    for (std::uint32_t f = set; f; f &= f - 1) {
      const Vertex a = std::countr_zero(f);
      if ((set & ~bit(a) & ~near_[a]) != 0) return false;
    }
    return true;
  }

  bool is_clique_in_fill(std::uint32_t set, std::uint32_t s) const {
    for (std::uint32_t f = set; f; f &= f - 1) {
      const Vertex a = std::countr_zero(f);
      if ((set & ~bit(a) & ~filled_neighbors(a, s)) != 0) return false;
    }
    return true;
  }

  bool feasible(std::uint32_t s) {
    if (s == full()) return true;
    std::int8_t& m = memo_[s];
    if (m != kUnknown) return m == 1;
    meter_.tick();
    ++states_;
    bool ok = false;
    // A vertex that is simplicial in the filled graph can always go first.
    for (Vertex v = 0; v < n_ && !ok; ++v) {
      if (s & bit(v)) continue;
      const std::uint32_t nb = filled_neighbors(v, s);
      if (is_clique_in_fill(nb, s)) {
        ok = feasible(s | bit(v));
        if (ok) choice_[s] = v;
        m = ok ? 1 : 0;
        return ok;
      }
    }
    for (Vertex v = 0; v < n_ && !ok; ++v) {
      if (s & bit(v)) continue;
      if (!within_k(filled_neighbors(v, s))) continue;
      if (feasible(s | bit(v))) {
        ok = true;
        choice_[s] = v;
      }
    }
    m = ok ? 1 : 0;
    return ok;
  }

  std::size_t n_;
  BudgetMeter& meter_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::uint32_t> near_;
  std::vector<std::int8_t> memo_;
  std::unordered_map<std::uint32_t, Vertex> choice_;
  std::uint64_t states_ = 0;
};

// Edges of G plus the fill produced by eliminating in `order`.
inline std::vector<Edge> elimination_fill(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.order();
  std::vector<VertexSet> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = g.neighbors(v);
  VertexSet gone(n);
  for (Vertex v : order) {
    VertexSet nb = rows[v] - gone;
    for_each_member(nb, [&](Vertex a) {
      rows[a] |= nb;
      rows[a].reset(a);
    });
    gone.set(v);
  }
  return Graph::from_rows(std::move(rows)).edges();
}

inline int max_stretch(const DistanceMatrix& dm, const std::vector<Edge>& edges) {
  int worst = 1;
  for (const Edge& e : edges) worst = std::max(worst, dm(e.first, e.second));
  return worst;
}

}  // namespace detail

/// Chordal H with E(G) <= E(H) <= E(G^k), returned as the edge set of H.
inline std::optional<std::vector<Edge>> chordal_sandwich(const Graph& g, const DistanceMatrix& dm, int k,
                                                         const TreeLengthOptions& options = {},
                                                         TreeLengthStats* stats = nullptr) {
  require_connected(g);
  if (k < 1) throw ArgumentError("sandwich bound k must be positive");
  const std::size_t cap = std::min(options.max_vertices, detail::kSandwichMaxVertices);
  if (g.order() > cap) {
    throw BudgetError("chordal sandwich: " + std::to_string(g.order()) + " vertices exceeds the cap of " +
                      std::to_string(cap));
  }
  BudgetMeter meter(options.budget, "chordal sandwich");
  detail::SandwichSearch search(g, dm, k, meter);
  std::optional<std::vector<Vertex>> order = search.solve();
  if (stats) {
    ++stats->levels;
    stats->states += search.states();
  }
  if (!order) return std::nullopt;
  return detail::elimination_fill(g, *order);
}

/// Tree-length of a greedy minimum-degree elimination; always >= tl(G).
inline int tree_length_greedy_upper_bound(const Graph& g, const DistanceMatrix& dm) {
  const std::size_t n = g.order();
  std::vector<VertexSet> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = g.neighbors(v);
  VertexSet gone(n);
  std::vector<Vertex> order;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    std::size_t best = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (gone.test(v)) continue;
      const std::size_t deg = (rows[v] - gone).count();
      if (pick == n || deg < best) pick = v, best = deg;
    }
    VertexSet nb = rows[pick] - gone;
    for_each_member(nb, [&](Vertex a) {
      rows[a] |= nb;
      rows[a].reset(a);
    });
    gone.set(pick);
    order.push_back(pick);
  }
  return detail::max_stretch(dm, detail::elimination_fill(g, order));
}

/// Exact tree-length by iterative deepening on k from max(1, ceil(delta*)).
/// Throws TreeLengthBudgetError (with a greedy upper bound) beyond the vertex
/// cap or the node budget.
inline TreeLengthResult tree_length_exact(const Graph& g, const DistanceMatrix& dm,
                                          const TreeLengthOptions& options = {}) {
  require_connected(g);
  TreeLengthResult result;
  if (g.size() == 0 || is_chordal(g)) {
    result.tl = 1;
    result.witness_triangulation = g.edges();
    return result;
  }
  try {
    const HalfInt delta = hyperbolicity(g, dm).delta_star;
    const int diam = diameter(dm);
    for (int k = std::max<int>(1, delta.ceil()); k <= std::max(diam, 1); ++k) {
      auto h = chordal_sandwich(g, dm, k, options, &result.search_stats);
      if (!h) continue;
      result.tl = k;
      result.witness_triangulation = std::move(*h);
      return result;
    }
  } catch (const TreeLengthBudgetError&) {
    throw;
  } catch (const BudgetError& e) {
    throw TreeLengthBudgetError(e.what(), tree_length_greedy_upper_bound(g, dm));
  }
  throw InvariantError("no chordal sandwich found up to the diameter");
}

/// Checks a claimed tree-length witness: H chordal, G <= H, stretch == tl.
inline bool verify_tree_length_witness(const Graph& g, const DistanceMatrix& dm, const TreeLengthResult& r) {
  Graph h(g.order(), r.witness_triangulation);
  for (const Edge& e : g.edges())
    if (!h.adjacent(e.first, e.second)) return false;
  return is_chordal(h) && detail::max_stretch(dm, h.edges()) == r.tl;
}

struct TreeLengthBounds {
  /// ceil(delta*), at least 1.
  int lower = 1;
  /// floor(lc/2), at least 1.
  int upper = 1;
};

inline TreeLengthBounds tree_length_bounds(HalfInt delta_star, int lc) {
  TreeLengthBounds b{std::max<int>(1, delta_star.ceil()), std::max(1, lc / 2)};
  if (b.lower > b.upper) {
    throw InvariantError("tree-length bounds crossed: ceil(delta*) = " + std::to_string(b.lower) +
                         " > floor(lc/2) = " + std::to_string(b.upper));
  }
  return b;
}

inline TreeLengthBounds tree_length_bounds(const Graph& g, const DistanceMatrix& dm,
                                           const CycleSearchOptions& cycles = {}) {
  return tree_length_bounds(hyperbolicity(g, dm).delta_star, longest_induced_cycle(g, cycles).lc);
}

struct ApproximationCheck {
  bool holds = false;
  int max_deviation = 0;
};

/// |d_G(u,v) - d_T(u,v)| <= t for all pairs, for a tree T on V(G). On success
/// also checks delta*(G) <= 2t.
inline ApproximationCheck verify_approximating_tree(const Graph& g, const DistanceMatrix& dm, const Graph& tree,
                                                    int t) {
  require_connected(g);
  if (tree.order() != g.order()) throw ArgumentError("approximating tree must span the same vertex set");
  if (tree.size() + 1 != tree.order() || !is_connected(tree)) {
    throw ArgumentError("approximating tree is not a tree");
  }
  const DistanceMatrix dt = all_pairs_distances(tree);
  ApproximationCheck c;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) c.max_deviation = std::max(c.max_deviation, std::abs(dm(u, v) - dt(u, v)));
  c.holds = c.max_deviation <= t;
  if (c.holds && hyperbolicity(g, dm).delta_star > HalfInt::from_int(2 * t)) {
    throw InvariantError("graph with a distance " + std::to_string(t) + "-approximating tree exceeds delta* " +
                         std::to_string(2 * t));
  }
  return c;
}

struct SandwichProbe {
  int lc = 2;
  /// ceil(lc/3), at least 1.
  int k = 1;
  bool feasible = false;
  std::vector<Edge> witness;
};

/// Is there a chordal H with G <= H <= G^ceil(lc/3)?
inline SandwichProbe sandwich_probe_question1(const Graph& g, const DistanceMatrix& dm,
                                              const TreeLengthOptions& options = {},
                                              const CycleSearchOptions& cycles = {}) {
  SandwichProbe p;
  p.lc = longest_induced_cycle(g, cycles).lc;
  p.k = std::max(1, (p.lc + 2) / 3);
  auto h = chordal_sandwich(g, dm, p.k, options);
  p.feasible = h.has_value();
  if (h) p.witness = std::move(*h);
  return p;
}

}  // namespace treelike
