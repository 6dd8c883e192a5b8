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

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "treelike/distance.hpp"
#include "treelike/errors.hpp"
#include "treelike/graph.hpp"

namespace treelike {

/// Cartesian product with row-major vertex order: (a, b) -> a * |V(g2)| + b.
inline Graph cartesian_product(const Graph& g1, const Graph& g2, std::size_t max_vertices = 1u << 16) {
  const std::size_t n1 = g1.order(), n2 = g2.order();
  if (n1 != 0 && n2 > max_vertices / n1) {
    throw ArgumentError("product of " + std::to_string(n1) + " and " + std::to_string(n2) +
                        " vertices exceeds the cap of " + std::to_string(max_vertices));
  }
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n1; ++a) {
    for (const Edge& e : g2.edges()) edges.push_back({a * n2 + e.first, a * n2 + e.second});
  }
  for (const Edge& e : g1.edges()) {
    for (Vertex b = 0; b < n2; ++b) edges.push_back({e.first * n2 + b, e.second * n2 + b});
  }
  return Graph(n1 * n2, edges);
}

/// Vertex labeling of the subdivision S^t(G).
///
/// Original vertices keep their ids. The t-1 interior vertices of the i-th
/// edge {u,v} (u < v, edges in sorted order) are n + i*(t-1) + (q-1) for the
/// vertex q steps away from u.
class Subdivision {
 public:
  Subdivision(const Graph& g, std::size_t t) : base_edges_(g.edges()), n_(g.order()), t_(t) {
    if (t == 0) throw ArgumentError("subdivision parameter must be positive");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < base_edges_.size(); ++i) {
      const Edge& e = base_edges_[i];
      Vertex prev = e.first;
      for (std::size_t q = 1; q < t; ++q) {
        Vertex cur = n_ + i * (t - 1) + (q - 1);
        edges.push_back({prev, cur});
        prev = cur;
      }
      edges.push_back({prev, e.second});
    }
    graph_ = Graph(n_ + base_edges_.size() * (t - 1), edges);
  }

  const Graph& graph() const { return graph_; }
  std::size_t t() const { return t_; }

  /// The vertex q steps from u on the path replacing edge {u,v}; q = 0 is u and
  /// q = t is v, so at(u, v, q) == at(v, u, t - q).
  Vertex at(Vertex u, Vertex v, std::size_t q) const {
    if (q > t_) throw ArgumentError("subdivision step out of range");
    if (q == 0) return u;
    if (q == t_) return v;
    Edge key = normalized({u, v});
    auto it = std::lower_bound(base_edges_.begin(), base_edges_.end(), key);
    if (it == base_edges_.end() || *it != key) {
      throw ArgumentError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge of the seed graph");
    }
    const std::size_t i = static_cast<std::size_t>(it - base_edges_.begin());
    const std::size_t from_low = u < v ? q : t_ - q;
    return n_ + i * (t_ - 1) + (from_low - 1);
  }

 private:
  std::vector<Edge> base_edges_;
  std::size_t n_;
  std::size_t t_;
  Graph graph_;
};

/// S^t(G): every edge replaced by a path of length t.
inline Graph subdivision(const Graph& g, std::size_t t) { return Subdivision(g, t).graph(); }

/// G^k: same vertices, u ~ v iff 0 < d(u,v) <= k.
inline Graph graph_power(const Graph& g, const DistanceMatrix& dm, int k) {
  if (k < 1) throw ArgumentError("graph power must be positive");
  std::vector<VertexSet> rows(g.order(), VertexSet(g.order()));
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (u != v && dm(u, v) <= k) rows[u].set(v);
    }
  }
  return Graph::from_rows(std::move(rows));
}

inline Graph graph_power(const Graph& g, int k) { return graph_power(g, all_pairs_distances(g), k); }

/// Complement graph; may be disconnected.
inline Graph complement(const Graph& g) {
  std::vector<VertexSet> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    rows[v] = ~g.neighbors(v);
    rows[v].reset(v);
  }
  return Graph::from_rows(std::move(rows));
}

/// Blocks (maximal 2-connected pieces and bridges) in the order a DFS from
/// vertex 0 completes them. A single vertex forms one block.
inline std::vector<VertexSet> biconnected_components(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.order();
  std::vector<VertexSet> blocks;
  if (n == 1) {
    blocks.push_back(make_vertex_set(1, {0}));
    return blocks;
  }
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnset), low(n, 0);
  std::vector<Edge> edge_stack;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;  // next neighbor candidate
  };
  std::vector<Frame> stack;
  std::size_t time = 0;
  disc[0] = low[0] = time++;
  stack.push_back({0, kUnset, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const VertexSet& nb = g.neighbors(f.v);
    auto w = f.next == 0 ? nb.find_first() : nb.find_next(f.next - 1);
    if (w != VertexSet::npos) {
      f.next = w + 1;
      if (w == f.parent) continue;
      if (disc[w] == kUnset) {
        edge_stack.push_back({f.v, w});
        disc[w] = low[w] = time++;
        stack.push_back({w, f.v, 0});
      } else if (disc[w] < disc[f.v]) {
        edge_stack.push_back({f.v, w});
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = f;
    stack.pop_back();
    if (stack.empty()) break;
    Vertex p = done.parent;
    low[p] = std::min(low[p], low[done.v]);
    if (low[done.v] >= disc[p]) {
      VertexSet block(n);
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.set(e.first);
        block.set(e.second);
        if (e.first == p && e.second == done.v) break;
      }
      blocks.push_back(std::move(block));
    }
  }
  return blocks;
}

/// Every block is a clique.
inline bool is_block_graph(const Graph& g) {
  for (const VertexSet& block : biconnected_components(g)) {
    bool clique = true;
    for_each_member(block, [&](Vertex v) {
      VertexSet others = block;
      others.reset(v);
      if (!others.is_subset_of(g.neighbors(v))) clique = false;
    });
    if (!clique) return false;
  }
  return true;
}

/// Whether the subgraph induced by `s` is connected and distance-preserving.
///
/// Pairs at induced distance 1 or 2 always agree with the host (adjacency is
/// inherited and a common neighbour inside `s` is a common neighbour in G), so
/// only pairs at induced distance >= 3 are compared.
inline bool is_isometric_subset(const Graph& g, const DistanceMatrix& dm, const VertexSet& s) {
  if (s.none()) throw ArgumentError("isometric test needs a nonempty vertex set");
  const std::vector<Vertex> keep = members(s);
  Graph h = induced_subgraph(g, s);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::vector<int> dh = bfs_distances(h, i);
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (dh[j] < 0) return false;
      if (dh[j] >= 3 && dh[j] != dm(keep[i], keep[j])) return false;
    }
  }
  return true;
}

/// Same predicate without the distance <= 2 shortcut; used to cross-check.
inline bool is_isometric_subset_full(const Graph& g, const DistanceMatrix& dm, const VertexSet& s) {
  const std::vector<Vertex> keep = members(s);
  Graph h = induced_subgraph(g, s);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::vector<int> dh = bfs_distances(h, i);
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (dh[j] != dm(keep[i], keep[j])) return false;
    }
  }
  return true;
}

}  // namespace treelike
