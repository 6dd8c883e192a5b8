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
#include <utility>
#include <vector>

#include "treelike/errors.hpp"
#include "treelike/vertex_set.hpp"

namespace treelike {

/// Undirected edge with first < second once normalized.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge normalized(Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

/// Immutable simple undirected graph on vertices 0..n-1 with bit-packed
/// adjacency rows.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges are merged; loops and
  /// out-of-range endpoints throw ArgumentError.
  Graph(std::size_t n, const std::vector<Edge>& edges, std::string name = {})
      : n_(n), rows_(n, VertexSet(n)), name_(std::move(name)) {
    for (const Edge& e : edges) {
      if (e.first >= n || e.second >= n) {
        throw ArgumentError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                            "} out of range for " + std::to_string(n) + " vertices");
      }
      if (e.first == e.second) {
        throw ArgumentError("self-loop at vertex " + std::to_string(e.first));
      }
      if (!rows_[e.first].test(e.second)) {
        rows_[e.first].set(e.second);
        rows_[e.second].set(e.first);
        ++m_;
      }
    }
  }

  /// Builds a graph directly from symmetric adjacency rows.
  static Graph from_rows(std::vector<VertexSet> rows, std::string name = {}) {
    Graph g;
    g.n_ = rows.size();
    g.rows_ = std::move(rows);
    g.name_ = std::move(name);
    std::size_t twice = 0;
    for (Vertex v = 0; v < g.n_; ++v) {
      if (g.rows_[v].size() != g.n_) throw ArgumentError("adjacency row has wrong width");
      if (g.rows_[v].test(v)) throw ArgumentError("self-loop at vertex " + std::to_string(v));
      for_each_member(g.rows_[v], [&](Vertex w) {
        if (!g.rows_[w].test(v)) throw ArgumentError("adjacency is not symmetric");
      });
      twice += g.rows_[v].count();
    }
    g.m_ = twice / 2;
    return g;
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }
  bool empty() const { return n_ == 0; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  /// Closed neighborhood N[v].
  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = rows_[v];
    s.set(v);
    return s;
  }

  /// All edges as (u < v) pairs in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for (auto v = rows_[u].find_next(u); v != VertexSet::npos; v = rows_[u].find_next(v)) {
        out.push_back({u, v});
      }
    }
    return out;
  }

  const std::string& name() const { return name_; }
  Graph with_name(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> rows_;
  std::string name_;
};

/// Connected-component labels (0-based, numbered by smallest member).
inline std::vector<std::size_t> component_labels(const Graph& g) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.order(), kUnset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for_each_member(g.neighbors(v), [&](Vertex w) {
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      });
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](std::size_t c) { return c == 0; });
}

/// Throws DisconnectedError naming vertex 0 and the first vertex it cannot reach.
inline void require_connected(const Graph& g) {
  if (g.order() == 0) throw ArgumentError("graph has no vertices");
  auto label = component_labels(g);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (label[v] != 0) throw DisconnectedError(0, v);
  }
}

/// Subgraph induced by `s`, relabeled to 0..|s|-1 in increasing vertex order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> keep = members(s);
  std::vector<std::size_t> index(g.order(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    VertexSet nb = g.neighbors(keep[i]) & s;
    for_each_member(nb, [&](Vertex w) {
      if (w > keep[i]) edges.push_back({i, index[w]});
    });
  }
  return Graph(keep.size(), edges);
}

/// Graph with vertex v renamed to perm[v].
inline Graph relabeled(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(normalized({perm[e.first], perm[e.second]}));
  return Graph(g.order(), edges, g.name());
}

/// Incremental edge collector producing an immutable Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n = 0) : n_(n) {}

  Vertex add_vertex() { return n_++; }
  GraphBuilder& add_edge(Vertex u, Vertex v) {
    edges_.push_back({u, v});
    return *this;
  }
  GraphBuilder& add_path(const std::vector<Vertex>& path) {
    for (std::size_t i = 1; i < path.size(); ++i) add_edge(path[i - 1], path[i]);
    return *this;
  }
  GraphBuilder& add_cycle(const std::vector<Vertex>& cycle) {
    add_path(cycle);
    if (cycle.size() > 2) add_edge(cycle.back(), cycle.front());
    return *this;
  }
  std::size_t order() const { return n_; }
  Graph build(std::string name = {}) const { return Graph(n_, edges_, std::move(name)); }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

}  // namespace treelike
