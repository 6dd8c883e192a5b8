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
#include <cstdint>
#include <limits>
#include <span>
#include <thread>
#include <vector>

#include "treelike/errors.hpp"
#include "treelike/graph.hpp"

namespace treelike {

/// n x n table of hop distances of a connected graph.
class DistanceMatrix {
 public:
  using value_type = std::uint16_t;
  static constexpr value_type kUnreachable = std::numeric_limits<value_type>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t order() const { return n_; }

  int operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  void set(Vertex u, Vertex v, int value) { d_[u * n_ + v] = static_cast<value_type>(value); }

  std::span<const value_type> row(Vertex u) const { return {d_.data() + u * n_, n_}; }
  std::span<value_type> row(Vertex u) { return {d_.data() + u * n_, n_}; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<value_type> d_;
};

struct DistanceOptions {
  /// Memory guard on the number of vertices.
  std::size_t max_vertices = 4096;
  unsigned threads = 1;
};

namespace detail {

// Fills row `source` by BFS; returns the number of reached vertices.
inline std::size_t bfs_row(const Graph& g, Vertex source, std::span<DistanceMatrix::value_type> row) {
  std::fill(row.begin(), row.end(), DistanceMatrix::kUnreachable);
  VertexSet unseen = full_vertex_set(g.order());
  VertexSet frontier(g.order());
  frontier.set(source);
  unseen.reset(source);
  std::size_t reached = 0;
  DistanceMatrix::value_type level = 0;
  while (frontier.any()) {
    VertexSet next(g.order());
    for_each_member(frontier, [&](Vertex v) {
      row[v] = level;
      ++reached;
      next |= g.neighbors(v);
    });
    next &= unseen;
    unseen -= next;
    frontier = std::move(next);
    ++level;
  }
  return reached;
}

}  // namespace detail

/// Single-source BFS distances; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<DistanceMatrix::value_type> row(g.order());
  detail::bfs_row(g, source, row);
  std::vector<int> out(g.order());
  for (std::size_t i = 0; i < row.size(); ++i) {
    out[i] = row[i] == DistanceMatrix::kUnreachable ? -1 : row[i];
  }
  return out;
}

/// All-pairs hop distances by one BFS per source. Sources may be split across
/// worker threads; the result does not depend on the split.
inline DistanceMatrix all_pairs_distances(const Graph& g, const DistanceOptions& options = {}) {
  const std::size_t n = g.order();
  if (n == 0) throw ArgumentError("graph has no vertices");
  if (n > options.max_vertices || n >= DistanceMatrix::kUnreachable) {
    throw ArgumentError("graph with " + std::to_string(n) + " vertices exceeds the distance-matrix cap of " +
                        std::to_string(options.max_vertices));
  }
  DistanceMatrix dm(n);
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(n)));
  if (workers == 1) {
    for (Vertex s = 0; s < n; ++s) detail::bfs_row(g, s, dm.row(s));
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (Vertex s = w; s < n; s += workers) detail::bfs_row(g, s, dm.row(s));
      });
    }
  }
  for (Vertex v = 1; v < n; ++v) {
    if (dm(0, v) == DistanceMatrix::kUnreachable) throw DisconnectedError(0, v);
  }
  return dm;
}

/// Largest entry of the distance matrix.
inline int diameter(const DistanceMatrix& dm) {
  int best = 0;
  for (Vertex u = 0; u < dm.order(); ++u) {
    for (auto d : dm.row(u)) best = std::max<int>(best, d);
  }
  return best;
}

inline int diameter(const Graph&, const DistanceMatrix& dm) { return diameter(dm); }

inline std::vector<int> eccentricities(const DistanceMatrix& dm) {
  std::vector<int> ecc(dm.order(), 0);
  for (Vertex u = 0; u < dm.order(); ++u) {
    for (auto d : dm.row(u)) ecc[u] = std::max<int>(ecc[u], d);
  }
  return ecc;
}

/// Distance matrix restricted to the vertices of `s` (in increasing order).
inline DistanceMatrix restrict_to(const DistanceMatrix& dm, const std::vector<Vertex>& keep) {
  DistanceMatrix out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) out.set(i, j, dm(keep[i], keep[j]));
  }
  return out;
}

}  // namespace treelike
