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

// Distance-preserving (isometric) pattern embedding.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "treelike/catalog.hpp"
#include "treelike/distance.hpp"
#include "treelike/errors.hpp"
#include "treelike/graph.hpp"

namespace treelike {

/// image[i] is the host vertex assigned to pattern vertex i.
using VertexMap = std::vector<Vertex>;

/// Distance rings of a host graph: ring(v, d) is the set of vertices at
/// distance exactly d from v. Build once and reuse across patterns.
class DistanceRings {
 public:
  DistanceRings(const Graph& g, const DistanceMatrix& dm) : n_(g.order()), diam_(0) {
    require_connected(g);
    diam_ = treelike::diameter(dm);
    rings_.assign(n_ * (diam_ + 1), VertexSet(n_));
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w = 0; w < n_; ++w) rings_[v * (diam_ + 1) + dm(v, w)].set(w);
  }

  std::size_t order() const { return n_; }
  int diameter() const { return diam_; }

  /// Empty set when d exceeds the host diameter.
  const VertexSet& ring(Vertex v, int d) const {
    if (d > diam_) return empty_;
    return rings_[v * (diam_ + 1) + d];
  }

 private:
  std::size_t n_;
  int diam_;
  std::vector<VertexSet> rings_;
  VertexSet empty_{n_};
};

namespace detail {

inline bool extend_embedding(const DistanceRings& rings, const DistanceMatrix& dp, VertexMap& image,
                             std::size_t depth) {
  const std::size_t k = dp.order();
  if (depth == k) return true;
  VertexSet cand(rings.order());
  if (depth == 0) {
    cand.set();
  } else {
    cand = rings.ring(image[0], dp(0, depth));
    for (std::size_t j = 1; j < depth && cand.any(); ++j) cand &= rings.ring(image[j], dp(j, depth));
  }
  for (auto w = cand.find_first(); w != VertexSet::npos; w = cand.find_next(w)) {
    image[depth] = w;
    if (extend_embedding(rings, dp, image, depth + 1)) return true;
  }
  return false;
}

}  // namespace detail

/// Injective map f with d_G(f(a), f(b)) = d_P(a, b) for all pattern pairs,
/// lexicographically least in image sequence, or none. Injectivity follows
/// from the positive pattern distances.
inline std::optional<VertexMap> find_isometric_embedding(const DistanceRings& rings, const DistanceMatrix& pattern) {
  if (pattern.order() == 0) return VertexMap{};
  if (pattern.order() > rings.order()) return std::nullopt;
  VertexMap image(pattern.order());
  if (!detail::extend_embedding(rings, pattern, image, 0)) return std::nullopt;
  return image;
}

inline std::optional<VertexMap> find_isometric_embedding(const Graph& g, const DistanceMatrix& dm,
                                                         const CatalogEntry& p) {
  require_connected(g);
  std::optional<VertexMap> found = find_isometric_embedding(DistanceRings(g, dm), p.distances);
  if (found) {
    for (std::size_t a = 0; a < found->size(); ++a)
      for (std::size_t b = 0; b < found->size(); ++b)
        if (dm((*found)[a], (*found)[b]) != p.distances(a, b)) {
          throw InvariantError("embedding of " + p.name + " does not preserve distances");
        }
  }
  return found;
}

}  // namespace treelike
