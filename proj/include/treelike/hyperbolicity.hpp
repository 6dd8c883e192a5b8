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

// Four-point (Gromov) hyperbolicity and the base-point quantities built on the
// Gromov product. All arithmetic is on doubled integers.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include <boost/rational.hpp>

#include "treelike/constructions.hpp"
#include "treelike/distance.hpp"
#include "treelike/graph.hpp"
#include "treelike/half_int.hpp"

namespace treelike {

using Quadruple = std::array<Vertex, 4>;

/// The three pairing sums xy+uv, xu+yv, xv+yu.
inline std::array<int, 3> pairing_sums(const DistanceMatrix& dm, Vertex x, Vertex y, Vertex u, Vertex v) {
  return {dm(x, y) + dm(u, v), dm(x, u) + dm(y, v), dm(x, v) + dm(y, u)};
}

namespace detail {

// Largest minus median of three values.
inline int gap_top_two(int a, int b, int c) {
  if (a < b) std::swap(a, b);
  if (b < c) std::swap(b, c);
  if (a < b) std::swap(a, b);
  return a - b;
}

}  // namespace detail

/// delta(x,y,u,v): half the gap between the largest and second largest
/// pairing sum. Zero whenever two of the vertices coincide.
inline HalfInt four_point_delta(const DistanceMatrix& dm, Vertex x, Vertex y, Vertex u, Vertex v) {
  if (x == y || x == u || x == v || y == u || y == v || u == v) return HalfInt{};
  auto s = pairing_sums(dm, x, y, u, v);
  return HalfInt::from_doubled(detail::gap_top_two(s[0], s[1], s[2]));
}

inline HalfInt four_point_delta(const DistanceMatrix& dm, const Quadruple& q) {
  return four_point_delta(dm, q[0], q[1], q[2], q[3]);
}

struct HypResult {
  HalfInt delta_star;
  /// Lexicographically least sorted quadruple attaining delta_star; absent
  /// when the graph has fewer than four vertices.
  std::optional<Quadruple> witness;
  /// Unordered quadruples in scope, C(n,4).
  std::uint64_t scanned = 0;
  /// Quadruples whose sums were actually evaluated after pruning.
  std::uint64_t evaluated = 0;
};

struct HyperbolicityOptions {
  unsigned threads = 1;
  /// Stop as soon as a quadruple reaches floor(diam/2).
  bool stop_at_diameter_bound = true;
};

namespace detail {

struct ScanBest {
  int doubled = -1;
  Quadruple witness{};
  std::uint64_t evaluated = 0;
};

// Scans quadruples a<b<c<d drawn from `verts` (sorted) whose leading index is
// congruent to `offset` modulo `stride`. Pruning only skips quadruples that
// cannot strictly beat the running best: delta <= min pairwise distance.
inline ScanBest scan_quadruples(const DistanceMatrix& dm, const std::vector<Vertex>& verts, std::size_t offset,
                                std::size_t stride, int cap_doubled) {
  ScanBest best;
  best.doubled = 0;
  bool found = false;
  const std::size_t k = verts.size();
  for (std::size_t ia = offset; ia < k; ia += stride) {
    const Vertex a = verts[ia];
    for (std::size_t ib = ia + 1; ib < k; ++ib) {
      const Vertex b = verts[ib];
      const int ab = dm(a, b);
      if (2 * ab <= best.doubled && found) continue;
      for (std::size_t ic = ib + 1; ic < k; ++ic) {
        const Vertex c = verts[ic];
        const int ac = dm(a, c), bc = dm(b, c);
        if (found && (2 * ac <= best.doubled || 2 * bc <= best.doubled)) continue;
        for (std::size_t id = ic + 1; id < k; ++id) {
          const Vertex d = verts[id];
          ++best.evaluated;
          const int s1 = ab + dm(c, d);
          const int s2 = ac + dm(b, d);
          const int s3 = dm(a, d) + bc;
          const int gap = gap_top_two(s1, s2, s3);
          if (!found || gap > best.doubled) {
            found = true;
            best.doubled = gap;
            best.witness = {a, b, c, d};
            if (gap >= cap_doubled) return best;
          }
        }
      }
    }
  }
  if (!found) best.doubled = -1;
  return best;
}

inline HypResult scan_vertex_list(const DistanceMatrix& dm, const std::vector<Vertex>& verts,
                                  const HyperbolicityOptions& options) {
  HypResult result;
  const std::uint64_t k = verts.size();
  result.scanned = k < 4 ? 0 : k * (k - 1) * (k - 2) * (k - 3) / 24;
  if (k < 4) return result;
  int cap = 1 << 30;
  if (options.stop_at_diameter_bound) {
    int diam = 0;
    for (Vertex a : verts)
      for (Vertex b : verts) diam = std::max(diam, dm(a, b));
    cap = 2 * (diam / 2);
  }
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(k)));
  std::vector<ScanBest> partial(workers);
  if (workers == 1) {
    partial[0] = scan_quadruples(dm, verts, 0, 1, cap);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { partial[w] = scan_quadruples(dm, verts, w, workers, cap); });
    }
  }
  ScanBest best;
  for (const ScanBest& p : partial) {
    result.evaluated += p.evaluated;
    if (p.doubled < 0) continue;
    if (p.doubled > best.doubled || (p.doubled == best.doubled && p.witness < best.witness)) {
      best.doubled = p.doubled;
      best.witness = p.witness;
    }
  }
  result.delta_star = HalfInt::from_doubled(best.doubled);
  result.witness = best.witness;
  return result;
}

}  // namespace detail

/// Exact hyperbolicity delta*(G) by exhaustive quadruple scan.
inline HypResult hyperbolicity(const Graph& g, const DistanceMatrix& dm, const HyperbolicityOptions& options = {}) {
  require_connected(g);
  std::vector<Vertex> verts(g.order());
  for (Vertex v = 0; v < g.order(); ++v) verts[v] = v;
  return detail::scan_vertex_list(dm, verts, options);
}

/// delta*(G) as the maximum over biconnected blocks. Blocks are isometric, so
/// the host distance matrix is reused; blocks with fewer than four vertices
/// contribute zero. Agrees with hyperbolicity() on the value, not necessarily
/// on the witness.
inline HypResult hyperbolicity_by_blocks(const Graph& g, const DistanceMatrix& dm,
                                         const HyperbolicityOptions& options = {}) {
  require_connected(g);
  HypResult result;
  for (const VertexSet& block : biconnected_components(g)) {
    HypResult part = detail::scan_vertex_list(dm, members(block), options);
    result.scanned += part.scanned;
    result.evaluated += part.evaluated;
    if (!part.witness) continue;
    if (!result.witness || part.delta_star > result.delta_star ||
        (part.delta_star == result.delta_star && *part.witness < *result.witness)) {
      result.delta_star = part.delta_star;
      result.witness = part.witness;
    }
  }
  return result;
}

/// Reorders a quadruple so that xy+uv is the largest pairing sum, i.e. so that
/// 2*delta(x,y,u,v) = (xy+uv) - max(xu+yv, xv+yu).
inline Quadruple orient_largest_pairing(const DistanceMatrix& dm, const Quadruple& q) {
  const auto [a, b, c, d] = q;
  auto s = pairing_sums(dm, a, b, c, d);
  if (s[0] >= s[1] && s[0] >= s[2]) return {a, b, c, d};
  if (s[1] >= s[2]) return {a, c, b, d};
  return {a, d, b, c};
}

/// Among all quadruples attaining delta*, the oriented one with minimal
/// xy+uv (ties broken lexicographically). This is the extremal choice used in
/// the classical proofs and is optional for computing delta*.
inline std::optional<Quadruple> extremal_witness(const Graph& g, const DistanceMatrix& dm, HalfInt delta_star) {
  const std::size_t n = g.order();
  std::optional<Quadruple> best;
  int best_sum = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          if (four_point_delta(dm, a, b, c, d) != delta_star) continue;
          Quadruple o = orient_largest_pairing(dm, {a, b, c, d});
          const int sum = dm(o[0], o[1]) + dm(o[2], o[3]);
          if (!best || sum < best_sum || (sum == best_sum && o < *best)) {
            best = o;
            best_sum = sum;
          }
        }
  return best;
}

/// Gromov product (x.y)_u = (xu + yu - xy) / 2.
inline HalfInt gromov_product(const DistanceMatrix& dm, Vertex x, Vertex y, Vertex u) {
  return HalfInt::from_doubled(dm(x, u) + dm(y, u) - dm(x, y));
}

/// Least delta with (x.y)_u >= min((x.v)_u, (y.v)_u) - delta for all x, y, v.
inline HalfInt base_point_delta(const Graph& g, const DistanceMatrix& dm, Vertex u) {
  const std::size_t n = g.order();
  std::vector<int> prod(n * n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) prod[x * n + y] = dm(x, u) + dm(y, u) - dm(x, y);
  int worst = 0;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x; y < n; ++y) {
      const int xy = prod[x * n + y];
      for (Vertex v = 0; v < n; ++v) worst = std::max(worst, std::min(prod[x * n + v], prod[y * n + v]) - xy);
    }
  return HalfInt::from_doubled(worst);
}

using Rational = boost::rational<std::int64_t>;

/// Farris transform D(x,y) = rho - (x.y)_u, stored row-major.
class FarrisTable {
 public:
  FarrisTable(const DistanceMatrix& dm, Rational rho, Vertex u) : n_(dm.order()), values_(n_ * n_) {
    for (Vertex x = 0; x < n_; ++x)
      for (Vertex y = 0; y < n_; ++y)
        values_[x * n_ + y] = rho - Rational(gromov_product(dm, x, y, u).doubled(), 2);
  }
  std::size_t order() const { return n_; }
  const Rational& operator()(Vertex x, Vertex y) const { return values_[x * n_ + y]; }

 private:
  std::size_t n_;
  std::vector<Rational> values_;
};

inline FarrisTable farris_transform(const DistanceMatrix& dm, Rational rho, Vertex u) { return {dm, rho, u}; }

}  // namespace treelike
