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

// Geodesic quadrangle Q(x,u,y,v) with sides
//   P_a: x -> u,  P_b: x -> v,  P_c: y -> u,  P_d: y -> v
// and the upper bounds on delta(x,y,u,v) that can be read off it.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "treelike/distance.hpp"
#include "treelike/errors.hpp"
#include "treelike/graph.hpp"
#include "treelike/half_int.hpp"
#include "treelike/hyperbolicity.hpp"

namespace treelike {

/// Geodesic from `from` to `to` taking the least-id neighbour that is one step
/// closer at every hop.
inline std::vector<Vertex> canonical_geodesic(const Graph& g, const DistanceMatrix& dm, Vertex from, Vertex to) {
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur != to) {
    const int want = dm(cur, to) - 1;
    Vertex next = cur;
    for (auto w = g.neighbors(cur).find_first(); w != VertexSet::npos; w = g.neighbors(cur).find_next(w)) {
      if (dm(w, to) == want) {
        next = w;
        break;
      }
    }
    if (next == cur) throw InvariantError("no geodesic step found; distance matrix does not match graph");
    path.push_back(next);
    cur = next;
  }
  return path;
}

/// One evaluated inequality lhs <= rhs.
struct BoundCheck {
  std::string name;
  HalfInt lhs;
  HalfInt rhs;
  bool holds = true;
};

struct QuadrangleReport {
  Vertex x = 0, y = 0, u = 0, v = 0;
  std::vector<Vertex> side_a, side_b, side_c, side_d;
  HalfInt delta;
  int diameter = 0;
  /// Minimum distance between the vertex sets of opposite sides.
  int d_ad = 0, d_bc = 0;
  /// xy+uv is the largest pairing sum.
  bool ringel_holds = false;
  /// Indices of the projection argument: j (a_j b_j <= 1, max), i (b_i
  /// d_{yv-xv+i} <= 1, min), l (c_l d_l <= 1, max), m (a_m c_{yu-xu+m} <= 1, min).
  int i = 0, j = 0, l = 0, m = 0;
  /// pi(a), pi(b), pi(c), pi(d).
  std::array<HalfInt, 4> pi{};
  /// Edges joining two adjacent sides (A-edges) or two opposite sides
  /// (H-edges) without lying in a single side. An edge may be both.
  int a_edges = 0, h_edges = 0;
  int h_edges_ad = 0, h_edges_bc = 0;
  std::vector<BoundCheck> bound_checks;

  bool all_hold() const {
    return std::all_of(bound_checks.begin(), bound_checks.end(), [](const BoundCheck& c) { return c.holds; });
  }
};

struct QuadrangleOptions {
  /// Reorder the quadruple so that xy+uv is the largest pairing sum first.
  bool orient = true;
  /// Raise InvariantError when an evaluated bound fails.
  bool throw_on_failure = true;
};

namespace detail {

inline int set_distance(const DistanceMatrix& dm, const std::vector<Vertex>& p, const std::vector<Vertex>& q) {
  int best = 1 << 30;
  for (Vertex a : p)
    for (Vertex b : q) best = std::min(best, dm(a, b));
  return best;
}

}  // namespace detail

inline QuadrangleReport quadrangle_diagnostics(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
                                               Vertex u, Vertex v, const QuadrangleOptions& options = {}) {
  if (x == y || x == u || x == v || y == u || y == v || u == v) {
    throw ArgumentError("quadrangle diagnostics need four distinct vertices");
  }
  if (options.orient) {
    Quadruple o = orient_largest_pairing(dm, {x, y, u, v});
    x = o[0], y = o[1], u = o[2], v = o[3];
  }
  QuadrangleReport r;
  r.x = x, r.y = y, r.u = u, r.v = v;
  r.side_a = canonical_geodesic(g, dm, x, u);
  r.side_b = canonical_geodesic(g, dm, x, v);
  r.side_c = canonical_geodesic(g, dm, y, u);
  r.side_d = canonical_geodesic(g, dm, y, v);
  r.delta = four_point_delta(dm, x, y, u, v);
  r.diameter = diameter(dm);
  r.d_ad = detail::set_distance(dm, r.side_a, r.side_d);
  r.d_bc = detail::set_distance(dm, r.side_b, r.side_c);

  const int xy = dm(x, y), uv = dm(u, v), xu = dm(x, u), xv = dm(x, v), yu = dm(y, u), yv = dm(y, v);
  r.ringel_holds = xy + uv >= xu + yv && xy + uv >= xv + yu;

  const auto& A = r.side_a;
  const auto& B = r.side_b;
  const auto& C = r.side_c;
  const auto& D = r.side_d;
  for (int k = 0; k <= std::min(xu, xv); ++k)
    if (dm(A[k], B[k]) <= 1) r.j = k;
  for (int k = xv; k >= std::max(0, xv - yv); --k)
    if (dm(B[k], D[yv - xv + k]) <= 1) r.i = k;
  for (int k = 0; k <= std::min(yu, yv); ++k)
    if (dm(C[k], D[k]) <= 1) r.l = k;
  for (int k = xu; k >= std::max(0, xu - yu); --k)
    if (dm(A[k], C[yu - xu + k]) <= 1) r.m = k;
  const int ab = dm(A[r.j], B[r.j]);
  const int bd = dm(B[r.i], D[yv - xv + r.i]);
  const int cd = dm(C[r.l], D[r.l]);
  const int ac = dm(A[r.m], C[yu - xu + r.m]);
  r.pi[0] = HalfInt::from_doubled(2 * (r.m - r.j) + ab + ac);
  r.pi[1] = HalfInt::from_doubled(2 * (r.i - r.j) + ab + bd);
  r.pi[2] = HalfInt::from_doubled(2 * ((yu - xu + r.m) - r.l) + ac + cd);
  r.pi[3] = HalfInt::from_doubled(2 * ((yv - xv + r.i) - r.l) + bd + cd);

  // Side membership masks: a=1, b=2, c=4, d=8.
  std::vector<unsigned> mask(g.order(), 0);
  for (Vertex w : A) mask[w] |= 1u;
  for (Vertex w : B) mask[w] |= 2u;
  for (Vertex w : C) mask[w] |= 4u;
  for (Vertex w : D) mask[w] |= 8u;
  auto joins = [](unsigned p, unsigned q, unsigned s, unsigned t) {
    return ((p & s) && (q & t)) || ((p & t) && (q & s));
  };
  for (const Edge& e : g.edges()) {
    const unsigned p = mask[e.first], q = mask[e.second];
    if (!p || !q || (p & q)) continue;
    if (joins(p, q, 1, 2) || joins(p, q, 1, 4) || joins(p, q, 2, 8) || joins(p, q, 4, 8)) ++r.a_edges;
    const bool ad = joins(p, q, 1, 8), bc = joins(p, q, 2, 4);
    if (ad || bc) ++r.h_edges;
    if (ad) ++r.h_edges_ad;
    if (bc) ++r.h_edges_bc;
  }

  auto check = [&](std::string name, HalfInt lhs, HalfInt rhs) {
    r.bound_checks.push_back({std::move(name), lhs, rhs, lhs <= rhs});
  };
  const int six_min = std::min({xy, uv, xu, xv, yu, yv});
  check("delta <= min pairwise distance", r.delta, HalfInt::from_int(six_min));
  check("delta <= floor(diam/2)", r.delta, HalfInt::from_int(r.diameter / 2));
  if (r.delta.doubled() == r.diameter) {
    check("delta = diam/2 forces even diameter", HalfInt::from_int(r.diameter % 2), HalfInt{});
  }
  if (r.ringel_holds) {
    check("delta <= min(d(P_a,P_d), d(P_b,P_c))", r.delta, HalfInt::from_int(std::min(r.d_ad, r.d_bc)));
    const HalfInt pi_min = *std::min_element(r.pi.begin(), r.pi.end());
    check("delta <= min pi", r.delta, pi_min);
    const int idx_min = std::min({r.i - r.j, (yv - xv + r.i) - r.l, (yu - xu + r.m) - r.l, r.m - r.j});
    check("min pi <= 1 + min index gap", pi_min, HalfInt::from_int(1 + idx_min));
    check("pi >= 0", HalfInt{}, pi_min);
  }

  if (options.throw_on_failure && !r.all_hold()) {
    std::ostringstream os;
    os << "quadrangle bound failed for (" << x << "," << y << "," << u << "," << v << ") on graph with "
       << g.order() << " vertices:";
    for (const auto& c : r.bound_checks)
      if (!c.holds) os << " [" << c.name << ": " << c.lhs << " > " << c.rhs << "]";
    throw InvariantError(os.str());
  }
  return r;
}

inline QuadrangleReport quadrangle_diagnostics(const Graph& g, const DistanceMatrix& dm, const Quadruple& q,
                                               const QuadrangleOptions& options = {}) {
  return quadrangle_diagnostics(g, dm, q[0], q[1], q[2], q[3], options);
}

}  // namespace treelike
