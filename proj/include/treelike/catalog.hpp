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

// Named small graphs that serve as isometric obstructions.
//
// The eight-vertex members share one labeling: x=0, y=1, u=2, v=3, a=4, b=5,
// c=6, d=7, with outer cycle x-a-u-c-y-d-v-b-x.

#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "treelike/distance.hpp"
#include "treelike/errors.hpp"
#include "treelike/graph.hpp"
#include "treelike/half_int.hpp"

namespace treelike {

struct CatalogEntry {
  std::string name;
  Graph graph;
  DistanceMatrix distances;
  int expected_lc = 0;
  HalfInt expected_delta_star;
  /// Display names of the vertices, index = vertex id.
  std::vector<std::string> labels;
};

namespace detail {

enum : Vertex { kX = 0, kY = 1, kU = 2, kV = 3, kA = 4, kB = 5, kC = 6, kD = 7 };

inline std::vector<std::string> octagon_labels() { return {"x", "y", "u", "v", "a", "b", "c", "d"}; }

inline std::vector<std::string> indexed_labels(char prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline GraphBuilder octagon() {
  GraphBuilder b(8);
  b.add_cycle({kX, kA, kU, kC, kY, kD, kV, kB});
  return b;
}

inline Graph from_pairs(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs, std::string name) {
  GraphBuilder b(n);
  for (auto [p, q] : pairs) b.add_edge(p, q);
  return b.build(std::move(name));
}

inline CatalogEntry make_entry(std::string name, Graph g, int lc, HalfInt delta, std::vector<std::string> labels) {
  DistanceMatrix dm = all_pairs_distances(g);
  return {std::move(name), g.with_name(name), std::move(dm), lc, delta, std::move(labels)};
}

inline std::vector<CatalogEntry> build_catalog() {
  const HalfInt one = HalfInt::from_int(1);
  std::vector<CatalogEntry> out;

  out.push_back(make_entry("C4", GraphBuilder(4).add_cycle({kX, kV, kY, kU}).build(), 4, one,
                           {"x", "y", "u", "v"}));
  out.push_back(make_entry("H1",
                           octagon()
                               .add_edge(kA, kB)
                               .add_edge(kA, kC)
                               .add_edge(kC, kD)
                               .add_edge(kB, kD)
                               .add_edge(kA, kD)
                               .build(),
                           3, one, octagon_labels()));
  {
    GraphBuilder b = octagon();
    const Vertex inner[] = {kA, kB, kC, kD};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) b.add_edge(inner[i], inner[j]);
    out.push_back(make_entry("H2", b.build(), 3, one, octagon_labels()));
  }
  // H3 lives on x, y, u, v, c, d only: x=0, y=1, u=2, v=3, c=4, d=5.
  out.push_back(make_entry("H3", GraphBuilder(6).add_cycle({2, 4, 1, 5, 3, 0}).add_edge(4, 5).build(), 5, one,
                           {"x", "y", "u", "v", "c", "d"}));
  out.push_back(make_entry("H4", octagon().add_edge(kA, kD).add_edge(kB, kC).build(), 5, one, octagon_labels()));
  out.push_back(make_entry("H5", octagon().add_edge(kA, kD).build(), 5, one, octagon_labels()));
  out.push_back(make_entry("H6", octagon().add_edge(kA, kC).add_edge(kA, kD).add_edge(kC, kD).build(), 5, one,
                           octagon_labels()));
  out.push_back(make_entry("G1",
                           from_pairs(9,
                                      {{0, 1}, {1, 3}, {3, 4}, {4, 7}, {7, 6}, {6, 5}, {5, 2}, {2, 0},
                                       {3, 8}, {8, 5}, {2, 8}, {8, 4}, {1, 8}, {8, 7}, {1, 2}, {5, 7}},
                                      "G1"),
                           6, one, indexed_labels('p', 9)));
  out.push_back(make_entry("G2",
                           from_pairs(9,
                                      {{0, 1}, {1, 3}, {4, 2}, {2, 5}, {6, 7}, {7, 8}, {1, 2}, {2, 7},
                                       {0, 2}, {2, 8}, {1, 4}, {5, 7}, {3, 4}, {4, 8}, {0, 5}, {5, 6}},
                                      "G2"),
                           6, one, indexed_labels('q', 9)));
  out.push_back(make_entry(
      "G3", from_pairs(7, {{0, 4}, {0, 6}, {6, 2}, {2, 3}, {1, 3}, {4, 1}, {4, 5}, {5, 2}}, "G3"), 6, one,
      indexed_labels('r', 7)));
  out.push_back(make_entry("C6", GraphBuilder(6).add_cycle({0, 1, 2, 3, 4, 5}).build(), 6, one,
                           indexed_labels('c', 6)));
  out.push_back(make_entry("E1",
                           from_pairs(11,
                                      {{0, 1}, {1, 3}, {4, 5}, {5, 6}, {9, 6}, {6, 10}, {10, 8},
                                       {1, 5}, {5, 10}, {0, 5}, {2, 5}, {5, 7}, {1, 4}, {0, 2},
                                       {2, 9}, {3, 4}, {4, 7}, {7, 8}, {7, 10}, {2, 6}},
                                      "E1"),
                           7, one, indexed_labels('e', 11)));
  out.push_back(make_entry("E2",
                           from_pairs(13,
                                      {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 6}, {6, 8}, {8, 9}, {9, 10},
                                       {10, 11}, {11, 7}, {7, 5}, {5, 3}, {4, 12}, {12, 7}, {6, 12},
                                       {12, 5}, {10, 12}, {12, 1}, {9, 12}, {12, 2}, {9, 6}, {4, 1},
                                       {10, 7}, {2, 5}},
                                      "E2"),
                           8, one, indexed_labels('f', 13)));
  return out;
}

}  // namespace detail

/// All thirteen entries: C4, H1..H6, G1..G3, C6, E1, E2.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline const CatalogEntry& catalog_entry(std::string_view name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e;
  throw ArgumentError("unknown catalog entry '" + std::string(name) + "'");
}

/// Entries in scan order: ascending vertex count, then name.
inline std::vector<const CatalogEntry*> catalog_entries(std::initializer_list<std::string_view> names) {
  std::vector<const CatalogEntry*> out;
  for (std::string_view name : names) out.push_back(&catalog_entry(name));
  std::sort(out.begin(), out.end(), [](const CatalogEntry* p, const CatalogEntry* q) {
    if (p->graph.order() != q->graph.order()) return p->graph.order() < q->graph.order();
    return p->name < q->name;
  });
  return out;
}

}  // namespace treelike
