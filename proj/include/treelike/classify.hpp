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

// Obstruction-based classifiers. Each one checks its class precondition,
// evaluates the characterization, computes delta* directly and compares.

#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "treelike/catalog.hpp"
#include "treelike/chordality.hpp"
#include "treelike/embedding.hpp"
#include "treelike/hyperbolicity.hpp"
#include "treelike/io.hpp"

namespace treelike {

struct Obstruction {
  std::string pattern;
  VertexMap image;
};

/// Conditions (1)-(3) of the half-hyperbolicity characterization together
/// with the first witness of each failure.
struct BcConditions {
  bool no_long_isometric_cycle = true;
  std::optional<std::vector<Vertex>> isometric_cycle;
  bool closer_neighbors_adjacent = true;
  /// (x, y, p, q): p, q are non-adjacent neighbours of x both closer to y.
  std::optional<std::array<Vertex, 4>> neighbor_witness;
  bool no_pattern = true;
  bool all() const { return no_long_isometric_cycle && closer_neighbors_adjacent && no_pattern; }
};

struct ClassificationReport {
  /// main1, cor7, bkm, atfree, bc or conj14.
  std::string theorem;
  bool applicable = true;
  /// The equivalence being tested, in words.
  std::string claim;
  /// Right-hand side of the claim as evaluated on the graph.
  bool predicted = false;
  /// Left-hand side of the claim from the direct delta* computation.
  bool observed = false;
  std::vector<Obstruction> obstructions_found;
  std::optional<BcConditions> bc;
  HypResult direct;
  bool agrees = true;
};

struct ClassifyOptions {
  /// Report every obstruction instead of stopping at the first.
  bool all = false;
  CycleSearchOptions cycles{};
  HyperbolicityOptions hyperbolicity{};
};

namespace detail {

inline std::vector<Obstruction> scan_obstructions(const DistanceRings& rings, const DistanceMatrix& dm,
                                                  const std::vector<const CatalogEntry*>& patterns, bool all) {
  std::vector<Obstruction> found;
  for (const CatalogEntry* p : patterns) {
    std::optional<VertexMap> image = find_isometric_embedding(rings, p->distances);
    if (!image) continue;
    for (std::size_t a = 0; a < image->size(); ++a)
      for (std::size_t b = 0; b < image->size(); ++b)
        if (dm((*image)[a], (*image)[b]) != p->distances(a, b)) {
          throw InvariantError("embedding of " + p->name + " does not preserve distances");
        }
    found.push_back({p->name, std::move(*image)});
    if (!all) break;
  }
  return found;
}

inline std::string disagreement_message(const ClassificationReport& r, const Graph& g) {
  std::ostringstream os;
  os << r.theorem << " disagreement: claim '" << r.claim << "' predicted " << (r.predicted ? "true" : "false")
     << " but delta* = " << r.direct.delta_star << "\n"
     << to_edge_list(g);
  return os.str();
}

inline void require_k_chordal(const Graph& g, int k, const CycleSearchOptions& options, std::string_view theorem) {
  KChordalResult kc = is_k_chordal(g, k, options);
  if (!kc.holds) {
    throw PreconditionError(std::string(theorem) + " needs a " + std::to_string(k) +
                            "-chordal graph; found an induced cycle of length " +
                            std::to_string(kc.violating_cycle->size()));
  }
}

// Shared body of the "delta* = 1 iff some obstruction embeds" classifiers,
// which also assert delta* <= 1.
inline ClassificationReport classify_unit(const Graph& g, const DistanceMatrix& dm, std::string theorem,
                                          std::vector<const CatalogEntry*> patterns, const ClassifyOptions& options) {
  ClassificationReport r;
  r.theorem = std::move(theorem);
  r.claim = "delta* = 1 iff one of";
  for (const CatalogEntry* p : patterns) r.claim += " " + p->name;
  r.claim += " is isometric";
  r.obstructions_found = scan_obstructions(DistanceRings(g, dm), dm, patterns, options.all);
  r.direct = hyperbolicity(g, dm, options.hyperbolicity);
  if (r.direct.delta_star > HalfInt::from_int(1)) {
    throw InvariantError(r.theorem + ": delta* = " + r.direct.delta_star.str() + " exceeds 1\n" + to_edge_list(g));
  }
  r.predicted = !r.obstructions_found.empty();
  r.observed = r.direct.delta_star == HalfInt::from_int(1);
  r.agrees = r.predicted == r.observed;
  if (!r.agrees) throw InvariantError(disagreement_message(r, g));
  return r;
}

}  // namespace detail

/// 5-chordal graphs: delta* = 1 iff C4 or H1..H5 is an isometric subgraph.
inline ClassificationReport classify_5_chordal(const Graph& g, const DistanceMatrix& dm,
                                               const ClassifyOptions& options = {}) {
  require_connected(g);
  detail::require_k_chordal(g, 5, options.cycles, "main1");
  return detail::classify_unit(g, dm, "main1", catalog_entries({"C4", "H1", "H2", "H3", "H4", "H5"}), options);
}

/// 4-chordal graphs: delta* = 1 iff C4, H1 or H2 is an isometric subgraph.
inline ClassificationReport classify_4_chordal(const Graph& g, const DistanceMatrix& dm,
                                               const ClassifyOptions& options = {}) {
  require_connected(g);
  detail::require_k_chordal(g, 4, options.cycles, "cor7");
  return detail::classify_unit(g, dm, "cor7", catalog_entries({"C4", "H1", "H2"}), options);
}

/// Chordal graphs: delta* = 1 iff H1 or H2 is an isometric subgraph.
inline ClassificationReport classify_chordal(const Graph& g, const DistanceMatrix& dm,
                                             const ClassifyOptions& options = {}) {
  require_connected(g);
  if (!is_chordal(g)) throw PreconditionError("bkm needs a chordal graph");
  return detail::classify_unit(g, dm, "bkm", catalog_entries({"H1", "H2"}), options);
}

/// AT-free graphs: delta* = 1 iff C4 is an isometric subgraph.
inline ClassificationReport classify_at_free(const Graph& g, const DistanceMatrix& dm,
                                             const ClassifyOptions& options = {}) {
  require_connected(g);
  AtFreeResult at = is_at_free(g, dm);
  if (!at.at_free) {
    const auto& w = *at.witness;
    throw PreconditionError("atfree needs an AT-free graph; (" + std::to_string(w[0]) + "," + std::to_string(w[1]) +
                            "," + std::to_string(w[2]) + ") is an asteroidal triple");
  }
  return detail::classify_unit(g, dm, "atfree", catalog_entries({"C4"}), options);
}

/// Evaluates the three half-hyperbolicity conditions.
inline BcConditions bc_conditions(const Graph& g, const DistanceMatrix& dm, const DistanceRings& rings,
                                  const CycleSearchOptions& cycles = {}) {
  BcConditions c;
  c.isometric_cycle = find_isometric_cycle(g, dm, 6, cycles);
  c.no_long_isometric_cycle = !c.isometric_cycle;
  const std::size_t n = g.order();
  for (Vertex x = 0; x < n && c.closer_neighbors_adjacent; ++x)
    for (Vertex y = 0; y < n && c.closer_neighbors_adjacent; ++y) {
      if (x == y) continue;
      VertexSet closer = g.neighbors(x) & rings.ring(y, dm(x, y) - 1);
      for (auto p = closer.find_first(); p != VertexSet::npos && c.closer_neighbors_adjacent;
           p = closer.find_next(p)) {
        VertexSet miss = closer - g.neighbors(p);
        miss.reset(p);
        auto q = miss.find_next(p);
        if (q != VertexSet::npos) {
          c.closer_neighbors_adjacent = false;
          c.neighbor_witness = std::array<Vertex, 4>{x, y, p, q};
        }
      }
    }
  return c;
}

/// Any graph: delta* <= 1/2 iff no isometric cycle longer than 5, closer
/// neighbours always adjacent, and none of H1, H2, G1, G2, E1, E2 isometric.
inline ClassificationReport half_hyperbolicity_test_bc(const Graph& g, const DistanceMatrix& dm,
                                                       const ClassifyOptions& options = {}) {
  require_connected(g);
  ClassificationReport r;
  r.theorem = "bc";
  r.claim = "delta* <= 1/2 iff no isometric n-cycle (n > 5), closer neighbours pairwise adjacent, "
            "and none of H1 H2 G1 G2 E1 E2 is isometric";
  DistanceRings rings(g, dm);
  BcConditions c = bc_conditions(g, dm, rings, options.cycles);
  r.obstructions_found =
      detail::scan_obstructions(rings, dm, catalog_entries({"H1", "H2", "G1", "G2", "E1", "E2"}), options.all);
  c.no_pattern = r.obstructions_found.empty();
  r.bc = c;
  r.direct = hyperbolicity(g, dm, options.hyperbolicity);
  r.predicted = c.all();
  r.observed = r.direct.delta_star <= HalfInt::from_doubled(1);
  r.agrees = r.predicted == r.observed;
  if (!r.agrees) throw InvariantError(detail::disagreement_message(r, g));
  return r;
}

/// 6-chordal graphs, conjectured: delta* <= 1/2 iff none of G1, G2, G3, C4,
/// C6, H1..H5 is isometric. Disagreement is reported in `agrees`, not thrown.
inline ClassificationReport conjecture14_probe(const Graph& g, const DistanceMatrix& dm,
                                               const ClassifyOptions& options = {}) {
  require_connected(g);
  detail::require_k_chordal(g, 6, options.cycles, "conj14");
  ClassificationReport r;
  r.theorem = "conj14";
  r.claim = "delta* <= 1/2 iff none of G1 G2 G3 C4 C6 H1 H2 H3 H4 H5 is isometric";
  r.obstructions_found = detail::scan_obstructions(
      DistanceRings(g, dm), dm, catalog_entries({"G1", "G2", "G3", "C4", "C6", "H1", "H2", "H3", "H4", "H5"}),
      options.all);
  r.direct = hyperbolicity(g, dm, options.hyperbolicity);
  r.predicted = r.obstructions_found.empty();
  r.observed = r.direct.delta_star <= HalfInt::from_doubled(1);
  r.agrees = r.predicted == r.observed;
  return r;
}

/// Dispatch by tag: main1, cor7, bkm, atfree, bc, conj14.
inline ClassificationReport classify(std::string_view theorem, const Graph& g, const DistanceMatrix& dm,
                                     const ClassifyOptions& options = {}) {
  if (theorem == "main1") return classify_5_chordal(g, dm, options);
  if (theorem == "cor7") return classify_4_chordal(g, dm, options);
  if (theorem == "bkm") return classify_chordal(g, dm, options);
  if (theorem == "atfree") return classify_at_free(g, dm, options);
  if (theorem == "bc") return half_hyperbolicity_test_bc(g, dm, options);
  if (theorem == "conj14") return conjecture14_probe(g, dm, options);
  throw ArgumentError("unknown theorem '" + std::string(theorem) + "'");
}

struct CatalogCheck {
  std::string name;
  std::size_t vertices = 0, edges = 0;
  int expected_lc = 0, lc = 0;
  HalfInt expected_delta_star, delta_star;
  bool ok() const { return lc == expected_lc && delta_star == expected_delta_star; }
};

struct CatalogSelftest {
  std::vector<CatalogCheck> entries;
  /// (p, q): p embeds isometrically into q, p != q.
  std::vector<std::pair<std::string, std::string>> embeds_into;
  /// Pairs that are isomorphic; must be empty.
  std::vector<std::pair<std::string, std::string>> isomorphic;
  bool ok() const {
    return isomorphic.empty() && std::all_of(entries.begin(), entries.end(), [](const CatalogCheck& c) { return c.ok(); });
  }
};

/// Recomputes (lc, delta*) of every entry and the isometric-embedding
/// relation among entries. Throws InvariantError naming the first mismatch
/// when `throw_on_mismatch` is set.
inline CatalogSelftest catalog_selftest(bool throw_on_mismatch = true) {
  CatalogSelftest report;
  const auto& entries = catalog();
  for (const CatalogEntry& e : entries) {
    CatalogCheck c;
    c.name = e.name;
    c.vertices = e.graph.order();
    c.edges = e.graph.size();
    c.expected_lc = e.expected_lc;
    c.expected_delta_star = e.expected_delta_star;
    c.lc = longest_induced_cycle(e.graph).lc;
    c.delta_star = hyperbolicity(e.graph, e.distances).delta_star;
    if (throw_on_mismatch && !c.ok()) {
      throw InvariantError("catalog entry " + e.name + ": expected (lc, delta*) = (" + std::to_string(c.expected_lc) +
                           ", " + c.expected_delta_star.str() + "), computed (" + std::to_string(c.lc) + ", " +
                           c.delta_star.str() + ")");
    }
    report.entries.push_back(c);
  }
  for (const CatalogEntry& host : entries) {
    DistanceRings rings(host.graph, host.distances);
    for (const CatalogEntry& p : entries) {
      if (&p == &host || !find_isometric_embedding(rings, p.distances)) continue;
      report.embeds_into.emplace_back(p.name, host.name);
      if (p.graph.order() == host.graph.order() && p.name < host.name) {
        report.isomorphic.emplace_back(p.name, host.name);
      }
    }
  }
  if (throw_on_mismatch && !report.isomorphic.empty()) {
    throw InvariantError("catalog entries " + report.isomorphic.front().first + " and " +
                         report.isomorphic.front().second + " are isomorphic");
  }
  return report;
}

}  // namespace treelike
