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

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <map>

#include "oracles.hpp"
#include "treelike/catalog.hpp"
#include "treelike/classify.hpp"
#include "treelike/embedding.hpp"
#include "treelike/generators.hpp"
#include "treelike/io.hpp"

namespace treelike {
namespace {

const HalfInt kOne = HalfInt::from_int(1);

oracle::Matrix pattern_matrix(const CatalogEntry& e) { return oracle::distances(e.graph); }

std::vector<std::string> names(const std::vector<Obstruction>& found) {
  std::vector<std::string> out;
  for (const auto& o : found) out.push_back(o.pattern);
  return out;
}

bool contains(const std::vector<Obstruction>& found, const std::string& name) {
  auto n = names(found);
  return std::find(n.begin(), n.end(), name) != n.end();
}

ClassifyOptions all_patterns() {
  ClassifyOptions o;
  o.all = true;
  return o;
}

Graph k33() {
  GraphBuilder b(6);
  for (Vertex i = 0; i < 3; ++i)
    for (Vertex j = 3; j < 6; ++j) b.add_edge(i, j);
  return b.build("K33");
}

TEST(Catalog, Shapes) {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> shape = {
      {"C4", {4, 4}},  {"H1", {8, 13}}, {"H2", {8, 14}}, {"H3", {6, 7}},  {"H4", {8, 10}},
      {"H5", {8, 9}},  {"H6", {8, 11}}, {"G1", {9, 16}}, {"G2", {9, 16}}, {"G3", {7, 8}},
      {"C6", {6, 6}},  {"E1", {11, 20}}, {"E2", {13, 24}}};
  ASSERT_EQ(catalog().size(), shape.size());
  for (const CatalogEntry& e : catalog()) {
    ASSERT_TRUE(shape.count(e.name)) << e.name;
    EXPECT_EQ(e.graph.order(), shape.at(e.name).first) << e.name;
    EXPECT_EQ(e.graph.size(), shape.at(e.name).second) << e.name;
    EXPECT_EQ(e.labels.size(), e.graph.order());
    EXPECT_TRUE(is_connected(e.graph));
    EXPECT_EQ(e.distances, all_pairs_distances(e.graph));
  }
  EXPECT_THROW(catalog_entry("H7"), ArgumentError);
}

TEST(Catalog, ComputedValuesMatchOracles) {
  for (const CatalogEntry& e : catalog()) {
    oracle::Matrix adj = oracle::adjacency(e.graph);
    EXPECT_EQ(longest_induced_cycle(e.graph).lc, oracle::longest_induced_cycle(adj)) << e.name;
    EXPECT_EQ(hyperbolicity(e.graph, e.distances).delta_star.doubled(),
              oracle::delta_star_doubled(oracle::floyd_warshall(adj)))
        << e.name;
    EXPECT_EQ(hyperbolicity(e.graph, e.distances).delta_star, kOne) << e.name;
  }
}

TEST(Catalog, ExpectedValuesMatchExceptH4) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == "H4") continue;
    EXPECT_EQ(longest_induced_cycle(e.graph).lc, e.expected_lc) << e.name;
  }
}

// H4 as transcribed (outer 8-cycle plus chords {a,d} and {b,c}) contains the
// chordless 6-cycle a-u-c-b-v-d, so its chordality is 6 rather than 5.
TEST(Catalog, H4HasInducedSixCycle) {
  const CatalogEntry& h4 = catalog_entry("H4");
  const std::vector<Vertex> cycle = {4, 2, 6, 5, 3, 7};
  oracle::Matrix adj = oracle::adjacency(h4.graph);
  std::uint32_t mask = 0;
  for (Vertex v : cycle) mask |= 1u << v;
  EXPECT_TRUE(oracle::induces_cycle(adj, mask));
  EXPECT_EQ(oracle::longest_induced_cycle(adj), 6);
  EXPECT_EQ(h4.expected_lc, 5);
}

TEST(Catalog, PairwiseNonIsomorphicByOracle) {
  const auto& entries = catalog();
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i].graph.order() != entries[j].graph.order() || entries[i].graph.size() != entries[j].graph.size())
        continue;
      EXPECT_TRUE(oracle::isometric_embeddings(pattern_matrix(entries[j]), pattern_matrix(entries[i])).empty())
          << entries[i].name << " " << entries[j].name;
    }
}

TEST(Catalog, SelftestEmbeddingRelationMatchesOracle) {
  CatalogSelftest st = catalog_selftest(false);
  ASSERT_EQ(st.entries.size(), 13u);
  EXPECT_TRUE(st.isomorphic.empty());
  std::vector<std::pair<std::string, std::string>> expected;
  for (const CatalogEntry& host : catalog())
    for (const CatalogEntry& p : catalog()) {
      if (&p == &host || p.graph.order() > host.graph.order()) continue;
      if (!oracle::isometric_embeddings(pattern_matrix(host), pattern_matrix(p)).empty())
        expected.emplace_back(p.name, host.name);
    }
  auto got = st.embeds_into;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(got, expected);
  for (const CatalogCheck& c : st.entries) EXPECT_EQ(c.ok(), c.name != "H4") << c.name;
  EXPECT_THROW(catalog_selftest(true), InvariantError);
}

TEST(Embedding, Examples) {
  Graph grid = gen_grid({2, 2});
  auto c4 = find_isometric_embedding(grid, all_pairs_distances(grid), catalog_entry("C4"));
  ASSERT_TRUE(c4);
  std::vector<Vertex> image = *c4;
  std::sort(image.begin(), image.end());
  EXPECT_EQ(image, (std::vector<Vertex>{0, 1, 2, 3}));

  const CatalogEntry& h3 = catalog_entry("H3");
  auto self = find_isometric_embedding(h3.graph, h3.distances, h3);
  ASSERT_TRUE(self);
  EXPECT_EQ(*self, (VertexMap{0, 1, 2, 3, 4, 5}));

  Graph tree = gen_tree_random(12, 8);
  EXPECT_FALSE(find_isometric_embedding(tree, all_pairs_distances(tree), catalog_entry("C4")));

  const CatalogEntry& h2 = catalog_entry("H2");
  EXPECT_FALSE(find_isometric_embedding(h2.graph, h2.distances, catalog_entry("H1")));
  EXPECT_TRUE(oracle::isometric_embeddings(pattern_matrix(h2), pattern_matrix(catalog_entry("H1"))).empty());
}

TEST(Embedding, LexLeastMatchesOracleOnRandomHosts) {
  const std::vector<std::string> patterns = {"C4", "H3", "C6", "G3", "H5", "H1"};
  for (std::uint64_t s = 0; s < 60; ++s) {
    Rng rng(s + 31);
    Graph g = gen_gnp(6 + rng.below(5), 0.25 + 0.05 * static_cast<double>(rng.below(8)), rng.fork());
    DistanceMatrix dm = all_pairs_distances(g);
    oracle::Matrix host = oracle::distances(g);
    for (const std::string& name : patterns) {
      const CatalogEntry& p = catalog_entry(name);
      auto all = oracle::isometric_embeddings(host, pattern_matrix(p));
      auto found = find_isometric_embedding(g, dm, p);
      ASSERT_EQ(found.has_value(), !all.empty()) << name << " " << to_graph6(g);
      if (found) {
        ASSERT_EQ(*found, all.front());
      }
    }
  }
}

TEST(Classify, Main1Examples) {
  const CatalogEntry& h3 = catalog_entry("H3");
  ClassificationReport r = classify_5_chordal(h3.graph, h3.distances, all_patterns());
  EXPECT_TRUE(contains(r.obstructions_found, "H3"));
  EXPECT_EQ(r.direct.delta_star, kOne);
  EXPECT_TRUE(r.agrees);

  Graph c5 = gen_cycle(5);
  r = classify_5_chordal(c5, all_pairs_distances(c5));
  EXPECT_TRUE(r.obstructions_found.empty());
  EXPECT_EQ(r.direct.delta_star, HalfInt::from_doubled(1));

  Graph tree = gen_tree_random(10, 2);
  r = classify_5_chordal(tree, all_pairs_distances(tree));
  EXPECT_TRUE(r.obstructions_found.empty());
  EXPECT_EQ(r.direct.delta_star, HalfInt{});
}

TEST(Classify, Main1PreconditionIncludingTranscribedH4) {
  Graph c6 = gen_cycle(6);
  EXPECT_THROW(classify_5_chordal(c6, all_pairs_distances(c6)), PreconditionError);
  const CatalogEntry& h4 = catalog_entry("H4");
  EXPECT_THROW(classify_5_chordal(h4.graph, h4.distances), PreconditionError);
  for (const char* name : {"C4", "H1", "H2", "H3", "H5"}) {
    const CatalogEntry& e = catalog_entry(name);
    ClassificationReport r = classify_5_chordal(e.graph, e.distances, all_patterns());
    EXPECT_TRUE(contains(r.obstructions_found, name)) << name;
  }
}

TEST(Classify, Cor7Examples) {
  Graph c4 = gen_cycle(4);
  ClassificationReport r = classify_4_chordal(c4, all_pairs_distances(c4));
  EXPECT_EQ(names(r.obstructions_found), std::vector<std::string>{"C4"});
  EXPECT_EQ(r.direct.delta_star, kOne);
  const CatalogEntry& h2 = catalog_entry("H2");
  r = classify_4_chordal(h2.graph, h2.distances, all_patterns());
  EXPECT_TRUE(contains(r.obstructions_found, "H2"));
  EXPECT_EQ(r.direct.delta_star, kOne);
  Graph p4 = gen_path(4);
  r = classify_4_chordal(p4, all_pairs_distances(p4));
  EXPECT_TRUE(r.obstructions_found.empty());
  EXPECT_EQ(r.direct.delta_star, HalfInt{});
}

TEST(Classify, ChordalExamples) {
  const CatalogEntry& h1 = catalog_entry("H1");
  ClassificationReport r = classify_chordal(h1.graph, h1.distances);
  EXPECT_EQ(names(r.obstructions_found), std::vector<std::string>{"H1"});
  EXPECT_EQ(r.direct.delta_star, kOne);
  Graph k5 = gen_complete(5);
  r = classify_chordal(k5, all_pairs_distances(k5));
  EXPECT_TRUE(r.obstructions_found.empty());
  EXPECT_LE(r.direct.delta_star, HalfInt::from_doubled(1));
  Graph tree = gen_tree_random(9, 77);
  r = classify_chordal(tree, all_pairs_distances(tree));
  EXPECT_TRUE(r.obstructions_found.empty());
  EXPECT_EQ(r.direct.delta_star, HalfInt{});
  Graph c4 = gen_cycle(4);
  EXPECT_THROW(classify_chordal(c4, all_pairs_distances(c4)), PreconditionError);
}

TEST(Classify, AtFreeExamples) {
  Graph c4 = gen_cycle(4);
  ClassificationReport r = classify_at_free(c4, all_pairs_distances(c4));
  EXPECT_EQ(names(r.obstructions_found), std::vector<std::string>{"C4"});
  EXPECT_EQ(r.direct.delta_star, kOne);
  Graph c5 = gen_cycle(5);
  r = classify_at_free(c5, all_pairs_distances(c5));
  EXPECT_TRUE(r.obstructions_found.empty());
  EXPECT_EQ(r.direct.delta_star, HalfInt::from_doubled(1));
  Graph k = k33();
  r = classify_at_free(k, all_pairs_distances(k));
  EXPECT_EQ(names(r.obstructions_found), std::vector<std::string>{"C4"});
  EXPECT_EQ(r.direct.delta_star, kOne);
  Graph c6 = gen_cycle(6);
  EXPECT_THROW(classify_at_free(c6, all_pairs_distances(c6)), PreconditionError);
}

TEST(Classify, BandeltChepoiExamples) {
  Graph tree = gen_tree_random(11, 5);
  ClassificationReport r = half_hyperbolicity_test_bc(tree, all_pairs_distances(tree));
  ASSERT_TRUE(r.bc);
  EXPECT_TRUE(r.bc->all());
  EXPECT_EQ(r.direct.delta_star, HalfInt{});

  Graph c4 = gen_cycle(4);
  r = half_hyperbolicity_test_bc(c4, all_pairs_distances(c4));
  EXPECT_FALSE(r.bc->closer_neighbors_adjacent);
  ASSERT_TRUE(r.bc->neighbor_witness);
  auto [x, y, p, q] = *r.bc->neighbor_witness;
  EXPECT_TRUE(c4.adjacent(x, p) && c4.adjacent(x, q) && !c4.adjacent(p, q));
  DistanceMatrix d4 = all_pairs_distances(c4);
  EXPECT_LT(d4(p, y), d4(x, y));
  EXPECT_LT(d4(q, y), d4(x, y));
  EXPECT_EQ(r.direct.delta_star, kOne);

  const CatalogEntry& e1 = catalog_entry("E1");
  r = half_hyperbolicity_test_bc(e1.graph, e1.distances, all_patterns());
  EXPECT_FALSE(r.bc->no_pattern);
  EXPECT_TRUE(contains(r.obstructions_found, "E1"));
  EXPECT_EQ(r.direct.delta_star, kOne);

  Graph c7 = gen_cycle(7);
  r = half_hyperbolicity_test_bc(c7, all_pairs_distances(c7));
  EXPECT_FALSE(r.bc->no_long_isometric_cycle);
  EXPECT_TRUE(r.agrees);
}

TEST(Classify, BandeltChepoiAgreesOnEnumeratedGraphs) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::ifstream in(std::string(TREELIKE_DATA_DIR) + "/connected" + std::to_string(n) + ".g6");
    for_each_graph6(in, [&](std::size_t, const Graph& g) {
      DistanceMatrix dm = all_pairs_distances(g);
      ClassificationReport r = half_hyperbolicity_test_bc(g, dm);
      ASSERT_EQ(r.predicted, oracle::delta_star_doubled(oracle::distances(g)) <= 1) << to_graph6(g);
    });
  }
}

TEST(Classify, Conjecture14Examples) {
  Graph c6 = gen_cycle(6);
  ClassificationReport r = conjecture14_probe(c6, all_pairs_distances(c6), all_patterns());
  EXPECT_TRUE(contains(r.obstructions_found, "C6"));
  EXPECT_EQ(r.direct.delta_star, kOne);
  EXPECT_TRUE(r.agrees);
  Graph c5 = gen_cycle(5);
  r = conjecture14_probe(c5, all_pairs_distances(c5));
  EXPECT_TRUE(r.obstructions_found.empty());
  EXPECT_EQ(r.direct.delta_star, HalfInt::from_doubled(1));
  const CatalogEntry& g3 = catalog_entry("G3");
  r = conjecture14_probe(g3.graph, g3.distances, all_patterns());
  EXPECT_TRUE(contains(r.obstructions_found, "G3"));
  EXPECT_EQ(r.direct.delta_star, kOne);
  Graph c7 = gen_cycle(7);
  EXPECT_THROW(conjecture14_probe(c7, all_pairs_distances(c7)), PreconditionError);
}

TEST(Classify, DispatchByTag) {
  Graph c4 = gen_cycle(4);
  DistanceMatrix dm = all_pairs_distances(c4);
  for (const char* tag : {"main1", "cor7", "atfree", "bc", "conj14"}) EXPECT_EQ(classify(tag, c4, dm).theorem, tag);
  EXPECT_THROW(classify("nope", c4, dm), ArgumentError);
}

TEST(Classify, ObstructionImagesAreIsometric) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Graph g = gen_k_chordal_random(6 + s % 5, 5, s);
    DistanceMatrix dm = all_pairs_distances(g);
    ClassificationReport r = classify_5_chordal(g, dm, all_patterns());
    for (const Obstruction& o : r.obstructions_found) {
      const CatalogEntry& p = catalog_entry(o.pattern);
      for (Vertex a = 0; a < o.image.size(); ++a)
        for (Vertex b = 0; b < o.image.size(); ++b) ASSERT_EQ(dm(o.image[a], o.image[b]), p.distances(a, b));
    }
  }
}

}  // namespace
}  // namespace treelike
