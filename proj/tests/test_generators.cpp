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

#include "oracles.hpp"
#include "treelike/catalog.hpp"
#include "treelike/chordality.hpp"
#include "treelike/generators.hpp"
#include "treelike/hyperbolicity.hpp"
#include "treelike/io.hpp"

namespace treelike {
namespace {

HalfInt delta(const Graph& g) { return hyperbolicity(g, all_pairs_distances(g)).delta_star; }
int lc(const Graph& g) { return longest_induced_cycle(g).lc; }

TEST(Deterministic, Examples) {
  EXPECT_EQ(gen_grid({2, 2}), Graph(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}}));
  EXPECT_EQ(lc(gen_cycle(5)), 5);
  EXPECT_EQ(delta(gen_grid({3, 4})), HalfInt::from_int(2));
  EXPECT_EQ(gen_path(5).size(), 4u);
  EXPECT_EQ(gen_complete(6).size(), 15u);
  Graph cube = gen_grid({2, 2, 2});
  EXPECT_EQ(cube.order(), 8u);
  EXPECT_EQ(cube.size(), 12u);
  EXPECT_THROW(gen_cycle(2), ArgumentError);
  EXPECT_THROW(gen_grid({}), ArgumentError);
}

TEST(FFamily, Examples) {
  Graph f2 = gen_f(2);
  EXPECT_EQ(f2.order(), 8u);
  EXPECT_EQ(f2.size(), 10u);
  EXPECT_EQ(lc(f2), 6);
  EXPECT_EQ(delta(f2), HalfInt::from_doubled(3));
  Graph f3 = gen_f(3);
  EXPECT_EQ(f3.order(), 12u);
  EXPECT_EQ(delta(f3), HalfInt::from_doubled(5));
  EXPECT_THROW(gen_f(1), ArgumentError);
}

TEST(FFamily, ChordsAreTheStatedOnes) {
  for (std::size_t t = 2; t <= 5; ++t) {
    Graph f = gen_f(t);
    const std::size_t n = 4 * t;
    EXPECT_EQ(f.size(), n + 2);
    // Vertices v_1..v_4t map to ids 0..4t-1.
    EXPECT_TRUE(f.adjacent(0, 2));
    EXPECT_TRUE(f.adjacent(2 * t, 2 * t + 2));
    for (Vertex v = 0; v < n; ++v) EXPECT_TRUE(f.adjacent(v, (v + 1) % n));
  }
}

TEST(Gavoille, SmallestInstances) {
  Graph g8 = gen_g4t(2, 1);
  EXPECT_EQ(lc(g8), 8);
  EXPECT_EQ(delta(g8), HalfInt::from_int(2));
  Graph g9 = gen_g4t1(2, 1);
  EXPECT_EQ(lc(g9), 9);
  EXPECT_EQ(delta(g9), HalfInt::from_int(2));
  EXPECT_EQ(g9.order(), g8.order());
}

TEST(Gavoille, StructureMatchesOracle) {
  for (auto [t, q] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}, {3, 2}}) {
    for (bool shifted : {false, true}) {
      Graph g = shifted ? gen_g4t1(t, q) : gen_g4t(t, q);
      EXPECT_TRUE(is_connected(g));
      EXPECT_EQ(g.order(), 8 + 14 * (t - 1));
      EXPECT_EQ(g.size(), 14 * t + 4);
      EXPECT_EQ(delta(g).doubled(), oracle::delta_star_doubled(oracle::distances(g)));
    }
  }
}

TEST(Gavoille, RangeChecks) {
  EXPECT_THROW(gen_g4t(2, 2), ArgumentError);
  EXPECT_THROW(gen_g4t(2, 0), ArgumentError);
  EXPECT_THROW(gen_g4t1(1, 1), ArgumentError);
  EXPECT_THROW(gen_g6(2, 2), ArgumentError);
  EXPECT_THROW(gen_g61(1, 0), ArgumentError);
}

TEST(Outerplanar, SmallestInstance) {
  Graph g = gen_g6(2, 1);
  EXPECT_EQ(lc(g), 30);
  EXPECT_EQ(delta(g), HalfInt::from_doubled(15));
  Graph h = gen_g61(2, 1);
  EXPECT_EQ(lc(h), 31);
  EXPECT_EQ(delta(h), HalfInt::from_doubled(15));
}

TEST(Random, Examples) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Graph t = gen_tree_random(10, s);
    EXPECT_EQ(t.size(), 9u);
    EXPECT_TRUE(is_connected(t));
    Graph b = gen_block_random(3 + s, s);
    EXPECT_EQ(b.order(), 3 + s);
    EXPECT_TRUE(is_block_graph(b));
    EXPECT_EQ(delta(b), HalfInt{});
    Graph k = gen_k_chordal_random(9, 5, s);
    EXPECT_EQ(k.order(), 9u);
    EXPECT_TRUE(is_connected(k));
    EXPECT_TRUE(is_k_chordal(k, 5).holds);
    EXPECT_LE(oracle::longest_induced_cycle(oracle::adjacency(k)), 5);
  }
}

TEST(Random, SeededDeterminism) {
  for (Family f : {Family::kTreeRandom, Family::kBlockRandom, Family::kGnp, Family::kKChordalRandom}) {
    FamilySpec spec{f, {}, 42};
    if (f == Family::kGnp) spec.params = {10, 30};
    else if (f == Family::kKChordalRandom) spec.params = {9, 4};
    else spec.params = {11};
    const std::string a = to_edge_list(generate(spec));
    const std::string b = to_edge_list(generate(spec));
    EXPECT_EQ(a, b);
    spec.seed = 43;
    EXPECT_NE(a, to_edge_list(generate(spec))) << family_name(f);
  }
}

TEST(Random, ExactStreamIsFrozen) {
  EXPECT_EQ(to_graph6(gen_tree_random(8, 1)), "G?U?XG");
  EXPECT_EQ(to_graph6(gen_gnp(9, 0.5, 3)), "HR{[xFs");
  EXPECT_EQ(to_graph6(gen_k_chordal_random(9, 5, 2)), "HMyAz{r");
  EXPECT_EQ(to_graph6(gen_block_random(8, 4)), "GtkGW[");
  std::mt19937_64 reference(7);
  Rng rng(7);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % 100;
  for (int i = 0; i < 50; ++i) {
    std::uint64_t x = reference();
    while (x >= limit) x = reference();
    EXPECT_EQ(rng.below(100), x % 100);
  }
  EXPECT_EQ(Rng(7).next(), std::mt19937_64(7)());
}

TEST(Spec, ArityAndNames) {
  for (auto [name, family] : kFamilyNames) {
    EXPECT_EQ(parse_family(name), family);
    EXPECT_EQ(family_name(family), name);
  }
  EXPECT_THROW(parse_family("petersen"), ArgumentError);
  EXPECT_THROW(generate({Family::kCycle, {}, 0}), ArgumentError);
  EXPECT_THROW(generate({Family::kG4t, {3}, 0}), ArgumentError);
  EXPECT_THROW(generate({Family::kGnp, {5, 101}, 0}), ArgumentError);
  EXPECT_THROW(generate({Family::kPath, {-1}, 0}), ArgumentError);
  EXPECT_EQ(generate({Family::kGrid, {3, 3}, 0}).order(), 9u);
  EXPECT_EQ(generate({Family::kF, {2}, 0}).size(), 10u);
  EXPECT_EQ(generate({Family::kG4t, {2, 1}, 0}), gen_g4t(2, 1));
}

TEST(Spec, EveryGeneratorOutputIsConnected) {
  std::vector<FamilySpec> specs = {
      {Family::kCycle, {7}, 0},        {Family::kPath, {4}, 0},         {Family::kComplete, {5}, 0},
      {Family::kGrid, {2, 3, 2}, 0},   {Family::kTreeRandom, {9}, 3},   {Family::kBlockRandom, {9}, 3},
      {Family::kF, {3}, 0},            {Family::kG4t, {3, 2}, 0},       {Family::kG4t1, {3, 1}, 0},
      {Family::kG6, {2, 1}, 0},        {Family::kG61, {3, 2}, 0},       {Family::kGnp, {9, 40}, 3},
      {Family::kKChordalRandom, {8, 6}, 3}};
  for (const FamilySpec& s : specs) EXPECT_TRUE(is_connected(generate(s))) << family_name(s.family);
}

}  // namespace
}  // namespace treelike
