// Copyright 2026 The certilab Authors
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

#include <random>

#include "certilab/certify.hpp"
#include "certilab/error.hpp"
#include "certilab/instances.hpp"
#include "oracles.hpp"

namespace certilab {
namespace {

Graph path_graph(std::size_t n, bool directed = true) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1, Weight(1)});
  return Graph(directed, n, e);
}

ShortcutSet shortcut(std::vector<VertexPair> pairs) {
  ShortcutSet h;
  for (auto [u, v] : pairs) h.edges.push_back({u, v, std::nullopt});
  return h;
}

std::set<VertexPair> present_pairs(const Graph& g, const ShortcutSet& h) {
  std::set<VertexPair> out;
  for (const auto& e : g.edges()) {
    out.insert({e.src, e.dst});
    if (!g.directed()) out.insert({e.dst, e.src});
  }
  for (const auto& e : h.edges) {
    out.insert({e.u, e.v});
    if (!g.directed()) out.insert({e.v, e.u});
  }
  return out;
}

TEST(IsCertified, Examples) {
  EXPECT_TRUE(is_certified(path_graph(3), {}).certified);
  const auto r = is_certified(path_graph(3), shortcut({{0, 2}}));
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.midpoints, (std::vector<Vertex>{1}));
  const auto bad = is_certified(path_graph(4), shortcut({{0, 3}}));
  EXPECT_FALSE(bad.certified);
  EXPECT_EQ(bad.uncertified, (std::vector<VertexPair>{{0, 3}}));
  EXPECT_THROW(is_certified(path_graph(4), shortcut({{3, 0}})), InvalidShortcutError);
}

TEST(IsCertified, HopsetWeights) {
  const Graph g(true, 3, {{0, 1, Weight(1, 2)}, {1, 2, Weight(1, 3)}});
  ShortcutSet h;
  h.mode = ShortcutMode::kHopset;
  h.edges.push_back({0, 2, Weight(5, 6)});
  EXPECT_TRUE(is_certified(g, h).certified);
  h.edges[0].weight = Weight(1);
  EXPECT_THROW(is_certified(g, h), InvalidShortcutError);
}

TEST(IsCertified, MatchesBruteForceMidpoints) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_dag(12, 20, seed);
    const auto closure = oracle::closure(g);
    std::vector<VertexPair> cands;
    for (const auto& p : closure) {
      if (!g.has_edge(p.first, p.second)) cands.push_back(p);
    }
    std::vector<VertexPair> pick;
    for (const auto& p : cands) {
      if (rng() % 2) pick.push_back(p);
    }
    const auto h = shortcut(pick);
    EXPECT_EQ(is_certified(g, h).certified, oracle::certified(12, present_pairs(g, h), pick));
  }
}

TEST(CertificationOrder, Examples) {
  const Graph g = path_graph(4);
  const auto h = shortcut({{0, 2}, {0, 3}});
  const auto order = certification_order(g, h);
  EXPECT_EQ(order.steps, (std::vector<CertificationStep>{{0, 2, 1}, {0, 3, 2}}));
  EXPECT_EQ(replay_procedure(g, order).pairs(), h.pairs());
  try {
    certification_order(g, shortcut({{0, 3}}));
    FAIL();
  } catch (const CertificationError& e) {
    ASSERT_EQ(e.uncertified().size(), 1u);
    EXPECT_EQ(e.uncertified()[0], (std::pair<std::size_t, std::size_t>{0, 3}));
  }
}

TEST(Replay, EmptyAndCorrupted) {
  const Graph g = path_graph(4);
  EXPECT_EQ(replay_procedure(g, {}).size(), 0u);
  CertificationOrder swapped;
  swapped.steps = {{0, 3, 2}, {0, 2, 1}};
  try {
    replay_procedure(g, swapped);
    FAIL();
  } catch (const ReplayError& e) {
    EXPECT_EQ(e.step(), 1u);
  }
}

TEST(ExpansionWitness, Examples) {
  const Graph g = path_graph(5);
  const auto h = shortcut({{0, 2}, {2, 4}, {0, 4}});
  const auto w = expansion_witness(g, h, {0, 1, 2, 3, 4}, {0, 4});
  EXPECT_EQ(w.iterations, 3u);
  EXPECT_EQ(w.forced.size(), 3u);
  const auto none = expansion_witness(g, h, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4});
  EXPECT_EQ(none.iterations, 0u);
  EXPECT_TRUE(none.forced.empty());
}

TEST(ExpansionWitness, UndirectedHopset) {
  const Graph g = path_graph(5, false);
  ShortcutSet h;
  h.mode = ShortcutMode::kHopset;
  h.edges = {{0, 2, Weight(2)}, {2, 4, Weight(2)}, {0, 4, Weight(4)}};
  EXPECT_EQ(expansion_witness(g, h, {0, 1, 2, 3, 4}, {0, 4}).iterations, 3u);
}

TEST(TreeStar, Examples) {
  const Graph star(true, 4, {{0, 1, Weight(1)}, {0, 2, Weight(1)}, {0, 3, Weight(1)}});
  EXPECT_EQ(tree_star_shortcut(star, 0, {{0, 1}, {0, 2}, {0, 3}}, TreeOrientation::kFromRoot)
                .shortcut.size(),
            0u);
  const Graph p = path_graph(4);
  const auto r = tree_star_shortcut(p, 0, {{0, 1}, {1, 2}, {2, 3}}, TreeOrientation::kFromRoot);
  EXPECT_EQ(r.shortcut.size(), 2u);
  EXPECT_TRUE(is_certified(p, r.shortcut).certified);
}

TEST(TreeStar, BinaryTreeReplays) {
  std::vector<Edge> e;
  std::vector<VertexPair> t;
  for (Vertex v = 1; v < 7; ++v) {
    e.push_back({(v - 1) / 2, v, Weight(1)});
    t.push_back({(v - 1) / 2, v});
  }
  const Graph g(true, 7, e);
  const auto r = tree_star_shortcut(g, 0, t, TreeOrientation::kFromRoot);
  EXPECT_EQ(replay_procedure(g, r.order).pairs(), r.shortcut.pairs());
  EXPECT_EQ(replay_procedure(g, certification_order(g, r.shortcut)).pairs(), r.shortcut.pairs());
}

TEST(TreeStar, RandomTreeSize) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Edge> e;
    std::vector<VertexPair> t;
    std::size_t root_degree = 0;
    for (Vertex v = 1; v < 50; ++v) {
      const Vertex parent = static_cast<Vertex>(rng() % v);
      root_degree += parent == 0;
      e.push_back({v, parent, Weight(1)});
      t.push_back({parent, v});
    }
    const Graph g(true, 50, e);
    const auto r = tree_star_shortcut(g, 0, t, TreeOrientation::kToRoot);
    EXPECT_EQ(r.shortcut.size(), 49 - root_degree);
    EXPECT_TRUE(is_certified(g, r.shortcut).certified);
  }
}

TEST(TreeStar, NotATree) {
  const Graph g(true, 3, {{0, 1, Weight(1)}, {1, 2, Weight(1)}, {0, 2, Weight(1)}});
  EXPECT_THROW(tree_star_shortcut(g, 0, {{0, 1}, {1, 2}, {0, 2}}, TreeOrientation::kFromRoot),
               StructuralError);
  EXPECT_THROW(tree_star_shortcut(g, 0, {{1, 2}}, TreeOrientation::kFromRoot), StructuralError);
}

TEST(PathDiam2, SmallCases) {
  EXPECT_EQ(path_shortcut_diam2({0}).shortcut.size(), 0u);
  // Splitting a 2-vertex path at its middle vertex leaves nothing to add.
  EXPECT_EQ(path_shortcut_diam2({0, 1}).shortcut.size(), 0u);
}

TEST(PathDiam2, DiameterTwo) {
  for (std::size_t k : {3, 7, 16, 33, 100}) {
    PathSeq p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = static_cast<Vertex>(i);
    const Graph g = path_graph(k);
    const auto r = path_shortcut_diam2(p);
    EXPECT_TRUE(is_certified(g, r.shortcut).certified);
    EXPECT_LE(hop_diameter(g, r.shortcut.as_edges()), 2u);
    EXPECT_EQ(replay_procedure(g, r.order).pairs(), r.shortcut.pairs());
    if (k == 7) EXPECT_LE(r.shortcut.size(), 17u);
  }
}

TEST(PathDiam2, Backward) {
  PathSeq p{4, 3, 2, 1, 0};
  std::vector<Edge> e;
  for (Vertex v = 0; v < 4; ++v) e.push_back({v, v + 1, Weight(1)});
  const Graph g(true, 5, e);
  const auto r = path_shortcut_diam2(p, PathDirection::kBackward);
  EXPECT_TRUE(is_certified(g, r.shortcut).certified);
  EXPECT_LE(hop_diameter(g, r.shortcut.as_edges()), 2u);
}

TEST(Schedule, Examples) {
  const Graph g2 = path_graph(3);
  const auto one = low_depth_schedule(g2, shortcut({{0, 2}}), 0);
  ASSERT_EQ(one.layers.size(), 1u);
  EXPECT_EQ(one.layers[0], (std::vector<VertexPair>{{0, 2}}));

  const Graph g4 = path_graph(5);
  const auto prefix = shortcut({{0, 2}, {0, 3}, {0, 4}});
  const auto s = low_depth_schedule(g4, prefix, 1);
  EXPECT_LE(s.layers.size(), 2 * s.max_tree_depth);
  EXPECT_TRUE(verify_schedule(g4, prefix, s));

  PathSeq p(16);
  for (std::size_t i = 0; i < 16; ++i) p[i] = static_cast<Vertex>(i);
  const Graph g15 = path_graph(16);
  const auto h = path_shortcut_diam2(p).shortcut;
  const auto big = low_depth_schedule(g15, h, 2);
  EXPECT_LE(big.layers.size(), 4u * 4u + 2u);
  EXPECT_LE(static_cast<double>(big.total_size()), 8.0 * h.size() * std::log2(16.0));
  EXPECT_TRUE(verify_schedule(g15, h, big));
}

TEST(Schedule, RejectsBrokenLayers) {
  const Graph g = path_graph(5);
  const auto h = shortcut({{0, 2}, {0, 3}});
  auto s = low_depth_schedule(g, h, 0);
  ASSERT_TRUE(verify_schedule(g, h, s));
  std::reverse(s.layers.begin(), s.layers.end());
  std::reverse(s.midpoints.begin(), s.midpoints.end());
  if (s.layers.size() > 1) EXPECT_FALSE(verify_schedule(g, h, s));
}

TEST(BruteForce, Examples) {
  const Graph g = path_graph(5);
  EXPECT_EQ(brute_force_cert_complexity(g, shortcut({{0, 4}})), 3u);
  EXPECT_EQ(brute_force_cert_complexity(g, shortcut({{0, 2}, {0, 3}})), 2u);
  EXPECT_THROW(brute_force_cert_complexity(g, shortcut({{4, 0}})), InvalidShortcutError);
  EXPECT_THROW(brute_force_cert_complexity(path_graph(12), {}), ResourceError);
}

TEST(BruteForce, AtLeastForcingBound) {
  // One shortcut edge over a unique path of k edges forces k - 1 edges.
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = random_dag(7, 9, seed);
    const auto closure = oracle::closure(g);
    for (const auto& [u, v] : closure) {
      if (g.has_edge(u, v)) continue;
      const auto up = is_unique_path(g, u, v);
      if (!up.unique) continue;
      const std::size_t bound = path_edges(*up.path) - 1;
      EXPECT_GE(brute_force_cert_complexity(g, shortcut({{u, v}})), bound);
      break;
    }
  }
}

TEST(WitnessBound, SinglePath) {
  const Graph g = path_graph(11);
  GadgetInstance inst;
  inst.base.graph = g;
  inst.base.kind = "manual";
  PathSeq inner;
  for (Vertex v = 1; v <= 9; ++v) inner.push_back(v);
  inst.base.critical_paths = {inner};
  inst.aux_in_paths[1] = {{0, 1}};
  inst.aux_out_paths[9] = {{9, 10}};
  const auto w = witness_lower_bound(inst, shortcut({{0, 10}}));
  EXPECT_EQ(w.covered, 1u);
  EXPECT_EQ(w.lower_bound, 9u);
  EXPECT_EQ(witness_lower_bound(inst, shortcut({{0, 5}})).skipped, 1u);
}

TEST(WitnessBound, NeverExceedsBruteForce) {
  const Graph g = path_graph(7);
  GadgetInstance inst;
  inst.base.graph = g;
  inst.base.kind = "manual";
  inst.base.critical_paths = {{1, 2, 3, 4, 5}};
  inst.aux_in_paths[1] = {{0, 1}};
  inst.aux_out_paths[5] = {{5, 6}};
  const auto h = shortcut({{0, 6}});
  EXPECT_LE(witness_lower_bound(inst, h).lower_bound, brute_force_cert_complexity(g, h));
}

}  // namespace
}  // namespace certilab
