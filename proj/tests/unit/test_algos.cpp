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

#include <cmath>
#include <queue>

#include "certilab/algos.hpp"
#include "certilab/error.hpp"
#include "certilab/instances.hpp"
#include "oracles.hpp"

namespace certilab {
namespace {

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1, Weight(1)});
  return Graph(true, n, e);
}

PathSeq iota_path(std::size_t n) {
  PathSeq p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Vertex>(i);
  return p;
}

std::uint64_t oracle_potential(const Graph& g, const std::vector<VertexPair>& extra) {
  const auto d = oracle::hop_matrix(oracle::adjacency(g, extra));
  std::uint64_t sum = 0;
  for (const auto& row : d) {
    for (auto x : row) {
      if (x != oracle::kInf) sum += x;
    }
  }
  return sum;
}

// Longest path by uncovered-vertex count, Kahn order.
std::size_t oracle_uncovered(const Graph& g, const ChainCover& cover) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> covered(n, false);
  for (const auto& c : cover.chains) {
    for (Vertex v : c) covered[v] = true;
  }
  std::vector<std::size_t> indeg(n, 0), best(n, 0);
  for (const auto& e : g.edges()) ++indeg[e.dst];
  std::queue<Vertex> q;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) q.push(v);
  }
  std::size_t answer = 0;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    best[v] += covered[v] ? 0 : 1;
    answer = std::max(answer, best[v]);
    for (Vertex w : g.out_neighbors(v)) {
      best[w] = std::max(best[w], best[v]);
      if (--indeg[w] == 0) q.push(w);
    }
  }
  return answer;
}

TEST(UySample, Examples) {
  EXPECT_EQ(uy_sample(path_graph(3), 0.0, ShortcutMode::kShortcut, 1).shortcut.size(), 0u);
  const auto r = uy_sample(path_graph(3), 1.0, ShortcutMode::kShortcut, 1);
  EXPECT_EQ(r.shortcut.pairs(), (std::vector<VertexPair>{{0, 2}}));
  EXPECT_THROW(uy_sample(path_graph(3), 1.5, ShortcutMode::kShortcut, 1), ParameterError);
}

TEST(UySample, HopsetWeights) {
  const Graph g(true, 3, {{0, 1, Weight(1, 2)}, {1, 2, Weight(3)}});
  const auto r = uy_sample(g, 1.0, ShortcutMode::kHopset, 0);
  ASSERT_EQ(r.shortcut.size(), 1u);
  EXPECT_EQ(*r.shortcut.edges[0].weight, Weight(7, 2));
}

TEST(KpSample, Examples) {
  const Graph g = path_graph(6);
  ChainCover none;
  none.ell = 1;
  EXPECT_EQ(kp_sample(g, none, 1.0, 1.0, KpMode::kMixed, 0).shortcut.size(), 0u);
  ChainCover whole;
  whole.chains = {iota_path(6)};
  whole.ell = 1;
  // Every sampled vertex's first reachable chain vertex is its successor.
  EXPECT_EQ(kp_sample(g, whole, 1.0, 1.0, KpMode::kPathsOnly, 0).shortcut.size(), 0u);
}

TEST(HopPotential, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_dag(20, 35, seed);
    EXPECT_EQ(hop_potential(g), oracle_potential(g, {}));
  }
}

TEST(BrrGreedy, FirstPickOnPath) {
  const Graph g = path_graph(5);
  EXPECT_EQ(brr_greedy(g, 0).shortcut.size(), 0u);
  const auto r = brr_greedy(g, 1);
  ASSERT_EQ(r.shortcut.size(), 1u);
  EXPECT_EQ(r.shortcut.edges[0].u, 0u);
  EXPECT_EQ(r.shortcut.edges[0].v, 3u);
  const std::vector<Edge> extra{{0, 3, Weight(1)}};
  EXPECT_EQ(hop_potential(g) - hop_potential(g, extra), 4u);
}

TEST(BrrGreedy, MatchesArgmaxOracle) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = random_dag(14, 22, seed);
    const std::size_t budget = 6;
    const auto r = brr_greedy(g, budget);
    const auto closure = oracle::closure(g);
    std::vector<VertexPair> h;
    for (std::size_t round = 0; round < budget; ++round) {
      const auto base = oracle_potential(g, h);
      std::uint64_t best = 0;
      std::optional<VertexPair> pick;
      for (const auto& c : closure) {
        if (g.has_edge(c.first, c.second)) continue;
        if (std::find(h.begin(), h.end(), c) != h.end()) continue;
        auto with = h;
        with.push_back(c);
        const auto red = base - oracle_potential(g, with);
        if (red > best) {
          best = red;
          pick = c;
        }
      }
      if (!pick) {
        EXPECT_EQ(r.shortcut.size(), round);
        break;
      }
      ASSERT_GT(r.shortcut.size(), round);
      EXPECT_EQ(r.shortcut.edges[round].u, pick->first) << "seed " << seed << " round " << round;
      EXPECT_EQ(r.shortcut.edges[round].v, pick->second) << "seed " << seed << " round " << round;
      h.push_back(*pick);
    }
  }
}

TEST(BrrGreedy, Cap) {
  BrrLimits lim;
  lim.max_vertices = 4;
  EXPECT_THROW(brr_greedy(path_graph(5), 1, lim), ResourceError);
}

TEST(Fineman, Examples) {
  EXPECT_EQ(fineman(Graph(true, 1, {}), 0).shortcut.size(), 0u);
  const PivotRule middle = [](const std::vector<Vertex>& vs, Rng&) {
    return std::find(vs.begin(), vs.end(), 1u) != vs.end() ? Vertex{1} : vs.front();
  };
  EXPECT_EQ(fineman(path_graph(3), 0, middle).shortcut.size(), 0u);
}

TEST(Fineman, CertifiedAndNotWorse) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_dag(60, 150, seed);
    const auto r = fineman(g, seed);
    EXPECT_TRUE(is_certified(g, r.shortcut).certified);
    EXPECT_LE(hop_diameter(g, r.shortcut.as_edges()), hop_diameter(g));
    ASSERT_TRUE(r.certified_extension.has_value());
  }
}

TEST(Jls, Examples) {
  EXPECT_EQ(jls(Graph(true, 1, {}), 2, 0).shortcut.size(), 0u);
  // p_0 >= 1: every vertex is a pivot and nothing recurses.
  const auto r = jls(path_graph(10), 2, 0);
  EXPECT_EQ(r.metrics.rounds, 0u);
  EXPECT_TRUE(is_certified(path_graph(10), r.shortcut).certified);
  EXPECT_THROW(jls(path_graph(3), 1, 0), ParameterError);
}

TEST(Jls, CertifiedWithinDepthBound) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_dag(150, 400, seed);
    const auto r = jls(g, 2, seed);
    EXPECT_TRUE(is_certified(g, r.shortcut).certified);
    EXPECT_LE(r.metrics.rounds, jls_depth_bound(150, 2));
    EXPECT_LE(hop_diameter(g, r.shortcut.as_edges()), hop_diameter(g));
  }
}

TEST(Jls, RecursesOnLargerGraphs) {
  const Graph g = random_dag(3000, 6000, 4);
  const auto r = jls(g, 2, 4);
  EXPECT_GE(r.metrics.rounds, 1u);
  EXPECT_LE(r.metrics.rounds, jls_depth_bound(3000, 2));
  EXPECT_TRUE(is_certified(g, r.shortcut).certified);
}

TEST(ChainCover, DisjointPaths) {
  std::vector<Edge> e;
  for (Vertex base : {0u, 5u, 10u}) {
    for (Vertex i = 0; i < 4; ++i) e.push_back({base + i, base + i + 1, Weight(1)});
  }
  const Graph g(true, 15, e);
  const auto cover = chain_cover_flow(g, 3);
  EXPECT_EQ(cover.chains.size(), 3u);
  EXPECT_EQ(max_uncovered_on_path(g, cover), 0u);
  const auto one = chain_cover_flow(path_graph(8), 1);
  ASSERT_EQ(one.chains.size(), 1u);
  EXPECT_EQ(one.chains[0], iota_path(8));
}

TEST(ChainCover, UncoveredBound) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 120;
    const Graph g = random_dag(n, 300, seed);
    for (std::size_t ell : {11u, 30u}) {
      const auto cover = chain_cover_flow(g, ell, seed);
      EXPECT_NO_THROW(validate_chain_cover(g, cover));
      const auto unc = max_uncovered_on_path(g, cover);
      EXPECT_EQ(unc, oracle_uncovered(g, cover));
      EXPECT_LE(unc * ell, n);
    }
  }
}

TEST(ChainCover, Validation) {
  const Graph g = path_graph(4);
  ChainCover bad;
  bad.ell = 1;
  bad.chains = {{0, 1}, {2, 3}};
  EXPECT_THROW(validate_chain_cover(g, bad), DomainError);
  bad.ell = 2;
  bad.chains = {{3, 1}};
  EXPECT_THROW(validate_chain_cover(g, bad), DomainError);
}

TEST(TreapExtract, ChainsPartitionFlowVertices) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = random_dag(40, 90, seed);
    auto net = build_chain_gadget(g, GadgetVariant::kCover, 4);
    min_cost_flow(net, 4);
    const auto ex = treap_chain_extract(g, net, PriorityMode::kRandom, seed);
    std::vector<int> count(40, 0);
    for (const auto& c : ex.cover.chains) {
      for (Vertex v : c) ++count[v];
    }
    for (Vertex v = 0; v < 40; ++v) {
      const auto through = net.arcs[unit_arc(v)].flow + net.arcs[unbounded_arc(v)].flow;
      EXPECT_EQ(count[v], through > 0 ? 1 : 0) << "vertex " << v;
    }
    EXPECT_NO_THROW(validate_chain_cover(g, ex.cover));
    EXPECT_EQ(ex.element_paths.size(), 4u);
  }
}

TEST(TreapExtract, SinglePath) {
  const Graph g = path_graph(6);
  auto net = build_chain_gadget(g, GadgetVariant::kCover, 1);
  min_cost_flow(net, 1);
  const auto ex = treap_chain_extract(g, net, PriorityMode::kIncreasingIndex, 0);
  ASSERT_EQ(ex.cover.chains.size(), 1u);
  EXPECT_EQ(ex.cover.chains[0], iota_path(6));
}

TEST(Pipeline, AlreadyShort) {
  const auto r = diam_dominating_pipeline(path_graph(30), 0);
  EXPECT_EQ(r.metrics.rounds, 0u);
  EXPECT_EQ(r.shortcut.size(), 0u);
}

TEST(Pipeline, LongPath) {
  const Graph g = path_graph(1024);
  const auto r = diam_dominating_pipeline(g, 3);
  ASSERT_TRUE(r.metrics.diameter_after.has_value());
  EXPECT_LE(static_cast<double>(*r.metrics.diameter_after), 8.0 * 32.0);
  EXPECT_EQ(*r.metrics.diameter_after, hop_diameter(g, r.shortcut.as_edges()));
  ASSERT_TRUE(r.certified_extension.has_value());
  EXPECT_TRUE(is_certified(g, *r.certified_extension).certified);
  for (const auto& round : r.round_info) EXPECT_LE(round.decomposition_length, 3u * 1024u);
}

TEST(ImportantChains, SingleChain) {
  const Graph g = path_graph(9);
  auto net = build_chain_gadget(g, GadgetVariant::kCover, 1);
  min_cost_flow(net, 1);
  const auto ex = treap_chain_extract(g, net, PriorityMode::kIncreasingIndex, 0);
  const auto ic = important_chain_extension(g, ex);
  ASSERT_EQ(ic.chains.size(), 1u);
  EXPECT_EQ(ic.chains[0], iota_path(9));
  EXPECT_EQ(ic.shortcut.pairs(), path_shortcut_diam2(iota_path(9)).shortcut.pairs());
}

TEST(ImportantChains, CertifiedOnRandomDags) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_dag(40, 100, seed);
    const std::size_t ell = 1 + seed % 5;
    auto net = build_chain_gadget(g, GadgetVariant::kCover, static_cast<std::int64_t>(ell));
    min_cost_flow(net, static_cast<std::int64_t>(ell));
    const auto ex = treap_chain_extract(g, net, PriorityMode::kIncreasingIndex, seed);
    const auto ic = important_chain_extension(g, ex);
    EXPECT_TRUE(is_certified(g, ic.shortcut).certified);
    EXPECT_THROW(important_chain_extension(
                     g, treap_chain_extract(g, net, PriorityMode::kRandom, seed)),
                 ParameterError);
  }
}

}  // namespace
}  // namespace certilab
