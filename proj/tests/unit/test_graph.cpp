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

#include "certilab/error.hpp"
#include "certilab/graph.hpp"
#include "certilab/instances.hpp"
#include "oracles.hpp"

namespace certilab {
namespace {

Graph path_graph(std::size_t n, bool directed = true) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1, Weight(1)});
  return Graph(directed, n, e);
}

Graph diamond() {
  return Graph(true, 4, {{0, 1, Weight(1)}, {0, 2, Weight(1)}, {1, 3, Weight(1)}, {2, 3, Weight(1)}});
}

TEST(HopDiameter, Path) {
  const Graph g = path_graph(5);
  EXPECT_EQ(hop_diameter(g), 4u);
  const std::vector<Edge> extra{{0, 4, Weight(1)}};
  EXPECT_EQ(hop_diameter(g, extra), 3u);
  EXPECT_EQ(hop_diameter(Graph(true, 1, {})), 0u);
}

TEST(HopDiameter, SizeCap) {
  Limits lim;
  lim.max_vertices = 3;
  EXPECT_THROW(hop_diameter(path_graph(5), {}, false, lim), ResourceError);
}

TEST(HopDiameter, MatchesFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_dag(30, 60, seed);
    EXPECT_EQ(hop_diameter(g), oracle::diameter(oracle::hop_matrix(oracle::adjacency(g))));
  }
}

TEST(TransitiveClosure, Examples) {
  const auto c = transitive_closure(path_graph(3));
  EXPECT_EQ(c.size(), 3u);
  EXPECT_TRUE(c.contains(0, 1));
  EXPECT_TRUE(c.contains(1, 2));
  EXPECT_TRUE(c.contains(0, 2));
  EXPECT_TRUE(transitive_closure(Graph(true, 4, {})).empty());
  EXPECT_EQ(transitive_closure(diamond()).size(), 5u);
}

TEST(TransitiveClosure, MatchesDfs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_dag(25, 40, seed);
    const auto c = transitive_closure(g);
    const auto want = oracle::closure(g);
    ASSERT_EQ(c.size(), want.size());
    for (const auto& [s, t] : want) EXPECT_TRUE(c.contains(s, t));
  }
}

TEST(UniquePath, Examples) {
  EXPECT_TRUE(is_unique_path(path_graph(5), 0, 4).unique);
  EXPECT_FALSE(is_unique_path(diamond(), 0, 3).unique);
  EXPECT_THROW(is_unique_path(path_graph(3), 2, 0), DomainError);
}

TEST(UniquePath, AgreesWithPathCount) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_dag(15, 25, seed);
    const Reachability r(g);
    for (Vertex s = 0; s < 15; ++s) {
      for (Vertex t = 0; t < 15; ++t) {
        if (s == t || !r.reaches(s, t)) continue;
        EXPECT_EQ(is_unique_path(g, s, t).unique, oracle::count_paths(g, s, t) == 1);
      }
    }
  }
}

TEST(UniquePath, LatticeCriticalPair) {
  const Instance inst = build_hs_instance(1, 2, Radius::of(5), true);
  ASSERT_FALSE(inst.critical_paths.empty());
  const auto& p = inst.critical_paths.front();
  EXPECT_EQ(oracle::count_paths(inst.graph, p.front(), p.back()), 1u);
  const auto res = is_unique_path(inst.graph, p.front(), p.back());
  EXPECT_TRUE(res.unique);
  ASSERT_TRUE(res.path.has_value());
  EXPECT_EQ(*res.path, p);
}

TEST(UniqueShortestPath, Examples) {
  EXPECT_TRUE(is_unique_shortest_path(path_graph(5), 0, 4));
  const Graph cycle(false, 4, {{0, 1, Weight(1)}, {1, 2, Weight(1)}, {2, 3, Weight(1)}, {3, 0, Weight(1)}});
  EXPECT_FALSE(is_unique_shortest_path(cycle, 0, 2));
  EXPECT_TRUE(is_unique_shortest_path(cycle, 0, 1));
  EXPECT_THROW(is_unique_shortest_path(Graph(true, 2, {}), 0, 1), DomainError);
}

TEST(UniqueShortestPath, LongPath) {
  EXPECT_TRUE(is_unique_shortest_path(path_graph(20000, false), 0, 19999));
}

TEST(TopologicalOrder, Examples) {
  EXPECT_EQ(topological_order(path_graph(3)), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(topological_order(Graph(true, 3, {})), (std::vector<Vertex>{0, 1, 2}));
  const Graph two_cycle(true, 2, {{0, 1, Weight(1)}, {1, 0, Weight(1)}});
  EXPECT_THROW(topological_order(two_cycle), StructuralError);
  EXPECT_FALSE(is_acyclic(two_cycle));
}

TEST(TopologicalOrder, RespectsEdges) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_dag(50, 150, seed);
    const auto order = topological_order(g);
    std::vector<std::size_t> pos(50);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (const auto& e : g.edges()) EXPECT_LT(pos[e.src], pos[e.dst]);
  }
}

TEST(ShortestDistances, WeightedDiamond) {
  const Graph g(true, 4, {{0, 1, Weight(1, 2)}, {0, 2, Weight(1)}, {1, 3, Weight(1, 3)}, {2, 3, Weight(1)}});
  const auto d = shortest_distances(g, 0);
  ASSERT_TRUE(d[3].has_value());
  EXPECT_EQ(*d[3], Weight(5, 6));
  EXPECT_TRUE(is_unique_shortest_path(g, 0, 3));
}

TEST(Graph, Validation) {
  EXPECT_THROW(validate_path(path_graph(3), {0, 2}), DomainError);
  EXPECT_NO_THROW(validate_path(path_graph(3), {0, 1, 2}));
}

}  // namespace
}  // namespace certilab
