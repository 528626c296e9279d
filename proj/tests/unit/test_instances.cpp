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

#include <map>
#include <set>

#include "certilab/error.hpp"
#include "certilab/instances.hpp"
#include "oracles.hpp"

namespace certilab {
namespace {

std::set<VertexPair> edge_set(const PathSeq& p, bool directed) {
  std::set<VertexPair> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    auto a = p[i], b = p[i + 1];
    if (!directed && a > b) std::swap(a, b);
    out.insert({a, b});
  }
  return out;
}

std::size_t shared_edges(const PathSeq& a, const PathSeq& b, bool directed) {
  const auto ea = edge_set(a, directed);
  std::size_t k = 0;
  for (const auto& e : edge_set(b, directed)) k += ea.count(e);
  return k;
}

TEST(HsGraph, Sizes) {
  const auto a = build_hs_graph(1, 2, Radius::of(5), true);
  EXPECT_EQ(a.graph.num_vertices(), 1600u);
  EXPECT_EQ(a.graph.max_out_degree(), 2u);
  const auto b = build_hs_graph(1, 1, Radius::sqrt_of(Radius::Square(2)), true);
  EXPECT_EQ(b.grid.side(), 6);
  EXPECT_EQ(b.graph.num_vertices(), 36u);
  EXPECT_EQ(b.directions, (std::vector<LatticePoint>{{1, 1}}));
  EXPECT_EQ(build_hs_graph(2, 1, Radius::sqrt_of(Radius::Square(2)), true).graph.num_vertices(),
            432u);
}

TEST(HsGraph, EdgelessWarning) {
  const auto g = build_hs_graph(1, 1, Radius::of(1), true);
  EXPECT_TRUE(g.edgeless_warning);
  EXPECT_EQ(g.graph.num_edges(), 0u);
  EXPECT_TRUE(construct_critical_paths(g.graph, 1, 1, Radius::of(1)).empty());
}

TEST(HsGraph, Errors) {
  EXPECT_THROW(build_hs_graph(3, 1, Radius::of(5), false), ParameterError);
  GenLimits lim;
  lim.max_vertices = 100;
  EXPECT_THROW(build_hs_graph(1, 2, Radius::of(5), true, lim), ResourceError);
}

TEST(CriticalPaths, SingleDirection) {
  const Radius r = Radius::sqrt_of(Radius::Square(2));
  const auto hs = build_hs_graph(1, 1, r, true);
  const auto paths = construct_critical_paths(hs.graph, 1, 1, r);
  // Every (1,1) edge inside the 6x6 grid: 5 * 5.
  EXPECT_EQ(paths.size(), 25u);
  for (const auto& p : paths) EXPECT_EQ(path_edges(p), 1u);
}

TEST(CriticalPaths, DirectedUniqueAndDisjoint) {
  const Instance inst = build_hs_instance(1, 2, Radius::of(5), true);
  ASSERT_FALSE(inst.critical_paths.empty());
  for (std::size_t i = 0; i < inst.critical_paths.size(); ++i) {
    const auto& p = inst.critical_paths[i];
    EXPECT_EQ(path_edges(p), 2u);
    EXPECT_NO_THROW(validate_path(inst.graph, p));
    EXPECT_TRUE(is_unique_path(inst.graph, p.front(), p.back()).unique);
    for (std::size_t j = i + 1; j < inst.critical_paths.size(); ++j) {
      EXPECT_EQ(shared_edges(p, inst.critical_paths[j], true), 0u);
    }
  }
}

TEST(CriticalPaths, UndirectedUniqueShortest) {
  const Instance inst = build_hs_instance(1, 2, Radius::of(5), false);
  ASSERT_FALSE(inst.critical_paths.empty());
  for (std::size_t i = 0; i < inst.critical_paths.size(); i += 7) {
    const auto& p = inst.critical_paths[i];
    EXPECT_TRUE(is_unique_shortest_path(inst.graph, p.front(), p.back()));
  }
}

TEST(CriticalPaths, CountBound) {
  const Instance inst = build_hs_instance(1, 4, Radius::of(5), true);
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> per_tuple;
  const auto hs = build_hs_graph(1, 4, Radius::of(5), true);
  for (const auto& p : inst.critical_paths) {
    const auto a = hs.grid.coords_of(p[0]);
    const auto b = hs.grid.coords_of(p[1]);
    per_tuple[{b[0] - a[0], b[1] - a[1]}]++;
  }
  EXPECT_EQ(per_tuple.size(), 2u);
  const double bound = static_cast<double>(inst.graph.num_vertices()) / (8.0 * 4.0);
  for (const auto& [dir, count] : per_tuple) EXPECT_GE(static_cast<double>(count), bound);
}

TEST(RpGraph, ComposedPathsUnique) {
  RpParams params;
  params.size_budget = 20000;
  params.inner_d = 1;
  params.inner_D = 2;
  params.inner_r = Radius::of(5);
  const Instance inst = build_rp_graph(params);
  ASSERT_FALSE(inst.critical_paths.empty());
  for (const auto& p : inst.critical_paths) {
    EXPECT_EQ(path_edges(p), 4u);
    EXPECT_TRUE(is_unique_path(inst.graph, p.front(), p.back()).unique);
  }
  EXPECT_EQ(inst.layers, 5u);
}

TEST(RpGraph, BudgetTooSmall) {
  RpParams params;
  params.size_budget = 10;
  EXPECT_THROW(build_rp_graph(params), ParameterError);
}

Instance small_inner() {
  return build_hs_instance(2, 1, Radius::sqrt_of(Radius::Square(2)), true);
}

TEST(UyGadget, StarCounts) {
  const Instance inner = small_inner();
  const auto g = build_uy_gadget(inner, AuxMode::kStar);
  const std::size_t n = inner.graph.num_vertices();
  const std::size_t per_s = (n + g.S.size() - 1) / g.S.size();
  const std::size_t per_t = (n + g.T.size() - 1) / g.T.size();
  // Critical paths return to the first layer, so a vertex can be in S and T.
  const std::set<Vertex> in_s(g.S.begin(), g.S.end()), in_t(g.T.begin(), g.T.end());
  for (const auto& [v, aux] : g.aux_of) {
    EXPECT_EQ(aux.size(), per_s * in_s.count(v) + per_t * in_t.count(v));
  }
  EXPECT_EQ(g.base.graph.num_vertices(), n + per_s * g.S.size() + per_t * g.T.size());
}

TEST(UyGadget, ExtendedPathsUnique) {
  const auto g = build_uy_gadget(small_inner(), AuxMode::kStar);
  std::set<Vertex> inner_ids;
  for (const auto& p : g.base.critical_paths) {
    const Vertex a = g.aux_of.at(p.front()).front();
    const Vertex b = g.aux_of.at(p.back()).back();
    EXPECT_EQ(oracle::count_paths(g.base.graph, a, b), 1u);
  }
}

TEST(UyGadget, PathMode) {
  const Instance inner = small_inner();
  const auto g = build_uy_gadget(inner, AuxMode::kPath);
  const std::size_t n = inner.graph.num_vertices();
  const std::size_t per_s = (n + g.S.size() - 1) / g.S.size();
  for (Vertex s : g.S) {
    // Longest auxiliary in-path has one edge per auxiliary.
    std::size_t longest = 0;
    for (const auto& p : g.aux_in_paths.at(s)) longest = std::max(longest, path_edges(p));
    EXPECT_EQ(longest, per_s);
  }
}

TEST(KpGadget, AuxPathsDisjoint) {
  const auto g = build_kp_gadget(small_inner(), 3);
  EXPECT_EQ(g.copies, 3u);
  std::set<Vertex> seen;
  for (const auto& p : g.aux_paths) {
    EXPECT_EQ(path_edges(p), 2u);
    EXPECT_NO_THROW(validate_path(g.base.graph, p));
    for (Vertex v : p) EXPECT_TRUE(seen.insert(v).second);
  }
}

TEST(KpGadget, SingleCopy) {
  const auto g = build_kp_gadget(small_inner(), 1);
  for (const auto& p : g.aux_paths) EXPECT_EQ(path_edges(p), 0u);
  EXPECT_THROW(build_kp_gadget(small_inner(), 0), ParameterError);
}

TEST(CcGadget, ChainsDisjointAndRealised) {
  const auto uy = build_uy_gadget(small_inner(), AuxMode::kStar);
  const auto g = build_cc_gadget(uy, 1);
  ASSERT_FALSE(g.adversarial_chains.empty());
  std::set<Vertex> seen;
  std::set<std::size_t> used_paths;
  const Reachability r(g.base.graph);
  for (std::size_t c = 0; c < g.adversarial_chains.size(); ++c) {
    const auto& chain = g.adversarial_chains[c];
    for (Vertex v : chain) EXPECT_TRUE(seen.insert(v).second);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) EXPECT_TRUE(r.reaches(chain[i], chain[i + 1]));
    for (std::size_t idx : g.chain_hop_paths[c]) EXPECT_TRUE(used_paths.insert(idx).second);
  }
  EXPECT_THROW(build_cc_gadget(build_uy_gadget(small_inner(), AuxMode::kPath), 1), ParameterError);
}

TEST(RandomDag, Contract) {
  const Graph g = random_dag(50, 120, 7);
  EXPECT_EQ(g.num_edges(), 120u);
  EXPECT_TRUE(is_acyclic(g));
  EXPECT_EQ(g, random_dag(50, 120, 7));
  EXPECT_THROW(random_dag(3, 4, 0), ParameterError);
}

}  // namespace
}  // namespace certilab
