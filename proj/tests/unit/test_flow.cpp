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

#include <functional>
#include <limits>

#include "certilab/error.hpp"
#include "certilab/flow.hpp"
#include "certilab/instances.hpp"

namespace certilab {
namespace {

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1, Weight(1)});
  return Graph(true, n, e);
}

// All vertex paths of a DAG (single vertices included).
std::vector<PathSeq> all_paths(const Graph& g) {
  std::vector<PathSeq> out;
  std::function<void(PathSeq&)> grow = [&](PathSeq& p) {
    out.push_back(p);
    for (Vertex w : g.out_neighbors(p.back())) {
      p.push_back(w);
      grow(p);
      p.pop_back();
    }
  };
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    PathSeq p{v};
    grow(p);
  }
  return out;
}

// Cheapest cost of `ell` units, each either a graph path or an idle unit
// through one vertex's unbounded arc (which still pays its cost).
std::int64_t exhaustive_cost(const Graph& g, std::size_t ell, GadgetVariant variant) {
  const auto paths = all_paths(g);
  const std::int64_t unit = variant == GadgetVariant::kCover ? -1 : -2;
  const std::int64_t extra = variant == GadgetVariant::kCover ? 0 : 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<std::size_t> visits(g.num_vertices(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t from) {
    if (left == 0) {
      std::int64_t c = 0;
      for (auto x : visits) {
        if (x > 0) c += unit + extra * static_cast<std::int64_t>(x - 1);
      }
      best = std::min(best, c);
      return;
    }
    for (std::size_t i = from; i < paths.size(); ++i) {
      for (Vertex v : paths[i]) ++visits[v];
      rec(left - 1, i);
      for (Vertex v : paths[i]) --visits[v];
    }
  };
  rec(ell, 0);
  return best;
}

TEST(ChainGadget, Counts) {
  const auto net = build_chain_gadget(path_graph(3), GadgetVariant::kCover, 1);
  EXPECT_EQ(net.num_nodes, 8u);
  EXPECT_EQ(net.arcs.size(), 14u);
  EXPECT_EQ(net.arcs[unit_arc(1)].from, in_node(1));
  EXPECT_EQ(net.arcs[unit_arc(1)].to, out_node(1));
  EXPECT_EQ(net.arcs[unit_arc(1)].cost, -1);
  EXPECT_EQ(net.arcs[unbounded_arc(1)].cost, 0);
  const auto dom = build_chain_gadget(path_graph(3), GadgetVariant::kDominating, 1);
  EXPECT_EQ(dom.arcs[unit_arc(0)].cost, -2);
  EXPECT_EQ(dom.arcs[unbounded_arc(0)].cost, 1);
  const auto empty = build_chain_gadget(Graph(true, 3, {}), GadgetVariant::kCover, 1);
  EXPECT_EQ(empty.arcs.size(), 12u);
}

TEST(MinCostFlow, SingleArc) {
  FlowNetwork net;
  net.add_arc(0, 1, 1, 7);
  min_cost_flow(net, 1);
  EXPECT_EQ(net.arcs[0].flow, 1);
  EXPECT_EQ(net.total_cost(), 7);
  EXPECT_THROW(min_cost_flow(net, 2), InfeasibleError);
}

TEST(MinCostFlow, CoverPath) {
  auto net = build_chain_gadget(path_graph(3), GadgetVariant::kCover, 1);
  min_cost_flow(net, 1);
  EXPECT_EQ(net.total_cost(), -3);
  EXPECT_EQ(net.value(), 1);
  EXPECT_NO_THROW(check_flow(net));
}

TEST(MinCostFlow, MatchesExhaustive) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = random_dag(7, 8, seed);
    for (std::size_t ell = 1; ell <= 3; ++ell) {
      for (auto variant : {GadgetVariant::kCover, GadgetVariant::kDominating}) {
        auto net = build_chain_gadget(g, variant, static_cast<std::int64_t>(ell));
        min_cost_flow(net, static_cast<std::int64_t>(ell));
        EXPECT_NO_THROW(check_flow(net));
        EXPECT_EQ(net.total_cost(), exhaustive_cost(g, ell, variant))
            << "seed " << seed << " ell " << ell;
      }
    }
  }
}

TEST(Decompose, Examples) {
  auto net = build_chain_gadget(path_graph(3), GadgetVariant::kCover, 1);
  EXPECT_TRUE(decompose(net).empty());
  min_cost_flow(net, 1);
  const auto paths = decompose(net);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].value, 1);
  EXPECT_EQ(paths[0].nodes.front(), net.source);
  EXPECT_EQ(paths[0].nodes.back(), net.sink);
}

TEST(Decompose, ConservesValue) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_dag(30, 60, seed);
    auto net = build_chain_gadget(g, GadgetVariant::kDominating, 5);
    min_cost_flow(net, 5);
    std::int64_t total = 0;
    std::vector<std::int64_t> used(net.arcs.size(), 0);
    for (const auto& p : decompose(net)) {
      total += p.value;
      for (auto a : p.arcs) used[a] += p.value;
    }
    EXPECT_EQ(total, 5);
    for (std::size_t a = 0; a < net.arcs.size(); ++a) EXPECT_EQ(used[a], net.arcs[a].flow);
  }
}

TEST(CheckFlow, DetectsBrokenConservation) {
  auto net = build_chain_gadget(path_graph(3), GadgetVariant::kCover, 1);
  min_cost_flow(net, 1);
  net.arcs[unit_arc(1)].flow = 0;
  EXPECT_THROW(check_flow(net), IntegrityError);
  EXPECT_THROW(decompose(net), IntegrityError);
}

}  // namespace
}  // namespace certilab
