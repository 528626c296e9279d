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

// Integral min-cost flow on the split-vertex chain gadgets.

#ifndef CERTILAB_FLOW_HPP_
#define CERTILAB_FLOW_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "certilab/graph.hpp"

namespace certilab {

struct Arc {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  /// Finite capacity; infinite arcs carry big_m here.
  std::int64_t cap = 0;
  std::int64_t cost = 0;
  std::int64_t flow = 0;
  bool infinite = false;
};

struct FlowNetwork {
  std::size_t num_nodes = 2;
  std::uint32_t source = 0;
  std::uint32_t sink = 1;
  std::vector<Arc> arcs;
  /// Capacity used for infinite arcs.
  std::int64_t big_m = 0;

  std::size_t add_arc(std::uint32_t from, std::uint32_t to, std::int64_t cap, std::int64_t cost,
                      bool infinite = false);
  std::int64_t total_cost() const;
  std::int64_t value() const;
};

/// Node ids of the gadget: s = 0, t = 1, v_in = 2 + 2v, v_out = 3 + 2v.
inline std::uint32_t in_node(Vertex v) { return 2 + 2 * v; }
inline std::uint32_t out_node(Vertex v) { return 3 + 2 * v; }

enum class GadgetVariant {
  /// Unit arc cost -1, parallel unbounded arc cost 0.
  kCover,
  /// Unit arc cost -2, parallel unbounded arc cost +1.
  kDominating,
};

/// Per vertex (in id order): unit arc, unbounded arc, s -> v_in, v_out -> t;
/// then v_out -> u_in per graph edge (in edge order). big_m = n * max_value.
FlowNetwork build_chain_gadget(const Graph& g, GadgetVariant variant, std::int64_t max_value);

/// Arc id of the unit v_in -> v_out arc in a gadget.
inline std::size_t unit_arc(Vertex v) { return 4 * static_cast<std::size_t>(v); }
inline std::size_t unbounded_arc(Vertex v) { return 4 * static_cast<std::size_t>(v) + 1; }

/// Min-cost flow of exactly `value` by successive shortest paths with
/// potentials (initial potentials by label correcting). Flows on `net` are
/// reset first. Throws InfeasibleError when the value cannot be routed.
void min_cost_flow(FlowNetwork& net, std::int64_t value);

/// Throws IntegrityError unless 0 <= flow <= cap and conservation holds.
void check_flow(const FlowNetwork& net);

struct FlowPath {
  std::vector<std::uint32_t> nodes;
  std::vector<std::size_t> arcs;
  std::int64_t value = 0;
};

/// Greedy path stripping, lowest arc id first.
std::vector<FlowPath> decompose(const FlowNetwork& net);

}  // namespace certilab

#endif  // CERTILAB_FLOW_HPP_
