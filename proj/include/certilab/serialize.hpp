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

// JSON forms of the library types. Readers throw IoError on malformed input.

#ifndef CERTILAB_SERIALIZE_HPP_
#define CERTILAB_SERIALIZE_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "certilab/algos.hpp"
#include "certilab/certify.hpp"
#include "certilab/flow.hpp"
#include "certilab/graph.hpp"
#include "certilab/instances.hpp"

namespace certilab {

using Json = nlohmann::ordered_json;

/// Integers stay integers; other rationals become "p/q".
Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

/// {directed, n, edges: [[src, dst, weight?], ...]}; weights only when the
/// graph is weighted.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Graph fields plus kind, params, critical paths and, for gadgets, S, T,
/// auxiliaries and adversarial chains.
Json instance_to_json(const GadgetInstance& inst);
/// Plain instances load with empty gadget fields.
GadgetInstance instance_from_json(const Json& j);

Json shortcut_to_json(const ShortcutSet& h);
ShortcutSet shortcut_from_json(const Json& j);

/// Ordered [u, v, w] triples.
Json order_to_json(const CertificationOrder& order);
CertificationOrder order_from_json(const Json& j);

/// {nodes, arcs: [[from, to, cap, cost], ...], flows?}; cap -1 is big-M.
Json flow_to_json(const FlowNetwork& net, bool with_flows = false);
FlowNetwork flow_from_json(const Json& j);

/// wall_ms is written only when `timing` is set.
Json result_to_json(const AlgoResult& r, bool timing = false);
AlgoResult result_from_json(const Json& j);

/// Stable text id of a graph: kind, sizes and an edge-list hash.
std::string graph_fingerprint(const Graph& g);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace certilab

#endif  // CERTILAB_SERIALIZE_HPP_
