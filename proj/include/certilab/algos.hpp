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

// Shortcut constructions: vertex sampling, path sampling, greedy potential
// reduction, pivot recursion, and flow-based chain covers.

#ifndef CERTILAB_ALGOS_HPP_
#define CERTILAB_ALGOS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "certilab/certify.hpp"
#include "certilab/flow.hpp"
#include "certilab/graph.hpp"
#include "certilab/rng.hpp"
#include "certilab/treap.hpp"

namespace certilab {

/// Vertex-disjoint chains; consecutive chain vertices are reachable, not
/// necessarily adjacent.
struct ChainCover {
  std::vector<PathSeq> chains;
  std::size_t ell = 0;
};

/// Throws DomainError if the cover has too many chains, overlapping chains
/// or a hop without reachability.
void validate_chain_cover(const Graph& g, const ChainCover& cover);

/// Largest number of chain-free vertices on a single graph path.
std::size_t max_uncovered_on_path(const Graph& g, const ChainCover& cover);

struct RoundInfo {
  std::size_t diameter_before = 0;
  std::size_t ell = 0;
  std::size_t diameter_after = 0;
  std::size_t decomposition_length = 0;
  std::size_t chains = 0;
  std::int64_t positive_cost_flow = 0;
};

struct AlgoMetrics {
  std::size_t size = 0;
  std::optional<std::size_t> diameter_before;
  std::optional<std::size_t> diameter_after;
  std::size_t rounds = 0;
  std::optional<double> wall_ms;
};

struct AlgoResult {
  std::string algo;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> params;
  ShortcutSet shortcut;
  std::optional<ShortcutSet> certified_extension;
  AlgoMetrics metrics;
  std::vector<RoundInfo> round_info;
};

/// Samples vertices with probability p and joins every sampled pair u -> v
/// with u reaching v. `min_hops` > 0 keeps only pairs at least that far apart.
AlgoResult uy_sample(const Graph& g, double p, ShortcutMode mode, std::uint64_t seed,
                     std::size_t min_hops = 0);

enum class KpMode { kMixed, kPathsOnly };

/// Edges from sampled sources to the first reachable vertex of each sampled
/// chain.
AlgoResult kp_sample(const Graph& g, const ChainCover& chains, double p_vertex, double p_path,
                     KpMode mode, std::uint64_t seed);

/// Sum of hop distances over reachable ordered pairs of g plus `extra`.
std::uint64_t hop_potential(const Graph& g, std::span<const Edge> extra = {});

struct BrrLimits {
  std::size_t max_vertices = 400;
};

/// Greedy: each round adds the closure non-edge with the largest potential
/// reduction, ties to the lexicographically smallest pair. Stops early when
/// nothing reduces the potential or candidates run out.
AlgoResult brr_greedy(const Graph& g, std::size_t budget, const BrrLimits& limits = {});

/// Picks a pivot from the (sorted) current vertex set.
using PivotRule = std::function<Vertex(const std::vector<Vertex>&, Rng&)>;

/// Recursive single-pivot shortcutting; recursion also covers the vertices
/// only reachable from the pivot.
AlgoResult fineman(const Graph& g, std::uint64_t seed, const PivotRule& rule = {});

/// Multi-pivot recursion with p_r = min(1, 20 k^(r+1) ln n / n), n the size
/// of the input graph.
AlgoResult jls(const Graph& g, double k, std::uint64_t seed);

/// Smallest r with p_r >= 1.
std::size_t jls_depth_bound(std::size_t n, double k);

struct ChainExtraction {
  ChainCover cover;
  PriorityMode mode = PriorityMode::kRandom;
  std::shared_ptr<EventLog> log;
  /// Vertices visited by every unit of flow, in topological order.
  std::vector<PathSeq> element_paths;
  /// Chain index per element, or -1.
  std::vector<std::int64_t> chain_of_element;
  /// Root element of the tree at each vertex, or -1 when no flow passes.
  std::vector<std::int64_t> root_element;
  /// Log event indices per node of g + {s = n, t = n + 1}.
  std::vector<std::vector<std::size_t>> join_events;
  std::vector<std::vector<std::size_t>> split_events;
  std::size_t tree_operations = 0;
};

/// Topological sweep moving trees of flow units along the flow.
ChainExtraction treap_chain_extract(const Graph& g, const FlowNetwork& flow, PriorityMode mode,
                                    std::uint64_t seed);

/// Cover-variant min-cost flow of value ell, chains by treap extraction.
ChainCover chain_cover_flow(const Graph& g, std::size_t ell, std::uint64_t seed = 0);

struct PipelineOptions {
  /// Stop once the hop diameter is at most c * sqrt(n).
  double c = 8.0;
  /// Per-round check: new diameter <= D / 2 + c_prime * ell.
  double c_prime = 4.0;
  /// 0 means ceil(log2 n).
  std::size_t max_rounds = 0;
};

/// Repeated dominating-variant flows; each round shortcuts the extracted
/// chains. The certified extension also shortcuts every flow path.
AlgoResult diam_dominating_pipeline(const Graph& g, std::uint64_t seed,
                                    const PipelineOptions& options = {});

struct ImportantChains {
  std::vector<PathSeq> chains;
  ShortcutSet shortcut;
};

/// Certified shortcut of the important chains, processed in index order.
/// Needs an extraction run with increasing-in-index priorities.
ImportantChains important_chain_extension(const Graph& g, const ChainExtraction& ex);

}  // namespace certilab

#endif  // CERTILAB_ALGOS_HPP_
