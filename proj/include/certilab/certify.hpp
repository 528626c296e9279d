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

// Certification of shortcut sets: the midpoint test, shortcutting orders and
// their replay, expansion witnesses, certified building blocks, low-depth
// schedules and exact certification complexity on tiny graphs.

#ifndef CERTILAB_CERTIFY_HPP_
#define CERTILAB_CERTIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "certilab/graph.hpp"
#include "certilab/instances.hpp"

namespace certilab {

enum class ShortcutMode { kShortcut, kHopset };

struct ShortcutEdge {
  Vertex u = 0;
  Vertex v = 0;
  /// Required in hopset mode, ignored otherwise.
  std::optional<Weight> weight;

  friend bool operator==(const ShortcutEdge&, const ShortcutEdge&) = default;
};

struct ShortcutSet {
  ShortcutMode mode = ShortcutMode::kShortcut;
  std::vector<ShortcutEdge> edges;
  /// Optional fixed midpoint per edge.
  std::map<VertexPair, Vertex> certificates;

  std::size_t size() const noexcept { return edges.size(); }
  /// Sorted (u, v) pairs.
  std::vector<VertexPair> pairs() const;
  std::vector<Edge> as_edges() const;
};

struct CertificationStep {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;

  friend bool operator==(const CertificationStep&, const CertificationStep&) = default;
};

struct CertificationOrder {
  ShortcutMode mode = ShortcutMode::kShortcut;
  std::vector<CertificationStep> steps;
};

/// Throws InvalidShortcutError if an edge leaves the transitive closure,
/// duplicates a graph edge or another shortcut, or (hopsets) has a weight
/// other than the exact distance.
void validate_shortcut_set(const Graph& g, const ShortcutSet& h, const Limits& limits = {});

struct CertifyResult {
  bool certified = false;
  /// Lowest-id midpoint per edge of h (kNoVertex when there is none).
  std::vector<Vertex> midpoints;
  std::vector<VertexPair> uncertified;
};

CertifyResult is_certified(const Graph& g, const ShortcutSet& h, const Limits& limits = {});

/// Returns h with `certificates` filled from is_certified; throws
/// CertificationError when some edge has no midpoint.
ShortcutSet with_certificates(const Graph& g, const ShortcutSet& h, const Limits& limits = {});

/// Shortcutting order: edges by topological span (DAG) or by weight
/// (positive-weight hopset), ties by position in h.
CertificationOrder certification_order(const Graph& g, const ShortcutSet& h,
                                       const Limits& limits = {});

/// Executes the steps, checking both certifying edges at every step. Throws
/// ReplayError carrying the 1-based failing step.
ShortcutSet replay_procedure(const Graph& g, const CertificationOrder& order);

struct ExpansionWitness {
  std::size_t iterations = 0;
  /// Shortcut edges met while expanding, sorted.
  std::vector<VertexPair> forced;
};

/// Repeatedly replaces the first shortcut edge on p_short by its two
/// certifying edges until only graph edges remain; the result must be p.
ExpansionWitness expansion_witness(const Graph& g, const ShortcutSet& h,
                                   const PathSeq& p, const PathSeq& p_short);

enum class TreeOrientation { kToRoot, kFromRoot };

struct CertifiedShortcut {
  ShortcutSet shortcut;
  CertificationOrder order;
};

/// Star from the root to every node of depth >= 2.
CertifiedShortcut tree_star_shortcut(const Graph& g, Vertex root,
                                     const std::vector<VertexPair>& tree_edges,
                                     TreeOrientation orientation);

enum class PathDirection { kForward, kBackward };

/// Divide and conquer around the middle vertex; every ordered pair of path
/// vertices ends up within two hops.
CertifiedShortcut path_shortcut_diam2(const PathSeq& p,
                                      PathDirection direction = PathDirection::kForward);

struct ScheduleLayers {
  std::vector<std::vector<VertexPair>> layers;
  /// Midpoint per layer edge, parallel to `layers`.
  std::vector<std::vector<Vertex>> midpoints;
  std::size_t max_tree_depth = 0;
  std::uint64_t seed_used = 0;
  std::size_t attempts = 1;

  std::size_t total_size() const;
};

/// Layers H_1..H_k from balanced certifying-path trees built by persistent
/// treap joins. Retries with a derived seed (at most 5 times) while
/// k > 4 ceil(log2 n) + 2.
ScheduleLayers low_depth_schedule(const Graph& g, const ShortcutSet& h, std::uint64_t seed,
                                  const Limits& limits = {});

/// Checks H within E and the layers, and layer-wise certification.
bool verify_schedule(const Graph& g, const ShortcutSet& h, const ScheduleLayers& s);

/// Caps for the exhaustive certification-complexity search.
struct BruteForceLimits {
  std::size_t max_vertices = 10;
  std::size_t max_candidates = 30;
};

/// Minimum size of a certified superset of h, exact.
std::size_t brute_force_cert_complexity(const Graph& g, const ShortcutSet& h,
                                        const BruteForceLimits& limits = {});

struct WitnessBound {
  /// Sum over covered critical pairs of (extended path edges - 1).
  std::size_t raw = 0;
  /// Shortcut pairs two selected paths could share.
  std::size_t overlap_correction = 0;
  std::size_t lower_bound = 0;
  std::size_t covered = 0;
  std::size_t skipped = 0;
  std::size_t min_extended_edges = 0;
  std::size_t max_shared_edges = 0;
};

/// Lower bound on the certification complexity of h on a gadget. For every
/// critical path, the longest extended path whose endpoints are joined by an
/// edge of h is selected.
WitnessBound witness_lower_bound(const GadgetInstance& inst, const ShortcutSet& h);

}  // namespace certilab

#endif  // CERTILAB_CERTIFY_HPP_
