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

// Lower-bound instance families: the layered lattice grid with its critical
// paths, the obstacle product built on top of it, and the auxiliary-vertex
// gadgets used to show that sampling and greedy shortcuts are expensive to
// certify.

#ifndef CERTILAB_INSTANCES_HPP_
#define CERTILAB_INSTANCES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "certilab/graph.hpp"
#include "certilab/lattice.hpp"

namespace certilab {

/// Generator parameters, stored verbatim with every instance.
struct InstanceParams {
  int d = 0;
  int D = 0;
  Radius r;
  bool directed = true;
  double eps = 0.0;
  std::uint64_t seed = 0;
  /// Family-specific extras (copies, aux mode, budget, ...), as text.
  std::map<std::string, std::string> extra;
};

struct Instance {
  std::string kind;
  Graph graph;
  std::vector<PathSeq> critical_paths;
  InstanceParams params;
  /// Designated first / last layer (critical path starts / ends).
  std::vector<Vertex> first_layer;
  std::vector<Vertex> last_layer;
  /// Vertices per critical path when the family has a fixed length.
  std::size_t layers = 0;
  /// Set when the direction set is empty and the graph has no edges.
  bool edgeless_warning = false;
};

enum class AuxMode { kStar, kPath };

struct GadgetInstance {
  /// The full gadget graph; critical paths are the inner ones in gadget ids.
  Instance base;
  std::vector<Vertex> S;
  std::vector<Vertex> T;
  /// Auxiliary vertices attached to each S / T vertex.
  std::map<Vertex, std::vector<Vertex>> aux_of;
  /// For s in S: every auxiliary-to-s path (aux first, s last).
  std::map<Vertex, std::vector<PathSeq>> aux_in_paths;
  /// For t in T: every t-to-auxiliary path (t first).
  std::map<Vertex, std::vector<PathSeq>> aux_out_paths;
  /// Auxiliary paths threaded across copies (kp gadget).
  std::vector<PathSeq> aux_paths;
  std::size_t copies = 1;
  AuxMode aux_mode = AuxMode::kStar;
  /// cc gadget: vertex-disjoint chains through auxiliary vertices.
  std::vector<PathSeq> adversarial_chains;
  /// cc gadget: critical path index realising each chain hop, per chain.
  std::vector<std::vector<std::size_t>> chain_hop_paths;
};

/// Caps for the generators (vertex count of the produced graph).
struct GenLimits {
  std::size_t max_vertices = 4'000'000;
};

/// Coordinates of the layered lattice grid [d] x [s]^(d+1).
class HsGrid {
 public:
  HsGrid(int d, std::int64_t side);

  int d() const noexcept { return d_; }
  std::int64_t side() const noexcept { return side_; }
  std::size_t layer_size() const noexcept { return layer_size_; }
  std::size_t num_vertices() const noexcept { return layer_size_ * static_cast<std::size_t>(d_); }

  /// Ids are lexicographic in (layer, u_1, ..., u_{d+1}).
  Vertex id(int layer, const std::vector<std::int64_t>& coords) const;
  int layer_of(Vertex v) const { return static_cast<int>(v / layer_size_); }
  std::vector<std::int64_t> coords_of(Vertex v) const;

  /// Target of the edge leaving v along direction `dir`, if inside the grid.
  std::optional<Vertex> step(Vertex v, const LatticePoint& dir) const;

 private:
  int d_;
  std::int64_t side_;
  std::size_t layer_size_;
};

struct HsGraph {
  Graph graph;
  HsGrid grid;
  std::vector<LatticePoint> directions;
  bool edgeless_warning = false;
};

/// Grid side ceil(4 D r).
std::int64_t hs_grid_side(int D, const Radius& r);

/// The layered lattice graph: vertex (i, u) has an edge to
/// ((i mod d) + 1, u + e_i(v)) for every direction v in V(r).
HsGraph build_hs_graph(int d, int D, const Radius& r, bool directed,
                       const GenLimits& limits = {});

/// Greedy extraction of critical paths: for every d-tuple of directions, take
/// start vertices in id order and keep each alternating dD-edge walk whose
/// edges are all still unused within that tuple.
std::vector<PathSeq> construct_critical_paths(const Graph& g, int d, int D,
                                              const Radius& r);

/// build_hs_graph + construct_critical_paths, packaged as an Instance.
Instance build_hs_instance(int d, int D, const Radius& r, bool directed,
                           const GenLimits& limits = {});

struct RpParams {
  double eps = 0.0;
  std::size_t size_budget = 300000;
  std::uint64_t seed = 0;
  int inner_d = 2;
  int inner_D = 2;
  /// Defaults to max(sqrt 2, size_budget^eps).
  std::optional<Radius> inner_r;
  Radius outer_r = Radius::of(5);
};

/// Obstacle product: a three-layer outer DAG of edge-disjoint two-edge
/// critical paths (x, v, y) whose middle vertices are replaced by copies of
/// an inner lattice instance.
Instance build_rp_graph(const RpParams& params, const GenLimits& limits = {});

/// Auxiliary in-stars (or in-paths) on S and out-stars (out-paths) on T.
GadgetInstance build_uy_gadget(const Instance& inner, AuxMode mode);

/// Disjoint copies of `inner`; the T-side auxiliaries are threaded across
/// copies into vertex-disjoint paths.
GadgetInstance build_kp_gadget(const Instance& inner, std::size_t copies);

/// Serial copies of a star uy gadget joined by the index matching of T- to
/// S-auxiliaries, with adversarial vertex-disjoint chains.
GadgetInstance build_cc_gadget(const GadgetInstance& inner, std::size_t copies);

/// Random DAG with exactly m distinct edges over a random vertex ordering.
Graph random_dag(std::size_t n, std::size_t m, std::uint64_t seed);

/// Layered random DAG: `num_layers` layers, each vertex gets `out_degree`
/// random successors in the next layer.
Graph random_layered_dag(std::size_t n, std::size_t num_layers,
                         std::size_t out_degree, std::uint64_t seed);

/// Directed path 0 -> 1 -> ... -> n-1.
Graph directed_path(std::size_t n);

/// Keeps only the critical paths with the given indices (S / T recomputed).
Instance restrict_critical_paths(const Instance& inst,
                                 const std::vector<std::size_t>& keep);

}  // namespace certilab

#endif  // CERTILAB_INSTANCES_HPP_
