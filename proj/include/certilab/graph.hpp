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

// Graph representation plus the exhaustive oracles (hop diameter,
// reachability, path uniqueness) that the rest of the library is checked
// against. Oracles favour obvious correctness over speed.

#ifndef CERTILAB_GRAPH_HPP_
#define CERTILAB_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace certilab {

using Vertex = std::uint32_t;
using Weight = boost::rational<std::int64_t>;
using VertexPair = std::pair<Vertex, Vertex>;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

inline std::uint64_t pair_key(Vertex u, Vertex v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

struct Edge {
  Vertex src = 0;
  Vertex dst = 0;
  Weight weight{1};

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Size caps for the exhaustive oracles.
struct Limits {
  std::size_t max_vertices = 100000;
  /// Cap for the dense reachability matrix (n^2 bits).
  std::size_t max_matrix_vertices = 20000;
};

/// Immutable graph with dense vertex ids and CSR adjacency.
///
/// Undirected graphs store each edge once; both adjacency views then list all
/// neighbours. Self-loops and duplicate pairs are rejected at construction.
class Graph {
 public:
  Graph() = default;
  Graph(bool directed, std::size_t n, std::vector<Edge> edges);

  bool directed() const noexcept { return directed_; }
  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// True when some edge has weight other than 1.
  bool weighted() const noexcept { return weighted_; }

  /// Sorted successor ids (all neighbours if undirected).
  std::span<const Vertex> out_neighbors(Vertex v) const;
  /// Sorted predecessor ids (all neighbours if undirected).
  std::span<const Vertex> in_neighbors(Vertex v) const;
  /// Edge indices parallel to out_neighbors(v).
  std::span<const std::uint32_t> out_edge_ids(Vertex v) const;

  bool has_edge(Vertex u, Vertex v) const;
  std::optional<Weight> edge_weight(Vertex u, Vertex v) const;

  std::size_t out_degree(Vertex v) const { return out_neighbors(v).size(); }
  std::size_t max_out_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.directed_ == b.directed_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  bool directed_ = true;
  bool weighted_ = false;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::uint32_t> out_ids_;
  std::vector<std::uint32_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
};

/// Returns `g` with `extra` edges appended (weights kept). Extra pairs that
/// already exist in `g` are skipped.
Graph with_extra_edges(const Graph& g, std::span<const Edge> extra);

/// Ordered vertex list joined by edges of the host graph.
using PathSeq = std::vector<Vertex>;

/// Throws DomainError unless `p` is a simple path of `g`.
void validate_path(const Graph& g, const PathSeq& p);

/// Number of edges of a path (vertices minus one; zero for empty paths).
inline std::size_t path_edges(const PathSeq& p) {
  return p.empty() ? 0 : p.size() - 1;
}

/// Set of ordered vertex pairs, kept sorted.
class EdgePairSet {
 public:
  EdgePairSet() = default;
  explicit EdgePairSet(std::vector<VertexPair> pairs);

  bool contains(Vertex s, Vertex t) const;
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }
  const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }

  friend bool operator==(const EdgePairSet&, const EdgePairSet&) = default;

 private:
  std::vector<VertexPair> pairs_;
};

/// Dense reachability matrix. Row v holds every vertex reachable from v
/// (v itself included).
class Reachability {
 public:
  Reachability(const Graph& g, const Limits& limits = {});

  bool reaches(Vertex s, Vertex t) const {
    return (rows_[static_cast<std::size_t>(s) * words_ + (t >> 6)] >>
            (t & 63)) &
           1U;
  }
  std::size_t num_vertices() const noexcept { return n_; }
  /// Number of vertices reachable from s, s excluded.
  std::size_t out_count(Vertex s) const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Hop diameter of g extended by `extra`: the maximum, over ordered pairs
/// (s, t) with s reaching t, of the minimum number of edges of an s-t path.
///
/// With `weighted_mode` the hop count is taken over minimum-weight paths only
/// (the hopset notion: a path must both realise dist(s, t) and use few edges).
std::size_t hop_diameter(const Graph& g, std::span<const Edge> extra = {},
                         bool weighted_mode = false, const Limits& limits = {});

/// BFS hop distances from s; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_hops(const Graph& g, Vertex s);

/// Exact single-source distances; unreachable vertices are nullopt.
std::vector<std::optional<Weight>> shortest_distances(const Graph& g, Vertex s);

EdgePairSet transitive_closure(const Graph& g, const Limits& limits = {});

struct UniquePathResult {
  bool unique = false;
  /// The path itself when unique.
  std::optional<PathSeq> path;
};

/// Counts s-t paths in a DAG (saturating at two). Throws DomainError when s
/// does not reach t, StructuralError on a directed cycle reachable from s.
UniquePathResult is_unique_path(const Graph& g, Vertex s, Vertex t);

/// True iff exactly one minimum-weight s-t path exists. The search is
/// bounded by dist(s, t), so it stays local on large sparse graphs.
bool is_unique_shortest_path(const Graph& g, Vertex s, Vertex t);

/// Kahn's algorithm, lowest id first among ready vertices.
std::vector<Vertex> topological_order(const Graph& g);

bool is_acyclic(const Graph& g);

}  // namespace certilab

#endif  // CERTILAB_GRAPH_HPP_
