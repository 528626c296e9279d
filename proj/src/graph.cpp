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

#include "certilab/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "certilab/error.hpp"

namespace certilab {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void build_csr(std::size_t n, const std::vector<std::pair<Vertex, std::uint32_t>>* lists,
               std::vector<std::uint32_t>& offsets, std::vector<Vertex>& targets,
               std::vector<std::uint32_t>* ids) {
  offsets.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    offsets[v + 1] = offsets[v] + static_cast<std::uint32_t>(lists[v].size());
  }
  targets.resize(offsets[n]);
  if (ids != nullptr) ids->resize(offsets[n]);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t at = offsets[v];
    for (const auto& [t, id] : lists[v]) {
      targets[at] = t;
      if (ids != nullptr) (*ids)[at] = id;
      ++at;
    }
  }
}

// BFS that counts shortest s-t paths (saturated at 2) on unit weights.
// Scratch arrays are reused across calls through a stamp.
bool unique_hop_path(const Graph& g, Vertex s, Vertex t) {
  thread_local std::vector<std::uint32_t> stamp;
  thread_local std::vector<std::uint32_t> dist;
  thread_local std::vector<std::uint8_t> count;
  thread_local std::uint32_t current = 0;
  const std::size_t n = g.num_vertices();
  if (stamp.size() < n) {
    stamp.assign(n, 0);
    dist.resize(n);
    count.resize(n);
    current = 0;
  }
  if (++current == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    current = 1;
  }
  std::vector<Vertex> queue{s};
  stamp[s] = current;
  dist[s] = 0;
  count[s] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (stamp[t] == current && dist[v] >= dist[t]) break;
    for (Vertex w : g.out_neighbors(v)) {
      if (stamp[w] != current) {
        stamp[w] = current;
        dist[w] = dist[v] + 1;
        count[w] = count[v];
        queue.push_back(w);
      } else if (dist[w] == dist[v] + 1) {
        count[w] = static_cast<std::uint8_t>(std::min(2, count[w] + count[v]));
      }
    }
  }
  if (stamp[t] != current) {
    throw DomainError("vertex " + std::to_string(s) + " does not reach " + std::to_string(t));
  }
  return count[t] == 1;
}

}  // namespace

Graph::Graph(bool directed, std::size_t n, std::vector<Edge> edges)
    : directed_(directed), n_(n), edges_(std::move(edges)) {
  if (n_ > std::numeric_limits<Vertex>::max() / 2) {
    throw ResourceError("vertex count does not fit the id type");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> out(n_), in(n_);
  for (std::uint32_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.src >= n_ || e.dst >= n_) {
      throw DomainError("edge endpoint out of range: (" + std::to_string(e.src) +
                        "," + std::to_string(e.dst) + ")");
    }
    if (e.src == e.dst) {
      throw DomainError("self-loop at vertex " + std::to_string(e.src));
    }
    if (e.weight < Weight(0)) throw DomainError("negative edge weight");
    if (e.weight != Weight(1)) weighted_ = true;
    Vertex a = e.src, b = e.dst;
    if (!directed_ && a > b) std::swap(a, b);
    if (!seen.insert(pair_key(a, b)).second) {
      throw DomainError("duplicate edge (" + std::to_string(e.src) + "," +
                        std::to_string(e.dst) + ")");
    }
    out[e.src].emplace_back(e.dst, id);
    in[e.dst].emplace_back(e.src, id);
    if (!directed_) {
      out[e.dst].emplace_back(e.src, id);
      in[e.src].emplace_back(e.dst, id);
    }
  }
  for (auto& l : out) std::sort(l.begin(), l.end());
  for (auto& l : in) std::sort(l.begin(), l.end());
  build_csr(n_, out.data(), out_offsets_, out_targets_, &out_ids_);
  build_csr(n_, in.data(), in_offsets_, in_sources_, nullptr);
}

std::span<const Vertex> Graph::out_neighbors(Vertex v) const {
  return {out_targets_.data() + out_offsets_[v],
          out_targets_.data() + out_offsets_[v + 1]};
}

std::span<const Vertex> Graph::in_neighbors(Vertex v) const {
  return {in_sources_.data() + in_offsets_[v],
          in_sources_.data() + in_offsets_[v + 1]};
}

std::span<const std::uint32_t> Graph::out_edge_ids(Vertex v) const {
  return {out_ids_.data() + out_offsets_[v], out_ids_.data() + out_offsets_[v + 1]};
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = out_neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<Weight> Graph::edge_weight(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return std::nullopt;
  auto nb = out_neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return edges_[out_edge_ids(u)[static_cast<std::size_t>(it - nb.begin())]].weight;
}

std::size_t Graph::max_out_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, out_degree(v));
  return best;
}

Graph with_extra_edges(const Graph& g, std::span<const Edge> extra) {
  std::vector<Edge> edges = g.edges();
  std::unordered_set<std::uint64_t> added;
  for (const Edge& e : extra) {
    if (e.src >= g.num_vertices() || e.dst >= g.num_vertices()) {
      throw DomainError("extra edge endpoint out of range");
    }
    if (e.src == e.dst || g.has_edge(e.src, e.dst)) continue;
    Vertex a = e.src, b = e.dst;
    if (!g.directed() && a > b) std::swap(a, b);
    if (!added.insert(pair_key(a, b)).second) continue;
    edges.push_back(e);
  }
  return Graph(g.directed(), g.num_vertices(), std::move(edges));
}

void validate_path(const Graph& g, const PathSeq& p) {
  std::unordered_set<Vertex> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= g.num_vertices()) throw DomainError("path vertex out of range");
    if (!seen.insert(p[i]).second) throw DomainError("path repeats a vertex");
    if (i > 0 && !g.has_edge(p[i - 1], p[i])) {
      throw DomainError("consecutive path vertices " + std::to_string(p[i - 1]) +
                        "," + std::to_string(p[i]) + " are not joined by an edge");
    }
  }
}

EdgePairSet::EdgePairSet(std::vector<VertexPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool EdgePairSet::contains(Vertex s, Vertex t) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), VertexPair{s, t});
}

Reachability::Reachability(const Graph& g, const Limits& limits)
    : n_(g.num_vertices()), words_((g.num_vertices() + 63) / 64) {
  if (n_ > limits.max_matrix_vertices) {
    throw ResourceError("reachability matrix cap exceeded (" + std::to_string(n_) +
                        " vertices)");
  }
  rows_.assign(n_ * words_, 0);
  auto set = [&](std::size_t row, Vertex t) {
    rows_[row * words_ + (t >> 6)] |= std::uint64_t{1} << (t & 63);
  };
  if (g.directed() && is_acyclic(g)) {
    auto order = topological_order(g);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex v = *it;
      set(v, v);
      std::uint64_t* row = &rows_[static_cast<std::size_t>(v) * words_];
      for (Vertex w : g.out_neighbors(v)) {
        const std::uint64_t* src = &rows_[static_cast<std::size_t>(w) * words_];
        for (std::size_t k = 0; k < words_; ++k) row[k] |= src[k];
      }
    }
    return;
  }
  // General case: one BFS per source (undirected graphs included).
  std::vector<Vertex> queue;
  std::vector<char> seen(n_);
  for (Vertex s = 0; s < n_; ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    queue.assign(1, s);
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      set(s, v);
      for (Vertex w : g.out_neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
}

std::size_t Reachability::out_count(Vertex s) const {
  std::size_t total = 0;
  for (std::size_t k = 0; k < words_; ++k) {
    total += static_cast<std::size_t>(
        __builtin_popcountll(rows_[static_cast<std::size_t>(s) * words_ + k]));
  }
  return total - 1;
}

std::vector<std::size_t> bfs_hops(const Graph& g, Vertex s) {
  std::vector<std::size_t> dist(g.num_vertices(), kUnreached);
  std::vector<Vertex> queue{s};
  dist[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.out_neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::optional<Weight>> shortest_distances(const Graph& g, Vertex s) {
  std::vector<std::optional<Weight>> dist(g.num_vertices());
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[s] = Weight(0);
  heap.emplace(Weight(0), s);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d != *dist[v]) continue;
    auto nb = g.out_neighbors(v);
    auto ids = g.out_edge_ids(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      Weight nd = d + g.edges()[ids[k]].weight;
      if (!dist[nb[k]] || nd < *dist[nb[k]]) {
        dist[nb[k]] = nd;
        heap.emplace(nd, nb[k]);
      }
    }
  }
  return dist;
}

std::size_t hop_diameter(const Graph& g, std::span<const Edge> extra,
                         bool weighted_mode, const Limits& limits) {
  if (g.num_vertices() > limits.max_vertices) {
    throw ResourceError("hop_diameter: vertex cap exceeded (" +
                        std::to_string(g.num_vertices()) + ")");
  }
  const Graph combined = extra.empty() ? g : with_extra_edges(g, extra);
  const std::size_t n = combined.num_vertices();
  std::size_t best = 0;
  if (!weighted_mode || !combined.weighted()) {
    std::vector<std::size_t> dist(n, kUnreached);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s = 0; s < n; ++s) {
      queue.assign(1, s);
      dist[s] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : combined.out_neighbors(v)) {
          if (dist[w] == kUnreached) {
            dist[w] = dist[v] + 1;
            best = std::max(best, dist[w]);
            queue.push_back(w);
          }
        }
      }
      for (Vertex v : queue) dist[v] = kUnreached;
    }
    return best;
  }
  // Lexicographic (weight, hops) Dijkstra from every source.
  using Key = std::pair<Weight, std::size_t>;
  using Item = std::pair<Key, Vertex>;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::optional<Key>> dist(n);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = Key{Weight(0), 0};
    heap.emplace(*dist[s], s);
    while (!heap.empty()) {
      auto [key, v] = heap.top();
      heap.pop();
      if (key != *dist[v]) continue;
      best = std::max(best, key.second);
      auto nb = combined.out_neighbors(v);
      auto ids = combined.out_edge_ids(v);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        Key next{key.first + combined.edges()[ids[k]].weight, key.second + 1};
        if (!dist[nb[k]] || next < *dist[nb[k]]) {
          dist[nb[k]] = next;
          heap.emplace(next, nb[k]);
        }
      }
    }
  }
  return best;
}

EdgePairSet transitive_closure(const Graph& g, const Limits& limits) {
  if (g.num_vertices() > limits.max_vertices) {
    throw ResourceError("transitive_closure: vertex cap exceeded");
  }
  std::vector<VertexPair> pairs;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    auto dist = bfs_hops(g, s);
    for (Vertex t = 0; t < g.num_vertices(); ++t) {
      if (t != s && dist[t] != kUnreached) pairs.emplace_back(s, t);
    }
  }
  return EdgePairSet(std::move(pairs));
}

UniquePathResult is_unique_path(const Graph& g, Vertex s, Vertex t) {
  if (!g.directed()) throw DomainError("is_unique_path requires a directed graph");
  if (s >= g.num_vertices() || t >= g.num_vertices()) {
    throw DomainError("vertex out of range");
  }
  // count[v] = number of v-t paths, saturated at 2. State 1 = on stack.
  std::unordered_map<Vertex, std::uint8_t> count;
  std::unordered_map<Vertex, std::uint8_t> state;
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack{{s, 0}};
  state[s] = 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.v == t) {
      count[t] = 1;
      state[t] = 2;
      stack.pop_back();
      continue;
    }
    auto nb = g.out_neighbors(f.v);
    if (f.next < nb.size()) {
      Vertex w = nb[f.next++];
      auto it = state.find(w);
      if (it == state.end()) {
        state[w] = 1;
        stack.push_back({w, 0});
      } else if (it->second == 1) {
        throw StructuralError("directed cycle reachable from source");
      }
      continue;
    }
    unsigned total = 0;
    for (Vertex w : nb) total += count[w];
    count[f.v] = static_cast<std::uint8_t>(std::min(total, 2U));
    state[f.v] = 2;
    stack.pop_back();
  }
  if (count[s] == 0) {
    throw DomainError("vertex " + std::to_string(s) + " does not reach " +
                      std::to_string(t));
  }
  UniquePathResult result;
  result.unique = count[s] == 1;
  if (result.unique) {
    PathSeq path{s};
    Vertex v = s;
    while (v != t) {
      for (Vertex w : g.out_neighbors(v)) {
        auto it = count.find(w);
        if (it != count.end() && it->second == 1) {
          v = w;
          break;
        }
      }
      path.push_back(v);
    }
    result.path = std::move(path);
  }
  return result;
}

bool is_unique_shortest_path(const Graph& g, Vertex s, Vertex t) {
  if (s >= g.num_vertices() || t >= g.num_vertices()) {
    throw DomainError("vertex out of range");
  }
  if (s == t) return true;
  if (!g.weighted()) return unique_hop_path(g, s, t);
  // Settle everything up to dist(t), then count on the shortest-path DAG.
  std::unordered_map<Vertex, Weight> dist;
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::unordered_set<Vertex> settled;
  dist[s] = Weight(0);
  heap.emplace(Weight(0), s);
  std::optional<Weight> target;
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (target && d > *target) break;
    if (dist[v] != d || !settled.insert(v).second) continue;
    if (v == t) target = d;
    auto nb = g.out_neighbors(v);
    auto ids = g.out_edge_ids(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      Weight nd = d + g.edges()[ids[k]].weight;
      auto it = dist.find(nb[k]);
      if (it == dist.end() || nd < it->second) {
        dist[nb[k]] = nd;
        heap.emplace(nd, nb[k]);
      }
    }
  }
  if (!target) {
    throw DomainError("vertex " + std::to_string(s) + " does not reach " +
                      std::to_string(t));
  }
  // paths[v] = number of shortest s-v paths, saturated at 2; zero-weight
  // cycles on the shortest-path DAG count as ambiguity.
  std::unordered_map<Vertex, std::uint8_t> paths;
  std::unordered_map<Vertex, std::uint8_t> state;
  paths[s] = 1;
  state[s] = 2;
  struct Frame {
    Vertex v;
    std::size_t next = 0;
    unsigned total = 0;
  };
  std::vector<Frame> stack{{t}};
  state[t] = 1;
  unsigned returned = 0;
  bool has_returned = false;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (has_returned) {
      f.total += returned;
      has_returned = false;
    }
    auto preds = g.in_neighbors(f.v);
    const Weight dv = dist[f.v];
    bool pushed = false;
    while (f.total < 2 && f.next < preds.size()) {
      const Vertex p = preds[f.next++];
      if (!settled.contains(p)) continue;
      if (dist[p] + *g.edge_weight(p, f.v) != dv) continue;
      auto st = state.find(p);
      if (st != state.end()) {
        f.total += st->second == 1 ? 2 : paths[p];
        continue;
      }
      state[p] = 1;
      stack.push_back({p});
      pushed = true;
      break;
    }
    if (pushed) continue;
    const Vertex v = f.v;
    paths[v] = static_cast<std::uint8_t>(std::min(f.total, 2U));
    state[v] = 2;
    returned = paths[v];
    has_returned = true;
    stack.pop_back();
  }
  return paths[t] == 1;
}

std::vector<Vertex> topological_order(const Graph& g) {
  if (!g.directed()) throw DomainError("topological_order requires a directed graph");
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> indeg(n);
  for (Vertex v = 0; v < n; ++v) indeg[v] = g.in_neighbors(v).size();
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : g.out_neighbors(v)) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (order.size() != n) throw StructuralError("graph contains a directed cycle");
  return order;
}

bool is_acyclic(const Graph& g) {
  if (!g.directed()) return false;
  try {
    topological_order(g);
    return true;
  } catch (const StructuralError&) {
    return false;
  }
}

}  // namespace certilab
