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

#include "certilab/certify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "certilab/error.hpp"
#include "certilab/rng.hpp"
#include "certilab/treap.hpp"

namespace certilab {
namespace {

std::uint64_t norm_key(bool directed, Vertex u, Vertex v) {
  if (!directed && u > v) std::swap(u, v);
  return pair_key(u, v);
}

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Reachability answers for the sources it is asked about; dense matrix when
// the graph is small enough, cached BFS rows otherwise.
class ClosureOracle {
 public:
  ClosureOracle(const Graph& g, const Limits& limits) : g_(g) {
    if (g.num_vertices() <= limits.max_matrix_vertices) {
      matrix_ = std::make_unique<Reachability>(g, limits);
    }
  }

  bool reaches(Vertex s, Vertex t) {
    if (matrix_) return matrix_->reaches(s, t);
    auto it = rows_.find(s);
    if (it == rows_.end()) {
      auto hops = bfs_hops(g_, s);
      std::vector<bool> row(hops.size());
      for (std::size_t i = 0; i < hops.size(); ++i) {
        row[i] = hops[i] != std::numeric_limits<std::size_t>::max();
      }
      it = rows_.emplace(s, std::move(row)).first;
    }
    return it->second[t];
  }

 private:
  const Graph& g_;
  std::unique_ptr<Reachability> matrix_;
  std::unordered_map<Vertex, std::vector<bool>> rows_;
};

class DistanceOracle {
 public:
  explicit DistanceOracle(const Graph& g) : g_(g) {}

  const std::optional<Weight>& dist(Vertex s, Vertex t) {
    auto it = rows_.find(s);
    if (it == rows_.end()) it = rows_.emplace(s, shortest_distances(g_, s)).first;
    return it->second[t];
  }

 private:
  const Graph& g_;
  std::unordered_map<Vertex, std::vector<std::optional<Weight>>> rows_;
};

Graph combined_graph(const Graph& g, const ShortcutSet& h) {
  auto extra = h.as_edges();
  return with_extra_edges(g, extra);
}

bool all_weights_positive(const Graph& g, const ShortcutSet& h) {
  for (const auto& e : g.edges()) {
    if (e.weight <= Weight(0)) return false;
  }
  for (const auto& e : h.edges) {
    if (!e.weight || *e.weight <= Weight(0)) return false;
  }
  return true;
}

}  // namespace

std::vector<VertexPair> ShortcutSet::pairs() const {
  std::vector<VertexPair> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back({e.u, e.v});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> ShortcutSet::as_edges() const {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) {
    const Weight w = (mode == ShortcutMode::kHopset && e.weight) ? *e.weight : Weight(1);
    out.push_back({e.u, e.v, w});
  }
  return out;
}

std::size_t ScheduleLayers::total_size() const {
  std::size_t total = 0;
  for (const auto& l : layers) total += l.size();
  return total;
}

void validate_shortcut_set(const Graph& g, const ShortcutSet& h, const Limits& limits) {
  ClosureOracle closure(g, limits);
  DistanceOracle dist(g);
  std::unordered_set<std::uint64_t> seen;
  for (const auto& e : h.edges) {
    if (e.u >= g.num_vertices() || e.v >= g.num_vertices()) {
      throw InvalidShortcutError("shortcut edge " + pair_text(e.u, e.v) + " has an unknown vertex");
    }
    if (e.u == e.v) throw InvalidShortcutError("shortcut self-loop at " + std::to_string(e.u));
    if (g.has_edge(e.u, e.v)) {
      throw InvalidShortcutError("shortcut edge " + pair_text(e.u, e.v) + " duplicates a graph edge");
    }
    if (!seen.insert(norm_key(g.directed(), e.u, e.v)).second) {
      throw InvalidShortcutError("duplicate shortcut edge " + pair_text(e.u, e.v));
    }
    if (!closure.reaches(e.u, e.v)) {
      throw InvalidShortcutError("shortcut edge " + pair_text(e.u, e.v) +
                                 " is outside the transitive closure");
    }
    if (h.mode == ShortcutMode::kHopset) {
      if (!e.weight) throw InvalidShortcutError("hopset edge " + pair_text(e.u, e.v) + " has no weight");
      if (*e.weight != *dist.dist(e.u, e.v)) {
        throw InvalidShortcutError("hopset edge " + pair_text(e.u, e.v) +
                                   " weight differs from the graph distance");
      }
    }
  }
}

CertifyResult is_certified(const Graph& g, const ShortcutSet& h, const Limits& limits) {
  validate_shortcut_set(g, h, limits);
  const Graph all = combined_graph(g, h);
  const bool hopset = h.mode == ShortcutMode::kHopset;
  CertifyResult res;
  res.midpoints.assign(h.edges.size(), kNoVertex);
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    auto a = all.out_neighbors(e.u);
    auto b = all.in_neighbors(e.v);
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
      if (a[x] < b[y]) {
        ++x;
      } else if (b[y] < a[x]) {
        ++y;
      } else {
        const Vertex w = a[x];
        bool ok = w != e.u && w != e.v;
        if (ok && hopset) {
          ok = *all.edge_weight(e.u, w) + *all.edge_weight(w, e.v) == *e.weight;
        }
        if (ok) {
          res.midpoints[i] = w;
          break;
        }
        ++x;
        ++y;
      }
    }
    if (res.midpoints[i] == kNoVertex) res.uncertified.push_back({e.u, e.v});
  }
  res.certified = res.uncertified.empty();
  return res;
}

ShortcutSet with_certificates(const Graph& g, const ShortcutSet& h, const Limits& limits) {
  auto res = is_certified(g, h, limits);
  if (!res.certified) {
    std::vector<std::pair<std::size_t, std::size_t>> bad(res.uncertified.begin(),
                                                         res.uncertified.end());
    throw CertificationError(std::to_string(bad.size()) + " shortcut edge(s) have no midpoint",
                             std::move(bad));
  }
  ShortcutSet out = h;
  out.certificates.clear();
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    out.certificates[{h.edges[i].u, h.edges[i].v}] = res.midpoints[i];
  }
  return out;
}

CertificationOrder certification_order(const Graph& g, const ShortcutSet& h,
                                       const Limits& limits) {
  const bool by_weight = h.mode == ShortcutMode::kHopset && all_weights_positive(g, h);
  std::vector<std::size_t> pos;
  if (!by_weight) {
    if (!g.directed() || !is_acyclic(g)) {
      throw DomainError("shortcutting orders need a DAG or a positive-weight hopset");
    }
    const auto topo = topological_order(g);
    pos.assign(g.num_vertices(), 0);
    for (std::size_t i = 0; i < topo.size(); ++i) pos[topo[i]] = i;
  }
  const auto certified = with_certificates(g, h, limits);

  std::vector<std::size_t> idx(h.edges.size());
  std::iota(idx.begin(), idx.end(), 0);
  if (by_weight) {
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return *h.edges[a].weight < *h.edges[b].weight;
    });
  } else {
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return pos[h.edges[a].v] - pos[h.edges[a].u] < pos[h.edges[b].v] - pos[h.edges[b].u];
    });
  }
  CertificationOrder order;
  order.mode = h.mode;
  for (auto i : idx) {
    const auto& e = h.edges[i];
    order.steps.push_back({e.u, e.v, certified.certificates.at({e.u, e.v})});
  }
  return order;
}

ShortcutSet replay_procedure(const Graph& g, const CertificationOrder& order) {
  const bool hopset = order.mode == ShortcutMode::kHopset;
  std::unordered_map<std::uint64_t, Weight> added;
  auto weight_of = [&](Vertex a, Vertex b) -> std::optional<Weight> {
    if (auto w = g.edge_weight(a, b)) return w;
    auto it = added.find(norm_key(g.directed(), a, b));
    if (it == added.end()) return std::nullopt;
    return it->second;
  };
  ShortcutSet out;
  out.mode = order.mode;
  for (std::size_t i = 0; i < order.steps.size(); ++i) {
    const auto& s = order.steps[i];
    const auto wa = weight_of(s.u, s.w);
    const auto wb = weight_of(s.w, s.v);
    if (!wa || !wb) {
      throw ReplayError("step " + std::to_string(i + 1) + ": certifying edge " +
                            (wa ? pair_text(s.w, s.v) : pair_text(s.u, s.w)) + " is missing",
                        i + 1);
    }
    if (weight_of(s.u, s.v)) {
      throw ReplayError("step " + std::to_string(i + 1) + ": edge " + pair_text(s.u, s.v) +
                            " is already present",
                        i + 1);
    }
    const Weight w = hopset ? *wa + *wb : Weight(1);
    added.emplace(norm_key(g.directed(), s.u, s.v), w);
    ShortcutEdge e{s.u, s.v, std::nullopt};
    if (hopset) e.weight = w;
    out.edges.push_back(e);
    out.certificates[{s.u, s.v}] = s.w;
  }
  return out;
}

ExpansionWitness expansion_witness(const Graph& g, const ShortcutSet& h,
                                   const PathSeq& p, const PathSeq& p_short) {
  if (p.empty() || p_short.empty() || p.front() != p_short.front() ||
      p.back() != p_short.back()) {
    throw DomainError("expansion witness needs paths with matching endpoints");
  }
  std::unordered_map<std::uint64_t, VertexPair> h_edges;
  for (const auto& e : h.edges) h_edges.emplace(norm_key(g.directed(), e.u, e.v), VertexPair{e.u, e.v});
  auto certs = h.certificates;
  if (certs.size() < h.edges.size()) certs = with_certificates(g, h).certificates;
  std::unordered_set<Vertex> on_p(p.begin(), p.end());

  ExpansionWitness out;
  std::set<VertexPair> forced;
  PathSeq cur = p_short;
  for (auto v : cur) {
    if (!on_p.count(v)) throw DomainError("short path leaves the unique path");
  }
  while (true) {
    std::size_t i = 0;
    while (i + 1 < cur.size() && g.has_edge(cur[i], cur[i + 1])) ++i;
    if (i + 1 >= cur.size()) break;
    auto it = h_edges.find(norm_key(g.directed(), cur[i], cur[i + 1]));
    if (it == h_edges.end()) {
      throw DomainError("short path uses " + pair_text(cur[i], cur[i + 1]) +
                        ", which is in neither the graph nor the shortcut set");
    }
    const Vertex w = certs.at(it->second);
    if (!on_p.count(w)) {
      throw DomainError("expansion left the path: it is not the unique path between its endpoints");
    }
    forced.insert(it->second);
    cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, w);
    if (++out.iterations > p.size()) throw DomainError("expansion does not terminate on the path");
  }
  if (cur != p) throw DomainError("expanded path differs: p is not the unique path");
  out.forced.assign(forced.begin(), forced.end());
  return out;
}

CertifiedShortcut tree_star_shortcut(const Graph& g, Vertex root,
                                     const std::vector<VertexPair>& tree_edges,
                                     TreeOrientation orientation) {
  std::unordered_map<Vertex, std::vector<Vertex>> adj;
  for (const auto& [a, b] : tree_edges) {
    if (a >= g.num_vertices() || b >= g.num_vertices()) throw StructuralError("tree vertex out of range");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::unordered_map<Vertex, Vertex> parent;
  std::unordered_map<Vertex, std::size_t> depth;
  parent[root] = kNoVertex;
  depth[root] = 0;
  std::vector<Vertex> queue{root};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Vertex x = queue[qi];
    auto it = adj.find(x);
    if (it == adj.end()) continue;
    std::sort(it->second.begin(), it->second.end());
    for (auto y : it->second) {
      if (y == parent[x]) continue;
      if (depth.count(y)) throw StructuralError("tree edges contain a cycle");
      parent[y] = x;
      depth[y] = depth[x] + 1;
      queue.push_back(y);
    }
  }
  if (queue.size() != tree_edges.size() + 1 || (adj.size() > 0 && adj.size() != queue.size())) {
    throw StructuralError("tree edges do not form a tree containing the root");
  }
  for (auto x : queue) {
    if (x == root) continue;
    const Vertex p = parent[x];
    const bool ok = orientation == TreeOrientation::kFromRoot ? g.has_edge(p, x) : g.has_edge(x, p);
    if (!ok) throw StructuralError("tree edge " + pair_text(p, x) + " is not oriented in the graph");
  }
  std::vector<Vertex> targets;
  for (auto x : queue) {
    if (depth[x] >= 2) targets.push_back(x);
  }
  std::stable_sort(targets.begin(), targets.end(), [&](Vertex a, Vertex b) {
    return depth[a] != depth[b] ? depth[a] < depth[b] : a < b;
  });
  CertifiedShortcut out;
  for (auto x : targets) {
    Vertex u = root, v = x;
    if (orientation == TreeOrientation::kToRoot) std::swap(u, v);
    if (g.has_edge(u, v)) continue;
    out.shortcut.edges.push_back({u, v, std::nullopt});
    out.shortcut.certificates[{u, v}] = parent[x];
    out.order.steps.push_back({u, v, parent[x]});
  }
  return out;
}

CertifiedShortcut path_shortcut_diam2(const PathSeq& p, PathDirection direction) {
  CertifiedShortcut out;
  auto add = [&](std::size_t from, std::size_t to, std::size_t mid) {
    Vertex u = p[from], v = p[to];
    if (direction == PathDirection::kBackward) std::swap(u, v);
    out.shortcut.edges.push_back({u, v, std::nullopt});
    out.shortcut.certificates[{u, v}] = p[mid];
    out.order.steps.push_back({u, v, p[mid]});
  };
  // Explicit stack of vertex-index segments [lo, hi].
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  if (p.size() >= 2) stack.push_back({0, p.size() - 1});
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi <= lo + 1) continue;
    const std::size_t m = lo + (hi - lo) / 2;
    for (std::size_t i = m; i-- > lo;) {
      if (i + 2 <= m) add(i, m, i + 1);
    }
    for (std::size_t j = m + 2; j <= hi; ++j) add(m, j, j - 1);
    if (m + 1 <= hi) stack.push_back({m + 1, hi});
    if (m >= lo + 1) stack.push_back({lo, m - 1});
  }
  return out;
}

namespace {

struct ScheduleAttempt {
  ScheduleLayers layers;
  std::size_t k = 0;
};

ScheduleAttempt build_schedule(const Graph& g, const ShortcutSet& h,
                               const CertificationOrder& order, std::uint64_t seed) {
  Treap treap(true, PriorityMode::kRandom, seed);
  // Element id = graph edge id.
  std::unordered_map<std::uint32_t, TreapHandle> leaf;
  std::unordered_map<std::uint64_t, TreapHandle> tree_of;
  auto edge_id = [&](Vertex a, Vertex b) -> std::optional<std::uint32_t> {
    auto nb = g.out_neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return g.out_edge_ids(a)[static_cast<std::size_t>(it - nb.begin())];
  };
  auto tree = [&](Vertex a, Vertex b) -> TreapHandle {
    if (auto id = edge_id(a, b)) {
      auto it = leaf.find(*id);
      if (it == leaf.end()) it = leaf.emplace(*id, treap.make(*id)).first;
      return it->second;
    }
    return tree_of.at(pair_key(a, b));
  };
  std::vector<TreapHandle> roots;
  for (const auto& s : order.steps) {
    const TreapHandle t = treap.join(tree(s.u, s.w), tree(s.w, s.v));
    tree_of[pair_key(s.u, s.v)] = t;
    roots.push_back(t);
  }
  (void)h;

  // Endpoints of P_x for every node reachable from a root.
  const std::size_t total = treap.nodes_created();
  std::vector<Vertex> first(total, kNoVertex), last(total, kNoVertex);
  std::vector<bool> seen(total, false);
  std::vector<TreapHandle> nodes;
  std::vector<TreapHandle> stack(roots.begin(), roots.end());
  while (!stack.empty()) {
    const TreapHandle x = stack.back();
    stack.pop_back();
    if (seen[static_cast<std::size_t>(x)]) continue;
    seen[static_cast<std::size_t>(x)] = true;
    nodes.push_back(x);
    for (auto c : {treap.node(x).left, treap.node(x).right}) {
      if (c != kEmptyTreap) stack.push_back(c);
    }
  }
  // Children before parents.
  std::sort(nodes.begin(), nodes.end(), [&](TreapHandle a, TreapHandle b) {
    return treap.height(a) < treap.height(b);
  });
  const auto& edges = g.edges();
  for (auto x : nodes) {
    const auto& n = treap.node(x);
    const auto& e = edges[n.element];
    first[static_cast<std::size_t>(x)] = n.left == kEmptyTreap ? e.src : first[static_cast<std::size_t>(n.left)];
    last[static_cast<std::size_t>(x)] = n.right == kEmptyTreap ? e.dst : last[static_cast<std::size_t>(n.right)];
  }

  std::size_t max_depth = 0;
  for (auto r : roots) max_depth = std::max(max_depth, treap.height(r) - 1);
  const std::size_t k = 2 * max_depth;
  // best[pair] = (layer, midpoint); keep the earliest layer.
  std::unordered_map<std::uint64_t, std::pair<std::size_t, Vertex>> best;
  auto place = [&](Vertex u, Vertex v, std::size_t layer, Vertex mid) {
    if (g.has_edge(u, v)) return;
    auto [it, fresh] = best.emplace(pair_key(u, v), std::pair{layer, mid});
    if (!fresh && layer < it->second.first) it->second = {layer, mid};
  };
  for (auto x : nodes) {
    const auto& n = treap.node(x);
    const std::size_t d = n.height - 1;
    if (d == 0) continue;
    const auto& e = edges[n.element];
    const Vertex px = first[static_cast<std::size_t>(x)];
    const Vertex qx = last[static_cast<std::size_t>(x)];
    if (n.left != kEmptyTreap && n.right != kEmptyTreap) {
      place(first[static_cast<std::size_t>(n.left)], e.dst, 2 * d - 1, e.src);
      place(px, qx, 2 * d, e.dst);
    } else if (n.left != kEmptyTreap) {
      place(px, qx, 2 * d, e.src);
    } else {
      place(px, qx, 2 * d, e.dst);
    }
  }

  std::vector<std::vector<std::pair<VertexPair, Vertex>>> raw(k + 1);
  for (const auto& [key, lm] : best) {
    raw[lm.first].push_back({{static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffU)}, lm.second});
  }
  ScheduleAttempt out;
  out.layers.max_tree_depth = max_depth;
  out.layers.seed_used = seed;
  for (auto& layer : raw) {
    if (layer.empty()) continue;
    std::sort(layer.begin(), layer.end());
    out.layers.layers.emplace_back();
    out.layers.midpoints.emplace_back();
    for (const auto& [pr, mid] : layer) {
      out.layers.layers.back().push_back(pr);
      out.layers.midpoints.back().push_back(mid);
    }
  }
  out.k = out.layers.layers.size();
  return out;
}

}  // namespace

ScheduleLayers low_depth_schedule(const Graph& g, const ShortcutSet& h, std::uint64_t seed,
                                  const Limits& limits) {
  if (!g.directed() || !is_acyclic(g)) throw DomainError("low-depth schedules need a DAG");
  // Respect supplied certificates when they are valid, else use the lowest
  // midpoints.
  ShortcutSet fixed = with_certificates(g, h, limits);
  std::unordered_set<std::uint64_t> present;
  for (const auto& e : h.edges) present.insert(pair_key(e.u, e.v));
  for (const auto& [pr, w] : h.certificates) {
    auto ok = [&](Vertex a, Vertex b) { return g.has_edge(a, b) || present.count(pair_key(a, b)); };
    if (fixed.certificates.count(pr) && ok(pr.first, w) && ok(w, pr.second)) {
      fixed.certificates[pr] = w;
    }
  }
  // Span order keeps certifying edges ahead of the edges they certify.
  const auto topo = topological_order(g);
  std::vector<std::size_t> pos(g.num_vertices());
  for (std::size_t i = 0; i < topo.size(); ++i) pos[topo[i]] = i;
  CertificationOrder order;
  for (const auto& e : fixed.edges) order.steps.push_back({e.u, e.v, fixed.certificates.at({e.u, e.v})});
  std::stable_sort(order.steps.begin(), order.steps.end(),
                   [&](const CertificationStep& a, const CertificationStep& b) {
                     return pos[a.v] - pos[a.u] < pos[b.v] - pos[b.u];
                   });

  const std::size_t n = std::max<std::size_t>(2, g.num_vertices());
  const auto log_n = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
  const std::size_t k_limit = 4 * log_n + 2;
  std::uint64_t s = seed;
  ScheduleAttempt attempt;
  for (std::size_t tries = 1; tries <= 6; ++tries) {
    attempt = build_schedule(g, fixed, order, s);
    attempt.layers.attempts = tries;
    if (attempt.k <= k_limit) break;
    s = splitmix64(seed + tries);
  }
  return attempt.layers;
}

bool verify_schedule(const Graph& g, const ShortcutSet& h, const ScheduleLayers& s) {
  std::unordered_set<std::uint64_t> present;
  auto has = [&](Vertex a, Vertex b) {
    return g.has_edge(a, b) || present.count(norm_key(g.directed(), a, b)) > 0;
  };
  if (s.midpoints.size() != s.layers.size()) return false;
  for (std::size_t i = 0; i < s.layers.size(); ++i) {
    if (s.midpoints[i].size() != s.layers[i].size()) return false;
    for (std::size_t j = 0; j < s.layers[i].size(); ++j) {
      const auto [u, v] = s.layers[i][j];
      const Vertex w = s.midpoints[i][j];
      if (!has(u, w) || !has(w, v)) return false;
    }
    for (const auto& [u, v] : s.layers[i]) present.insert(norm_key(g.directed(), u, v));
  }
  for (const auto& e : h.edges) {
    if (!has(e.u, e.v)) return false;
  }
  return true;
}

std::size_t brute_force_cert_complexity(const Graph& g, const ShortcutSet& h,
                                        const BruteForceLimits& limits) {
  const std::size_t n = g.num_vertices();
  if (n > limits.max_vertices) {
    throw ResourceError("brute force is capped at " + std::to_string(limits.max_vertices) + " vertices");
  }
  if (!g.directed()) throw DomainError("brute force supports directed graphs only");
  Reachability reach(g);
  const bool hopset = h.mode == ShortcutMode::kHopset;

  std::vector<VertexPair> cand;
  std::map<VertexPair, std::size_t> cand_index;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && reach.reaches(u, v) && !g.has_edge(u, v)) {
        cand_index[{u, v}] = cand.size();
        cand.push_back({u, v});
      }
    }
  }
  if (cand.size() > limits.max_candidates || cand.size() > 63) {
    throw ResourceError("brute force is capped at " + std::to_string(limits.max_candidates) +
                        " closure non-edges");
  }
  std::uint64_t start = 0;
  for (const auto& e : h.edges) {
    auto it = cand_index.find({e.u, e.v});
    if (it == cand_index.end()) {
      throw InvalidShortcutError("shortcut edge " + pair_text(e.u, e.v) +
                                 " is not a closure non-edge");
    }
    start |= std::uint64_t{1} << it->second;
  }
  if (hopset) validate_shortcut_set(g, h);

  std::vector<std::vector<std::optional<Weight>>> dist;
  if (hopset) {
    for (Vertex u = 0; u < n; ++u) dist.push_back(shortest_distances(g, u));
  }
  // Midpoint options per candidate: bitmask of candidate edges it needs.
  std::vector<std::vector<std::uint64_t>> options(cand.size());
  for (std::size_t c = 0; c < cand.size(); ++c) {
    const auto [u, v] = cand[c];
    for (Vertex w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      std::uint64_t need = 0;
      std::optional<Weight> total = Weight(0);
      bool ok = true;
      for (auto [a, b] : {VertexPair{u, w}, VertexPair{w, v}}) {
        if (auto ew = g.edge_weight(a, b)) {
          if (total) *total += *ew;
        } else if (auto it = cand_index.find({a, b}); it != cand_index.end()) {
          need |= std::uint64_t{1} << it->second;
          if (hopset) *total += *dist[a][b];
        } else {
          ok = false;
        }
      }
      if (ok && hopset && *total != *dist[u][v]) ok = false;
      if (ok) options[c].push_back(need);
    }
  }

  std::unordered_map<std::uint64_t, std::size_t> failed;  // mask -> largest failed budget
  std::function<bool(std::uint64_t, std::size_t)> search = [&](std::uint64_t mask,
                                                               std::size_t budget) -> bool {
    std::optional<std::size_t> open;
    for (std::size_t c = 0; c < cand.size() && !open; ++c) {
      if (!((mask >> c) & 1U)) continue;
      bool good = false;
      for (auto need : options[c]) {
        if ((need & ~mask) == 0) {
          good = true;
          break;
        }
      }
      if (!good) open = c;
    }
    if (!open) return true;
    if (budget == 0) return false;
    if (auto it = failed.find(mask); it != failed.end() && it->second >= budget) return false;
    for (auto need : options[*open]) {
      const std::uint64_t missing = need & ~mask;
      const auto cost = static_cast<std::size_t>(std::popcount(missing));
      if (cost == 0 || cost > budget) continue;
      if (search(mask | missing, budget - cost)) return true;
    }
    auto& f = failed[mask];
    f = std::max(f, budget);
    return false;
  };
  const std::size_t base = static_cast<std::size_t>(std::popcount(start));
  for (std::size_t budget = 0; budget + base <= cand.size(); ++budget) {
    if (search(start, budget)) return base + budget;
  }
  throw CertificationError("no certified superset exists within the transitive closure", {});
}

WitnessBound witness_lower_bound(const GadgetInstance& inst, const ShortcutSet& h) {
  const Graph& g = inst.base.graph;
  std::unordered_set<std::uint64_t> in_h;
  for (const auto& e : h.edges) in_h.insert(pair_key(e.u, e.v));

  std::vector<PathSeq> selected;
  WitnessBound out;
  for (const auto& p : inst.base.critical_paths) {
    const Vertex s = p.front();
    const Vertex t = p.back();
    std::vector<PathSeq> ups{{s}}, downs{{t}};
    if (auto it = inst.aux_in_paths.find(s); it != inst.aux_in_paths.end()) {
      ups.insert(ups.end(), it->second.begin(), it->second.end());
    }
    if (auto it = inst.aux_out_paths.find(t); it != inst.aux_out_paths.end()) {
      downs.insert(downs.end(), it->second.begin(), it->second.end());
    }
    const PathSeq* best_up = nullptr;
    const PathSeq* best_down = nullptr;
    std::size_t best_len = 0;
    for (const auto& up : ups) {
      for (const auto& down : downs) {
        if (!in_h.count(pair_key(up.front(), down.back()))) continue;
        const std::size_t len = up.size() + p.size() + down.size() - 3;
        if (len > best_len) {
          best_len = len;
          best_up = &up;
          best_down = &down;
        }
      }
    }
    if (!best_up) {
      ++out.skipped;
      continue;
    }
    PathSeq ext(best_up->begin(), best_up->end() - 1);
    ext.insert(ext.end(), p.begin(), p.end());
    ext.insert(ext.end(), best_down->begin() + 1, best_down->end());
    const auto uniq = is_unique_path(g, ext.front(), ext.back());
    if (!uniq.unique || *uniq.path != ext) {
      throw IntegrityError("extended critical path is not the unique path between its endpoints");
    }
    out.raw += path_edges(ext) - 1;
    out.min_extended_edges =
        out.covered == 0 ? path_edges(ext) : std::min(out.min_extended_edges, path_edges(ext));
    ++out.covered;
    selected.push_back(std::move(ext));
  }

  std::vector<std::vector<Vertex>> vsets;
  std::vector<std::vector<std::uint64_t>> esets;
  for (const auto& p : selected) {
    std::vector<Vertex> vs(p.begin(), p.end());
    std::sort(vs.begin(), vs.end());
    std::vector<std::uint64_t> es;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) es.push_back(pair_key(p[i], p[i + 1]));
    std::sort(es.begin(), es.end());
    vsets.push_back(std::move(vs));
    esets.push_back(std::move(es));
  }
  const bool strict = inst.aux_mode == AuxMode::kStar && inst.base.kind == "uy";
  for (std::size_t a = 0; a < selected.size(); ++a) {
    for (std::size_t b = a + 1; b < selected.size(); ++b) {
      std::size_t c = 0, e = 0;
      for (std::size_t i = 0, j = 0; i < vsets[a].size() && j < vsets[b].size();) {
        if (vsets[a][i] < vsets[b][j]) ++i;
        else if (vsets[b][j] < vsets[a][i]) ++j;
        else { ++c; ++i; ++j; }
      }
      if (c < 2) continue;
      for (std::size_t i = 0, j = 0; i < esets[a].size() && j < esets[b].size();) {
        if (esets[a][i] < esets[b][j]) ++i;
        else if (esets[b][j] < esets[a][i]) ++j;
        else { ++e; ++i; ++j; }
      }
      out.max_shared_edges = std::max(out.max_shared_edges, e);
      if (strict && e > 3) {
        throw IntegrityError("two extended critical paths share " + std::to_string(e) +
                             " edges; the gadget guarantees at most three");
      }
      // Non-edge pairs among shared vertices could be forced for both paths.
      out.overlap_correction += c * (c - 1) / 2 - e;
    }
  }
  out.lower_bound = out.raw > out.overlap_correction ? out.raw - out.overlap_correction : 0;
  return out;
}

}  // namespace certilab
