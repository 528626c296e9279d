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

#include "certilab/algos.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "certilab/error.hpp"

namespace certilab {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string fmt_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError(std::string(name) + " must lie in [0, 1]");
}

void require_dag(const Graph& g) {
  if (!g.directed()) throw DomainError("algorithm needs a directed graph");
  if (!is_acyclic(g)) throw DomainError("graph has a cycle");
}

// Shortcut edges collected without duplicates, in insertion order.
class EdgeCollector {
 public:
  explicit EdgeCollector(const Graph& g) : g_(g) {}

  bool contains(Vertex u, Vertex v) const { return seen_.count(pair_key(u, v)) != 0; }
  bool present(Vertex u, Vertex v) const { return g_.has_edge(u, v) || contains(u, v); }

  bool add(Vertex u, Vertex v, std::optional<Weight> w = std::nullopt,
           Vertex midpoint = kNoVertex) {
    if (u == v || present(u, v)) return false;
    if (!g_.directed() && contains(v, u)) return false;
    seen_.insert(pair_key(u, v));
    set_.edges.push_back({u, v, w});
    if (midpoint != kNoVertex) set_.certificates[{u, v}] = midpoint;
    return true;
  }

  ShortcutSet& set() { return set_; }

 private:
  const Graph& g_;
  std::unordered_set<std::uint64_t> seen_;
  ShortcutSet set_;
};

std::vector<Edge> to_edges(const ShortcutSet& h) {
  std::vector<Edge> out;
  out.reserve(h.edges.size());
  for (const auto& e : h.edges) out.push_back({e.u, e.v, e.weight.value_or(Weight(1))});
  return out;
}

void finish(AlgoResult& r, const Stopwatch& clock) {
  r.metrics.size = r.shortcut.size();
  r.metrics.wall_ms = clock.ms();
}

// BFS restricted to vertices with member[v] == stamp.
void restricted_bfs(const Graph& g, Vertex x, bool forward, const std::vector<std::size_t>& member,
                    std::size_t stamp, std::vector<std::size_t>& mark,
                    std::vector<Vertex>& reached) {
  reached.assign(1, x);
  mark[x] = stamp;
  for (std::size_t head = 0; head < reached.size(); ++head) {
    const Vertex v = reached[head];
    for (Vertex w : forward ? g.out_neighbors(v) : g.in_neighbors(v)) {
      if (member[w] == stamp && mark[w] != stamp) {
        mark[w] = stamp;
        reached.push_back(w);
      }
    }
  }
}

}  // namespace

void validate_chain_cover(const Graph& g, const ChainCover& cover) {
  if (cover.chains.size() > cover.ell) throw DomainError("more chains than the declared bound");
  std::vector<bool> used(g.num_vertices(), false);
  for (const auto& c : cover.chains) {
    for (Vertex v : c) {
      if (v >= g.num_vertices()) throw DomainError("chain vertex out of range");
      if (used[v]) throw DomainError("chains share vertex " + std::to_string(v));
      used[v] = true;
    }
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (bfs_hops(g, c[i])[c[i + 1]] == kUnreached) {
        throw DomainError("chain hop " + std::to_string(c[i]) + " -> " + std::to_string(c[i + 1]) +
                          " is not reachable");
      }
    }
  }
}

std::size_t max_uncovered_on_path(const Graph& g, const ChainCover& cover) {
  require_dag(g);
  std::vector<bool> covered(g.num_vertices(), false);
  for (const auto& c : cover.chains) {
    for (Vertex v : c) covered[v] = true;
  }
  std::vector<std::size_t> best(g.num_vertices(), 0);
  std::size_t out = 0;
  for (Vertex v : topological_order(g)) {
    std::size_t b = 0;
    for (Vertex p : g.in_neighbors(v)) b = std::max(b, best[p]);
    best[v] = b + (covered[v] ? 0 : 1);
    out = std::max(out, best[v]);
  }
  return out;
}

AlgoResult uy_sample(const Graph& g, double p, ShortcutMode mode, std::uint64_t seed,
                     std::size_t min_hops) {
  require_probability(p, "p");
  Stopwatch clock;
  AlgoResult r;
  r.algo = "uy";
  r.seed = seed;
  r.params = {{"p", fmt_double(p)},
              {"mode", mode == ShortcutMode::kHopset ? "hopset" : "shortcut"}};
  if (min_hops > 0) r.params["min_hops"] = std::to_string(min_hops);
  Rng rng(seed);
  std::vector<Vertex> sampled;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (bernoulli(rng, p)) sampled.push_back(v);
  }
  EdgeCollector out(g);
  out.set().mode = mode;
  for (Vertex u : sampled) {
    const auto hops = bfs_hops(g, u);
    std::vector<std::optional<Weight>> dist;
    if (mode == ShortcutMode::kHopset) dist = shortest_distances(g, u);
    for (Vertex v : sampled) {
      if (v == u || hops[v] == kUnreached) continue;
      if (!g.directed() && v < u) continue;
      if (g.has_edge(u, v) || (!g.directed() && g.has_edge(v, u))) continue;
      if (min_hops > 0 && hops[v] < min_hops) continue;
      if (mode == ShortcutMode::kHopset) {
        out.add(u, v, *dist[v]);
      } else {
        out.add(u, v);
      }
    }
  }
  r.shortcut = std::move(out.set());
  r.metrics.rounds = 1;
  finish(r, clock);
  return r;
}

AlgoResult kp_sample(const Graph& g, const ChainCover& chains, double p_vertex, double p_path,
                     KpMode mode, std::uint64_t seed) {
  require_probability(p_vertex, "p_v");
  require_probability(p_path, "p_path");
  validate_chain_cover(g, chains);
  Stopwatch clock;
  AlgoResult r;
  r.algo = "kp";
  r.seed = seed;
  r.params = {{"p_v", fmt_double(p_vertex)},
              {"p_path", fmt_double(p_path)},
              {"mode", mode == KpMode::kMixed ? "mixed" : "paths_only"}};
  Rng rng(seed);
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < chains.chains.size(); ++i) {
    if (bernoulli(rng, p_path)) picked.push_back(i);
  }
  std::vector<Vertex> sources;
  if (mode == KpMode::kMixed) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (bernoulli(rng, p_vertex)) sources.push_back(v);
    }
  } else {
    for (auto i : picked) {
      sources.insert(sources.end(), chains.chains[i].begin(), chains.chains[i].end());
    }
    std::sort(sources.begin(), sources.end());
  }
  EdgeCollector out(g);
  if (!picked.empty()) {
    for (Vertex u : sources) {
      const auto hops = bfs_hops(g, u);
      for (auto i : picked) {
        for (Vertex c : chains.chains[i]) {
          if (c == u || hops[c] == kUnreached) continue;
          out.add(u, c);
          break;
        }
      }
    }
  }
  r.shortcut = std::move(out.set());
  r.metrics.rounds = 1;
  finish(r, clock);
  return r;
}

std::uint64_t hop_potential(const Graph& g, std::span<const Edge> extra) {
  const Graph h = extra.empty() ? g : with_extra_edges(g, extra);
  std::uint64_t phi = 0;
  for (Vertex s = 0; s < h.num_vertices(); ++s) {
    for (auto d : bfs_hops(h, s)) {
      if (d != kUnreached) phi += d;
    }
  }
  return phi;
}

AlgoResult brr_greedy(const Graph& g, std::size_t budget, const BrrLimits& limits) {
  const std::size_t n = g.num_vertices();
  if (n > limits.max_vertices) {
    throw ResourceError("brr_greedy: " + std::to_string(n) + " vertices exceed the cap of " +
                        std::to_string(limits.max_vertices));
  }
  Stopwatch clock;
  AlgoResult r;
  r.algo = "brr";
  r.params = {{"budget", std::to_string(budget)}};
  EdgeCollector out(g);
  std::vector<std::vector<std::size_t>> dist(n);
  std::vector<std::vector<Vertex>> reaches(n), reached_by(n);
  std::size_t round = 0;
  for (; round < budget; ++round) {
    const Graph cur = with_extra_edges(g, to_edges(out.set()));
    for (Vertex a = 0; a < n; ++a) {
      dist[a] = bfs_hops(cur, a);
      reaches[a].clear();
      reached_by[a].clear();
    }
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        if (dist[a][b] == kUnreached) continue;
        reaches[a].push_back(b);
        reached_by[b].push_back(a);
      }
    }
    std::uint64_t best = 0;
    VertexPair pick{kNoVertex, kNoVertex};
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : reaches[u]) {
        if (dist[u][v] < 2) continue;
        if (!g.directed() && v < u) continue;
        std::uint64_t red = 0;
        for (Vertex a : reached_by[u]) {
          const std::size_t du = dist[a][u] + 1;
          for (Vertex b : reaches[v]) {
            const std::size_t via = du + dist[v][b];
            if (via < dist[a][b]) red += dist[a][b] - via;
          }
        }
        if (red > best) {
          best = red;
          pick = {u, v};
        }
      }
    }
    if (best == 0) break;
    out.add(pick.first, pick.second);
  }
  if (round < budget) r.params["stopped_early"] = std::to_string(round);
  r.shortcut = std::move(out.set());
  r.metrics.rounds = round;
  finish(r, clock);
  return r;
}

AlgoResult fineman(const Graph& g, std::uint64_t seed, const PivotRule& rule) {
  require_dag(g);
  Stopwatch clock;
  AlgoResult r;
  r.algo = "fineman";
  r.seed = seed;
  Rng rng(seed);
  const std::size_t n = g.num_vertices();
  EdgeCollector out(g);
  std::vector<std::size_t> member(n, 0), fwd(n, 0), bwd(n, 0);
  std::vector<Vertex> reached;
  std::size_t stamp = 0, depth_max = 0;
  struct Task {
    std::vector<Vertex> vertices;
    std::size_t depth;
  };
  std::vector<Task> stack;
  {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    stack.push_back({std::move(all), 0});
  }
  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    const auto& vs = task.vertices;
    if (vs.size() <= 1) continue;
    depth_max = std::max(depth_max, task.depth + 1);
    ++stamp;
    for (Vertex v : vs) member[v] = stamp;
    const Vertex x = rule ? rule(vs, rng) : vs[uniform_below(rng, vs.size())];
    if (x >= n || member[x] != stamp) throw ParameterError("pivot rule returned a foreign vertex");
    restricted_bfs(g, x, true, member, stamp, fwd, reached);
    restricted_bfs(g, x, false, member, stamp, bwd, reached);
    std::vector<Vertex> succ, pred, rest;
    for (Vertex v : vs) {
      if (v == x) continue;
      const bool f = fwd[v] == stamp, b = bwd[v] == stamp;
      if (f && b) throw DomainError("graph has a cycle");
      if (f) {
        out.add(x, v);
        succ.push_back(v);
      } else if (b) {
        out.add(v, x);
        pred.push_back(v);
      } else {
        rest.push_back(v);
      }
    }
    stack.push_back({std::move(rest), task.depth + 1});
    stack.push_back({std::move(succ), task.depth + 1});
    stack.push_back({std::move(pred), task.depth + 1});
  }
  r.shortcut = std::move(out.set());
  r.certified_extension = r.shortcut;
  r.metrics.rounds = depth_max;
  finish(r, clock);
  return r;
}

namespace {

double jls_probability(std::size_t n, double k, std::size_t r) {
  if (n <= 1) return 1.0;
  const double p = 20.0 * std::pow(k, static_cast<double>(r + 1)) *
                   std::log(static_cast<double>(n)) / static_cast<double>(n);
  return std::min(1.0, p);
}

}  // namespace

std::size_t jls_depth_bound(std::size_t n, double k) {
  if (k < 2) throw ParameterError("jls needs k >= 2");
  std::size_t r = 0;
  while (jls_probability(n, k, r) < 1.0) ++r;
  return r;
}

AlgoResult jls(const Graph& g, double k, std::uint64_t seed) {
  if (!(k >= 2)) throw ParameterError("jls needs k >= 2");
  require_dag(g);
  Stopwatch clock;
  AlgoResult r;
  r.algo = "jls";
  r.seed = seed;
  r.params = {{"k", fmt_double(k)}};
  Rng rng(seed);
  const std::size_t n = g.num_vertices();
  EdgeCollector out(g);
  std::vector<std::size_t> member(n, 0), fwd(n, 0), bwd(n, 0);
  std::vector<Vertex> reached;
  std::size_t stamp = 0, depth_max = 0;
  struct Task {
    std::vector<Vertex> vertices;
    std::size_t r;
  };
  std::vector<Task> stack;
  {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    stack.push_back({std::move(all), 0});
  }
  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    const auto& vs = task.vertices;
    if (vs.size() <= 1) continue;
    depth_max = std::max(depth_max, task.r);
    const double p = jls_probability(n, k, task.r);
    std::vector<Vertex> pivots;
    for (Vertex v : vs) {
      if (bernoulli(rng, p)) pivots.push_back(v);
    }
    ++stamp;
    for (Vertex v : vs) member[v] = stamp;
    // Label per vertex: (pivot index, side) pairs; side 0 = successor.
    std::vector<std::vector<std::uint64_t>> label(n);
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Vertex x = pivots[i];
      const std::size_t fs = ++stamp;
      for (Vertex v : vs) member[v] = fs;
      restricted_bfs(g, x, true, member, fs, fwd, reached);
      restricted_bfs(g, x, false, member, fs, bwd, reached);
      for (Vertex v : vs) {
        const bool f = fwd[v] == fs, b = bwd[v] == fs;
        if (f && b) {
          done[v] = true;
          continue;
        }
        if (f) {
          out.add(x, v);
          label[v].push_back(2 * i);
        } else if (b) {
          out.add(v, x);
          label[v].push_back(2 * i + 1);
        }
      }
    }
    std::map<std::vector<std::uint64_t>, std::vector<Vertex>> parts;
    for (Vertex v : vs) {
      if (!done[v]) parts[label[v]].push_back(v);
    }
    for (auto& [key, part] : parts) stack.push_back({std::move(part), task.r + 1});
  }
  r.shortcut = std::move(out.set());
  r.certified_extension = r.shortcut;
  r.metrics.rounds = depth_max;
  finish(r, clock);
  return r;
}

ChainExtraction treap_chain_extract(const Graph& g, const FlowNetwork& flow, PriorityMode mode,
                                    std::uint64_t seed) {
  require_dag(g);
  const std::size_t n = g.num_vertices();
  if (flow.num_nodes != 2 * n + 2 || flow.source != 0 || flow.sink != 1) {
    throw DomainError("flow network does not match the graph");
  }
  check_flow(flow);
  const std::size_t s_node = n, t_node = n + 1;
  // Positive arcs out of s and out of each v_out, by arc id.
  std::vector<std::vector<std::size_t>> moves(n + 1);
  std::vector<std::int64_t> through(n, 0);
  for (std::size_t a = 0; a < flow.arcs.size(); ++a) {
    const auto& arc = flow.arcs[a];
    if (arc.flow == 0) continue;
    const bool to_in = arc.to >= 2 && arc.to % 2 == 0;
    if (arc.from == flow.source) {
      if (!to_in) throw DomainError("flow leaves s towards a non-entry node");
      moves[s_node].push_back(a);
    } else if (arc.from >= 2 && arc.from % 2 == 0) {
      const Vertex v = (arc.from - 2) / 2;
      if (arc.to != out_node(v)) throw DomainError("flow from v_in skips v_out");
      through[v] += arc.flow;
    } else if (arc.from >= 3) {
      const Vertex v = (arc.from - 3) / 2;
      if (arc.to != flow.sink) {
        if (!to_in || !g.has_edge(v, (arc.to - 2) / 2)) {
          throw DomainError("flow uses an arc with no graph edge");
        }
      }
      moves[v].push_back(a);
    } else {
      throw DomainError("flow enters s or leaves t");
    }
  }
  const std::int64_t ell = flow.value();

  ChainExtraction ex;
  ex.mode = mode;
  ex.log = std::make_shared<EventLog>();
  ex.join_events.resize(n + 2);
  ex.split_events.resize(n + 2);
  ex.root_element.assign(n, -1);
  ex.element_paths.resize(static_cast<std::size_t>(ell));
  Treap treap(true, mode, seed);
  treap.set_event_log(ex.log.get());

  auto join_at = [&](std::size_t node, TreapHandle a, TreapHandle b) {
    ex.join_events[node].push_back(ex.log->size());
    ++ex.tree_operations;
    return treap.join(a, b);
  };
  auto split_at = [&](std::size_t node, TreapHandle t, std::size_t k) {
    ex.split_events[node].push_back(ex.log->size());
    ++ex.tree_operations;
    return treap.split(t, k);
  };
  std::vector<TreapHandle> pending(n + 2, kEmptyTreap);
  auto forward = [&](std::size_t node, TreapHandle t) {
    for (auto a : moves[node]) {
      const auto& arc = flow.arcs[a];
      const std::size_t target = arc.to == flow.sink ? t_node : (arc.to - 2) / 2;
      auto [piece, rest] = split_at(node, t, static_cast<std::size_t>(arc.flow));
      pending[target] = join_at(target, pending[target], piece);
      t = rest;
    }
    if (t != kEmptyTreap) throw IntegrityError("flow out of a node is smaller than its tree");
  };

  TreapHandle ts = kEmptyTreap;
  for (std::int64_t i = 0; i < ell; ++i) {
    ts = join_at(s_node, ts, treap.make(static_cast<std::uint32_t>(i)));
  }
  forward(s_node, ts);

  std::vector<PathSeq> by_root(static_cast<std::size_t>(ell));
  for (Vertex v : topological_order(g)) {
    const TreapHandle tv = pending[v];
    if (static_cast<std::int64_t>(treap.size(tv)) != through[v]) {
      throw IntegrityError("tree size at vertex " + std::to_string(v) +
                           " differs from its throughput");
    }
    if (tv == kEmptyTreap) continue;
    const auto root = treap.member_root(tv);
    ex.root_element[v] = root;
    by_root[root].push_back(v);
    for (auto e : treap.sequence(tv)) ex.element_paths[e].push_back(v);
    forward(v, tv);
  }
  if (static_cast<std::int64_t>(treap.size(pending[t_node])) != ell) {
    throw IntegrityError("not every unit reaches t");
  }
  ex.cover.ell = static_cast<std::size_t>(std::max<std::int64_t>(ell, 0));
  ex.chain_of_element.assign(static_cast<std::size_t>(ell), -1);
  for (std::size_t i = 0; i < by_root.size(); ++i) {
    if (by_root[i].empty()) continue;
    ex.chain_of_element[i] = static_cast<std::int64_t>(ex.cover.chains.size());
    ex.cover.chains.push_back(std::move(by_root[i]));
  }
  return ex;
}

ChainCover chain_cover_flow(const Graph& g, std::size_t ell, std::uint64_t seed) {
  if (ell < 1) throw ParameterError("chain cover needs ell >= 1");
  FlowNetwork net = build_chain_gadget(g, GadgetVariant::kCover, static_cast<std::int64_t>(ell));
  min_cost_flow(net, static_cast<std::int64_t>(ell));
  return treap_chain_extract(g, net, PriorityMode::kRandom, seed).cover;
}

AlgoResult diam_dominating_pipeline(const Graph& g, std::uint64_t seed,
                                    const PipelineOptions& options) {
  require_dag(g);
  Stopwatch clock;
  AlgoResult r;
  r.algo = "dominating";
  r.seed = seed;
  r.params = {{"c", fmt_double(options.c)}, {"c_prime", fmt_double(options.c_prime)}};
  const std::size_t n = g.num_vertices();
  const std::size_t round_limit =
      options.max_rounds != 0
          ? options.max_rounds
          : (n <= 1 ? 0 : static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))));
  const double target = options.c * std::sqrt(static_cast<double>(n));

  EdgeCollector h(g);
  // Certifying edges beyond h.
  EdgeCollector extra(g);
  Graph cur = g;
  std::size_t d = hop_diameter(g);
  r.metrics.diameter_before = d;
  std::size_t round = 0;
  while (static_cast<double>(d) > target) {
    if (round >= round_limit) {
      throw IntegrityError("pipeline did not reach diameter " + fmt_double(target) + " within " +
                           std::to_string(round_limit) + " rounds");
    }
    RoundInfo info;
    info.diameter_before = d;
    info.ell = std::max<std::size_t>(1, 4 * n / d);
    FlowNetwork net = build_chain_gadget(cur, GadgetVariant::kDominating,
                                         static_cast<std::int64_t>(info.ell));
    min_cost_flow(net, static_cast<std::int64_t>(info.ell));
    for (Vertex v = 0; v < n; ++v) info.positive_cost_flow += net.arcs[unbounded_arc(v)].flow;
    if (info.positive_cost_flow > static_cast<std::int64_t>(2 * n)) {
      throw IntegrityError("dominating flow uses more than 2n positive-cost units");
    }
    const ChainExtraction ex =
        treap_chain_extract(cur, net, PriorityMode::kRandom, splitmix64(seed + round));
    for (const auto& p : ex.element_paths) info.decomposition_length += p.size();
    if (info.decomposition_length > 3 * n) {
      throw IntegrityError("decomposition paths exceed 3n vertices");
    }
    info.chains = ex.cover.chains.size();

    auto keep = [&](EdgeCollector& into, const ShortcutSet& s) {
      for (const auto& e : s.edges) {
        if (cur.has_edge(e.u, e.v)) continue;
        if (&into == &extra && h.contains(e.u, e.v)) continue;
        into.add(e.u, e.v, std::nullopt, s.certificates.at({e.u, e.v}));
      }
    };
    for (const auto& c : ex.cover.chains) {
      for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (!cur.has_edge(c[i], c[i + 1])) h.add(c[i], c[i + 1]);
      }
      keep(h, path_shortcut_diam2(c).shortcut);
    }
    for (const auto& p : ex.element_paths) keep(extra, path_shortcut_diam2(p).shortcut);

    cur = with_extra_edges(g, to_edges(h.set()));
    const std::size_t d_new = hop_diameter(cur);
    info.diameter_after = d_new;
    r.round_info.push_back(info);
    if (static_cast<double>(d_new) >
        static_cast<double>(d) / 2.0 + options.c_prime * static_cast<double>(info.ell)) {
      throw IntegrityError("round " + std::to_string(round + 1) + ": diameter " +
                           std::to_string(d_new) + " exceeds D/2 + c'*ell for D = " +
                           std::to_string(d));
    }
    d = d_new;
    ++round;
  }
  r.shortcut = h.set();
  ShortcutSet ext = h.set();
  for (const auto& e : extra.set().edges) {
    if (h.contains(e.u, e.v)) continue;
    ext.edges.push_back(e);
  }
  for (const auto& [k, w] : extra.set().certificates) {
    if (!h.contains(k.first, k.second)) ext.certificates[k] = w;
  }
  r.certified_extension = std::move(ext);
  r.metrics.diameter_after = d;
  r.metrics.rounds = round;
  finish(r, clock);
  return r;
}

ImportantChains important_chain_extension(const Graph& g, const ChainExtraction& ex) {
  if (ex.mode != PriorityMode::kIncreasingIndex) {
    throw ParameterError("important chains need increasing-in-index priorities");
  }
  if (!ex.log) throw IntegrityError("extraction has no event log");
  const std::size_t n = g.num_vertices();
  if (ex.root_element.size() != n || ex.join_events.size() != n + 2) {
    throw IntegrityError("extraction does not match the graph");
  }
  const auto& events = ex.log->events();
  auto collect = [&](const std::vector<std::size_t>& ids) {
    std::vector<std::uint32_t> out;
    for (auto id : ids) {
      if (id >= events.size()) throw IntegrityError("event index out of range");
      out.insert(out.end(), events[id].touched.begin(), events[id].touched.end());
      out.insert(out.end(), events[id].roots.begin(), events[id].roots.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  std::vector<std::vector<std::uint32_t>> split_touched(n + 2), join_touched(n + 2);
  for (std::size_t v = 0; v < n + 2; ++v) {
    split_touched[v] = collect(ex.split_events[v]);
    join_touched[v] = collect(ex.join_events[v]);
  }
  auto has = [](const std::vector<std::uint32_t>& xs, std::uint32_t i) {
    return std::binary_search(xs.begin(), xs.end(), i);
  };

  ImportantChains out;
  out.chains.resize(ex.element_paths.size());
  EdgeCollector h(g);
  std::vector<std::vector<Vertex>> h_out(n);
  auto present = [&](Vertex a, Vertex b) { return h.present(a, b); };
  auto add = [&](Vertex a, Vertex b, Vertex w) {
    if (h.add(a, b, std::nullopt, w)) h_out[a].push_back(b);
  };

  for (std::uint32_t i = 0; i < ex.element_paths.size(); ++i) {
    const PathSeq& p = ex.element_paths[i];
    if (p.empty()) continue;
    auto changed = [&](std::size_t a, std::size_t b) {
      return has(split_touched[a], i) || has(join_touched[b], i);
    };
    PathSeq& ci = out.chains[i];
    for (std::size_t k = 0; k < p.size(); ++k) {
      const std::size_t prev = k == 0 ? n : p[k - 1];
      const std::size_t next = k + 1 == p.size() ? n + 1 : p[k + 1];
      if (ex.root_element[p[k]] == static_cast<std::int64_t>(i) || changed(prev, p[k]) ||
          changed(p[k], next)) {
        ci.push_back(p[k]);
      }
    }
    if (ex.chain_of_element.size() > i && ex.chain_of_element[i] >= 0) {
      const auto& c = ex.cover.chains[static_cast<std::size_t>(ex.chain_of_element[i])];
      if (!std::all_of(c.begin(), c.end(), [&](Vertex v) {
            return std::find(ci.begin(), ci.end(), v) != ci.end();
          })) {
        throw IntegrityError("chain " + std::to_string(i) + " is not inside its important chain");
      }
    }
    for (std::size_t k = 0; k + 1 < ci.size(); ++k) {
      const Vertex a = ci[k], b = ci[k + 1];
      if (present(a, b)) continue;
      Vertex mid = kNoVertex;
      auto probe = [&](Vertex w) {
        if (present(w, b) && (mid == kNoVertex || w < mid)) mid = w;
      };
      for (Vertex w : g.out_neighbors(a)) probe(w);
      for (Vertex w : h_out[a]) probe(w);
      if (mid == kNoVertex) {
        throw IntegrityError("important chain " + std::to_string(i) + ": hop " +
                             std::to_string(a) + " -> " + std::to_string(b) +
                             " has no two-hop certificate");
      }
      add(a, b, mid);
    }
    const auto d2 = path_shortcut_diam2(ci).shortcut;
    for (const auto& e : d2.edges) {
      if (!present(e.u, e.v)) add(e.u, e.v, d2.certificates.at({e.u, e.v}));
    }
  }
  out.shortcut = std::move(h.set());
  return out;
}

}  // namespace certilab
