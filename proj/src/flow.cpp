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

#include "certilab/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

#include "certilab/error.hpp"

namespace certilab {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Residual graph over the arcs: id 2a is the forward copy of arc a, 2a+1
// the backward one.
struct Residual {
  explicit Residual(const FlowNetwork& net) : net(net), adj(net.num_nodes) {
    for (std::size_t a = 0; a < net.arcs.size(); ++a) {
      adj[net.arcs[a].from].push_back(2 * a);
      adj[net.arcs[a].to].push_back(2 * a + 1);
    }
  }
  std::uint32_t head(std::size_t r) const {
    const auto& a = net.arcs[r / 2];
    return r % 2 == 0 ? a.to : a.from;
  }
  std::int64_t cap(std::size_t r) const {
    const auto& a = net.arcs[r / 2];
    return r % 2 == 0 ? a.cap - a.flow : a.flow;
  }
  std::int64_t cost(std::size_t r) const {
    const auto& a = net.arcs[r / 2];
    return r % 2 == 0 ? a.cost : -a.cost;
  }

  const FlowNetwork& net;
  std::vector<std::vector<std::size_t>> adj;
};

}  // namespace

std::size_t FlowNetwork::add_arc(std::uint32_t from, std::uint32_t to, std::int64_t cap,
                                 std::int64_t cost, bool infinite) {
  if (from >= num_nodes || to >= num_nodes) throw ParameterError("arc endpoint out of range");
  arcs.push_back({from, to, infinite ? big_m : cap, cost, 0, infinite});
  return arcs.size() - 1;
}

std::int64_t FlowNetwork::total_cost() const {
  std::int64_t c = 0;
  for (const auto& a : arcs) c += a.flow * a.cost;
  return c;
}

std::int64_t FlowNetwork::value() const {
  std::int64_t v = 0;
  for (const auto& a : arcs) {
    if (a.from == source) v += a.flow;
    if (a.to == source) v -= a.flow;
  }
  return v;
}

FlowNetwork build_chain_gadget(const Graph& g, GadgetVariant variant, std::int64_t max_value) {
  if (!g.directed() || !is_acyclic(g)) throw DomainError("chain gadgets need a DAG");
  if (max_value < 1) throw ParameterError("gadget flow value must be positive");
  const std::size_t n = g.num_vertices();
  FlowNetwork net;
  net.num_nodes = 2 * n + 2;
  net.big_m = std::max<std::int64_t>(1, static_cast<std::int64_t>(n) * max_value);
  const bool cover = variant == GadgetVariant::kCover;
  for (Vertex v = 0; v < n; ++v) {
    net.add_arc(in_node(v), out_node(v), 1, cover ? -1 : -2);
    net.add_arc(in_node(v), out_node(v), 0, cover ? 0 : 1, true);
    net.add_arc(net.source, in_node(v), 0, 0, true);
    net.add_arc(out_node(v), net.sink, 0, 0, true);
  }
  for (const auto& e : g.edges()) net.add_arc(out_node(e.src), in_node(e.dst), 0, 0, true);
  return net;
}

void min_cost_flow(FlowNetwork& net, std::int64_t value) {
  if (value < 0) throw ParameterError("flow value must be nonnegative");
  for (auto& a : net.arcs) {
    if (a.cap < 0) throw ParameterError("negative arc capacity");
    a.flow = 0;
  }
  Residual res(net);
  const std::size_t n = net.num_nodes;

  // Label-correcting pass for the initial potentials.
  std::vector<std::int64_t> pot(n, kInf);
  {
    std::vector<std::size_t> relaxed(n, 0);
    std::vector<bool> queued(n, false);
    std::deque<std::uint32_t> q{net.source};
    pot[net.source] = 0;
    queued[net.source] = true;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop_front();
      queued[u] = false;
      if (++relaxed[u] > n) throw DomainError("network has a negative-cost cycle");
      for (auto r : res.adj[u]) {
        if (res.cap(r) <= 0) continue;
        const auto v = res.head(r);
        if (pot[u] + res.cost(r) < pot[v]) {
          pot[v] = pot[u] + res.cost(r);
          if (!queued[v]) {
            queued[v] = true;
            q.push_back(v);
          }
        }
      }
    }
    for (auto& p : pot) {
      if (p == kInf) p = 0;
    }
  }

  std::int64_t remaining = value;
  std::vector<std::int64_t> dist(n);
  std::vector<std::size_t> via(n);
  using Item = std::pair<std::int64_t, std::uint32_t>;
  while (remaining > 0) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[net.source] = 0;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, net.source});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d != dist[u]) continue;
      for (auto r : res.adj[u]) {
        if (res.cap(r) <= 0) continue;
        const auto v = res.head(r);
        const std::int64_t nd = d + res.cost(r) + pot[u] - pot[v];
        if (nd < dist[v]) {
          dist[v] = nd;
          via[v] = r;
          pq.push({nd, v});
        }
      }
    }
    if (dist[net.sink] == kInf) {
      throw InfeasibleError("flow value " + std::to_string(value) + " cannot be routed; " +
                            std::to_string(value - remaining) + " units fit");
    }
    std::int64_t reach_max = 0;
    for (auto d : dist) {
      if (d != kInf) reach_max = std::max(reach_max, d);
    }
    for (std::size_t v = 0; v < n; ++v) pot[v] += dist[v] == kInf ? reach_max : dist[v];

    std::int64_t push = remaining;
    for (auto v = net.sink; v != net.source; v = res.head(via[v] ^ 1U)) {
      push = std::min(push, res.cap(via[v]));
    }
    for (auto v = net.sink; v != net.source; v = res.head(via[v] ^ 1U)) {
      auto& a = net.arcs[via[v] / 2];
      a.flow += via[v] % 2 == 0 ? push : -push;
    }
    remaining -= push;
  }
}

void check_flow(const FlowNetwork& net) {
  std::vector<std::int64_t> balance(net.num_nodes, 0);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    if (a.flow < 0 || a.flow > a.cap) {
      throw IntegrityError("arc " + std::to_string(i) + " violates its capacity");
    }
    balance[a.from] -= a.flow;
    balance[a.to] += a.flow;
  }
  for (std::size_t v = 0; v < net.num_nodes; ++v) {
    if (v == net.source || v == net.sink) continue;
    if (balance[v] != 0) {
      throw IntegrityError("flow conservation fails at node " + std::to_string(v));
    }
  }
}

std::vector<FlowPath> decompose(const FlowNetwork& net) {
  check_flow(net);
  std::vector<std::int64_t> left(net.arcs.size());
  std::vector<std::vector<std::size_t>> out(net.num_nodes);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    left[i] = net.arcs[i].flow;
    out[net.arcs[i].from].push_back(i);
  }
  std::vector<std::size_t> cursor(net.num_nodes, 0);
  std::vector<FlowPath> paths;
  std::vector<std::size_t> seen_stamp(net.num_nodes, 0);
  std::size_t stamp = 0;
  while (true) {
    FlowPath p;
    p.nodes.push_back(net.source);
    ++stamp;
    seen_stamp[net.source] = stamp;
    std::uint32_t u = net.source;
    while (u != net.sink) {
      auto& c = cursor[u];
      while (c < out[u].size() && left[out[u][c]] == 0) ++c;
      if (c == out[u].size()) break;
      const std::size_t a = out[u][c];
      p.arcs.push_back(a);
      u = net.arcs[a].to;
      if (seen_stamp[u] == stamp) throw IntegrityError("flow contains a cycle");
      seen_stamp[u] = stamp;
      p.nodes.push_back(u);
    }
    if (p.arcs.empty()) break;
    if (u != net.sink) throw IntegrityError("flow path stalls before the sink");
    p.value = std::numeric_limits<std::int64_t>::max();
    for (auto a : p.arcs) p.value = std::min(p.value, left[a]);
    for (auto a : p.arcs) left[a] -= p.value;
    paths.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] != 0) throw IntegrityError("flow contains a cycle not reachable as a path");
  }
  return paths;
}

}  // namespace certilab
