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

#include "certilab/instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_set>

#include "certilab/error.hpp"
#include "certilab/rng.hpp"

namespace certilab {
namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

void check_vertex_cap(std::size_t n, const GenLimits& limits) {
  if (n > limits.max_vertices ||
      n > static_cast<std::size_t>(std::numeric_limits<Vertex>::max() - 1)) {
    throw ResourceError("instance would have " + std::to_string(n) +
                        " vertices, cap is " + std::to_string(limits.max_vertices));
  }
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void set_layers_from_paths(Instance& inst) {
  std::vector<Vertex> first, last;
  for (const auto& p : inst.critical_paths) {
    if (p.empty()) continue;
    first.push_back(p.front());
    last.push_back(p.back());
  }
  inst.first_layer = sorted_unique(std::move(first));
  inst.last_layer = sorted_unique(std::move(last));
}

PathSeq shifted(const PathSeq& p, Vertex offset) {
  PathSeq out(p);
  for (auto& v : out) v += offset;
  return out;
}

// Directions of the lattice family; undefined radius means V(r) is empty.
std::vector<LatticePoint> directions_for(const Radius& r) {
  return hull_positive_vertices(r);
}

}  // namespace

HsGrid::HsGrid(int d, std::int64_t side) : d_(d), side_(side), layer_size_(1) {
  if (d < 1) throw ParameterError("d must be positive");
  if (side < 1) throw ParameterError("grid side must be positive");
  for (int k = 0; k <= d; ++k) {
    if (layer_size_ > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(side)) {
      throw ResourceError("grid size overflows");
    }
    layer_size_ *= static_cast<std::size_t>(side);
  }
}

Vertex HsGrid::id(int layer, const std::vector<std::int64_t>& coords) const {
  std::size_t v = 0;
  for (auto c : coords) v = v * static_cast<std::size_t>(side_) + static_cast<std::size_t>(c);
  return static_cast<Vertex>(static_cast<std::size_t>(layer) * layer_size_ + v);
}

std::vector<std::int64_t> HsGrid::coords_of(Vertex v) const {
  std::vector<std::int64_t> coords(static_cast<std::size_t>(d_) + 1);
  std::size_t rest = v % layer_size_;
  for (std::size_t k = coords.size(); k-- > 0;) {
    coords[k] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(side_));
    rest /= static_cast<std::size_t>(side_);
  }
  return coords;
}

std::optional<Vertex> HsGrid::step(Vertex v, const LatticePoint& dir) const {
  const int layer = layer_of(v);
  auto coords = coords_of(v);
  coords[static_cast<std::size_t>(layer)] += dir.x;
  coords[static_cast<std::size_t>(layer) + 1] += dir.y;
  for (auto c : coords) {
    if (c < 0 || c >= side_) return std::nullopt;
  }
  return id((layer + 1) % d_, coords);
}

std::int64_t hs_grid_side(int D, const Radius& r) {
  if (D < 1) throw ParameterError("D must be positive");
  return std::max<std::int64_t>(1, r.ceil_times(4 * static_cast<std::int64_t>(D)));
}

HsGraph build_hs_graph(int d, int D, const Radius& r, bool directed,
                       const GenLimits& limits) {
  if (d < 1) throw ParameterError("d must be positive");
  if (!directed && d > 2) {
    throw ParameterError("undirected lattice graphs need d in {1, 2}");
  }
  const std::int64_t side = hs_grid_side(D, r);
  HsGrid grid(d, side);
  check_vertex_cap(grid.num_vertices(), limits);
  auto dirs = directions_for(r);

  std::vector<Edge> edges;
  edges.reserve(grid.num_vertices() * dirs.size());
  for (std::size_t v = 0; v < grid.num_vertices(); ++v) {
    for (const auto& dir : dirs) {
      if (auto w = grid.step(static_cast<Vertex>(v), dir)) {
        edges.push_back({static_cast<Vertex>(v), *w, Weight(1)});
      }
    }
  }
  const bool edgeless = dirs.empty();
  return HsGraph{Graph(directed, grid.num_vertices(), std::move(edges)), grid,
                 std::move(dirs), edgeless};
}

std::vector<PathSeq> construct_critical_paths(const Graph& g, int d, int D,
                                              const Radius& r) {
  const std::int64_t side = hs_grid_side(D, r);
  HsGrid grid(d, side);
  if (grid.num_vertices() != g.num_vertices()) {
    throw ParameterError("graph does not match the lattice parameters (vertex count)");
  }
  const auto dirs = directions_for(r);
  std::vector<PathSeq> paths;
  if (dirs.empty()) return paths;

  const std::size_t hops = static_cast<std::size_t>(d) * static_cast<std::size_t>(D);
  const std::size_t k = dirs.size();
  std::size_t tuples = 1;
  for (int i = 0; i < d; ++i) {
    if (tuples > std::numeric_limits<std::size_t>::max() / k) {
      throw ResourceError("too many direction tuples");
    }
    tuples *= k;
  }

  std::vector<std::size_t> tuple(static_cast<std::size_t>(d), 0);
  PathSeq walk;
  walk.reserve(hops + 1);
  for (std::size_t t = 0; t < tuples; ++t) {
    // Lexicographic tuple from the counter, first coordinate most significant.
    std::size_t rest = t;
    for (std::size_t i = tuple.size(); i-- > 0;) {
      tuple[i] = rest % k;
      rest /= k;
    }
    std::unordered_set<std::uint64_t> used;
    for (std::size_t start = 0; start < g.num_vertices(); ++start) {
      walk.assign(1, static_cast<Vertex>(start));
      bool ok = true;
      for (std::size_t h = 0; h < hops && ok; ++h) {
        const Vertex cur = walk.back();
        const auto next = grid.step(cur, dirs[tuple[static_cast<std::size_t>(grid.layer_of(cur))]]);
        if (!next || used.count(pair_key(cur, *next))) {
          ok = false;
          break;
        }
        walk.push_back(*next);
      }
      if (!ok) continue;
      for (std::size_t h = 0; h + 1 < walk.size(); ++h) {
        if (!g.has_edge(walk[h], walk[h + 1])) {
          throw ParameterError("graph does not match the lattice parameters (missing edge)");
        }
        used.insert(pair_key(walk[h], walk[h + 1]));
      }
      paths.push_back(walk);
    }
  }
  return paths;
}

Instance build_hs_instance(int d, int D, const Radius& r, bool directed,
                           const GenLimits& limits) {
  auto hs = build_hs_graph(d, D, r, directed, limits);
  Instance inst;
  inst.kind = "hs";
  inst.critical_paths = construct_critical_paths(hs.graph, d, D, r);
  inst.graph = std::move(hs.graph);
  inst.params.d = d;
  inst.params.D = D;
  inst.params.r = r;
  inst.params.directed = directed;
  inst.layers = static_cast<std::size_t>(d) * static_cast<std::size_t>(D) + 1;
  inst.edgeless_warning = hs.edgeless_warning;
  set_layers_from_paths(inst);
  return inst;
}

Instance restrict_critical_paths(const Instance& inst,
                                 const std::vector<std::size_t>& keep) {
  Instance out = inst;
  out.critical_paths.clear();
  for (auto i : keep) {
    if (i >= inst.critical_paths.size()) throw ParameterError("critical path index out of range");
    out.critical_paths.push_back(inst.critical_paths[i]);
  }
  set_layers_from_paths(out);
  return out;
}

Instance build_rp_graph(const RpParams& params, const GenLimits& limits) {
  if (params.size_budget > limits.max_vertices) {
    throw ResourceError("size budget exceeds the vertex cap");
  }
  Radius inner_r = Radius::sqrt_of(2);
  if (params.inner_r) {
    inner_r = *params.inner_r;
  } else if (params.eps > 0.0) {
    const double r = std::pow(static_cast<double>(params.size_budget), params.eps);
    const auto r2 = static_cast<std::int64_t>(std::floor(r * r));
    if (r2 > 2) inner_r = Radius::sqrt_of(r2);
  }
  const Instance inner = build_hs_instance(params.inner_d, params.inner_D, inner_r, true, limits);
  const std::size_t n_inner = inner.graph.num_vertices();
  if (inner.critical_paths.empty()) throw ParameterError("inner instance has no critical paths");

  // Outer family: two-edge paths leaving layer 0, greedily made edge-disjoint.
  const auto outer = build_hs_graph(2, 1, params.outer_r, true, limits);
  const auto outer_paths = construct_critical_paths(outer.graph, 2, 1, params.outer_r);
  std::unordered_set<std::uint64_t> taken;
  std::map<Vertex, std::vector<std::pair<Vertex, Vertex>>> through;  // v -> (x, y)
  for (const auto& p : outer_paths) {
    if (outer.grid.layer_of(p[0]) != 0) continue;
    const auto e1 = pair_key(p[0], p[1]);
    const auto e2 = pair_key(p[1], p[2]);
    if (taken.count(e1) || taken.count(e2)) continue;
    taken.insert(e1);
    taken.insert(e2);
    through[p[1]].push_back({p[0], p[2]});
  }
  if (through.empty()) throw ParameterError("outer family has no critical paths");

  // Add middle vertices while the budget allows.
  std::vector<Vertex> middles;
  std::set<Vertex> xs, ys;
  std::size_t max_through = 0;
  for (const auto& [v, pairs] : through) {
    std::set<Vertex> nx = xs, ny = ys;
    for (const auto& [x, y] : pairs) {
      nx.insert(x);
      ny.insert(y);
    }
    const std::size_t total = nx.size() + ny.size() + (middles.size() + 1) * n_inner;
    if (total > params.size_budget) break;
    middles.push_back(v);
    xs = std::move(nx);
    ys = std::move(ny);
    max_through = std::max(max_through, pairs.size());
  }
  if (middles.empty()) {
    throw ParameterError("size budget too small for a single inner copy");
  }
  if (max_through > inner.critical_paths.size()) {
    throw ParameterError("inner instance has fewer critical paths than outer paths per middle vertex");
  }

  std::map<Vertex, Vertex> x_id, y_id;
  Vertex next = 0;
  for (auto x : xs) x_id[x] = next++;
  for (auto y : ys) y_id[y] = next++;
  const std::size_t n = next + middles.size() * n_inner;
  check_vertex_cap(n, limits);

  std::vector<Edge> edges;
  Instance inst;
  Rng rng(params.seed);
  for (std::size_t m = 0; m < middles.size(); ++m) {
    const Vertex offset = static_cast<Vertex>(next + m * n_inner);
    for (const auto& e : inner.graph.edges()) {
      edges.push_back({e.src + offset, e.dst + offset, e.weight});
    }
    std::vector<std::size_t> pick(inner.critical_paths.size());
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    shuffle_in_place(pick, rng);
    std::set<std::uint64_t> new_edges;
    const auto& pairs = through.at(middles[m]);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const auto& ip = inner.critical_paths[pick[j]];
      const Vertex x = x_id.at(pairs[j].first);
      const Vertex y = y_id.at(pairs[j].second);
      const Vertex s = ip.front() + offset;
      const Vertex t = ip.back() + offset;
      if (new_edges.insert(pair_key(x, s)).second) edges.push_back({x, s, Weight(1)});
      if (new_edges.insert(pair_key(t, y)).second) edges.push_back({t, y, Weight(1)});
      PathSeq composed{x};
      for (auto v : ip) composed.push_back(v + offset);
      composed.push_back(y);
      inst.critical_paths.push_back(std::move(composed));
    }
  }

  inst.kind = "rp";
  inst.graph = Graph(true, n, std::move(edges));
  inst.params.d = params.inner_d;
  inst.params.D = params.inner_D;
  inst.params.r = inner_r;
  inst.params.directed = true;
  inst.params.eps = params.eps;
  inst.params.seed = params.seed;
  inst.params.extra["size_budget"] = std::to_string(params.size_budget);
  inst.params.extra["outer_r"] = params.outer_r.to_string();
  inst.params.extra["middles"] = std::to_string(middles.size());
  inst.layers = inner.layers + 2;
  for (const auto& [x, id] : x_id) inst.first_layer.push_back(id);
  for (const auto& [y, id] : y_id) inst.last_layer.push_back(id);
  return inst;
}

GadgetInstance build_uy_gadget(const Instance& inner, AuxMode mode) {
  if (!inner.graph.directed()) throw ParameterError("gadgets need a directed inner instance");
  if (inner.first_layer.empty() || inner.last_layer.empty()) {
    throw ParameterError("inner instance has empty S or T");
  }
  const std::size_t n_inner = inner.graph.num_vertices();
  const std::size_t per_s = ceil_div(n_inner, inner.first_layer.size());
  const std::size_t per_t = ceil_div(n_inner, inner.last_layer.size());

  GadgetInstance gi;
  gi.aux_mode = mode;
  gi.S = inner.first_layer;
  gi.T = inner.last_layer;
  std::vector<Edge> edges(inner.graph.edges());
  Vertex next = static_cast<Vertex>(n_inner);

  for (Vertex s : gi.S) {
    std::vector<Vertex> aux(per_s);
    for (auto& a : aux) a = next++;
    auto& paths = gi.aux_in_paths[s];
    if (mode == AuxMode::kStar) {
      for (auto a : aux) {
        edges.push_back({a, s, Weight(1)});
        paths.push_back({a, s});
      }
    } else {
      for (std::size_t j = 0; j < aux.size(); ++j) {
        edges.push_back({aux[j], j + 1 < aux.size() ? aux[j + 1] : s, Weight(1)});
        PathSeq p(aux.begin() + static_cast<std::ptrdiff_t>(j), aux.end());
        p.push_back(s);
        paths.push_back(std::move(p));
      }
    }
    auto& owned = gi.aux_of[s];
    owned.insert(owned.end(), aux.begin(), aux.end());
  }
  for (Vertex t : gi.T) {
    std::vector<Vertex> aux(per_t);
    for (auto& b : aux) b = next++;
    auto& paths = gi.aux_out_paths[t];
    if (mode == AuxMode::kStar) {
      for (auto b : aux) {
        edges.push_back({t, b, Weight(1)});
        paths.push_back({t, b});
      }
    } else {
      PathSeq p{t};
      for (std::size_t j = 0; j < aux.size(); ++j) {
        edges.push_back({j == 0 ? t : aux[j - 1], aux[j], Weight(1)});
        p.push_back(aux[j]);
        paths.push_back(p);
      }
    }
    auto& owned = gi.aux_of[t];
    owned.insert(owned.end(), aux.begin(), aux.end());
  }

  gi.base = inner;
  gi.base.kind = mode == AuxMode::kStar ? "uy" : "brr";
  gi.base.graph = Graph(true, next, std::move(edges));
  gi.base.params.extra["aux_mode"] = mode == AuxMode::kStar ? "star" : "path";
  gi.copies = 1;
  return gi;
}

GadgetInstance build_kp_gadget(const Instance& inner, std::size_t copies) {
  if (!inner.graph.directed()) throw ParameterError("gadgets need a directed inner instance");
  if (copies < 1) throw ParameterError("copies must be at least 1");
  if (inner.first_layer.empty() || inner.last_layer.empty()) {
    throw ParameterError("inner instance has empty S or T");
  }
  const std::size_t n_inner = inner.graph.num_vertices();
  const std::size_t per_s = ceil_div(n_inner, inner.first_layer.size());
  const std::size_t per_t = ceil_div(n_inner, inner.last_layer.size());
  const std::size_t block =
      n_inner + per_s * inner.first_layer.size() + per_t * inner.last_layer.size();

  GadgetInstance gi;
  gi.copies = copies;
  gi.aux_mode = AuxMode::kStar;
  std::vector<Edge> edges;
  // column[t index][j][copy] = auxiliary vertex.
  std::vector<std::vector<std::vector<Vertex>>> column(
      inner.last_layer.size(), std::vector<std::vector<Vertex>>(per_t, std::vector<Vertex>(copies)));

  for (std::size_t c = 0; c < copies; ++c) {
    const Vertex off = static_cast<Vertex>(c * block);
    for (const auto& e : inner.graph.edges()) edges.push_back({e.src + off, e.dst + off, e.weight});
    Vertex next = static_cast<Vertex>(off + n_inner);
    for (Vertex s0 : inner.first_layer) {
      const Vertex s = s0 + off;
      gi.S.push_back(s);
      for (std::size_t j = 0; j < per_s; ++j) {
        const Vertex a = next++;
        edges.push_back({a, s, Weight(1)});
        gi.aux_in_paths[s].push_back({a, s});
        gi.aux_of[s].push_back(a);
      }
    }
    for (std::size_t ti = 0; ti < inner.last_layer.size(); ++ti) {
      const Vertex t = inner.last_layer[ti] + off;
      gi.T.push_back(t);
      for (std::size_t j = 0; j < per_t; ++j) {
        const Vertex b = next++;
        column[ti][j][c] = b;
        edges.push_back({t, b, Weight(1)});
        gi.aux_of[t].push_back(b);
      }
    }
    for (const auto& p : inner.critical_paths) {
      gi.base.critical_paths.push_back(shifted(p, off));
    }
  }
  for (std::size_t ti = 0; ti < column.size(); ++ti) {
    for (std::size_t j = 0; j < per_t; ++j) {
      const auto& col = column[ti][j];
      for (std::size_t c = 0; c + 1 < copies; ++c) edges.push_back({col[c], col[c + 1], Weight(1)});
      gi.aux_paths.push_back(col);
      for (std::size_t c = 0; c < copies; ++c) {
        const Vertex t = static_cast<Vertex>(inner.last_layer[ti] + c * block);
        PathSeq p{t};
        for (std::size_t c2 = c; c2 < copies; ++c2) {
          p.push_back(col[c2]);
          gi.aux_out_paths[t].push_back(p);
        }
      }
    }
  }

  gi.base.kind = "kp";
  gi.base.graph = Graph(true, copies * block, std::move(edges));
  gi.base.params = inner.params;
  gi.base.params.extra["copies"] = std::to_string(copies);
  gi.base.layers = inner.layers;
  gi.base.first_layer = gi.S;
  gi.base.last_layer = gi.T;
  return gi;
}

GadgetInstance build_cc_gadget(const GadgetInstance& inner, std::size_t copies) {
  if (inner.aux_mode != AuxMode::kStar || inner.copies != 1 || inner.base.kind != "uy") {
    throw ParameterError("cc gadget needs a star-mode uy gadget as inner instance");
  }
  if (copies < 1) throw ParameterError("copies must be at least 1");
  const auto& paths = inner.base.critical_paths;
  const std::size_t block = inner.base.graph.num_vertices();

  // Ordered auxiliary lists and their owners.
  std::vector<Vertex> s_aux, t_aux;
  std::map<Vertex, Vertex> owner;
  std::map<Vertex, std::vector<Vertex>> s_aux_of, t_aux_of;
  for (const auto& [s, ps] : inner.aux_in_paths) {
    for (const auto& p : ps) {
      s_aux.push_back(p.front());
      s_aux_of[s].push_back(p.front());
      owner[p.front()] = s;
    }
  }
  for (const auto& [t, ps] : inner.aux_out_paths) {
    for (const auto& p : ps) {
      t_aux.push_back(p.back());
      t_aux_of[t].push_back(p.back());
      owner[p.back()] = t;
    }
  }
  std::map<Vertex, std::vector<std::size_t>> paths_from;
  std::map<Vertex, std::size_t> paths_into;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    paths_from[paths[i].front()].push_back(i);
    ++paths_into[paths[i].back()];
  }
  for (const auto& [s, ids] : paths_from) {
    if (ids.size() > s_aux_of[s].size()) {
      throw ParameterError("more critical paths leave an S vertex than it has auxiliaries");
    }
  }
  for (const auto& [t, cnt] : paths_into) {
    if (cnt > t_aux_of[t].size()) {
      throw ParameterError("more critical paths enter a T vertex than it has auxiliaries");
    }
  }
  std::map<Vertex, std::size_t> s_aux_index;
  for (std::size_t k = 0; k < s_aux.size(); ++k) s_aux_index[s_aux[k]] = k;

  GadgetInstance gi;
  gi.copies = copies;
  gi.aux_mode = AuxMode::kStar;
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < copies; ++c) {
    const Vertex off = static_cast<Vertex>(c * block);
    for (const auto& e : inner.base.graph.edges()) edges.push_back({e.src + off, e.dst + off, e.weight});
    for (const auto& p : paths) gi.base.critical_paths.push_back(shifted(p, off));
    for (auto s : inner.S) gi.S.push_back(s + off);
    for (auto t : inner.T) gi.T.push_back(t + off);
    for (const auto& [v, aux] : inner.aux_of) {
      auto& dst = gi.aux_of[v + off];
      for (auto a : aux) dst.push_back(a + off);
    }
    for (const auto& [s, ps] : inner.aux_in_paths) {
      for (const auto& p : ps) gi.aux_in_paths[s + off].push_back(shifted(p, off));
    }
    for (const auto& [t, ps] : inner.aux_out_paths) {
      for (const auto& p : ps) gi.aux_out_paths[t + off].push_back(shifted(p, off));
    }
    if (c > 0) {
      const Vertex prev = static_cast<Vertex>((c - 1) * block);
      for (std::size_t k = 0; k < std::min(s_aux.size(), t_aux.size()); ++k) {
        edges.push_back({t_aux[k] + prev, s_aux[k] + off, Weight(1)});
      }
    }
  }

  // Adversarial chains. Chain tails are T-auxiliaries (inner ids) of the
  // previous copy; each continues through the matched S-auxiliary if that
  // S vertex still has an unused critical path with a free T-auxiliary.
  std::vector<std::size_t> open;  // chain ids ending in the previous copy
  for (std::size_t c = 0; c < copies; ++c) {
    const Vertex off = static_cast<Vertex>(c * block);
    std::set<Vertex> used_aux;
    std::vector<bool> used_path(paths.size(), false);
    std::map<Vertex, std::size_t> s_cursor;

    auto free_t_aux = [&](Vertex t) -> std::optional<Vertex> {
      for (auto b : t_aux_of[t]) {
        if (!used_aux.count(b)) return b;
      }
      return std::nullopt;
    };
    auto extend = [&](std::size_t chain, Vertex a_s, std::size_t path_id) {
      const Vertex b = *free_t_aux(paths[path_id].back());
      used_aux.insert(a_s);
      used_aux.insert(b);
      used_path[path_id] = true;
      gi.adversarial_chains[chain].push_back(a_s + off);
      gi.adversarial_chains[chain].push_back(b + off);
      gi.chain_hop_paths[chain].push_back(c * paths.size() + path_id);
    };

    std::vector<std::size_t> next_open;
    for (auto chain : open) {
      const Vertex tail = gi.adversarial_chains[chain].back() - static_cast<Vertex>((c - 1) * block);
      const auto k = static_cast<std::size_t>(std::find(t_aux.begin(), t_aux.end(), tail) - t_aux.begin());
      if (k >= s_aux.size()) continue;
      const Vertex a_s = s_aux[k];
      if (used_aux.count(a_s)) continue;
      const Vertex s = owner.at(a_s);
      std::optional<std::size_t> pick;
      for (auto pid : paths_from[s]) {
        if (!used_path[pid] && free_t_aux(paths[pid].back())) {
          pick = pid;
          break;
        }
      }
      if (!pick) continue;
      extend(chain, a_s, *pick);
      next_open.push_back(chain);
    }
    for (std::size_t pid = 0; pid < paths.size(); ++pid) {
      if (used_path[pid]) continue;
      const Vertex s = paths[pid].front();
      std::optional<Vertex> a_s;
      auto& cur = s_cursor[s];
      for (; cur < s_aux_of[s].size(); ++cur) {
        if (!used_aux.count(s_aux_of[s][cur])) {
          a_s = s_aux_of[s][cur];
          break;
        }
      }
      if (!a_s || !free_t_aux(paths[pid].back())) {
        throw IntegrityError("auxiliary bookkeeping failed while building chains");
      }
      gi.adversarial_chains.emplace_back();
      gi.chain_hop_paths.emplace_back();
      extend(gi.adversarial_chains.size() - 1, *a_s, pid);
      next_open.push_back(gi.adversarial_chains.size() - 1);
    }
    open = std::move(next_open);
  }

  gi.base.kind = "cc";
  gi.base.graph = Graph(true, copies * block, std::move(edges));
  gi.base.params = inner.base.params;
  gi.base.params.extra["copies"] = std::to_string(copies);
  gi.base.layers = inner.base.layers;
  gi.base.first_layer = gi.S;
  gi.base.last_layer = gi.T;
  return gi;
}

Graph random_dag(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t max_pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > max_pairs) throw ParameterError("too many edges for a simple DAG");
  Rng rng(seed);
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  shuffle_in_place(order, rng);

  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  if (m * 2 > max_pairs) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) chosen.push_back({i, j});
    }
    shuffle_in_place(chosen, rng);
    chosen.resize(m);
  } else {
    std::unordered_set<std::uint64_t> seen;
    while (chosen.size() < m) {
      auto i = uniform_below(rng, n);
      auto j = uniform_below(rng, n);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      if (seen.insert(pair_key(static_cast<Vertex>(i), static_cast<Vertex>(j))).second) {
        chosen.push_back({i, j});
      }
    }
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (const auto& [i, j] : chosen) edges.push_back({order[i], order[j], Weight(1)});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
  });
  return Graph(true, n, std::move(edges));
}

Graph random_layered_dag(std::size_t n, std::size_t num_layers,
                         std::size_t out_degree, std::uint64_t seed) {
  if (num_layers < 1 || num_layers > n) throw ParameterError("need 1 <= layers <= n");
  Rng rng(seed);
  std::vector<std::size_t> start(num_layers + 1);
  for (std::size_t l = 0; l <= num_layers; ++l) start[l] = l * n / num_layers;
  std::vector<Edge> edges;
  for (std::size_t l = 0; l + 1 < num_layers; ++l) {
    std::vector<Vertex> next;
    for (std::size_t v = start[l + 1]; v < start[l + 2]; ++v) next.push_back(static_cast<Vertex>(v));
    const std::size_t k = std::min(out_degree, next.size());
    for (std::size_t v = start[l]; v < start[l + 1]; ++v) {
      // Partial Fisher-Yates picks k distinct successors.
      for (std::size_t i = 0; i < k; ++i) {
        std::swap(next[i], next[i + uniform_below(rng, next.size() - i)]);
      }
      std::vector<Vertex> succ(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(succ.begin(), succ.end());
      for (auto w : succ) edges.push_back({static_cast<Vertex>(v), w, Weight(1)});
    }
  }
  return Graph(true, n, std::move(edges));
}

Graph directed_path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), Weight(1)});
  }
  return Graph(true, n, std::move(edges));
}

}  // namespace certilab
