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

#include "certilab/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "certilab/error.hpp"

namespace certilab {
namespace {

// Wraps nlohmann exceptions raised while reading.
template <typename F>
auto reading(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed ") + what + ": " + e.what());
  }
}

Json paths_to_json(const std::vector<PathSeq>& paths) {
  Json out = Json::array();
  for (const auto& p : paths) out.push_back(p);
  return out;
}

std::vector<PathSeq> paths_from_json(const Json& j) {
  return j.get<std::vector<PathSeq>>();
}

template <typename V>
Json vertex_map_to_json(const std::map<Vertex, V>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) {
    if constexpr (std::is_same_v<V, std::vector<PathSeq>>) {
      out[std::to_string(k)] = paths_to_json(v);
    } else {
      out[std::to_string(k)] = v;
    }
  }
  return out;
}

template <typename V>
std::map<Vertex, V> vertex_map_from_json(const Json& j) {
  std::map<Vertex, V> out;
  for (const auto& [k, v] : j.items()) out[static_cast<Vertex>(std::stoul(k))] = v.template get<V>();
  return out;
}

std::string pair_text(Vertex u, Vertex v) { return std::to_string(u) + "," + std::to_string(v); }

VertexPair parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw IoError("bad certificate key '" + s + "'");
  try {
    return {static_cast<Vertex>(std::stoul(s.substr(0, comma))),
            static_cast<Vertex>(std::stoul(s.substr(comma + 1)))};
  } catch (const std::exception&) {
    throw IoError("bad certificate key '" + s + "'");
  }
}

}  // namespace

Json weight_to_json(const Weight& w) {
  if (w.denominator() == 1) return w.numerator();
  return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

Weight weight_from_json(const Json& j) {
  if (j.is_number_integer()) return Weight(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Weight(std::stoll(s));
      return Weight(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw IoError("bad weight '" + s + "'");
    }
  }
  throw IoError("weight must be an integer or a \"p/q\" string");
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["directed"] = g.directed();
  j["n"] = g.num_vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json row = Json::array({e.src, e.dst});
    if (g.weighted()) row.push_back(weight_to_json(e.weight));
    edges.push_back(std::move(row));
  }
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  return reading("graph", [&] {
    std::vector<Edge> edges;
    for (const auto& row : j.at("edges")) {
      if (!row.is_array() || row.size() < 2 || row.size() > 3) throw IoError("bad edge row");
      Edge e{row[0].get<Vertex>(), row[1].get<Vertex>(), Weight(1)};
      if (row.size() == 3) e.weight = weight_from_json(row[2]);
      edges.push_back(e);
    }
    return Graph(j.at("directed").get<bool>(), j.at("n").get<std::size_t>(), std::move(edges));
  });
}

Json instance_to_json(const GadgetInstance& inst) {
  const Instance& b = inst.base;
  Json j = graph_to_json(b.graph);
  j["kind"] = b.kind;
  Json params;
  params["d"] = b.params.d;
  params["D"] = b.params.D;
  params["r"] = b.params.r.to_string();
  params["directed"] = b.params.directed;
  params["eps"] = b.params.eps;
  params["seed"] = b.params.seed;
  params["extra"] = b.params.extra;
  j["params"] = std::move(params);
  j["critical_paths"] = paths_to_json(b.critical_paths);
  j["first_layer"] = b.first_layer;
  j["last_layer"] = b.last_layer;
  j["layers"] = b.layers;
  j["edgeless_warning"] = b.edgeless_warning;
  const bool gadget = !inst.S.empty() || !inst.T.empty() || !inst.aux_paths.empty();
  if (gadget) {
    j["S"] = inst.S;
    j["T"] = inst.T;
    j["aux_of"] = vertex_map_to_json(inst.aux_of);
    j["aux_in_paths"] = vertex_map_to_json(inst.aux_in_paths);
    j["aux_out_paths"] = vertex_map_to_json(inst.aux_out_paths);
    j["aux_paths"] = paths_to_json(inst.aux_paths);
    j["copies"] = inst.copies;
    j["aux_mode"] = inst.aux_mode == AuxMode::kStar ? "star" : "path";
    j["adversarial_chains"] = paths_to_json(inst.adversarial_chains);
    j["chain_hop_paths"] = inst.chain_hop_paths;
  }
  return j;
}

GadgetInstance instance_from_json(const Json& j) {
  return reading("instance", [&] {
    GadgetInstance inst;
    Instance& b = inst.base;
    b.graph = graph_from_json(j);
    b.kind = j.value("kind", std::string("graph"));
    if (j.contains("params")) {
      const Json& p = j.at("params");
      b.params.d = p.value("d", 0);
      b.params.D = p.value("D", 0);
      if (p.contains("r")) b.params.r = Radius::parse(p.at("r").get<std::string>());
      b.params.directed = p.value("directed", b.graph.directed());
      b.params.eps = p.value("eps", 0.0);
      b.params.seed = p.value("seed", std::uint64_t{0});
      if (p.contains("extra")) {
        b.params.extra = p.at("extra").get<std::map<std::string, std::string>>();
      }
    }
    if (j.contains("critical_paths")) b.critical_paths = paths_from_json(j.at("critical_paths"));
    b.first_layer = j.value("first_layer", std::vector<Vertex>{});
    b.last_layer = j.value("last_layer", std::vector<Vertex>{});
    b.layers = j.value("layers", std::size_t{0});
    b.edgeless_warning = j.value("edgeless_warning", false);
    if (j.contains("S")) {
      inst.S = j.at("S").get<std::vector<Vertex>>();
      inst.T = j.at("T").get<std::vector<Vertex>>();
      inst.aux_of = vertex_map_from_json<std::vector<Vertex>>(j.at("aux_of"));
      inst.aux_in_paths = vertex_map_from_json<std::vector<PathSeq>>(j.at("aux_in_paths"));
      inst.aux_out_paths = vertex_map_from_json<std::vector<PathSeq>>(j.at("aux_out_paths"));
      inst.aux_paths = paths_from_json(j.at("aux_paths"));
      inst.copies = j.at("copies").get<std::size_t>();
      inst.aux_mode = j.at("aux_mode").get<std::string>() == "path" ? AuxMode::kPath : AuxMode::kStar;
      inst.adversarial_chains = paths_from_json(j.at("adversarial_chains"));
      inst.chain_hop_paths = j.at("chain_hop_paths").get<std::vector<std::vector<std::size_t>>>();
    }
    for (const auto& p : b.critical_paths) {
      for (Vertex v : p) {
        if (v >= b.graph.num_vertices()) throw IoError("critical path vertex out of range");
      }
    }
    return inst;
  });
}

Json shortcut_to_json(const ShortcutSet& h) {
  Json j;
  j["mode"] = h.mode == ShortcutMode::kHopset ? "hopset" : "shortcut";
  Json edges = Json::array();
  for (const auto& e : h.edges) {
    Json row = Json::array({e.u, e.v});
    if (e.weight) row.push_back(weight_to_json(*e.weight));
    edges.push_back(std::move(row));
  }
  j["edges"] = std::move(edges);
  Json certs = Json::object();
  for (const auto& [k, w] : h.certificates) certs[pair_text(k.first, k.second)] = w;
  j["certificates"] = std::move(certs);
  return j;
}

ShortcutSet shortcut_from_json(const Json& j) {
  return reading("shortcut set", [&] {
    ShortcutSet h;
    const auto mode = j.value("mode", std::string("shortcut"));
    if (mode != "shortcut" && mode != "hopset") throw IoError("unknown shortcut mode " + mode);
    h.mode = mode == "hopset" ? ShortcutMode::kHopset : ShortcutMode::kShortcut;
    for (const auto& row : j.at("edges")) {
      if (!row.is_array() || row.size() < 2 || row.size() > 3) throw IoError("bad shortcut row");
      ShortcutEdge e{row[0].get<Vertex>(), row[1].get<Vertex>(), std::nullopt};
      if (row.size() == 3) e.weight = weight_from_json(row[2]);
      h.edges.push_back(e);
    }
    if (j.contains("certificates")) {
      for (const auto& [k, w] : j.at("certificates").items()) {
        h.certificates[parse_pair(k)] = w.get<Vertex>();
      }
    }
    return h;
  });
}

Json order_to_json(const CertificationOrder& order) {
  Json j;
  j["mode"] = order.mode == ShortcutMode::kHopset ? "hopset" : "shortcut";
  Json steps = Json::array();
  for (const auto& s : order.steps) steps.push_back(Json::array({s.u, s.v, s.w}));
  j["steps"] = std::move(steps);
  return j;
}

CertificationOrder order_from_json(const Json& j) {
  return reading("certification order", [&] {
    CertificationOrder o;
    o.mode = j.value("mode", std::string("shortcut")) == "hopset" ? ShortcutMode::kHopset
                                                                    : ShortcutMode::kShortcut;
    for (const auto& row : j.at("steps")) {
      if (!row.is_array() || row.size() != 3) throw IoError("bad step row");
      o.steps.push_back({row[0].get<Vertex>(), row[1].get<Vertex>(), row[2].get<Vertex>()});
    }
    return o;
  });
}

Json flow_to_json(const FlowNetwork& net, bool with_flows) {
  Json j;
  j["nodes"] = net.num_nodes;
  j["big_m"] = net.big_m;
  Json arcs = Json::array();
  Json flows = Json::array();
  for (const auto& a : net.arcs) {
    arcs.push_back(Json::array({a.from, a.to, a.infinite ? -1 : a.cap, a.cost}));
    flows.push_back(a.flow);
  }
  j["arcs"] = std::move(arcs);
  if (with_flows) j["flows"] = std::move(flows);
  return j;
}

FlowNetwork flow_from_json(const Json& j) {
  return reading("flow network", [&] {
    FlowNetwork net;
    net.num_nodes = j.at("nodes").get<std::size_t>();
    if (net.num_nodes < 2) throw IoError("flow network needs s and t");
    net.big_m = j.value("big_m", std::int64_t{0});
    for (const auto& row : j.at("arcs")) {
      if (!row.is_array() || row.size() != 4) throw IoError("bad arc row");
      const auto cap = row[2].get<std::int64_t>();
      if (cap < -1) throw IoError("negative capacity");
      net.add_arc(row[0].get<std::uint32_t>(), row[1].get<std::uint32_t>(), cap,
                  row[3].get<std::int64_t>(), cap == -1);
    }
    if (j.contains("flows")) {
      const auto& f = j.at("flows");
      if (f.size() != net.arcs.size()) throw IoError("flow list length differs from arcs");
      for (std::size_t i = 0; i < net.arcs.size(); ++i) net.arcs[i].flow = f[i].get<std::int64_t>();
    }
    return net;
  });
}

Json result_to_json(const AlgoResult& r, bool timing) {
  Json j;
  j["algo"] = r.algo;
  j["seed"] = r.seed;
  j["params"] = r.params;
  j["shortcut"] = shortcut_to_json(r.shortcut);
  if (r.certified_extension) j["certified_extension"] = shortcut_to_json(*r.certified_extension);
  Json m;
  m["size"] = r.metrics.size;
  m["diameter_before"] = r.metrics.diameter_before ? Json(*r.metrics.diameter_before) : Json();
  m["diameter_after"] = r.metrics.diameter_after ? Json(*r.metrics.diameter_after) : Json();
  m["rounds"] = r.metrics.rounds;
  if (timing && r.metrics.wall_ms) m["wall_ms"] = *r.metrics.wall_ms;
  j["metrics"] = std::move(m);
  if (!r.round_info.empty()) {
    Json rounds = Json::array();
    for (const auto& ri : r.round_info) {
      rounds.push_back({{"diameter_before", ri.diameter_before},
                        {"ell", ri.ell},
                        {"diameter_after", ri.diameter_after},
                        {"decomposition_length", ri.decomposition_length},
                        {"chains", ri.chains},
                        {"positive_cost_flow", ri.positive_cost_flow}});
    }
    j["round_info"] = std::move(rounds);
  }
  return j;
}

AlgoResult result_from_json(const Json& j) {
  return reading("result", [&] {
    AlgoResult r;
    r.algo = j.at("algo").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.params = j.value("params", std::map<std::string, std::string>{});
    r.shortcut = shortcut_from_json(j.at("shortcut"));
    if (j.contains("certified_extension")) {
      r.certified_extension = shortcut_from_json(j.at("certified_extension"));
    }
    const Json& m = j.at("metrics");
    r.metrics.size = m.at("size").get<std::size_t>();
    if (m.contains("diameter_before") && !m.at("diameter_before").is_null()) {
      r.metrics.diameter_before = m.at("diameter_before").get<std::size_t>();
    }
    if (m.contains("diameter_after") && !m.at("diameter_after").is_null()) {
      r.metrics.diameter_after = m.at("diameter_after").get<std::size_t>();
    }
    r.metrics.rounds = m.value("rounds", std::size_t{0});
    if (m.contains("wall_ms")) r.metrics.wall_ms = m.at("wall_ms").get<double>();
    if (j.contains("round_info")) {
      for (const auto& ri : j.at("round_info")) {
        RoundInfo info;
        info.diameter_before = ri.at("diameter_before").get<std::size_t>();
        info.ell = ri.at("ell").get<std::size_t>();
        info.diameter_after = ri.at("diameter_after").get<std::size_t>();
        info.decomposition_length = ri.at("decomposition_length").get<std::size_t>();
        info.chains = ri.at("chains").get<std::size_t>();
        info.positive_cost_flow = ri.value("positive_cost_flow", std::int64_t{0});
        r.round_info.push_back(info);
      }
    }
    return r;
  });
}

std::string graph_fingerprint(const Graph& g) {
  // FNV-1a over the edge list.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(g.directed());
  mix(g.num_vertices());
  for (const auto& e : g.edges()) {
    mix(pair_key(e.src, e.dst));
    mix(static_cast<std::uint64_t>(e.weight.numerator()));
    mix(static_cast<std::uint64_t>(e.weight.denominator()));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(g.directed() ? "d" : "u") + std::to_string(g.num_vertices()) + "-" +
         std::to_string(g.num_edges()) + "-" + buf;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(1) << '\n';
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace certilab
