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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "certilab/algos.hpp"
#include "certilab/certify.hpp"
#include "certilab/graph.hpp"
#include "certilab/harness.hpp"
#include "certilab/lattice.hpp"
#include "certilab/serialize.hpp"

namespace py = pybind11;
using namespace certilab;

namespace {

using PairList = std::vector<std::pair<Vertex, Vertex>>;

Graph make_graph(std::size_t n, const PairList& edges, bool directed) {
  std::vector<Edge> e;
  e.reserve(edges.size());
  for (auto [u, v] : edges) e.push_back({u, v, Weight(1)});
  return Graph(directed, n, std::move(e));
}

ShortcutSet make_shortcut(const PairList& pairs) {
  ShortcutSet h;
  for (auto [u, v] : pairs) h.edges.push_back({u, v, std::nullopt});
  return h;
}

PairList to_pairs(const ShortcutSet& h) { return h.pairs(); }

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json from_python(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certified shortcut and hopset toolkit";

  py::register_exception<Error>(m, "Error");

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"), py::arg("directed") = true)
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("directed", &Graph::directed)
      .def("has_edge", &Graph::has_edge)
      .def("edges", [](const Graph& g) {
        PairList out;
        for (const auto& e : g.edges()) out.push_back({e.src, e.dst});
        return out;
      });

  m.def(
      "hop_diameter",
      [](const Graph& g, const PairList& extra) {
        std::vector<Edge> e;
        for (auto [u, v] : extra) e.push_back({u, v, Weight(1)});
        return hop_diameter(g, e);
      },
      py::arg("graph"), py::arg("extra") = PairList{});
  m.def("transitive_closure", [](const Graph& g) { return transitive_closure(g).pairs(); });
  m.def("topological_order", &topological_order);
  m.def("is_unique_path", [](const Graph& g, Vertex s, Vertex t) { return is_unique_path(g, s, t).unique; });

  m.def("hull_positive_vertices", [](const std::string& r) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& p : hull_positive_vertices(Radius::parse(r))) out.push_back({p.x, p.y});
    return out;
  });

  m.def("is_certified", [](const Graph& g, const PairList& h) {
    return is_certified(g, make_shortcut(h)).certified;
  });
  m.def("brute_force_cert_complexity", [](const Graph& g, const PairList& h) {
    return brute_force_cert_complexity(g, make_shortcut(h));
  });
  m.def("path_shortcut_diam2", [](const std::vector<Vertex>& p) {
    return to_pairs(path_shortcut_diam2(p).shortcut);
  });
  m.def("fineman", [](const Graph& g, std::uint64_t seed) { return to_pairs(fineman(g, seed).shortcut); },
        py::arg("graph"), py::arg("seed") = 0);
  m.def("jls", [](const Graph& g, double k, std::uint64_t seed) { return to_pairs(jls(g, k, seed).shortcut); },
        py::arg("graph"), py::arg("k") = 2.0, py::arg("seed") = 0);
  m.def("brr_greedy", [](const Graph& g, std::size_t budget) {
    return to_pairs(brr_greedy(g, budget).shortcut);
  });
  m.def(
      "chain_cover",
      [](const Graph& g, std::size_t ell, std::uint64_t seed) { return chain_cover_flow(g, ell, seed).chains; },
      py::arg("graph"), py::arg("ell"), py::arg("seed") = 0);

  m.def(
      "generate",
      [](const std::string& family, const std::string& params, std::uint64_t seed) {
        return to_python(instance_to_json(generate_instance(family, parse_params(params), seed)));
      },
      py::arg("family"), py::arg("params") = "", py::arg("seed") = 0);
  m.def(
      "run",
      [](const py::object& instance, const std::string& algo, const std::string& params,
         const std::vector<std::uint64_t>& seeds) {
        const auto inst = instance_from_json(from_python(instance));
        return to_python(run_file_to_json(run_algorithm(inst, algo, parse_params(params), seeds, 1)));
      },
      py::arg("instance"), py::arg("algo"), py::arg("params") = "",
      py::arg("seeds") = std::vector<std::uint64_t>{0});
  m.def(
      "verify",
      [](const py::object& instance, const py::object& results, const std::vector<std::string>& checks) {
        const auto inst = instance_from_json(from_python(instance));
        const auto runs = run_file_from_json(from_python(results));
        return to_python(report_to_json(verify_runs(inst, runs, checks)));
      },
      py::arg("instance"), py::arg("results"),
      py::arg("checks") = std::vector<std::string>{"certified", "closure", "diameter"});
}
