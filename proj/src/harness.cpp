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

#include "certilab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

namespace certilab {
namespace {

// Typed access to a ParamMap that rejects keys nobody asked for.
class Params {
 public:
  Params(const ParamMap& m, std::string context) : m_(m), context_(std::move(context)) {}

  bool has(const std::string& k) {
    used_.insert(k);
    return m_.count(k) != 0;
  }
  std::string str(const std::string& k, const std::string& def) {
    return has(k) ? m_.at(k) : def;
  }
  double real(const std::string& k, double def) {
    if (!has(k)) return def;
    try {
      std::size_t pos = 0;
      const double v = std::stod(m_.at(k), &pos);
      if (pos != m_.at(k).size()) throw std::invalid_argument(k);
      return v;
    } catch (const std::exception&) {
      throw ParameterError(context_ + ": " + k + " must be a number");
    }
  }
  std::int64_t integer(const std::string& k, std::int64_t def) {
    if (!has(k)) return def;
    try {
      std::size_t pos = 0;
      const auto v = std::stoll(m_.at(k), &pos);
      if (pos != m_.at(k).size()) throw std::invalid_argument(k);
      return v;
    } catch (const std::exception&) {
      throw ParameterError(context_ + ": " + k + " must be an integer");
    }
  }
  std::size_t count(const std::string& k, std::size_t def) {
    const auto v = integer(k, static_cast<std::int64_t>(def));
    if (v < 0) throw ParameterError(context_ + ": " + k + " must be nonnegative");
    return static_cast<std::size_t>(v);
  }
  bool flag(const std::string& k, bool def) {
    if (!has(k)) return def;
    const auto& v = m_.at(k);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ParameterError(context_ + ": " + k + " must be true or false");
  }
  /// Throws on keys that were never queried.
  void finish() const {
    for (const auto& [k, v] : m_) {
      if (!used_.count(k)) throw ParameterError(context_ + ": unknown parameter '" + k + "'");
    }
  }

 private:
  const ParamMap& m_;
  std::string context_;
  std::set<std::string> used_;
};

std::size_t ceil_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

Instance inner_instance(Params& p) {
  if (p.has("inner")) {
    const GadgetInstance gi = instance_from_json(read_json_file(p.str("inner", "")));
    return gi.base;
  }
  const int d = static_cast<int>(p.integer("d", 2));
  const int D = static_cast<int>(p.integer("D", 2));
  const Radius r = Radius::parse(p.str("r", "5"));
  const bool directed = p.flag("directed", true);
  Instance inst = build_hs_instance(d, D, r, directed);
  if (p.has("paths")) {
    const std::size_t keep = std::min(p.count("paths", 0), inst.critical_paths.size());
    std::vector<std::size_t> idx(keep);
    for (std::size_t i = 0; i < keep; ++i) idx[i] = i;
    inst = restrict_critical_paths(inst, idx);
  }
  return inst;
}

GadgetInstance plain(Instance inst) {
  GadgetInstance gi;
  gi.base = std::move(inst);
  return gi;
}

Instance graph_instance(std::string kind, Graph g, std::uint64_t seed, ParamMap extra) {
  Instance inst;
  inst.kind = std::move(kind);
  inst.graph = std::move(g);
  inst.params.directed = inst.graph.directed();
  inst.params.seed = seed;
  inst.params.extra = std::move(extra);
  return inst;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const ResourceError*>(&e)) return "resource";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const StructuralError*>(&e)) return "structural";
  if (dynamic_cast<const ParameterError*>(&e)) return "parameter";
  if (dynamic_cast<const InfeasibleError*>(&e)) return "infeasible";
  if (dynamic_cast<const IntegrityError*>(&e)) return "integrity";
  if (dynamic_cast<const IoError*>(&e)) return "io";
  if (dynamic_cast<const Error*>(&e)) return "error";
  return "internal";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "";
  std::ostringstream os;
  os << *v;
  return os.str();
}

std::string opt_bool(const std::optional<bool>& v) {
  if (!v) return "";
  return *v ? "true" : "false";
}

const ShortcutSet& certified_set(const AlgoResult& r) {
  return r.certified_extension ? *r.certified_extension : r.shortcut;
}

CheckResult run_check(const GadgetInstance& inst, const RunFile& runs, const AlgoResult& r,
                      const std::string& check, ReportRow& row) {
  const Graph& g = inst.base.graph;
  CheckResult out{check, CheckStatus::kFail, ""};
  auto pass_if = [&](bool ok, std::string detail) {
    out.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
    out.detail = std::move(detail);
  };
  try {
    if (check == "certified") {
      const ShortcutSet& set = certified_set(r);
      if (r.certified_extension) {
        const auto ext = r.certified_extension->pairs();
        for (const auto& p : r.shortcut.pairs()) {
          if (!std::binary_search(ext.begin(), ext.end(), p)) {
            pass_if(false, "extension misses shortcut edge");
            row.certified = false;
            return out;
          }
        }
      }
      const auto c = is_certified(g, set);
      row.certified = c.certified;
      pass_if(c.certified, "uncertified=" + std::to_string(c.uncertified.size()));
    } else if (check == "diameter") {
      const bool weighted = r.shortcut.mode == ShortcutMode::kHopset;
      const auto before = hop_diameter(g, {}, weighted);
      const auto edges = r.shortcut.as_edges();
      const auto after = hop_diameter(g, edges, weighted);
      row.diameter_before = before;
      row.diameter_after = after;
      pass_if(after <= before, std::to_string(before) + "->" + std::to_string(after));
    } else if (check == "closure") {
      validate_shortcut_set(g, r.shortcut);
      if (r.certified_extension) validate_shortcut_set(g, *r.certified_extension);
      pass_if(true, "");
    } else if (check == "witness") {
      if (inst.S.empty() || inst.T.empty()) {
        out.status = CheckStatus::kNotApplicable;
        out.detail = "instance is not a gadget";
        return out;
      }
      const auto w = witness_lower_bound(inst, r.shortcut);
      row.witness_lower_bound = w.lower_bound;
      pass_if(true, "covered=" + std::to_string(w.covered) + " raw=" + std::to_string(w.raw));
    } else if (check == "cover") {
      if (!g.directed() || !is_acyclic(g)) {
        out.status = CheckStatus::kNotApplicable;
        out.detail = "graph is not a DAG";
        return out;
      }
      std::size_t ell = ceil_sqrt(std::max<std::size_t>(g.num_vertices(), 1));
      if (runs.params.count("ell")) ell = std::stoul(runs.params.at("ell"));
      ChainCover cover = chain_cover_flow(g, ell, r.seed);
      validate_chain_cover(g, cover);
      const auto un = max_uncovered_on_path(g, cover);
      pass_if(un * ell <= g.num_vertices(),
              "ell=" + std::to_string(ell) + " uncovered=" + std::to_string(un));
    } else if (check == "schedule") {
      const ShortcutSet& set = certified_set(r);
      const auto s = low_depth_schedule(g, set, r.seed);
      const std::size_t bound = 4 * ceil_log2(std::max<std::size_t>(g.num_vertices(), 2)) + 2;
      pass_if(s.layers.size() <= bound && verify_schedule(g, set, s),
              "layers=" + std::to_string(s.layers.size()) + " bound=" + std::to_string(bound));
    } else if (check == "complexity") {
      const BruteForceLimits limits;
      if (g.num_vertices() > limits.max_vertices) {
        out.status = CheckStatus::kNotApplicable;
        out.detail = "n exceeds the brute-force cap";
        return out;
      }
      const auto k = brute_force_cert_complexity(g, r.shortcut, limits);
      row.cert_complexity = k;
      bool ok = k >= r.shortcut.size();
      if (is_certified(g, certified_set(r)).certified) ok = ok && k <= certified_set(r).size();
      pass_if(ok, "complexity=" + std::to_string(k));
    } else {
      throw ParameterError("unknown check '" + check + "'");
    }
  } catch (const std::exception& e) {
    pass_if(false, std::string(error_kind(e)) + ": " + e.what());
  }
  return out;
}

}  // namespace

ParamMap parse_params(const std::string& text) {
  ParamMap out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, end - start);
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ParameterError("parameter '" + item + "' is not of the form key=value");
      }
      const auto key = item.substr(0, eq);
      if (!out.emplace(key, item.substr(eq + 1)).second) {
        throw ParameterError("parameter '" + key + "' given twice");
      }
    }
    start = end + 1;
  }
  return out;
}

GadgetInstance generate_instance(const std::string& family, const ParamMap& params,
                                 std::uint64_t seed) {
  Params p(params, family);
  GadgetInstance out;
  if (family == "hs") {
    const int d = static_cast<int>(p.integer("d", 1));
    const int D = static_cast<int>(p.integer("D", 2));
    const Radius r = Radius::parse(p.str("r", "5"));
    const bool directed = p.flag("directed", true);
    out = plain(build_hs_instance(d, D, r, directed));
  } else if (family == "rp") {
    RpParams rp;
    rp.eps = p.real("eps", 0.0);
    rp.size_budget = p.count("budget", rp.size_budget);
    rp.seed = seed;
    rp.inner_d = static_cast<int>(p.integer("inner_d", rp.inner_d));
    rp.inner_D = static_cast<int>(p.integer("inner_D", rp.inner_D));
    if (p.has("inner_r")) rp.inner_r = Radius::parse(p.str("inner_r", ""));
    if (p.has("outer_r")) rp.outer_r = Radius::parse(p.str("outer_r", ""));
    out = plain(build_rp_graph(rp));
  } else if (family == "uy" || family == "brr") {
    const Instance inner = inner_instance(p);
    out = build_uy_gadget(inner, family == "uy" ? AuxMode::kStar : AuxMode::kPath);
  } else if (family == "kp") {
    const Instance inner = inner_instance(p);
    out = build_kp_gadget(inner, p.count("copies", 2));
  } else if (family == "cc") {
    const std::size_t copies = p.count("copies", 2);
    GadgetInstance star;
    if (p.has("inner")) {
      star = instance_from_json(read_json_file(p.str("inner", "")));
    } else {
      star = build_uy_gadget(inner_instance(p), AuxMode::kStar);
    }
    out = build_cc_gadget(star, copies);
  } else if (family == "random-dag") {
    const auto n = p.count("n", 50);
    const auto m = p.count("m", 2 * n);
    out = plain(graph_instance("random-dag", random_dag(n, m, seed), seed,
                               {{"n", std::to_string(n)}, {"m", std::to_string(m)}}));
  } else if (family == "layered") {
    const auto n = p.count("n", 256);
    const auto layers = p.count("layers", std::max<std::size_t>(1, n / 4));
    const auto deg = p.count("outdeg", 2);
    out = plain(graph_instance(
        "layered", random_layered_dag(n, layers, deg, seed), seed,
        {{"n", std::to_string(n)}, {"layers", std::to_string(layers)}, {"outdeg", std::to_string(deg)}}));
  } else if (family == "path") {
    const auto n = p.count("n", 16);
    out = plain(graph_instance("path", directed_path(n), seed, {{"n", std::to_string(n)}}));
  } else {
    throw ParameterError("unknown family '" + family + "'");
  }
  p.finish();
  return out;
}

AlgoResult run_one(const GadgetInstance& inst, const std::string& algo, const ParamMap& params,
                   std::uint64_t seed) {
  const Graph& g = inst.base.graph;
  Params p(params, algo);
  AlgoResult r;
  if (algo == "uy") {
    const double prob = p.real("p", 0.1);
    const auto mode = p.str("mode", "shortcut");
    if (mode != "shortcut" && mode != "hopset") throw ParameterError("uy: unknown mode " + mode);
    const auto min_hops = p.count("min_hops", 0);
    p.finish();
    r = uy_sample(g, prob, mode == "hopset" ? ShortcutMode::kHopset : ShortcutMode::kShortcut,
                  seed, min_hops);
  } else if (algo == "kp") {
    const double pv = p.real("p_v", 0.1);
    const double pp = p.real("p_path", 0.1);
    const auto mode = p.str("mode", "mixed");
    if (mode != "mixed" && mode != "paths_only") throw ParameterError("kp: unknown mode " + mode);
    const auto source = p.str("chains", inst.aux_paths.empty() ? "flow" : "aux");
    const auto ell = p.count("ell", ceil_sqrt(std::max<std::size_t>(g.num_vertices(), 1)));
    p.finish();
    ChainCover cover;
    if (source == "aux") {
      cover.chains = inst.aux_paths;
      cover.ell = cover.chains.size();
    } else if (source == "flow") {
      cover = chain_cover_flow(g, ell, seed);
    } else {
      throw ParameterError("kp: chains must be aux or flow");
    }
    r = kp_sample(g, cover, pv, pp, mode == "mixed" ? KpMode::kMixed : KpMode::kPathsOnly, seed);
    r.params["chains"] = source;
  } else if (algo == "brr") {
    const auto budget = p.count("budget", 10);
    BrrLimits limits;
    limits.max_vertices = p.count("cap", limits.max_vertices);
    p.finish();
    r = brr_greedy(g, budget, limits);
  } else if (algo == "fineman") {
    p.finish();
    r = fineman(g, seed);
  } else if (algo == "jls") {
    const double k = p.real("k", 2.0);
    p.finish();
    r = jls(g, k, seed);
  } else if (algo == "dominating") {
    PipelineOptions o;
    o.c = p.real("c", o.c);
    o.c_prime = p.real("c_prime", o.c_prime);
    o.max_rounds = p.count("max_rounds", 0);
    p.finish();
    r = diam_dominating_pipeline(g, seed, o);
  } else if (algo == "important") {
    const auto ell = p.count("ell", ceil_sqrt(std::max<std::size_t>(g.num_vertices(), 1)));
    p.finish();
    if (ell < 1) throw ParameterError("important: ell must be positive");
    FlowNetwork net = build_chain_gadget(g, GadgetVariant::kCover, static_cast<std::int64_t>(ell));
    min_cost_flow(net, static_cast<std::int64_t>(ell));
    const auto ex = treap_chain_extract(g, net, PriorityMode::kIncreasingIndex, seed);
    auto ic = important_chain_extension(g, ex);
    r.algo = "important";
    r.shortcut = std::move(ic.shortcut);
    r.certified_extension = r.shortcut;
    r.metrics.size = r.shortcut.size();
    r.metrics.rounds = 1;
    r.params["ell"] = std::to_string(ell);
  } else {
    throw ParameterError("unknown algorithm '" + algo + "'");
  }
  r.seed = seed;
  for (const auto& [k, v] : params) r.params.emplace(k, v);
  return r;
}

bool RunFile::all_succeeded() const {
  return std::all_of(runs.begin(), runs.end(), [](const RunRecord& r) { return r.result.has_value(); });
}

RunFile run_algorithm(const GadgetInstance& inst, const std::string& algo, const ParamMap& params,
                      const std::vector<std::uint64_t>& seeds, std::size_t jobs) {
  {
    std::set<std::uint64_t> distinct(seeds.begin(), seeds.end());
    if (distinct.size() != seeds.size()) throw ParameterError("seeds must be distinct");
  }
  RunFile out;
  out.instance_id = graph_fingerprint(inst.base.graph);
  out.algo = algo;
  out.params = params;
  out.runs.resize(seeds.size());
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(seeds.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      RunRecord& rec = out.runs[i];
      rec.seed = seeds[i];
      try {
        rec.result = run_one(inst, algo, params, seeds[i]);
      } catch (const std::exception& e) {
        rec.error_kind = error_kind(e);
        rec.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

Json run_file_to_json(const RunFile& f, bool timing) {
  Json j;
  j["instance"] = f.instance_id;
  j["algo"] = f.algo;
  j["params"] = f.params;
  Json runs = Json::array();
  for (const auto& rec : f.runs) {
    Json r;
    r["seed"] = rec.seed;
    if (rec.result) {
      r["result"] = result_to_json(*rec.result, timing);
    } else {
      r["error"] = {{"kind", rec.error_kind}, {"message", rec.error}};
    }
    runs.push_back(std::move(r));
  }
  j["runs"] = std::move(runs);
  return j;
}

RunFile run_file_from_json(const Json& j) {
  try {
    RunFile f;
    f.instance_id = j.at("instance").get<std::string>();
    f.algo = j.at("algo").get<std::string>();
    f.params = j.value("params", ParamMap{});
    for (const auto& r : j.at("runs")) {
      RunRecord rec;
      rec.seed = r.at("seed").get<std::uint64_t>();
      if (r.contains("result")) {
        rec.result = result_from_json(r.at("result"));
      } else {
        rec.error_kind = r.at("error").at("kind").get<std::string>();
        rec.error = r.at("error").at("message").get<std::string>();
      }
      f.runs.push_back(std::move(rec));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed results file: ") + e.what());
  }
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> checks = {"certified", "diameter", "closure", "witness",
                                                  "cover",     "schedule", "complexity"};
  return checks;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kNotApplicable:
      return "n/a";
  }
  return "fail";
}

bool Report::passed() const {
  return std::all_of(aggregate.begin(), aggregate.end(),
                     [](const auto& kv) { return kv.second.fail == 0; });
}

Report verify_runs(const GadgetInstance& inst, const RunFile& runs,
                   const std::vector<std::string>& checks) {
  for (const auto& c : checks) {
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
      throw ParameterError("unknown check '" + c + "'");
    }
  }
  {
    std::set<std::string> distinct(checks.begin(), checks.end());
    if (distinct.size() != checks.size()) throw ParameterError("a check is listed twice");
  }
  const std::string id = graph_fingerprint(inst.base.graph);
  if (runs.instance_id != id) {
    throw MismatchError("results belong to instance " + runs.instance_id + ", not " + id);
  }
  Report rep;
  rep.instance_id = id;
  rep.algo = runs.algo;
  for (const auto& c : checks) rep.aggregate[c];
  for (const auto& rec : runs.runs) {
    ReportRow row;
    row.seed = rec.seed;
    for (const auto& c : checks) {
      CheckResult res;
      if (!rec.result) {
        res = {c, CheckStatus::kFail, "run failed: " + rec.error_kind + ": " + rec.error};
      } else {
        for (const auto& e : rec.result->shortcut.edges) {
          if (e.u >= inst.base.graph.num_vertices() || e.v >= inst.base.graph.num_vertices()) {
            throw MismatchError("result edge outside the instance");
          }
        }
        res = run_check(inst, runs, *rec.result, c, row);
      }
      auto& tally = rep.aggregate[c];
      if (res.status == CheckStatus::kPass) ++tally.pass;
      if (res.status == CheckStatus::kFail) ++tally.fail;
      if (res.status == CheckStatus::kNotApplicable) ++tally.not_applicable;
      row.checks.push_back(std::move(res));
    }
    if (rec.result) {
      row.size = rec.result->shortcut.size();
      row.wall_ms = rec.result->metrics.wall_ms;
      if (!row.diameter_before) row.diameter_before = rec.result->metrics.diameter_before;
      if (!row.diameter_after) row.diameter_after = rec.result->metrics.diameter_after;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string report_csv(const Report& r) {
  std::ostringstream os;
  os << "# " << kReportSchema << '\n';
  os << "instance,algo,seed,size,diameter_before,diameter_after,certified,witness_lower_bound,"
        "cert_complexity,wall_ms,check,status,detail\n";
  for (const auto& row : r.rows) {
    for (const auto& c : row.checks) {
      os << csv_field(r.instance_id) << ',' << csv_field(r.algo) << ',' << row.seed << ','
         << row.size << ',' << opt_text(row.diameter_before) << ',' << opt_text(row.diameter_after)
         << ',' << opt_bool(row.certified) << ',' << opt_text(row.witness_lower_bound) << ','
         << opt_text(row.cert_complexity) << ',' << opt_text(row.wall_ms) << ','
         << csv_field(c.check) << ',' << to_string(c.status) << ',' << csv_field(c.detail) << '\n';
    }
  }
  return os.str();
}

Json report_to_json(const Report& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["instance"] = r.instance_id;
  j["algo"] = r.algo;
  Json rows = Json::array();
  auto opt = [](const auto& v) { return v ? Json(*v) : Json(); };
  for (const auto& row : r.rows) {
    Json jr;
    jr["seed"] = row.seed;
    jr["size"] = row.size;
    jr["diameter_before"] = opt(row.diameter_before);
    jr["diameter_after"] = opt(row.diameter_after);
    jr["certified"] = opt(row.certified);
    jr["witness_lower_bound"] = opt(row.witness_lower_bound);
    jr["cert_complexity"] = opt(row.cert_complexity);
    if (row.wall_ms) jr["wall_ms"] = *row.wall_ms;
    Json checks = Json::array();
    for (const auto& c : row.checks) {
      checks.push_back({{"check", c.check}, {"status", to_string(c.status)}, {"detail", c.detail}});
    }
    jr["checks"] = std::move(checks);
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  Json agg = Json::object();
  for (const auto& [c, t] : r.aggregate) {
    agg[c] = {{"pass", t.pass}, {"fail", t.fail}, {"n/a", t.not_applicable}};
  }
  j["aggregate"] = std::move(agg);
  j["passed"] = r.passed();
  return j;
}

Report report_from_json(const Json& j) {
  try {
    if (j.at("schema").get<std::string>() != kReportSchema) {
      throw IoError("unsupported report schema " + j.at("schema").get<std::string>());
    }
    Report r;
    r.instance_id = j.at("instance").get<std::string>();
    r.algo = j.at("algo").get<std::string>();
    auto opt_size = [](const Json& v) -> std::optional<std::size_t> {
      if (v.is_null()) return std::nullopt;
      return v.get<std::size_t>();
    };
    for (const auto& jr : j.at("rows")) {
      ReportRow row;
      row.seed = jr.at("seed").get<std::uint64_t>();
      row.size = jr.at("size").get<std::size_t>();
      row.diameter_before = opt_size(jr.at("diameter_before"));
      row.diameter_after = opt_size(jr.at("diameter_after"));
      if (!jr.at("certified").is_null()) row.certified = jr.at("certified").get<bool>();
      row.witness_lower_bound = opt_size(jr.at("witness_lower_bound"));
      row.cert_complexity = opt_size(jr.at("cert_complexity"));
      if (jr.contains("wall_ms")) row.wall_ms = jr.at("wall_ms").get<double>();
      for (const auto& c : jr.at("checks")) {
        CheckResult res;
        res.check = c.at("check").get<std::string>();
        const auto s = c.at("status").get<std::string>();
        res.status = s == "pass"  ? CheckStatus::kPass
                     : s == "n/a" ? CheckStatus::kNotApplicable
                                  : CheckStatus::kFail;
        res.detail = c.at("detail").get<std::string>();
        auto& t = r.aggregate[res.check];
        if (res.status == CheckStatus::kPass) ++t.pass;
        if (res.status == CheckStatus::kFail) ++t.fail;
        if (res.status == CheckStatus::kNotApplicable) ++t.not_applicable;
        row.checks.push_back(std::move(res));
      }
      r.rows.push_back(std::move(row));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed report: ") + e.what());
  }
}

std::string summary_csv(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << "# " << kReportSchema << '\n';
  os << "instance,algo,check,runs,pass,fail,n/a\n";
  for (const auto& r : reports) {
    for (const auto& [c, t] : r.aggregate) {
      os << csv_field(r.instance_id) << ',' << csv_field(r.algo) << ',' << csv_field(c) << ','
         << (t.pass + t.fail + t.not_applicable) << ',' << t.pass << ',' << t.fail << ','
         << t.not_applicable << '\n';
    }
  }
  return os.str();
}

}  // namespace certilab
