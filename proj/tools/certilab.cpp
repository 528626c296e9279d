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

// certilab gen | run | verify | report | hull

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "certilab/harness.hpp"
#include "certilab/lattice.hpp"

namespace {

using namespace certilab;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = std::min(s.find(',', start), s.size());
    if (end > start) out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

int fail(int code, const std::exception& e) {
  std::cerr << "certilab: " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified shortcut and hopset experiments"};
  app.require_subcommand(1);

  std::string params_text;
  std::string out_path;

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  std::string family;
  std::uint64_t gen_seed = 0;
  gen->add_option("family", family, "hs | rp | uy | brr | kp | cc | random-dag | layered | path")
      ->required();
  gen->add_option("--params", params_text, "k=v,k=v");
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", out_path, "Instance JSON")->required();

  auto* run = app.add_subcommand("run", "Run an algorithm over seeds");
  std::string instance_path, algo;
  std::vector<std::uint64_t> seeds{0};
  std::size_t jobs = 0;
  bool timing = false;
  run->add_option("instance", instance_path)->required();
  run->add_option("--algo", algo, "uy | kp | brr | fineman | jls | dominating | important")
      ->required();
  run->add_option("--params", params_text, "k=v,k=v");
  run->add_option("--seed", seeds, "Seed list")->delimiter(',');
  run->add_option("--jobs", jobs, "Worker threads (0: all cores)");
  run->add_flag("--timing", timing, "Record wall-clock times");
  run->add_option("--out", out_path, "Results JSON")->required();

  auto* verify = app.add_subcommand("verify", "Check results against their instance");
  std::string results_path, checks_text = "certified,closure,diameter", csv_path;
  verify->add_option("instance", instance_path)->required();
  verify->add_option("results", results_path)->required();
  verify->add_option("--checks", checks_text,
                     "certified,diameter,closure,witness,cover,schedule,complexity");
  verify->add_option("--out", out_path, "Report JSON");
  verify->add_option("--csv", csv_path, "Report CSV (default: stdout)");

  auto* report = app.add_subcommand("report", "Summarise verification reports");
  std::vector<std::string> report_paths;
  report->add_option("reports", report_paths)->required();
  report->add_option("--out", out_path, "Summary CSV (default: stdout)");

  auto* hull = app.add_subcommand("hull", "Print the positive hull vertices V(r)");
  std::string radius = "5";
  hull->add_option("--r", radius, "Radius: integer, p/q or sqrt(x)");

  CLI11_PARSE(app, argc, argv);

  if (*gen) {
    try {
      const auto inst = generate_instance(family, parse_params(params_text), gen_seed);
      write_json_file(out_path, instance_to_json(inst));
      return kExitPass;
    } catch (const std::exception& e) {
      return fail(kExitRunFailed, e);
    }
  }

  if (*run) {
    GadgetInstance inst;
    ParamMap params;
    try {
      inst = instance_from_json(read_json_file(instance_path));
      params = parse_params(params_text);
    } catch (const std::exception& e) {
      return fail(kExitMismatch, e);
    }
    try {
      const RunFile f = run_algorithm(inst, algo, params, seeds, jobs);
      write_json_file(out_path, run_file_to_json(f, timing));
      for (const auto& r : f.runs) {
        if (!r.result) std::cerr << "seed " << r.seed << ": " << r.error_kind << ": " << r.error << '\n';
      }
      return f.all_succeeded() ? kExitPass : kExitRunFailed;
    } catch (const std::exception& e) {
      return fail(kExitRunFailed, e);
    }
  }

  if (*verify) {
    try {
      const auto inst = instance_from_json(read_json_file(instance_path));
      const auto runs = run_file_from_json(read_json_file(results_path));
      const auto rep = verify_runs(inst, runs, split_list(checks_text));
      if (!out_path.empty()) write_json_file(out_path, report_to_json(rep));
      write_text(csv_path, report_csv(rep));
      return rep.passed() ? kExitPass : kExitCheckFailed;
    } catch (const ParameterError& e) {
      return fail(kExitRunFailed, e);
    } catch (const std::exception& e) {
      return fail(kExitMismatch, e);
    }
  }

  if (*report) {
    try {
      std::vector<Report> reps;
      bool all = true;
      for (const auto& p : report_paths) {
        reps.push_back(report_from_json(read_json_file(p)));
        all = all && reps.back().passed();
      }
      write_text(out_path, summary_csv(reps));
      return all ? kExitPass : kExitCheckFailed;
    } catch (const std::exception& e) {
      return fail(kExitMismatch, e);
    }
  }

  if (*hull) {
    try {
      Json pts = Json::array();
      for (const auto& p : hull_positive_vertices(Radius::parse(radius))) {
        pts.push_back(Json::array({p.x, p.y}));
      }
      std::cout << pts.dump() << '\n';
      return kExitPass;
    } catch (const std::exception& e) {
      return fail(kExitRunFailed, e);
    }
  }
  return kExitPass;
}
