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

// Batch driver behind the command-line tool: instance generation, seeded
// algorithm runs and verification reports.

#ifndef CERTILAB_HARNESS_HPP_
#define CERTILAB_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "certilab/algos.hpp"
#include "certilab/error.hpp"
#include "certilab/instances.hpp"
#include "certilab/serialize.hpp"

namespace certilab {

/// Results and instance do not belong together.
class MismatchError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitRunFailed = 2;
inline constexpr int kExitMismatch = 3;

inline constexpr const char* kReportSchema = "certilab-report/1";

using ParamMap = std::map<std::string, std::string>;

/// "k=v,k=v". Throws ParameterError on a malformed entry or repeated key.
ParamMap parse_params(const std::string& text);

/// Families: hs, rp, uy, brr, kp, cc, random-dag, layered, path. Gadget
/// families take `inner=<file>` or the hs keys d, D, r, directed.
GadgetInstance generate_instance(const std::string& family, const ParamMap& params,
                                 std::uint64_t seed);

/// Algorithms: uy, kp, brr, fineman, jls, dominating, important.
AlgoResult run_one(const GadgetInstance& inst, const std::string& algo, const ParamMap& params,
                   std::uint64_t seed);

struct RunRecord {
  std::uint64_t seed = 0;
  std::optional<AlgoResult> result;
  /// Error class and message when the run failed.
  std::string error_kind;
  std::string error;
};

struct RunFile {
  std::string instance_id;
  std::string algo;
  ParamMap params;
  std::vector<RunRecord> runs;

  bool all_succeeded() const;
};

/// One run per seed, fanned out over `jobs` workers (0: hardware threads).
/// Records keep the seed order.
RunFile run_algorithm(const GadgetInstance& inst, const std::string& algo, const ParamMap& params,
                      const std::vector<std::uint64_t>& seeds, std::size_t jobs = 0);

Json run_file_to_json(const RunFile& f, bool timing = false);
RunFile run_file_from_json(const Json& j);

/// certified, diameter, closure, witness, cover, schedule, complexity.
const std::vector<std::string>& known_checks();

enum class CheckStatus { kPass, kFail, kNotApplicable };
const char* to_string(CheckStatus s);

struct CheckResult {
  std::string check;
  CheckStatus status = CheckStatus::kFail;
  std::string detail;
};

struct ReportRow {
  std::uint64_t seed = 0;
  std::size_t size = 0;
  std::optional<std::size_t> diameter_before;
  std::optional<std::size_t> diameter_after;
  std::optional<bool> certified;
  std::optional<std::size_t> witness_lower_bound;
  std::optional<std::size_t> cert_complexity;
  std::optional<double> wall_ms;
  std::vector<CheckResult> checks;
};

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
};

struct Report {
  std::string instance_id;
  std::string algo;
  std::vector<ReportRow> rows;
  std::map<std::string, CheckTally> aggregate;

  bool passed() const;
};

/// Throws MismatchError when `runs` was produced on another graph, and
/// ParameterError on an unknown check name.
Report verify_runs(const GadgetInstance& inst, const RunFile& runs,
                   const std::vector<std::string>& checks);

/// Schema comment line, then one row per (run, check).
std::string report_csv(const Report& r);
Json report_to_json(const Report& r);
Report report_from_json(const Json& j);

/// Per (instance, algo, check) tallies over several reports.
std::string summary_csv(const std::vector<Report>& reports);

}  // namespace certilab

#endif  // CERTILAB_HARNESS_HPP_
