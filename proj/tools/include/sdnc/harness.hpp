// Copyright 2026 The sdnc Authors
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

#pragma once

// Experiment harness: configs, trial execution, result files, verification
// and parameter sweeps. The CLI is a thin layer over this header.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "sdnc/graph.hpp"
#include "sdnc/labeling.hpp"
#include "sdnc/protocol.hpp"

namespace sdnc::harness {

using nlohmann::json;

/// Invalid or incompatible configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCsvHeader =
    "seed,n,m,family,learner,source,mistakes,bound,bound_satisfied,rounds,wall_ms";

/// Largest graph for which labelings needing the interval table are built.
inline constexpr std::size_t kMaxIntervalNodes = 1024;

struct ExperimentConfig {
  // graph
  std::string family = "tree";
  std::size_t n = 0;
  std::size_t rows = 0, cols = 0;  // grid
  std::size_t tree_k = 0;          // k_tree
  std::size_t h = 0;               // clique_plus_path
  // labeling, used by the fixed source
  std::string labeling = "convex";  // convex | flipped | homophilic | strips | multiclass_tree
  std::size_t flips = 0;            // declared M
  std::size_t border = 0;           // homophilic target
  std::size_t classes = 2;          // declared k
  // session
  std::string learner = "good4";
  std::string source = "fixed";  // fixed | clique_path | merging_degree | grid_permutation
  std::size_t c = 1;             // merging_degree free nodes
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<std::size_t> w;  // overrides the family's declared value

  std::size_t graph_nodes() const;
};

/// Throws ConfigError on unknown keys, wrong types or bad values.
ExperimentConfig parse_config(const json& j);
json to_json(const ExperimentConfig& c);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Compatibility checks run before any trial.
void validate(const ExperimentConfig& c);

/// The declared excluded-minor order used in bounds.
std::size_t declared_w(const ExperimentConfig& c);

/// What a bound depends on, recomputable from a transcript.
struct BoundInputs {
  std::string learner;
  std::size_t n = 0, w = 0, m_flips = 0, k = 2;
  bool convex = false;
  std::size_t border = 0;
  std::size_t distinct_labels = 0;
  std::size_t hypotheses = 0;
  bool realizable = false;
};

/// Upper bound on the learner's mistakes for these inputs; nullopt when the
/// learner has none or its precondition fails.
std::optional<double> learner_bound(const BoundInputs& in);

/// Every class of `y` convex. Trees and grids use exact structural tests;
/// other graphs use the interval table up to kMaxIntervalNodes and return
/// nullopt above it.
std::optional<bool> partition_convex(const Graph& g, const ExperimentConfig& c, const Labeling& y);

struct TrialRecord {
  std::uint64_t seed = 0;
  std::size_t n = 0, m = 0;
  std::string family, learner, source;
  std::size_t mistakes = 0;
  std::optional<double> bound;
  std::size_t rounds = 0;
  double wall_ms = 0;
  json transcript;  // steps plus the metadata verify needs

  bool satisfied() const { return !bound || static_cast<double>(mistakes) <= *bound; }
  std::string csv_row() const;
};

/// A generated instance: the graph and, for the fixed source, its labeling.
struct GeneratedInstance {
  Graph graph;
  std::optional<Labeling> labeling;
  std::size_t w = 0;
};

/// Instance of trial `index` (seed + index). Deterministic.
GeneratedInstance generate(const ExperimentConfig& c, std::size_t index);

TrialRecord run_trial(const ExperimentConfig& c, std::size_t index, bool timing);

/// Runs all trials on `workers` threads; results in trial order.
std::vector<TrialRecord> run_trials(const ExperimentConfig& c, std::size_t workers, bool timing);

/// results.csv, run.json and transcripts/trial_<i>.json under `dir`.
void write_run(const std::filesystem::path& dir, const ExperimentConfig& c,
               const std::vector<TrialRecord>& records);

/// graph.edges, labeling.txt (fixed source), grid.txt (grids), meta.json.
void write_gen(const std::filesystem::path& dir, const ExperimentConfig& c);

struct VerifyReport {
  std::size_t trials = 0;
  std::size_t violations = 0;  // bound_satisfied false
  std::vector<std::string> problems;  // mismatches and protocol errors
  bool ok() const { return violations == 0 && problems.empty(); }
};

/// Re-checks a run or sweep directory from its files alone.
VerifyReport verify(const std::filesystem::path& dir);

/// Expands the "sweep" object (key -> list of values) over a base config.
/// Cells follow the key order of the object, last key fastest.
std::vector<ExperimentConfig> expand_sweep(const json& j);

struct SweepResult {
  std::vector<ExperimentConfig> cells;
  std::vector<std::vector<TrialRecord>> records;
  bool all_satisfied() const;
};

SweepResult run_sweep(const std::vector<ExperimentConfig>& cells, std::size_t workers, bool timing);

/// results.csv (all rows), summary.csv (one row per cell), sweep.json and
/// cells/cell_<i>/ run directories.
void write_sweep(const std::filesystem::path& dir, const SweepResult& r);

/// Worker count: explicit value, else SDNC_WORKERS, else hardware threads.
std::size_t resolve_workers(std::optional<std::size_t> requested);

}  // namespace sdnc::harness
