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

// sdnc: generate instances, run learners, verify results, sweep parameters.
// Exit codes: 0 ok, 1 bound violation or failed verification, 2 bad config.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sdnc/error.hpp"
#include "sdnc/harness.hpp"

namespace h = sdnc::harness;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kConfigError = 2;

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> workers;
  std::string out;
  bool timing = false;
};

void add_common(CLI::App* app, Common& c, bool with_trials) {
  app->add_option("--config", c.config, "JSON experiment config")->required();
  app->add_option("--seed", c.seed, "Override the config seed");
  app->add_option("--out", c.out, "Output directory")->required();
  if (with_trials) {
    app->add_option("--trials", c.trials, "Override the trial count");
    app->add_option("--workers", c.workers, "Worker threads (default: SDNC_WORKERS or all cores)");
    app->add_flag("--timing", c.timing, "Record wall_ms (output is then not byte-reproducible)");
  }
}

h::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw h::ConfigError("cannot open config " + path);
  try {
    return h::json::parse(in);
  } catch (const h::json::exception& e) {
    throw h::ConfigError("config " + path + ": " + e.what());
  }
}

void apply(h::ExperimentConfig& cfg, const Common& c) {
  if (c.seed) cfg.seed = *c.seed;
  if (c.trials) cfg.trials = *c.trials;
}

int report_records(const std::vector<h::TrialRecord>& rows) {
  std::size_t bad = 0;
  for (const auto& r : rows) bad += !r.satisfied();
  std::printf("%zu trials, %zu bound violations\n", rows.size(), bad);
  return bad ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-directed node classification experiments"};
  app.require_subcommand(1);

  Common gen_opts, run_opts, sweep_opts;
  auto* gen = app.add_subcommand("gen", "Write one generated instance");
  add_common(gen, gen_opts, false);
  auto* run = app.add_subcommand("run", "Run trials and write results");
  add_common(run, run_opts, true);
  auto* sweep = app.add_subcommand("sweep", "Run the cross product of a parameter grid");
  add_common(sweep, sweep_opts, true);
  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Re-check a run or sweep directory");
  verify->add_option("results", verify_path, "Run or sweep output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*gen) {
      auto cfg = h::parse_config(read_json(gen_opts.config));
      apply(cfg, gen_opts);
      h::validate(cfg);
      h::write_gen(gen_opts.out, cfg);
      std::printf("wrote instance to %s\n", gen_opts.out.c_str());
      return kOk;
    }
    if (*run) {
      auto cfg = h::parse_config(read_json(run_opts.config));
      apply(cfg, run_opts);
      h::validate(cfg);
      const auto rows = h::run_trials(cfg, h::resolve_workers(run_opts.workers), run_opts.timing);
      h::write_run(run_opts.out, cfg, rows);
      return report_records(rows);
    }
    if (*sweep) {
      auto cells = h::expand_sweep(read_json(sweep_opts.config));
      for (auto& c : cells) apply(c, sweep_opts);
      const auto r = h::run_sweep(cells, h::resolve_workers(sweep_opts.workers), sweep_opts.timing);
      h::write_sweep(sweep_opts.out, r);
      std::size_t rows = 0;
      for (const auto& rs : r.records) rows += rs.size();
      std::printf("%zu cells, %zu trials, %s\n", r.cells.size(), rows,
                  r.all_satisfied() ? "all bounds satisfied" : "bound violations found");
      return r.all_satisfied() ? kOk : kViolation;
    }
    if (*verify) {
      const auto rep = h::verify(verify_path);
      for (const auto& p : rep.problems) std::fprintf(stderr, "%s\n", p.c_str());
      std::printf("%zu trials checked, %zu bound violations, %zu problems\n", rep.trials,
                  rep.violations, rep.problems.size());
      return rep.ok() ? kOk : kViolation;
    }
  } catch (const h::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigError;
  } catch (const sdnc::Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", std::string(sdnc::to_string(e.kind())).c_str(), e.what());
    return kConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConfigError;
  }
  return kOk;
}
