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

#include "sdnc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "sdnc/adversaries.hpp"
#include "sdnc/baselines.hpp"
#include "sdnc/convexity.hpp"
#include "sdnc/error.hpp"
#include "sdnc/generators.hpp"
#include "sdnc/good4.hpp"
#include "sdnc/graph_io.hpp"
#include "sdnc/gridwalker.hpp"
#include "sdnc/halving.hpp"

namespace sdnc::harness {

namespace fs = std::filesystem;

namespace {

FamilyParams params_of(const ExperimentConfig& c) {
  return {.n = c.n, .rows = c.rows, .cols = c.cols, .k = c.tree_k, .h = c.h};
}

Rng trial_rng(const ExperimentConfig& c, std::size_t index) {
  return derive_rng(c.seed + index, 0);
}

std::string format_bound(const std::optional<double>& b) {
  if (!b) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", *b);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kParse, "cannot write " + path.string());
  out << text;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Nodes of each class form one connected piece (exact convexity on trees).
bool classes_connected(const Graph& g, const Labeling& y) {
  std::vector<std::uint8_t> seen(g.n(), 0);
  std::vector<std::uint8_t> label_done(y.k(), 0);
  for (NodeId s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    if (label_done[y[s]]) return false;
    label_done[y[s]] = 1;
    std::vector<NodeId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      for (NodeId z : g.neighbors(x))
        if (!seen[z] && y[z] == y[s]) {
          seen[z] = 1;
          stack.push_back(z);
        }
    }
  }
  return true;
}

// Every class fills its bounding box (exact convexity on row-major grids).
bool classes_rectangles(std::size_t rows, std::size_t cols, const Labeling& y) {
  struct Box {
    std::size_t r0 = SIZE_MAX, r1 = 0, c0 = SIZE_MAX, c1 = 0, count = 0;
  };
  std::vector<Box> box(y.k());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      auto& b = box[y[static_cast<NodeId>(r * cols + c)]];
      b.r0 = std::min(b.r0, r);
      b.r1 = std::max(b.r1, r);
      b.c0 = std::min(b.c0, c);
      b.c1 = std::max(b.c1, c);
      ++b.count;
    }
  for (const auto& b : box)
    if (b.count && b.count != (b.r1 - b.r0 + 1) * (b.c1 - b.c0 + 1)) return false;
  return true;
}

Label alphabet(const ExperimentConfig& c, const Transcript& t) {
  Label k = static_cast<Label>(std::max<std::size_t>(c.classes, 2));
  for (const auto& s : t.steps()) k = std::max<Label>(k, std::max(s.observed, s.predicted) + 1);
  return k;
}

BoundInputs bound_inputs(const ExperimentConfig& c, const Graph& g, const Transcript& t) {
  BoundInputs in;
  in.learner = c.learner;
  in.n = g.n();
  in.w = declared_w(c);
  in.m_flips = c.source == "fixed" && c.labeling == "flipped" ? c.flips : 0;
  const Label k = alphabet(c, t);
  const Labeling y = t.observed_labeling(k);
  in.k = std::max<std::size_t>(c.classes, 2);
  in.convex = partition_convex(g, c, y).value_or(false);
  in.border = cut_border(g, y).size();
  std::vector<std::uint8_t> used(k, 0);
  for (Label l : y.labels()) used[l] = 1;
  in.distinct_labels = static_cast<std::size_t>(std::count(used.begin(), used.end(), 1));
  if (c.learner == "halving" && g.n() <= kVersionSpaceMaxNodes) {
    const auto space = enumerate_convex_bipartitions(interval_table(DistanceTable(g)));
    in.hypotheses = space.size();
    in.realizable = y.k() == 2 && space.contains(y);
  }
  return in;
}

json edges_json(const Graph& g) {
  json e = json::array();
  for (auto [u, v] : g.edges()) e.push_back({u, v});
  return e;
}

json steps_json(const Transcript& t) {
  json s = json::array();
  for (const auto& st : t.steps()) s.push_back({st.node, st.predicted, st.observed});
  return s;
}

}  // namespace

std::optional<bool> partition_convex(const Graph& g, const ExperimentConfig& c,
                                     const Labeling& y) {
  if (c.family == "tree" || c.family == "path" || (c.family == "k_tree" && c.tree_k == 1))
    return classes_connected(g, y);
  if (c.family == "grid") return classes_rectangles(c.rows, c.cols, y);
  if (g.n() > kMaxIntervalNodes) return std::nullopt;
  return is_convex_labeling(interval_table(DistanceTable(g)), y);
}

std::optional<double> learner_bound(const BoundInputs& in) {
  const auto b = bounds(in.n, in.w, in.m_flips, in.k);
  if (in.learner == "good4") {
    if (in.convex) return b.binary_bound;
    if (in.m_flips > 0) return b.near_convex_bound;
    return std::nullopt;
  }
  if (in.learner == "multiclass_good4") {
    if (in.convex) return b.multiclass_bound;
    return std::nullopt;
  }
  if (in.learner == "traverse") return static_cast<double>(in.border + 1);
  if (in.learner == "bipartite") {
    if (in.convex && in.distinct_labels <= 2) return 2.0;
    return std::nullopt;
  }
  if (in.learner == "gridwalker") {
    if (in.convex) return 3.0 * static_cast<double>(in.distinct_labels);
    return std::nullopt;
  }
  if (in.learner == "halving") {
    if (in.realizable && in.hypotheses > 0)
      return std::floor(std::log2(static_cast<double>(in.hypotheses)));
    return std::nullopt;
  }
  return std::nullopt;
}

std::string TrialRecord::csv_row() const {
  std::ostringstream s;
  char ms[64];
  std::snprintf(ms, sizeof ms, "%.3f", wall_ms);
  s << seed << ',' << n << ',' << m << ',' << family << ',' << learner << ',' << source << ','
    << mistakes << ',' << format_bound(bound) << ',' << (bound ? (satisfied() ? "true" : "false") : "")
    << ',' << rounds << ',' << ms;
  return s.str();
}

GeneratedInstance generate(const ExperimentConfig& c, std::size_t index) {
  Rng rng = trial_rng(c, index);
  auto inst = gen_graph(parse_family(c.family), params_of(c), rng);
  GeneratedInstance out{inst.graph, std::nullopt, declared_w(c)};
  if (c.source != "fixed") return out;
  if (c.labeling == "convex" || c.labeling == "flipped") {
    const auto it = interval_table(DistanceTable(inst.graph));
    auto y = gen_convex_bipartition(inst, it, rng);
    if (c.labeling == "flipped") y = flip_labels(y, c.flips, rng);
    out.labeling = std::move(y);
  } else if (c.labeling == "homophilic") {
    out.labeling = gen_homophilic(inst.graph, c.border, rng).labeling;
  } else if (c.labeling == "strips") {
    out.labeling = gen_strip_partition(c.rows, c.cols, c.classes, rng).labeling;
  } else if (c.labeling == "multiclass_tree") {
    out.labeling = gen_tree_multiclass(inst.graph, c.classes, rng);
  }
  return out;
}

TrialRecord run_trial(const ExperimentConfig& c, std::size_t index, bool timing) {
  auto gi = generate(c, index);
  // Adaptive and random sources draw from a stream separate from the
  // instance's.
  Rng rng = derive_rng(c.seed + index, 1);
  const Graph& g = gi.graph;
  std::unique_ptr<LabelSource> source;
  if (c.source == "fixed") {
    source = std::make_unique<FixedSource>(*gi.labeling);
  } else if (c.source == "clique_path") {
    source = std::move(clique_path_adversary(c.h, c.n).source);
  } else if (c.source == "merging_degree") {
    source = merging_degree_adversary(g, c.c);
  } else {
    source = grid_permutation_source(c.rows, c.cols, c.classes, rng);
  }

  TrialRecord r;
  r.seed = c.seed + index;
  r.n = g.n();
  r.m = g.m();
  r.family = c.family;
  r.learner = c.learner;
  r.source = c.source;

  const std::size_t k = std::max<std::size_t>(c.classes, 2);
  std::optional<Good4Tables> tables;
  if (c.learner == "good4" || c.learner == "multiclass_good4") tables.emplace(g);
  std::optional<IntervalTable> it;
  if (c.learner == "halving") it.emplace(DistanceTable(g));
  const auto spec = c.family == "grid" ? std::optional(GridSpec::standard(c.rows, c.cols))
                                       : std::nullopt;

  Transcript t;
  const auto start = std::chrono::steady_clock::now();
  if (c.learner == "good4") {
    auto res = run_good4(g, tables->index, *source);
    t = std::move(res.transcript);
    r.rounds = res.rounds.size();
  } else if (c.learner == "multiclass_good4") {
    auto res = run_multiclass_good4(g, tables->index, *source, k);
    t = std::move(res.transcript);
    r.rounds = res.rounds;
  } else if (c.learner == "traverse") {
    t = run_traverse(g, *source);
  } else if (c.learner == "bipartite") {
    t = run_bipartite(g, *source).transcript;
  } else if (c.learner == "gridwalker") {
    auto res = run_gridwalker(*spec, *source);
    t = std::move(res.transcript);
    r.rounds = res.clusters.size();
  } else if (c.learner == "halving") {
    t = run_halving(g, *it, *source).transcript;
  } else {
    ConstantLearner learner;
    t = run_session(g, learner, *source);
  }
  const auto stop = std::chrono::steady_clock::now();
  t.validate();
  if (timing) r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  r.mistakes = t.mistakes();

  const auto in = bound_inputs(c, g, t);
  r.bound = learner_bound(in);
  r.transcript = json{{"trial", index},
                      {"seed", r.seed},
                      {"family", c.family},
                      {"learner", c.learner},
                      {"source", c.source},
                      {"labeling", c.source == "fixed" ? json(c.labeling) : json(nullptr)},
                      {"n", r.n},
                      {"m", r.m},
                      {"w", in.w},
                      {"flips", in.m_flips},
                      {"classes", in.k},
                      {"mistakes", r.mistakes},
                      {"rounds", r.rounds},
                      {"bound", r.bound ? json(*r.bound) : json(nullptr)},
                      {"bound_satisfied", r.satisfied()},
                      {"border", in.border},
                      {"convex", in.convex},
                      {"distinct_labels", in.distinct_labels},
                      {"hypotheses", in.hypotheses},
                      {"realizable", in.realizable},
                      {"edges", edges_json(g)},
                      {"steps", steps_json(t)}};
  return r;
}

std::vector<TrialRecord> run_trials(const ExperimentConfig& c, std::size_t workers, bool timing) {
  std::vector<TrialRecord> out(c.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < c.trials;) {
      try {
        out[i] = run_trial(c, i, timing);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = c.trials;
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, c.trials));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

void write_run(const fs::path& dir, const ExperimentConfig& c,
               const std::vector<TrialRecord>& records) {
  fs::create_directories(dir / "transcripts");
  std::string csv = std::string(kCsvHeader) + "\n";
  for (const auto& r : records) csv += r.csv_row() + "\n";
  write_text(dir / "results.csv", csv);
  for (std::size_t i = 0; i < records.size(); ++i)
    write_text(dir / "transcripts" / ("trial_" + std::to_string(i) + ".json"),
               records[i].transcript.dump() + "\n");
  const json manifest{{"config", to_json(c)}, {"trials", records.size()}};
  write_text(dir / "run.json", manifest.dump(2) + "\n");
}

void write_gen(const fs::path& dir, const ExperimentConfig& c) {
  fs::create_directories(dir);
  const auto gi = generate(c, 0);
  save_edge_list(dir / "graph.edges", gi.graph);
  json meta{{"config", to_json(c)},
            {"seed", c.seed},
            {"family", c.family},
            {"n", gi.graph.n()},
            {"m", gi.graph.m()},
            {"w", gi.w}};
  if (gi.labeling) {
    save_labeling(dir / "labeling.txt", *gi.labeling);
    meta["k"] = gi.labeling->k();
    meta["border"] = cut_border(gi.graph, *gi.labeling).size();
    const auto convex = partition_convex(gi.graph, c, *gi.labeling);
    meta["convex"] = convex ? json(*convex) : json(nullptr);
  }
  if (c.family == "grid") {
    std::ostringstream s;
    write_grid_spec(s, GridSpec::standard(c.rows, c.cols));
    write_text(dir / "grid.txt", s.str());
  }
  write_text(dir / "meta.json", meta.dump(2) + "\n");
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

void verify_run(const fs::path& dir, VerifyReport& rep) {
  const std::string where = dir.string() + ": ";
  if (!fs::exists(dir / "run.json")) {
    // Nothing was run here: an empty report unless stray results exist.
    if (fs::exists(dir / "results.csv") && lines_of(read_text(dir / "results.csv")).size() > 1)
      rep.problems.push_back(where + "results.csv without run.json");
    return;
  }
  const json manifest = json::parse(read_text(dir / "run.json"));
  const auto cfg = parse_config(manifest.at("config"));
  const std::size_t trials = manifest.at("trials").get<std::size_t>();
  const auto lines = lines_of(read_text(dir / "results.csv"));
  if (lines.empty() || lines[0] != kCsvHeader) {
    rep.problems.push_back(where + "bad CSV header");
    return;
  }
  if (lines.size() - 1 != trials)
    rep.problems.push_back(where + "expected " + std::to_string(trials) + " rows, found " +
                           std::to_string(lines.size() - 1));

  for (std::size_t i = 0; i < trials; ++i) {
    const std::string tag = where + "trial " + std::to_string(i) + ": ";
    json tj;
    try {
      tj = json::parse(read_text(dir / "transcripts" / ("trial_" + std::to_string(i) + ".json")));
    } catch (const std::exception& e) {
      rep.problems.push_back(tag + e.what());
      continue;
    }
    ++rep.trials;
    try {
      std::vector<Edge> edges;
      for (const auto& e : tj.at("edges")) edges.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
      const auto n = tj.at("n").get<std::size_t>();
      const Graph g = Graph::build(n, edges);
      Transcript t(n);
      for (const auto& s : tj.at("steps"))
        t.push({s.at(0).get<NodeId>(), s.at(1).get<Label>(), s.at(2).get<Label>()});
      t.validate();

      const auto in = bound_inputs(cfg, g, t);
      TrialRecord r;
      r.seed = tj.at("seed").get<std::uint64_t>();
      r.n = g.n();
      r.m = g.m();
      r.family = cfg.family;
      r.learner = cfg.learner;
      r.source = cfg.source;
      r.mistakes = t.mistakes();
      r.rounds = tj.at("rounds").get<std::size_t>();
      r.bound = learner_bound(in);
      if (r.seed != cfg.seed + i) rep.problems.push_back(tag + "seed does not match the config");
      if (tj.at("mistakes").get<std::size_t>() != r.mistakes)
        rep.problems.push_back(tag + "recorded mistakes differ from the transcript");
      if (tj.at("bound_satisfied").get<bool>() != r.satisfied())
        rep.problems.push_back(tag + "recorded bound_satisfied differs");
      if (!r.satisfied()) ++rep.violations;

      if (i + 1 < lines.size()) {
        auto want = split(r.csv_row(), ',');
        auto got = split(lines[i + 1], ',');
        want.pop_back();  // wall_ms is not reproducible
        if (got.size() != want.size() + 1) {
          rep.problems.push_back(tag + "CSV row has the wrong field count");
        } else {
          got.pop_back();
          if (got != want) rep.problems.push_back(tag + "CSV row differs from the recomputation");
        }
      }
    } catch (const std::exception& e) {
      rep.problems.push_back(tag + e.what());
    }
  }
}

}  // namespace

VerifyReport verify(const fs::path& dir) {
  VerifyReport rep;
  if (!fs::is_directory(dir)) {
    rep.problems.push_back(dir.string() + ": not a directory");
    return rep;
  }
  if (fs::exists(dir / "sweep.json")) {
    const json sj = json::parse(read_text(dir / "sweep.json"));
    const auto cells = sj.at("cells").get<std::size_t>();
    for (std::size_t i = 0; i < cells; ++i)
      verify_run(dir / "cells" / ("cell_" + std::to_string(i)), rep);
    return rep;
  }
  verify_run(dir, rep);
  return rep;
}

std::vector<ExperimentConfig> expand_sweep(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  json base = j;
  json axes = json::object();
  if (base.contains("sweep")) {
    axes = base.at("sweep");
    base.erase("sweep");
  }
  if (!axes.is_object()) throw ConfigError("'sweep' must map field names to lists");
  std::vector<json> cells{base};
  for (const auto& [key, values] : axes.items()) {
    if (key == "sweep") throw ConfigError("'sweep' cannot be swept");
    if (!values.is_array() || values.empty())
      throw ConfigError("sweep field '" + key + "' must be a non-empty list");
    std::vector<json> next;
    for (const auto& cell : cells)
      for (const auto& v : values) {
        json c = cell;
        c[key] = v;
        next.push_back(std::move(c));
      }
    cells = std::move(next);
  }
  std::vector<ExperimentConfig> out;
  for (const auto& c : cells) out.push_back(parse_config(c));
  return out;
}

bool SweepResult::all_satisfied() const {
  for (const auto& rs : records)
    for (const auto& r : rs)
      if (!r.satisfied()) return false;
  return true;
}

SweepResult run_sweep(const std::vector<ExperimentConfig>& cells, std::size_t workers,
                      bool timing) {
  for (const auto& c : cells) validate(c);
  SweepResult r;
  r.cells = cells;
  for (const auto& c : cells) r.records.push_back(run_trials(c, workers, timing));
  return r;
}

void write_sweep(const fs::path& dir, const SweepResult& r) {
  fs::create_directories(dir);
  std::string csv = std::string(kCsvHeader) + "\n";
  std::string summary =
      "family,n,learner,source,trials,mean_mistakes,max_mistakes,bound,all_satisfied,mean_wall_ms\n";
  json configs = json::array();
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    const auto& c = r.cells[i];
    const auto& rows = r.records[i];
    write_run(dir / "cells" / ("cell_" + std::to_string(i)), c, rows);
    configs.push_back(to_json(c));
    double sum = 0, wall = 0;
    std::size_t worst = 0;
    std::optional<double> bound;
    bool ok = true;
    for (const auto& row : rows) {
      csv += row.csv_row() + "\n";
      sum += static_cast<double>(row.mistakes);
      wall += row.wall_ms;
      worst = std::max(worst, row.mistakes);
      if (row.bound) bound = std::max(bound.value_or(0.0), *row.bound);
      ok = ok && row.satisfied();
    }
    const double t = rows.empty() ? 1.0 : static_cast<double>(rows.size());
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%zu,%s,%s,%zu,%.4f,%zu,%s,%s,%.3f\n", c.family.c_str(),
                  c.graph_nodes(), c.learner.c_str(), c.source.c_str(), rows.size(), sum / t,
                  worst, format_bound(bound).c_str(), ok ? "true" : "false", wall / t);
    summary += buf;
  }
  write_text(dir / "results.csv", csv);
  write_text(dir / "summary.csv", summary);
  write_text(dir / "sweep.json",
             json{{"cells", r.cells.size()}, {"configs", configs}}.dump(2) + "\n");
}

std::size_t resolve_workers(std::optional<std::size_t> requested) {
  if (requested && *requested > 0) return *requested;
  if (const char* env = std::getenv("SDNC_WORKERS")) {
    char* end = nullptr;
    const auto v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace sdnc::harness
