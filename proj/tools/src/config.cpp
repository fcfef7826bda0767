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

#include <fstream>
#include <set>

#include "sdnc/error.hpp"
#include "sdnc/generators.hpp"
#include "sdnc/good4.hpp"
#include "sdnc/halving.hpp"
#include "sdnc/harness.hpp"
#include "sdnc/quadruples.hpp"

namespace sdnc::harness {

namespace {

const std::set<std::string> kLearners{"good4",     "multiclass_good4", "traverse",
                                      "bipartite", "gridwalker",       "halving",
                                      "constant_baseline"};
const std::set<std::string> kSources{"fixed", "clique_path", "merging_degree", "grid_permutation"};
const std::set<std::string> kLabelings{"convex", "flipped", "homophilic", "strips",
                                       "multiclass_tree"};

template <typename T>
T get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

void need(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

bool bipartite_family(const ExperimentConfig& c) {
  const auto f = c.family;
  if (f == "path" || f == "tree" || f == "grid") return true;
  if (f == "cycle") return c.n % 2 == 0;
  if (f == "k_tree") return c.tree_k == 1;
  if (f == "complete") return c.n <= 2;
  if (f == "clique_plus_path") return c.h <= 2;
  return false;
}

}  // namespace

std::size_t ExperimentConfig::graph_nodes() const {
  return family == "grid" ? rows * cols : n;
}

ExperimentConfig parse_config(const json& j) {
  need(j.is_object(), "config must be a JSON object");
  static const std::set<std::string> known{"family", "n",       "rows",    "cols",   "tree_k",
                                           "h",      "labeling", "flips",  "border", "classes",
                                           "learner", "source",  "c",      "trials", "seed",
                                           "w",      "sweep"};
  for (const auto& [k, v] : j.items()) need(known.count(k) > 0, "unknown config field '" + k + "'");
  ExperimentConfig c;
  auto opt = [&](const char* key, auto& dst) {
    if (j.contains(key)) dst = get<std::decay_t<decltype(dst)>>(j, key);
  };
  opt("family", c.family);
  opt("n", c.n);
  opt("rows", c.rows);
  opt("cols", c.cols);
  opt("tree_k", c.tree_k);
  opt("h", c.h);
  opt("labeling", c.labeling);
  opt("flips", c.flips);
  opt("border", c.border);
  opt("classes", c.classes);
  opt("learner", c.learner);
  opt("source", c.source);
  opt("c", c.c);
  opt("trials", c.trials);
  opt("seed", c.seed);
  if (j.contains("w") && !j.at("w").is_null()) c.w = get<std::size_t>(j, "w");
  return c;
}

json to_json(const ExperimentConfig& c) {
  json j{{"family", c.family}, {"n", c.n},           {"rows", c.rows},       {"cols", c.cols},
         {"tree_k", c.tree_k}, {"h", c.h},           {"labeling", c.labeling},
         {"flips", c.flips},   {"border", c.border}, {"classes", c.classes},
         {"learner", c.learner}, {"source", c.source}, {"c", c.c},
         {"trials", c.trials}, {"seed", c.seed}};
  j["w"] = c.w ? json(*c.w) : json(nullptr);
  return j;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  need(static_cast<bool>(in), "cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  return parse_config(j);
}

std::size_t declared_w(const ExperimentConfig& c) {
  if (c.w) return *c.w;
  const auto f = c.family;
  if (f == "path" || f == "tree") return 3;
  if (f == "cycle") return 4;
  if (f == "grid") return 5;
  if (f == "k_tree") return c.tree_k + 2;
  if (f == "clique_plus_path") return c.h + 1;
  if (f == "complete") return c.n + 1;
  throw ConfigError("unknown family '" + f + "'");
}

void validate(const ExperimentConfig& c) {
  try {
    parse_family(c.family);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  need(kLearners.count(c.learner) > 0, "unknown learner '" + c.learner + "'");
  need(kSources.count(c.source) > 0, "unknown source '" + c.source + "'");
  need(kLabelings.count(c.labeling) > 0, "unknown labeling '" + c.labeling + "'");
  const std::size_t n = c.graph_nodes();
  need(n >= 1, "graph must have at least one node");
  need(c.classes >= 1, "classes must be positive");

  // Graph shape, checked by generating once.
  try {
    Rng rng(c.seed);
    gen_graph(parse_family(c.family), {.n = c.n, .rows = c.rows, .cols = c.cols, .k = c.tree_k, .h = c.h},
              rng);
  } catch (const Error& e) {
    throw ConfigError(std::string("graph parameters: ") + e.what());
  }

  // Label alphabet the session will see.
  std::size_t k = 2;
  if (c.source == "fixed") {
    if (c.labeling == "convex" || c.labeling == "flipped") {
      need(n <= kMaxIntervalNodes, "convex labelings need n <= " + std::to_string(kMaxIntervalNodes));
      if (c.labeling == "flipped") need(c.flips <= n, "flips exceed the node count");
    } else if (c.labeling == "strips") {
      need(c.family == "grid", "strips labeling requires the grid family");
      need(c.classes <= c.cols, "strips labeling needs classes <= cols");
      k = std::max<std::size_t>(c.classes, 2);
    } else if (c.labeling == "multiclass_tree") {
      need(c.family == "tree" || c.family == "path", "multiclass_tree requires a tree or path");
      need(c.classes <= n, "multiclass_tree needs classes <= n");
      k = std::max<std::size_t>(c.classes, 2);
    }
  } else if (c.source == "clique_path") {
    need(c.family == "clique_plus_path", "clique_path source requires the clique_plus_path family");
    need(c.h >= 2 && c.n > c.h, "clique_path source needs 2 <= h < n");
  } else if (c.source == "merging_degree") {
    need(c.c < n, "merging_degree source needs c < n");
  } else if (c.source == "grid_permutation") {
    need(c.family == "grid", "grid_permutation source requires the grid family");
    need(c.classes <= c.cols, "grid_permutation needs classes <= cols");
    k = std::max<std::size_t>(c.classes, 2);
  }

  const bool binary = k == 2;
  if (c.learner == "good4") {
    need(binary, "good4 needs binary labels");
    need(n <= GoodQuadrupleIndex::kMaxNodes, "good4 supports n <= 256");
  } else if (c.learner == "multiclass_good4") {
    need(n <= GoodQuadrupleIndex::kMaxNodes, "multiclass_good4 supports n <= 256");
  } else if (c.learner == "bipartite") {
    need(binary, "bipartite needs binary labels");
    need(bipartite_family(c), "bipartite requires a bipartite family");
  } else if (c.learner == "gridwalker") {
    need(c.family == "grid", "gridwalker requires the grid family");
  } else if (c.learner == "halving") {
    need(binary, "halving needs binary labels");
    need(n <= kVersionSpaceMaxNodes, "halving supports n <= " + std::to_string(kVersionSpaceMaxNodes));
  }
  (void)declared_w(c);
}

}  // namespace sdnc::harness
