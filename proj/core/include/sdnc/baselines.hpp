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

#include <string>

#include "sdnc/graph.hpp"
#include "sdnc/protocol.hpp"

namespace sdnc {

/// BFS from node 0. The root gets `root_guess`; every other node is
/// predicted with the observed label of its BFS parent, so a mistake can
/// only happen at the root or at a cut-border node.
Transcript traverse(Session& session, Label root_guess = 0);
Transcript run_traverse(const Graph& g, LabelSource& source, Label root_guess = 0);

class TraverseLearner final : public Learner {
 public:
  std::string name() const override { return "traverse"; }
  void play(Session& session) override { traverse(session); }
};

struct BipartiteResult {
  Transcript transcript;
  /// Set once a cut edge (u, v) has been found; later predictions use the
  /// distance rule.
  bool distance_phase = false;
  NodeId cut_u = 0;
  NodeId cut_v = 0;
};

/// BFS-parent prediction until the first cut edge {u, v} shows up; after
/// that x gets y(u) when d(u, x) < d(v, x) and y(v) otherwise. At most two
/// mistakes on convex bipartitions. Throws kNotBipartite.
BipartiteResult bipartite(Session& session);
BipartiteResult run_bipartite(const Graph& g, LabelSource& source);

class BipartiteLearner final : public Learner {
 public:
  std::string name() const override { return "bipartite"; }
  void play(Session& session) override { last_ = bipartite(session); }
  const BipartiteResult& last() const noexcept { return last_; }

 private:
  BipartiteResult last_;
};

}  // namespace sdnc
