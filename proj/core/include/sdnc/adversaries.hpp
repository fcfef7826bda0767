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

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "sdnc/graph.hpp"
#include "sdnc/labeling.hpp"
#include "sdnc/protocol.hpp"
#include "sdnc/random.hpp"

namespace sdnc {

/// K_h on nodes 0..h-1 with a path h..n-1 hanging off node 0. Every clique
/// node other than 0 receives the opposite of the prediction; node 0 and
/// the path are always labeled 0. The answers always form a convex
/// bipartition, and every learner pays h-1 mistakes.
class CliquePathAdversary final : public LabelSource {
 public:
  explicit CliquePathAdversary(std::size_t h) : h_(h) {}
  Label answer(NodeId node, Label predicted) override;
  std::string name() const override { return "clique_path"; }
  std::size_t h() const noexcept { return h_; }

 private:
  std::size_t h_;
};

struct CliquePathInstance {
  Graph graph;
  std::unique_ptr<CliquePathAdversary> source;
};

/// Throws kInvalidArgument for h < 2 or n <= h.
CliquePathInstance clique_path_adversary(std::size_t h, std::size_t n);

/// Fixes the first n-c nodes of a BFS from node 0 to label 0 and flips
/// the prediction everywhere else.
class MergingDegreeAdversary final : public LabelSource {
 public:
  MergingDegreeAdversary(const Graph& g, std::size_t c);
  Label answer(NodeId node, Label predicted) override;
  std::string name() const override { return "merging_degree"; }
  std::size_t c() const noexcept { return c_; }
  /// Nodes outside the fixed connected part G0.
  const std::vector<NodeId>& free_nodes() const noexcept { return free_; }

 private:
  std::size_t c_;
  std::vector<std::uint8_t> fixed_;
  std::vector<NodeId> free_;
};

/// Throws kInvalidArgument unless c < n.
std::unique_ptr<MergingDegreeAdversary> merging_degree_adversary(const Graph& g, std::size_t c);

/// Sum over maximal connected single-label clusters C of
/// min(|inner border of C|, |outer border of C|).
std::size_t merging_degree(const Graph& g, const Labeling& y);

/// Fixed source labeling a rows x cols grid (row-major ids) with k column
/// bands under a uniformly random permutation of the labels.
std::unique_ptr<FixedSource> grid_permutation_source(std::size_t rows, std::size_t cols,
                                                     std::size_t k, Rng& rng);

}  // namespace sdnc
