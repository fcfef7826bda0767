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

#include "sdnc/adversaries.hpp"

#include <algorithm>

#include "sdnc/error.hpp"
#include "sdnc/generators.hpp"

namespace sdnc {

namespace {
Label opposite(Label predicted) { return predicted == 0 ? 1 : 0; }
}  // namespace

Label CliquePathAdversary::answer(NodeId node, Label predicted) {
  if (node != 0 && node < h_) return opposite(predicted);
  return 0;
}

CliquePathInstance clique_path_adversary(std::size_t h, std::size_t n) {
  if (h < 2 || n <= h)
    throw Error(ErrorKind::kInvalidArgument, "clique_path_adversary needs 2 <= h < n");
  return {clique_plus_path_graph(h, n), std::make_unique<CliquePathAdversary>(h)};
}

MergingDegreeAdversary::MergingDegreeAdversary(const Graph& g, std::size_t c)
    : c_(c), fixed_(g.n(), 0) {
  if (c >= g.n())
    throw Error(ErrorKind::kInvalidArgument, "merging_degree_adversary needs c < n");
  const auto order = bfs_tree(g, 0).order;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i < g.n() - c)
      fixed_[order[i]] = 1;
    else
      free_.push_back(order[i]);
  }
  std::sort(free_.begin(), free_.end());
}

Label MergingDegreeAdversary::answer(NodeId node, Label predicted) {
  return fixed_[node] ? 0 : opposite(predicted);
}

std::unique_ptr<MergingDegreeAdversary> merging_degree_adversary(const Graph& g, std::size_t c) {
  return std::make_unique<MergingDegreeAdversary>(g, c);
}

std::size_t merging_degree(const Graph& g, const Labeling& y) {
  const std::size_t n = g.n();
  std::vector<std::uint32_t> cluster(n, UINT32_MAX);
  std::vector<std::uint32_t> stamp(n, UINT32_MAX);
  std::vector<NodeId> stack, members;
  std::size_t total = 0;
  std::uint32_t next = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (cluster[s] != UINT32_MAX) continue;
    const std::uint32_t id = next++;
    members.clear();
    stack.assign(1, s);
    cluster[s] = id;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (NodeId u : g.neighbors(v))
        if (cluster[u] == UINT32_MAX && y[u] == y[v]) {
          cluster[u] = id;
          stack.push_back(u);
        }
    }
    std::size_t inner = 0, outer = 0;
    for (NodeId v : members) {
      bool on_border = false;
      for (NodeId u : g.neighbors(v)) {
        if (y[u] == y[v]) continue;
        on_border = true;
        if (stamp[u] != id) {
          stamp[u] = id;
          ++outer;
        }
      }
      inner += on_border ? 1 : 0;
    }
    total += std::min(inner, outer);
  }
  return total;
}

std::unique_ptr<FixedSource> grid_permutation_source(std::size_t rows, std::size_t cols,
                                                     std::size_t k, Rng& rng) {
  return std::make_unique<FixedSource>(gen_strip_partition(rows, cols, k, rng).labeling,
                                       "grid_permutation");
}

}  // namespace sdnc
