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

#include "sdnc/chordal.hpp"

#include <algorithm>
#include <string>

#include "sdnc/error.hpp"

namespace sdnc {

std::vector<NodeId> maximum_cardinality_search(const Graph& g) {
  const std::size_t n = g.n();
  // Bucket queue keyed by the number of already-visited neighbors.
  std::vector<std::vector<NodeId>> buckets(n + 1);
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  for (NodeId v = n; v-- > 0;) buckets[0].push_back(v);

  std::vector<NodeId> order;
  order.reserve(n);
  std::size_t top = 0;
  while (order.size() < n) {
    while (true) {
      auto& b = buckets[top];
      while (!b.empty() && (visited[b.back()] || weight[b.back()] != top)) b.pop_back();
      if (!b.empty()) break;
      --top;
    }
    const NodeId v = buckets[top].back();
    buckets[top].pop_back();
    visited[v] = true;
    order.push_back(v);
    for (NodeId w : g.neighbors(v)) {
      if (visited[w]) continue;
      ++weight[w];
      buckets[weight[w]].push_back(w);
      top = std::max(top, weight[w]);
    }
  }
  return order;
}

std::size_t clique_number_chordal(const Graph& g) {
  const auto order = maximum_cardinality_search(g);
  const std::size_t n = g.n();
  // In the elimination ordering (reverse visit order) the later neighbors of
  // a node are its neighbors visited earlier by the search.
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

  std::size_t omega = 1;
  for (NodeId v = 0; v < n; ++v) {
    std::vector<NodeId> later;
    for (NodeId w : g.neighbors(v))
      if (rank[w] < rank[v]) later.push_back(w);
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j)
        if (!g.adjacent(later[i], later[j]))
          throw Error(ErrorKind::kNotChordal,
                      "perfect elimination ordering check failed at node " +
                          std::to_string(v));
    omega = std::max(omega, later.size() + 1);
  }
  return omega;
}

}  // namespace sdnc
