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

#include "sdnc/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "sdnc/error.hpp"

namespace sdnc {

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw Error(ErrorKind::kEmptyGraph, "graph must have at least one node");
  if (n > std::numeric_limits<NodeId>::max())
    throw Error(ErrorKind::kSizeLimit, "node count exceeds id range");

  Graph g;
  g.adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error(ErrorKind::kNodeOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") references a node >= " + std::to_string(n));
    if (u == v)
      throw Error(ErrorKind::kSelfLoop, "self-loop at node " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
      throw Error(ErrorKind::kDuplicateEdge,
                  "duplicate edge at node " + std::to_string(v));
  }
  g.m_ = edges.size();

  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (NodeId w : g.adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n)
    throw Error(ErrorKind::kDisconnected,
                "graph is disconnected: " + std::to_string(reached) + " of " +
                    std::to_string(n) + " nodes reachable from node 0");
  return g;
}

bool Graph::adjacent(NodeId u, NodeId v) const noexcept {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (NodeId u = 0; u < n(); ++u)
    for (NodeId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(g.n(), kUnseen);
  std::vector<NodeId> queue;
  queue.reserve(g.n());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

BfsTree bfs_tree(const Graph& g, NodeId root) {
  BfsTree t;
  t.order.reserve(g.n());
  t.parent.assign(g.n(), std::numeric_limits<NodeId>::max());
  t.parent[root] = root;
  t.order.push_back(root);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const NodeId u = t.order[head];
    for (NodeId w : g.neighbors(u)) {
      if (t.parent[w] == std::numeric_limits<NodeId>::max()) {
        t.parent[w] = u;
        t.order.push_back(w);
      }
    }
  }
  return t;
}

DistanceTable::DistanceTable(const Graph& g) : n_(g.n()), dist_(n_ * n_) {
  for (NodeId s = 0; s < n_; ++s) {
    auto d = bfs_distances(g, s);
    std::copy(d.begin(), d.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

std::vector<std::uint8_t> two_coloring(const Graph& g) {
  std::vector<std::uint8_t> color(g.n(), 2);
  color[0] = 0;
  std::vector<NodeId> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId w : g.neighbors(u)) {
      if (color[w] == 2) {
        color[w] = static_cast<std::uint8_t>(1 - color[u]);
        queue.push_back(w);
      } else if (color[w] == color[u]) {
        throw Error(ErrorKind::kNotBipartite,
                    "odd cycle through edge (" + std::to_string(u) + "," +
                        std::to_string(w) + ")");
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) {
  try {
    two_coloring(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace sdnc
