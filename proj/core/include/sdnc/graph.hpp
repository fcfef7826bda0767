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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sdnc/node_set.hpp"

namespace sdnc {

using Edge = std::pair<NodeId, NodeId>;

/// Simple, undirected, connected graph on nodes 0..n-1. Immutable once built.
class Graph {
 public:
  /// Validates and builds. Throws Error with kEmptyGraph, kNodeOutOfRange,
  /// kSelfLoop, kDuplicateEdge or kDisconnected.
  static Graph build(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const noexcept { return adjacency_.size(); }
  std::size_t m() const noexcept { return m_; }

  /// Sorted neighbor ids.
  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return adjacency_[v];
  }
  std::size_t degree(NodeId v) const noexcept { return adjacency_[v].size(); }
  bool adjacent(NodeId u, NodeId v) const noexcept;

  /// Edges (u, v) with u < v in ascending order.
  std::vector<Edge> edges() const;

  NodeSet all_nodes() const { return NodeSet::full(n()); }

 private:
  Graph() = default;

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t m_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::build(n, edges);
}

/// Hop distances from one source; unreachable nodes never occur in a Graph.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

/// BFS visiting order from `root` together with each node's BFS parent
/// (parent[root] == root).
struct BfsTree {
  std::vector<NodeId> order;
  std::vector<NodeId> parent;
};
BfsTree bfs_tree(const Graph& g, NodeId root);

/// Dense n x n hop-count matrix.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g);

  std::size_t n() const noexcept { return n_; }
  std::uint32_t operator()(NodeId u, NodeId v) const noexcept {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const std::uint32_t> row(NodeId u) const noexcept {
    return {dist_.data() + static_cast<std::size_t>(u) * n_, n_};
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> dist_;
};

inline DistanceTable all_pairs_distances(const Graph& g) { return DistanceTable(g); }

/// Proper 2-coloring if the graph is bipartite.
std::vector<std::uint8_t> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);

}  // namespace sdnc
