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
#include <vector>

#include "sdnc/graph.hpp"
#include "sdnc/node_set.hpp"

namespace sdnc {

/// Index of the unordered pair {u, v}, u != v, in the row-major upper
/// triangle: (0,1), (0,2), ..., (0,n-1), (1,2), ...
inline std::size_t pair_index(std::size_t n, NodeId u, NodeId v) noexcept {
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
}
inline std::size_t pair_count(std::size_t n) noexcept { return n * (n - 1) / 2; }

/// I(u, v) = {x : d(u,x) + d(x,v) = d(u,v)}.
NodeSet interval(const DistanceTable& dt, NodeId u, NodeId v);

/// Geodesic intervals for every unordered node pair.
class IntervalTable {
 public:
  explicit IntervalTable(const DistanceTable& dt);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return intervals_.size(); }

  /// I(u, v); I(u, u) = {u}.
  const NodeSet& operator()(NodeId u, NodeId v) const noexcept {
    return u == v ? singletons_[u] : intervals_[pair_index(n_, u, v)];
  }
  const NodeSet& by_pair_index(std::size_t p) const noexcept { return intervals_[p]; }

 private:
  std::size_t n_;
  std::vector<NodeSet> intervals_;
  std::vector<NodeSet> singletons_;
};

inline IntervalTable interval_table(const DistanceTable& dt) { return IntervalTable(dt); }

}  // namespace sdnc
