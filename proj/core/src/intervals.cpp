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

#include "sdnc/intervals.hpp"

namespace sdnc {

NodeSet interval(const DistanceTable& dt, NodeId u, NodeId v) {
  NodeSet s(dt.n());
  const auto du = dt.row(u);
  const auto dv = dt.row(v);
  const auto d = du[v];
  for (NodeId x = 0; x < dt.n(); ++x)
    if (du[x] + dv[x] == d) s.insert(x);
  return s;
}

IntervalTable::IntervalTable(const DistanceTable& dt) : n_(dt.n()) {
  intervals_.reserve(pair_count(n_));
  for (NodeId u = 0; u < n_; ++u)
    for (NodeId v = u + 1; v < n_; ++v) intervals_.push_back(interval(dt, u, v));
  singletons_.reserve(n_);
  for (NodeId u = 0; u < n_; ++u) singletons_.emplace_back(n_, std::initializer_list<NodeId>{u});
}

}  // namespace sdnc
