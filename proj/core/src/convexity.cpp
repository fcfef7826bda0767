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

#include "sdnc/convexity.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "sdnc/error.hpp"

namespace sdnc {

bool is_convex_set(const IntervalTable& it, const NodeSet& s) {
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!it(members[i], members[j]).is_subset_of(s)) return false;
  return true;
}

bool is_convex_labeling(const IntervalTable& it, const Labeling& y) {
  for (Label c = 0; c < y.k(); ++c)
    if (!is_convex_set(it, y.cluster(c))) return false;
  return true;
}

NodeSet convex_hull(const IntervalTable& it, const NodeSet& a) {
  NodeSet hull = a;
  // Pairs among `done` were already closed; only pairs touching a newly
  // added node need another look.
  std::vector<NodeId> done;
  std::vector<NodeId> pending = a.members();
  while (!pending.empty()) {
    std::vector<NodeId> fresh;
    NodeSet added(hull.width());
    auto absorb = [&](NodeId x, NodeId y) {
      const NodeSet& seg = it(x, y);
      if (seg.is_subset_of(hull)) return;
      NodeSet extra = seg;
      extra.subtract(hull);
      hull |= extra;
      extra.for_each([&](NodeId z) { fresh.push_back(z); });
    };
    for (std::size_t i = 0; i < pending.size(); ++i) {
      for (NodeId d : done) absorb(pending[i], d);
      for (std::size_t j = i + 1; j < pending.size(); ++j) absorb(pending[i], pending[j]);
    }
    done.insert(done.end(), pending.begin(), pending.end());
    pending = std::move(fresh);
  }
  return hull;
}

NodeSet cut_border(const Graph& g, const Labeling& y) {
  NodeSet border(g.n());
  for (auto [u, v] : g.edges()) {
    if (y[u] != y[v]) {
      border.insert(u);
      border.insert(v);
    }
  }
  return border;
}

std::optional<std::size_t> min_flips_to_convex(const IntervalTable& it,
                                               const Labeling& y,
                                               std::size_t budget) {
  const std::size_t n = y.n();
  if (n > kMinFlipsMaxNodes)
    throw Error(ErrorKind::kSizeLimit,
                "min_flips_to_convex is exhaustive and limited to n <= " +
                    std::to_string(kMinFlipsMaxNodes) + " (got " + std::to_string(n) + ")");
  if (!y.is_binary())
    throw Error(ErrorKind::kInvalidArgument, "min_flips_to_convex needs a binary labeling");

  std::uint32_t base = 0;
  for (NodeId v = 0; v < n; ++v)
    if (y[v] == 1) base |= 1u << v;

  auto convex_mask = [&](std::uint32_t ones) {
    NodeSet s1(n), s0(n);
    for (NodeId v = 0; v < n; ++v) ((ones >> v) & 1u ? s1 : s0).insert(v);
    return is_convex_set(it, s1) && is_convex_set(it, s0);
  };

  const std::uint32_t limit = n == 32 ? 0 : (1u << n);
  for (std::size_t flips = 0; flips <= budget && flips <= n; ++flips) {
    if (flips == 0) {
      if (convex_mask(base)) return 0;
      continue;
    }
    // Gosper's hack over all masks with `flips` bits set.
    std::uint32_t mask = (1u << flips) - 1;
    while (mask < limit) {
      if (convex_mask(base ^ mask)) return flips;
      const std::uint32_t c = mask & (~mask + 1);
      const std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return std::nullopt;
}

}  // namespace sdnc
