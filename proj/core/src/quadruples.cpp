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

#include "sdnc/quadruples.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "sdnc/error.hpp"

namespace sdnc {

Quadruple Quadruple::make(NodeId a, NodeId b, NodeId c, NodeId d) {
  std::array<NodeId, 4> all{a, b, c, d};
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw Error(ErrorKind::kInvalidArgument, "a quadruple needs four distinct nodes");
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (std::pair(c, d) < std::pair(a, b)) {
    std::swap(a, c);
    std::swap(b, d);
  }
  return {a, b, c, d};
}

bool is_good(const IntervalTable& it, NodeId a, NodeId b, NodeId c, NodeId d) {
  const auto q = Quadruple::make(a, b, c, d);
  return it(q.a, q.b).intersects(it(q.c, q.d));
}

QuadrupleStats quadruple_stats(const IntervalTable& it, const NodeSet& u) {
  const auto nodes = u.members();
  const std::size_t m = nodes.size();
  QuadrupleStats s;
  s.q = total_quadruples(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = i + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) {
          if (k == j || l == j) continue;
          // (i,j) is the pair holding the smallest node, so each quadruple
          // is visited exactly once.
          if (it(nodes[i], nodes[j]).intersects(it(nodes[k], nodes[l]))) ++s.q_good;
        }
  return s;
}

std::vector<std::uint64_t> per_node_good_counts(const IntervalTable& it, const NodeSet& u) {
  const auto nodes = u.members();
  const std::size_t m = nodes.size();
  std::vector<std::uint64_t> counts(it.n(), 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = i + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) {
          if (k == j || l == j) continue;
          if (it(nodes[i], nodes[j]).intersects(it(nodes[k], nodes[l]))) {
            ++counts[nodes[i]];
            ++counts[nodes[j]];
            ++counts[nodes[k]];
            ++counts[nodes[l]];
          }
        }
  return counts;
}

std::vector<std::uint64_t> pair_good_counts(const IntervalTable& it, const NodeSet& u,
                                            NodeId a) {
  if (u.contains(a))
    throw Error(ErrorKind::kInvalidArgument, "pair_good_counts: anchor must not be in U");
  const auto nodes = u.members();
  std::vector<std::uint64_t> counts(it.n(), 0);
  for (NodeId bp : nodes) {
    const NodeSet& ab = it(a, bp);
    std::uint64_t c = 0;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (std::size_t l = k + 1; l < nodes.size(); ++l) {
        if (nodes[k] == bp || nodes[l] == bp) continue;
        if (ab.intersects(it(nodes[k], nodes[l]))) ++c;
      }
    counts[bp] = c;
  }
  return counts;
}

std::vector<std::uint64_t> triple_good_counts(const IntervalTable& it, const NodeSet& u,
                                              NodeId a, NodeId b) {
  if (u.contains(a) || u.contains(b) || a == b)
    throw Error(ErrorKind::kInvalidArgument,
                "triple_good_counts: anchors must be distinct and outside U");
  const NodeSet& ab = it(a, b);
  const auto nodes = u.members();
  std::vector<std::uint64_t> counts(it.n(), 0);
  for (NodeId cp : nodes) {
    std::uint64_t c = 0;
    for (NodeId d : nodes)
      if (d != cp && ab.intersects(it(cp, d))) ++c;
    counts[cp] = c;
  }
  return counts;
}

NodeSet partners(const IntervalTable& it, const NodeSet& u, NodeId a, NodeId b, NodeId c) {
  const NodeSet& ab = it(a, b);
  NodeSet out(it.n());
  u.for_each([&](NodeId d) {
    if (d != a && d != b && d != c && ab.intersects(it(c, d))) out.insert(d);
  });
  return out;
}

GoodQuadrupleIndex::GoodQuadrupleIndex(const IntervalTable& it)
    : n_(it.n()), pairs_(pair_count(it.n())), words_per_row_((pairs_ + 63) / 64) {
  if (n_ > kMaxNodes)
    throw Error(ErrorKind::kSizeLimit, "GoodQuadrupleIndex supports n <= " +
                                           std::to_string(kMaxNodes) + " (got " +
                                           std::to_string(n_) + ")");
  // through[x]: pairs whose interval contains x.
  std::vector<std::uint64_t> through(n_ * words_per_row_, 0);
  for (std::size_t p = 0; p < pairs_; ++p)
    it.by_pair_index(p).for_each([&](NodeId x) {
      through[x * words_per_row_ + (p >> 6)] |= std::uint64_t{1} << (p & 63);
    });
  bits_.assign(pairs_ * words_per_row_, 0);
  for (std::size_t p = 0; p < pairs_; ++p) {
    std::uint64_t* dst = bits_.data() + p * words_per_row_;
    it.by_pair_index(p).for_each([&](NodeId x) {
      const std::uint64_t* src = through.data() + x * words_per_row_;
      for (std::size_t w = 0; w < words_per_row_; ++w) dst[w] |= src[w];
    });
  }
  // Every Good4 run starts from the full node set.
  full_counts_ = compute_counts(NodeSet::full(n_), &full_stats_);
}

std::vector<std::uint64_t> GoodQuadrupleIndex::pair_mask(const NodeSet& u) const {
  std::vector<std::uint64_t> mask(words_per_row_, 0);
  const auto nodes = u.members();
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const auto p = pair_index(n_, nodes[i], nodes[j]);
      mask[p >> 6] |= std::uint64_t{1} << (p & 63);
    }
  return mask;
}

std::uint64_t GoodQuadrupleIndex::masked_count(std::size_t p,
                                               const std::vector<std::uint64_t>& mask) const {
  const std::uint64_t* r = row(p);
  std::uint64_t c = 0;
  for (std::size_t w = 0; w < words_per_row_; ++w)
    c += static_cast<std::uint64_t>(std::popcount(r[w] & mask[w]));
  return c;
}

std::vector<std::uint64_t> GoodQuadrupleIndex::per_node_good_counts(
    const NodeSet& u, QuadrupleStats* stats) const {
  if (u.size() == n_) {
    if (stats) *stats = full_stats_;
    return full_counts_;
  }
  return compute_counts(u, stats);
}

std::vector<std::uint64_t> GoodQuadrupleIndex::compute_counts(const NodeSet& u,
                                                              QuadrupleStats* stats) const {
  std::vector<std::uint64_t> counts(n_, 0);
  const auto nodes = u.members();
  const std::size_t m = nodes.size();
  std::uint64_t twice_good = 0;
  if (m >= 4) {
    const auto mask = pair_mask(u);
    // Pairs sharing an endpoint with (a,b), including (a,b) itself, always
    // intersect and are not quadruples.
    const std::uint64_t touching = 2 * m - 3;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const std::uint64_t g = masked_count(pair_index(n_, nodes[i], nodes[j]), mask) - touching;
        counts[nodes[i]] += g;
        counts[nodes[j]] += g;
        twice_good += g;
      }
  }
  if (stats) {
    stats->q = total_quadruples(m);
    stats->q_good = twice_good / 2;
  }
  return counts;
}

QuadrupleStats GoodQuadrupleIndex::stats(const NodeSet& u) const {
  QuadrupleStats s;
  per_node_good_counts(u, &s);
  return s;
}

std::vector<std::uint64_t> GoodQuadrupleIndex::pair_good_counts(const NodeSet& u,
                                                                NodeId a) const {
  if (u.contains(a))
    throw Error(ErrorKind::kInvalidArgument, "pair_good_counts: anchor must not be in U");
  std::vector<std::uint64_t> counts(n_, 0);
  const std::size_t m = u.size();
  if (m < 3) return counts;
  const auto mask = pair_mask(u);
  u.for_each([&](NodeId bp) {
    counts[bp] = masked_count(pair_index(n_, a, bp), mask) - (m - 1);
  });
  return counts;
}

std::vector<std::uint64_t> GoodQuadrupleIndex::triple_good_counts(const NodeSet& u, NodeId a,
                                                                  NodeId b) const {
  if (u.contains(a) || u.contains(b) || a == b)
    throw Error(ErrorKind::kInvalidArgument,
                "triple_good_counts: anchors must be distinct and outside U");
  const std::uint64_t* r = row(pair_index(n_, a, b));
  const auto nodes = u.members();
  std::vector<std::uint64_t> counts(n_, 0);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (test(r, pair_index(n_, nodes[i], nodes[j]))) {
        ++counts[nodes[i]];
        ++counts[nodes[j]];
      }
  return counts;
}

NodeSet GoodQuadrupleIndex::partners(const NodeSet& u, NodeId a, NodeId b, NodeId c) const {
  const std::uint64_t* r = row(pair_index(n_, a, b));
  NodeSet out(n_);
  u.for_each([&](NodeId d) {
    if (d != a && d != b && d != c && test(r, pair_index(n_, c, d))) out.insert(d);
  });
  return out;
}

}  // namespace sdnc
