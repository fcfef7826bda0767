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
#include <optional>
#include <vector>

#include "sdnc/intervals.hpp"
#include "sdnc/node_set.hpp"
#include "sdnc/rational.hpp"

namespace sdnc {

/// {(a,b),(c,d)} in canonical form: a < b, c < d, (a,b) < (c,d).
struct Quadruple {
  NodeId a, b, c, d;

  /// Throws kInvalidArgument unless the four nodes are distinct.
  static Quadruple make(NodeId a, NodeId b, NodeId c, NodeId d);
  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

struct QuadrupleStats {
  std::uint64_t q = 0;
  std::uint64_t q_good = 0;

  /// q_good / (8 q); absent when q == 0.
  std::optional<Fraction> epsilon() const {
    if (q == 0) return std::nullopt;
    return Fraction(q_good, 8 * q);
  }
};

/// 3 * C(m, 4): the number of unordered pairs of disjoint unordered pairs.
constexpr std::uint64_t total_quadruples(std::uint64_t m) noexcept {
  if (m < 4) return 0;
  return m * (m - 1) * (m - 2) * (m - 3) / 8;
}

/// I(a,b) and I(c,d) share a node. Throws kInvalidArgument on repeated nodes.
bool is_good(const IntervalTable& it, NodeId a, NodeId b, NodeId c, NodeId d);

// Reference implementations working straight from the interval table. They
// cost O(|U|^4 / 64) and are meant for small sets and cross-checks; the
// Good4 learners use GoodQuadrupleIndex.

QuadrupleStats quadruple_stats(const IntervalTable& it, const NodeSet& u);

/// Per node of U, the number of good quadruples in U containing it (indexed
/// by node id; zero outside U).
std::vector<std::uint64_t> per_node_good_counts(const IntervalTable& it, const NodeSet& u);

/// For b' in U: #pairs (c,d) in U \ {b'} with {(a,b'),(c,d)} good. `a` must
/// not be in U.
std::vector<std::uint64_t> pair_good_counts(const IntervalTable& it, const NodeSet& u,
                                            NodeId a);

/// For c' in U: #d in U \ {c'} with {(a,b),(c',d)} good. a, b not in U.
std::vector<std::uint64_t> triple_good_counts(const IntervalTable& it, const NodeSet& u,
                                              NodeId a, NodeId b);

/// All d in U with {(a,b),(c,d)} good. a, b, c not in U.
NodeSet partners(const IntervalTable& it, const NodeSet& u, NodeId a, NodeId b, NodeId c);

/// Precomputed pair-vs-pair interval intersection matrix. Row p holds, for
/// every pair q, whether I(p) and I(q) intersect. Counting restricted to a
/// node set then reduces to masked popcounts.
class GoodQuadrupleIndex {
 public:
  /// Memory is pair_count(n)^2 / 8 bytes; throws kSizeLimit above kMaxNodes.
  static constexpr std::size_t kMaxNodes = 256;

  explicit GoodQuadrupleIndex(const IntervalTable& it);

  std::size_t n() const noexcept { return n_; }

  bool is_good(NodeId a, NodeId b, NodeId c, NodeId d) const noexcept {
    return test(row(pair_index(n_, a, b)), pair_index(n_, c, d));
  }

  QuadrupleStats stats(const NodeSet& u) const;
  /// Same as the free function; also fills `stats` when non-null.
  std::vector<std::uint64_t> per_node_good_counts(const NodeSet& u,
                                                  QuadrupleStats* stats = nullptr) const;
  std::vector<std::uint64_t> pair_good_counts(const NodeSet& u, NodeId a) const;
  std::vector<std::uint64_t> triple_good_counts(const NodeSet& u, NodeId a, NodeId b) const;
  NodeSet partners(const NodeSet& u, NodeId a, NodeId b, NodeId c) const;

 private:
  const std::uint64_t* row(std::size_t p) const noexcept {
    return bits_.data() + p * words_per_row_;
  }
  static bool test(const std::uint64_t* r, std::size_t q) noexcept {
    return (r[q >> 6] >> (q & 63)) & 1u;
  }
  std::vector<std::uint64_t> pair_mask(const NodeSet& u) const;
  std::uint64_t masked_count(std::size_t p, const std::vector<std::uint64_t>& mask) const;
  std::vector<std::uint64_t> compute_counts(const NodeSet& u, QuadrupleStats* stats) const;

  std::size_t n_;
  std::size_t pairs_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> full_counts_;
  QuadrupleStats full_stats_;
};

}  // namespace sdnc
