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

#include <algorithm>
#include <numeric>

#include "sdnc/good4.hpp"

namespace sdnc {

namespace {

Label other(Label y) { return y == 0 ? 1 : 0; }

std::uint64_t choose2(std::uint64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

// Members of u sorted by decreasing count; equal counts keep id order or a
// seeded shuffle.
std::vector<NodeId> by_decreasing(const NodeSet& u, const std::vector<std::uint64_t>& count,
                                  TieBreak tie, Rng& rng) {
  auto order = u.members();
  if (tie == TieBreak::kSeededRandom) shuffle(std::span<NodeId>(order), rng);
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId x, NodeId y) { return count[x] > count[y]; });
  return order;
}

}  // namespace

bool RoundTrace::large() const noexcept {
  if (epsilon.num() == 0) return false;
  return u_size > ceil_div(epsilon.den(), epsilon.num()) + 3;
}

Good4Tables::Good4Tables(const Graph& g) : dt(g), it(dt), index(it) {}

Good4Result good4(Session& session, const GoodQuadrupleIndex& index,
                  const Good4Options& options) {
  const std::size_t n = session.n();
  Rng rng(options.tie_seed);
  NodeSet u(n);
  for (NodeId v = 0; v < n; ++v)
    if (!session.known(v)) u.insert(v);

  Good4Result result;
  for (;;) {
    RoundTrace t;
    const auto counts = index.per_node_good_counts(u, &t.stats);
    if (t.stats.q_good == 0) break;
    t.index = result.rounds.size();
    t.u_size = u.size();
    t.epsilon = *t.stats.epsilon();
    const std::size_t mistakes_before = session.mistakes();
    auto ask = [&](NodeId v, Label predicted) {
      u.erase(v);
      ++t.revealed;
      return Step{v, predicted, session.query(v, predicted)};
    };

    // Step 1.
    const NodeId a = by_decreasing(u, counts, options.tie_break, rng).front();
    u.erase(a);
    const auto pair_counts = index.pair_good_counts(u, a);
    {
      const std::uint64_t q = t.stats.q, good = t.stats.q_good;
      const std::uint64_t pair_need = ceil_div(good * choose2(t.u_size - 2), 2 * q);
      const std::uint64_t partner_need = ceil_div(good * (t.u_size - 1), 2 * q);
      std::uint64_t partners_found = 0;
      u.for_each([&](NodeId b) { partners_found += pair_counts[b] >= pair_need ? 1 : 0; });
      t.a_is_good = partners_found >= partner_need;
    }
    t.a = ask(a, options.default_label);
    const Label ya = t.a.observed;

    auto finish = [&] {
      t.mistakes = session.mistakes() - mistakes_before;
      result.rounds.push_back(std::move(t));
    };

    // Step 2.
    NodeId b = kNotFound;
    for (NodeId cand : by_decreasing(u, pair_counts, options.tie_break, rng)) {
      t.b_steps.push_back(ask(cand, other(ya)));
      if (t.b_steps.back().mistake()) {
        b = cand;
        break;
      }
    }
    if (b == kNotFound) {
      finish();
      continue;
    }

    // Step 3.
    const auto triple_counts = index.triple_good_counts(u, a, b);
    NodeId c = kNotFound;
    for (NodeId cand : by_decreasing(u, triple_counts, options.tie_break, rng)) {
      t.c_steps.push_back(ask(cand, ya));
      if (t.c_steps.back().mistake()) {
        c = cand;
        break;
      }
    }
    if (c == kNotFound) {
      finish();
      continue;
    }

    // Step 4.
    for (NodeId d : index.partners(u, a, b, c).members()) {
      t.d_steps.push_back(ask(d, ya));
      if (t.d_steps.back().mistake()) {
        t.violation_found = true;
        break;
      }
    }
    finish();
  }

  // Step 5.
  u.for_each([&](NodeId v) {
    session.query(v, options.default_label);
    ++result.leftover;
  });
  result.transcript = session.transcript();
  return result;
}

Good4Result run_good4(const Graph& g, const GoodQuadrupleIndex& index, LabelSource& source,
                      const Good4Options& options) {
  Session session(g, source);
  return good4(session, index, options);
}

Good4Result run_good4_nearconvex(const Graph& g, const GoodQuadrupleIndex& index,
                                 LabelSource& source, const Good4Options& options) {
  return run_good4(g, index, source, options);
}

}  // namespace sdnc
