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

#include "sdnc/good4.hpp"

namespace sdnc {

namespace {

struct FdlContext {
  Session& session;
  const GoodQuadrupleIndex& index;
  FdlLog* log;
  const Good4Options& options;
  Rng rng;
};

bool in(const std::vector<Label>& z, Label y) {
  return std::find(z.begin(), z.end(), y) != z.end();
}

std::vector<Label> without(std::vector<Label> z, Label y) {
  std::erase(z, y);
  return z;
}

NodeId argmax(const NodeSet& s, const std::vector<std::uint64_t>& count, FdlContext& ctx) {
  auto members = s.members();
  if (ctx.options.tie_break == TieBreak::kSeededRandom)
    shuffle(std::span<NodeId>(members), ctx.rng);
  NodeId best = members.front();
  for (NodeId v : members)
    if (count[v] > count[best]) best = v;
  return best;
}

NodeId fdl(FdlContext& ctx, const NodeSet& s, const std::vector<Label>& z, std::size_t depth);

NodeId fdl_body(FdlContext& ctx, const NodeSet& s, const std::vector<Label>& z,
                std::size_t depth, FdlCall& rec) {
  Session& session = ctx.session;
  auto reveal = [&](NodeId v, Label predicted) {
    if (!session.known(v)) session.query(v, predicted);
    return session.label(v);
  };

  if (z.size() == 1) {
    NodeId found = kNotFound;
    s.for_each([&](NodeId v) {
      if (found == kNotFound && reveal(v, z.front()) != z.front()) found = v;
    });
    return found;
  }
  if (s.size() < 4) {
    rec.small_set = true;
    return kNotFound;
  }

  QuadrupleStats st;
  const auto counts = ctx.index.per_node_good_counts(s, &st);
  const std::uint64_t size = s.size();
  const NodeId a = argmax(s, counts, ctx);
  const Label ya = reveal(a, z.front());
  if (!in(z, ya)) return a;

  NodeSet rest = s;
  rest.erase(a);
  const auto pair_counts = ctx.index.pair_good_counts(rest, a);
  const std::uint64_t pair_need = ceil_div(st.q_good * (size - 2) * (size - 3), 4 * st.q);
  NodeSet ya_set(s.width());
  rest.for_each([&](NodeId v) {
    if (pair_counts[v] >= pair_need) ya_set.insert(v);
  });
  const NodeId b = fdl(ctx, ya_set, without(z, ya), depth + 1);
  if (b == kNotFound) return kNotFound;
  if (session.label(b) != ya) return b;

  rest.erase(b);
  const auto triple_counts = ctx.index.triple_good_counts(rest, a, b);
  const std::uint64_t triple_need = ceil_div(st.q_good * (size - 3), 8 * st.q);
  NodeSet yab(s.width());
  rest.for_each([&](NodeId v) {
    if (triple_counts[v] >= triple_need) yab.insert(v);
  });
  const NodeId c = fdl(ctx, yab, {ya}, depth + 1);
  if (c == kNotFound) return kNotFound;
  const Label yc = session.label(c);
  if (!in(z, yc)) return c;

  rest.erase(c);
  const NodeSet yabc = ctx.index.partners(rest, a, b, c);
  const NodeId d = fdl(ctx, yabc, without(z, yc), depth + 1);
  if (d == kNotFound) return kNotFound;
  if (session.label(d) == yc) {
    rec.violation_found = true;
    return kNotFound;
  }
  return d;
}

NodeId fdl(FdlContext& ctx, const NodeSet& s, const std::vector<Label>& z, std::size_t depth) {
  FdlCall rec;
  rec.depth = depth;
  rec.set_size = s.size();
  rec.z_size = z.size();
  const std::size_t mistakes_before = ctx.session.mistakes();
  const std::size_t remaining_before = ctx.session.remaining();
  std::size_t slot = 0;
  if (ctx.log) {
    slot = ctx.log->calls.size();
    ctx.log->calls.push_back(rec);
  }
  rec.result = fdl_body(ctx, s, z, depth, rec);
  rec.mistakes = ctx.session.mistakes() - mistakes_before;
  rec.revealed = remaining_before - ctx.session.remaining();
  if (ctx.log) ctx.log->calls[slot] = rec;
  return rec.result;
}

}  // namespace

NodeId find_distinct_label(Session& session, const GoodQuadrupleIndex& index, const NodeSet& s,
                           const std::vector<Label>& z, FdlLog* log,
                           const Good4Options& options) {
  FdlContext ctx{session, index, log, options, Rng(options.tie_seed)};
  auto sorted = z;
  std::sort(sorted.begin(), sorted.end());
  return fdl(ctx, s, sorted, 0);
}

MulticlassResult multiclass_good4(Session& session, const GoodQuadrupleIndex& index,
                                  std::size_t k, const Good4Options& options) {
  const std::size_t n = session.n();
  std::vector<Label> z(k);
  for (std::size_t i = 0; i < k; ++i) z[i] = static_cast<Label>(i);
  MulticlassResult result;
  FdlContext ctx{session, index, &result.log, options, Rng(options.tie_seed)};
  NodeSet u(n);
  for (NodeId v = 0; v < n; ++v)
    if (!session.known(v)) u.insert(v);
  while (!z.empty() && index.stats(u).q_good > 0) {
    fdl(ctx, u, z, 0);
    ++result.rounds;
    for (NodeId v = 0; v < n; ++v)
      if (u.contains(v) && session.known(v)) u.erase(v);
  }
  u.for_each([&](NodeId v) {
    session.query(v, options.default_label);
    ++result.leftover;
  });
  result.transcript = session.transcript();
  return result;
}

MulticlassResult run_multiclass_good4(const Graph& g, const GoodQuadrupleIndex& index,
                                      LabelSource& source, std::size_t k,
                                      const Good4Options& options) {
  Session session(g, source);
  return multiclass_good4(session, index, k, options);
}

}  // namespace sdnc
