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

#include "sdnc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sdnc/convexity.hpp"
#include "sdnc/error.hpp"
#include "sdnc/halving.hpp"

namespace sdnc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kInvalidArgument, what);
}

Labeling from_mask(const NodeSet& ones) {
  std::vector<Label> labels(ones.width(), 0);
  ones.for_each([&](NodeId v) { labels[v] = 1; });
  return Labeling(std::move(labels), 2);
}

Labeling checked(const IntervalTable& it, Labeling y) {
  if (!is_convex_labeling(it, y))
    throw Error(ErrorKind::kGeneratorExhausted, "generated labeling failed its convexity check");
  return y;
}

bool coin(Rng& rng) { return uniform_below(rng, 2) == 1; }

// Side of one removed edge: nodes reachable from `root` without crossing it.
NodeSet side_of_cut(const Graph& g, NodeId root, NodeId other) {
  NodeSet seen(g.n());
  std::vector<NodeId> stack{root};
  seen.insert(root);
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : g.neighbors(v)) {
      if ((v == root && u == other) || seen.contains(u)) continue;
      seen.insert(u);
      stack.push_back(u);
    }
  }
  return seen;
}

Labeling hull_grow(const Graph& g, const IntervalTable& it, Rng& rng) {
  constexpr int kAttempts = 2000;
  const std::size_t n = g.n();
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::size_t target = 1 + uniform_below(rng, n - 1);
    NodeSet a(n);
    a.insert(static_cast<NodeId>(uniform_below(rng, n)));
    while (a.size() < target) {
      std::vector<NodeId> frontier;
      a.for_each([&](NodeId v) {
        for (NodeId u : g.neighbors(v))
          if (!a.contains(u)) frontier.push_back(u);
      });
      std::sort(frontier.begin(), frontier.end());
      frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
      NodeSet grown = a;
      grown.insert(frontier[uniform_below(rng, frontier.size())]);
      grown = convex_hull(it, grown);
      if (grown.size() == n) break;
      a = std::move(grown);
    }
    if (is_convex_set(it, a.complement())) return from_mask(a);
  }
  throw Error(ErrorKind::kGeneratorExhausted,
              "no convex bipartition found after " + std::to_string(kAttempts) + " attempts");
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kTree: return "tree";
    case Family::kGrid: return "grid";
    case Family::kKTree: return "k_tree";
    case Family::kCliquePlusPath: return "clique_plus_path";
    case Family::kComplete: return "complete";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kPath, Family::kCycle, Family::kTree, Family::kGrid, Family::kKTree,
                   Family::kCliquePlusPath, Family::kComplete})
    if (to_string(f) == name) return f;
  throw Error(ErrorKind::kParse, "unknown graph family '" + std::string(name) + "'");
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph::build(n, e);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "a cycle needs at least 3 nodes");
  std::vector<Edge> e;
  for (NodeId v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  e.emplace_back(0, static_cast<NodeId>(n - 1));
  return Graph::build(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::build(n, e);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  require(rows >= 1 && cols >= 1, "a grid needs positive dimensions");
  std::vector<Edge> e;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<NodeId>(r * cols + c);
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, static_cast<NodeId>(v + cols));
    }
  return Graph::build(rows * cols, e);
}

Graph clique_plus_path_graph(std::size_t h, std::size_t n) {
  require(h >= 1 && n >= h, "clique_plus_path needs 1 <= h <= n");
  std::vector<Edge> e;
  for (NodeId u = 0; u < h; ++u)
    for (NodeId v = u + 1; v < h; ++v) e.emplace_back(u, v);
  if (n > h) e.emplace_back(0, static_cast<NodeId>(h));
  for (NodeId v = static_cast<NodeId>(h) + 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph::build(n, e);
}

Graph random_tree(std::size_t n, Rng& rng) {
  require(n >= 1, "a tree needs at least one node");
  if (n == 1) return Graph::build(1, {});
  if (n == 2) {
    const Edge e{0, 1};
    return Graph::build(2, std::span<const Edge>(&e, 1));
  }
  std::vector<NodeId> seq(n - 2);
  for (auto& s : seq) s = static_cast<NodeId>(uniform_below(rng, n));
  std::vector<std::size_t> degree(n, 1);
  for (NodeId s : seq) ++degree[s];
  // Linear-time decoding: `leaf` is the smallest current leaf.
  std::vector<Edge> e;
  e.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (NodeId s : seq) {
    e.emplace_back(std::min<NodeId>(static_cast<NodeId>(leaf), s),
                   std::max<NodeId>(static_cast<NodeId>(leaf), s));
    --degree[s];
    --degree[leaf];
    if (degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  // The last edge joins the remaining leaf with node n-1.
  e.emplace_back(std::min<NodeId>(static_cast<NodeId>(leaf), static_cast<NodeId>(n - 1)),
                 std::max<NodeId>(static_cast<NodeId>(leaf), static_cast<NodeId>(n - 1)));
  return Graph::build(n, e);
}

Graph random_k_tree(std::size_t n, std::size_t k, Rng& rng) {
  require(k >= 1 && n >= k + 1, "a k-tree needs k >= 1 and n >= k + 1");
  std::vector<Edge> e;
  for (NodeId u = 0; u <= k; ++u)
    for (NodeId v = u + 1; v <= k; ++v) e.emplace_back(u, v);
  std::vector<std::vector<NodeId>> cliques;
  for (NodeId skip = 0; skip <= k; ++skip) {
    std::vector<NodeId> c;
    for (NodeId v = 0; v <= k; ++v)
      if (v != skip) c.push_back(v);
    cliques.push_back(std::move(c));
  }
  for (NodeId v = static_cast<NodeId>(k) + 1; v < n; ++v) {
    const auto base = cliques[uniform_below(rng, cliques.size())];
    for (NodeId u : base) e.emplace_back(u, v);
    for (std::size_t i = 0; i < base.size(); ++i) {
      auto c = base;
      c[i] = v;
      cliques.push_back(std::move(c));
    }
  }
  return Graph::build(n, e);
}

FamilyInstance gen_graph(Family family, const FamilyParams& p, Rng& rng) {
  switch (family) {
    case Family::kPath:
      require(p.n >= 1, "path needs n >= 1");
      return {path_graph(p.n), family, p, 3};
    case Family::kCycle:
      return {cycle_graph(p.n), family, p, 4};
    case Family::kTree:
      require(p.n >= 1, "tree needs n >= 1");
      return {random_tree(p.n, rng), family, p, 3};
    case Family::kGrid:
      return {grid_graph(p.rows, p.cols), family, p, 5};
    case Family::kKTree:
      return {random_k_tree(p.n, p.k, rng), family, p, p.k + 2};
    case Family::kCliquePlusPath:
      return {clique_plus_path_graph(p.h, p.n), family, p, p.h + 1};
    case Family::kComplete:
      require(p.n >= 1, "complete graph needs n >= 1");
      return {complete_graph(p.n), family, p, p.n + 1};
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown family");
}

Labeling gen_convex_bipartition(const FamilyInstance& inst, const IntervalTable& it, Rng& rng) {
  const Graph& g = inst.graph;
  const std::size_t n = g.n();
  if (n == 1) return Labeling::constant(1, 0);
  const bool invert = coin(rng);
  auto emit = [&](NodeSet ones) {
    if (invert) ones = ones.complement();
    return checked(it, from_mask(ones));
  };
  switch (inst.family) {
    case Family::kTree: {
      const auto edges = g.edges();
      const auto [u, v] = edges[uniform_below(rng, edges.size())];
      return emit(side_of_cut(g, u, v));
    }
    case Family::kPath: {
      const std::size_t len = 1 + uniform_below(rng, n - 1);
      NodeSet ones(n);
      for (NodeId v = 0; v < len; ++v) ones.insert(v);
      return emit(ones);
    }
    case Family::kCycle: {
      std::size_t len = n / 2;
      if (n % 2 == 1 && coin(rng)) len = n / 2 + 1;
      const std::size_t start = uniform_below(rng, n);
      NodeSet ones(n);
      for (std::size_t i = 0; i < len; ++i) ones.insert(static_cast<NodeId>((start + i) % n));
      return emit(ones);
    }
    case Family::kGrid: {
      const std::size_t rows = inst.params.rows, cols = inst.params.cols;
      bool vertical = coin(rng);
      if (cols < 2) vertical = false;
      if (rows < 2) vertical = true;
      const std::size_t extent = vertical ? cols : rows;
      const std::size_t cut = 1 + uniform_below(rng, extent - 1);
      NodeSet ones(n);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          if ((vertical ? c : r) < cut) ones.insert(static_cast<NodeId>(r * cols + c));
      return emit(ones);
    }
    case Family::kComplete: {
      NodeSet ones(n);
      for (NodeId v = 0; v < n; ++v)
        if (coin(rng)) ones.insert(v);
      return checked(it, from_mask(ones));
    }
    default:
      break;
  }
  if (n <= kVersionSpaceMaxNodes) {
    const auto space = enumerate_convex_bipartitions(it);
    return space.at(uniform_below(rng, space.size()));
  }
  auto y = hull_grow(g, it, rng);
  if (invert) y = from_mask(NodeSet(y.cluster(0)));
  return checked(it, y);
}

Labeling flip_labels(const Labeling& y, std::size_t m, Rng& rng) {
  require(y.is_binary(), "flip_labels needs a binary labeling");
  require(m <= y.n(), "cannot flip more nodes than the graph has");
  std::vector<NodeId> order(y.n());
  std::iota(order.begin(), order.end(), NodeId{0});
  // Partial Fisher-Yates: the first m entries are a uniform m-subset.
  for (std::size_t i = 0; i < m; ++i)
    std::swap(order[i], order[i + uniform_below(rng, y.n() - i)]);
  auto labels = y.labels();
  for (std::size_t i = 0; i < m; ++i) labels[order[i]] ^= 1u;
  return Labeling(std::move(labels), 2);
}

HomophilicLabeling gen_homophilic(const Graph& g, std::size_t border_target, Rng& rng) {
  const std::size_t n = g.n();
  if (border_target == 0 || n == 1) return {Labeling::constant(n, 0), 0};
  const auto order = bfs_tree(g, static_cast<NodeId>(uniform_below(rng, n))).order;
  // Move BFS prefixes into cluster 1 one node at a time, tracking for every
  // node how many neighbors carry the other label.
  std::vector<std::uint32_t> diff(n, 0);
  std::vector<std::uint8_t> inside(n, 0);
  std::size_t border = 0;
  auto bump = [&](NodeId x, int delta) {
    const bool was = diff[x] > 0;
    diff[x] = static_cast<std::uint32_t>(static_cast<int>(diff[x]) + delta);
    const bool now = diff[x] > 0;
    if (was != now) border = now ? border + 1 : border - 1;
  };
  std::vector<std::size_t> border_at(n, 0);  // border after the first s nodes
  for (std::size_t s = 1; s < n; ++s) {
    const NodeId v = order[s - 1];
    inside[v] = 1;
    for (NodeId u : g.neighbors(v)) {
      const int delta = inside[u] ? -1 : 1;
      bump(u, delta);
      bump(v, delta);
    }
    border_at[s] = border;
  }
  const std::size_t wanted = 1 + uniform_below(rng, n - 1);
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    const bool fits = border_at[s] <= border_target;
    if (best == 0) {
      best = s;
      continue;
    }
    const bool best_fits = border_at[best] <= border_target;
    if (fits != best_fits) {
      if (fits) best = s;
      continue;
    }
    const auto dist = [&](std::size_t t) { return t > wanted ? t - wanted : wanted - t; };
    if (fits ? dist(s) < dist(best) : border_at[s] < border_at[best]) best = s;
  }
  std::vector<Label> labels(n, 0);
  for (std::size_t i = 0; i < best; ++i) labels[order[i]] = 1;
  Labeling y(std::move(labels), 2);
  return {y, border_at[best]};
}

StripPartition gen_strip_partition(std::size_t rows, std::size_t cols, std::size_t k, Rng& rng) {
  require(rows >= 1 && cols >= 1, "a grid needs positive dimensions");
  require(k >= 1 && k <= cols, "strip partition needs 1 <= k <= cols");
  StripPartition sp;
  sp.rows = rows;
  sp.cols = cols;
  sp.k = k;
  // k-1 distinct cut positions among the cols-1 gaps between columns.
  std::vector<std::size_t> gaps(cols - 1);
  std::iota(gaps.begin(), gaps.end(), std::size_t{1});
  for (std::size_t i = 0; i + 1 < k; ++i)
    std::swap(gaps[i], gaps[i + uniform_below(rng, gaps.size() - i)]);
  std::vector<std::size_t> cuts(gaps.begin(), gaps.begin() + static_cast<std::ptrdiff_t>(k - 1));
  std::sort(cuts.begin(), cuts.end());
  sp.band_of_col.assign(cols, 0);
  for (std::size_t c = 0, band = 0; c < cols; ++c) {
    while (band < cuts.size() && c >= cuts[band]) ++band;
    sp.band_of_col[c] = band;
  }
  sp.permutation.resize(k);
  std::iota(sp.permutation.begin(), sp.permutation.end(), Label{0});
  shuffle(std::span<Label>(sp.permutation), rng);
  std::vector<Label> labels(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      labels[r * cols + c] = sp.permutation[sp.band_of_col[c]];
  sp.labeling = Labeling(std::move(labels), static_cast<Label>(std::max<std::size_t>(k, 2)));
  return sp;
}

Labeling gen_tree_multiclass(const Graph& tree, std::size_t k, Rng& rng) {
  require(tree.m() + 1 == tree.n(), "gen_tree_multiclass needs a tree");
  require(k >= 1 && k <= tree.n(), "gen_tree_multiclass needs 1 <= k <= n");
  auto edges = tree.edges();
  for (std::size_t i = 0; i + 1 < k; ++i)
    std::swap(edges[i], edges[i + uniform_below(rng, edges.size() - i)]);
  std::vector<std::vector<NodeId>> adj(tree.n());
  for (std::size_t i = k - 1; i < edges.size(); ++i) {
    adj[edges[i].first].push_back(edges[i].second);
    adj[edges[i].second].push_back(edges[i].first);
  }
  std::vector<Label> perm(k);
  std::iota(perm.begin(), perm.end(), Label{0});
  shuffle(std::span<Label>(perm), rng);
  std::vector<Label> labels(tree.n(), 0);
  std::vector<std::uint8_t> seen(tree.n(), 0);
  Label next = 0;
  for (NodeId s = 0; s < tree.n(); ++s) {
    if (seen[s]) continue;
    const Label lab = perm[next++];
    std::vector<NodeId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      labels[v] = lab;
      for (NodeId u : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
  }
  return Labeling(std::move(labels), static_cast<Label>(std::max<std::size_t>(k, 2)));
}

}  // namespace sdnc
