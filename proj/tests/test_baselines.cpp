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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "oracles.hpp"
#include "sdnc/baselines.hpp"
#include "sdnc/convexity.hpp"
#include "sdnc/error.hpp"
#include "sdnc/generators.hpp"
#include "sdnc/gridwalker.hpp"
#include "sdnc/halving.hpp"

namespace sdnc {
namespace {

// ---- traverse

// Mistakes of BFS-parent prediction, computed from the tree directly.
std::size_t traverse_oracle(const Graph& g, const Labeling& y, Label root_guess) {
  const auto tree = bfs_tree(g, 0);
  std::size_t m = y[0] != root_guess;
  for (NodeId v = 1; v < g.n(); ++v) m += y[v] != y[tree.parent[v]];
  return m;
}

TEST(Traverse, MatchesTreeOracleAndBorderBound) {
  Rng rng(1);
  for (int t = 0; t < 40; ++t) {
    const auto g = oracle::random_connected(30, 0.08, rng);
    std::vector<Label> lab(30);
    for (auto& l : lab) l = static_cast<Label>(uniform_below(rng, 3));
    const auto y = Labeling(lab, 3);
    FixedSource src(y);
    const auto tr = run_traverse(g, src);
    EXPECT_EQ(tr.mistakes(), traverse_oracle(g, y, 0));
    EXPECT_LE(tr.mistakes(), cut_border(g, y).size() + 1);
    EXPECT_EQ(cut_border(g, y).size(), oracle::cut_border_size(g, lab));
  }
}

TEST(Traverse, Examples) {
  {
    FixedSource src(Labeling::from_labels({0, 0, 1, 1, 1}));
    EXPECT_EQ(run_traverse(path_graph(5), src).mistakes(), 1u);
  }
  {
    FixedSource src(Labeling::constant(7, 1));
    EXPECT_EQ(run_traverse(cycle_graph(7), src).mistakes(), 1u);
    FixedSource again(Labeling::constant(7, 1));
    EXPECT_EQ(run_traverse(cycle_graph(7), again, 1).mistakes(), 0u);
  }
  {
    // Alternating path: every node is on the border.
    FixedSource src(Labeling::from_labels({0, 1, 0, 1, 0, 1}));
    EXPECT_EQ(run_traverse(path_graph(6), src).mistakes(), 5u);
  }
}

TEST(Traverse, LargeTreeIsLinear) {
  Rng rng(2);
  const auto g = random_tree(10000, rng);
  FixedSource src(Labeling::constant(10000, 0));
  EXPECT_EQ(run_traverse(g, src).mistakes(), 0u);
}

// ---- bipartite

TEST(Bipartite, RejectsOddCycle) {
  FixedSource src(Labeling::constant(5, 0));
  try {
    run_bipartite(cycle_graph(5), src);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotBipartite);
  }
}

void expect_all_convex_within_two(const Graph& g) {
  const auto it = interval_table(DistanceTable(g));
  const auto space = enumerate_convex_bipartitions(it);
  ASSERT_GT(space.size(), 2u);
  for (std::size_t i = 0; i < space.size(); ++i) {
    FixedSource src(space.at(i));
    const auto r = run_bipartite(g, src);
    EXPECT_LE(r.transcript.mistakes(), 2u) << "hypothesis " << i;
    EXPECT_NO_THROW(r.transcript.validate());
  }
}

TEST(Bipartite, EvenCycleArcs) { expect_all_convex_within_two(cycle_graph(6)); }
TEST(Bipartite, GridSplits) { expect_all_convex_within_two(grid_graph(3, 4)); }

TEST(Bipartite, TreesExhaustive) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) expect_all_convex_within_two(random_tree(14, rng));
}

TEST(Bipartite, DistancePhaseAfterFirstMistake) {
  const auto g = path_graph(6);
  FixedSource src(Labeling::from_labels({0, 0, 0, 1, 1, 1}));
  const auto r = run_bipartite(g, src);
  EXPECT_TRUE(r.distance_phase);
  EXPECT_EQ(r.transcript.mistakes(), 1u);
  EXPECT_EQ(r.cut_u, 2u);
  EXPECT_EQ(r.cut_v, 3u);
}

// ---- GridSpec

TEST(GridSpec, RoundTripAndNavigation) {
  const auto s = GridSpec::standard(3, 4);
  std::stringstream io;
  write_grid_spec(io, s);
  const auto back = read_grid_spec(io);
  EXPECT_EQ(back.matrix(), s.matrix());
  EXPECT_EQ(back.top_left(), 0u);
  EXPECT_EQ(s.step(5, GridSpec::kTop), 1u);
  EXPECT_EQ(s.step(5, GridSpec::kRight), 6u);
  EXPECT_EQ(s.step(5, GridSpec::kBottom), 9u);
  EXPECT_EQ(s.step(5, GridSpec::kLeft), 4u);
  EXPECT_EQ(s.step(0, GridSpec::kTop), GridSpec::kNone);
  EXPECT_EQ(s.node_at(2, 3), 11u);
  const auto g = s.to_graph();
  EXPECT_EQ(g.edges(), grid_graph(3, 4).edges());
}

// Same grid with node ids scrambled by `perm`.
GridSpec permuted(std::size_t rows, std::size_t cols, const std::vector<NodeId>& perm) {
  const auto s = GridSpec::standard(rows, cols);
  std::vector<GridSpec::Row> m(s.n());
  for (NodeId v = 0; v < s.n(); ++v)
    for (int side = 0; side < 4; ++side) {
      const auto x = s.matrix()[v][side];
      m[perm[v]][side] = x == 0 ? 0 : perm[x - 1] + 1;
    }
  return GridSpec(rows, cols, m);
}

TEST(GridSpec, AcceptsScrambledIds) {
  std::vector<NodeId> perm(12);
  std::iota(perm.begin(), perm.end(), 0u);
  std::reverse(perm.begin(), perm.end());
  const auto s = permuted(3, 4, perm);
  EXPECT_EQ(s.top_left(), 11u);
  EXPECT_EQ(s.node_at(0, 1), 10u);
  EXPECT_EQ(s.row_of(0), 2u);
  EXPECT_EQ(s.col_of(0), 3u);
}

void expect_kind(const std::string& text, ErrorKind kind) {
  std::stringstream in(text);
  try {
    read_grid_spec(in);
    FAIL() << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << text;
  }
}

TEST(GridSpec, Rejections) {
  expect_kind("", ErrorKind::kParse);
  expect_kind("2 2\n0 2 3 0\n", ErrorKind::kParse);
  expect_kind("1 2\n0 2 0 0\n0 0 0 1\nextra", ErrorKind::kParse);
  expect_kind("1 2\n0 2 0 0\n0 0 0 -1\n", ErrorKind::kParse);
  // Two corners.
  expect_kind("1 2\n0 0 0 0\n0 0 0 0\n", ErrorKind::kNotGrid);
  // Right neighbor does not point back.
  expect_kind("1 2\n0 2 0 0\n0 0 0 0\n", ErrorKind::kNotGrid);
  // Out of range id.
  expect_kind("1 2\n0 9 0 0\n0 0 0 1\n", ErrorKind::kNotGrid);
  // A 2x2 drawn as 1x4.
  expect_kind("1 4\n0 2 3 0\n0 0 4 1\n1 4 0 0\n2 0 0 3\n", ErrorKind::kNotGrid);
  std::stringstream ok("1 2\n0 2 0 0\n0 0 0 1\n");
  EXPECT_NO_THROW(read_grid_spec(ok));
}

// ---- GridWalker

// Random guillotine partition of a rows x cols grid into k rectangles.
Labeling guillotine(std::size_t rows, std::size_t cols, std::size_t k, Rng& rng) {
  struct Rect { std::size_t r0, c0, h, w; };
  std::vector<Rect> rects{{0, 0, rows, cols}};
  while (rects.size() < k) {
    std::vector<std::size_t> splittable;
    for (std::size_t i = 0; i < rects.size(); ++i)
      if (rects[i].h * rects[i].w > 1) splittable.push_back(i);
    if (splittable.empty()) break;
    const auto i = splittable[uniform_below(rng, splittable.size())];
    const Rect r = rects[i];
    const bool horiz = r.h > 1 && (r.w == 1 || uniform_below(rng, 2) == 0);
    if (horiz) {
      const auto cut = 1 + uniform_below(rng, r.h - 1);
      rects[i] = {r.r0, r.c0, cut, r.w};
      rects.push_back({r.r0 + cut, r.c0, r.h - cut, r.w});
    } else {
      const auto cut = 1 + uniform_below(rng, r.w - 1);
      rects[i] = {r.r0, r.c0, r.h, cut};
      rects.push_back({r.r0, r.c0 + cut, r.h, r.w - cut});
    }
  }
  std::vector<Label> perm(rects.size());
  std::iota(perm.begin(), perm.end(), 0u);
  shuffle(std::span<Label>(perm), rng);
  std::vector<Label> lab(rows * cols);
  for (std::size_t i = 0; i < rects.size(); ++i)
    for (std::size_t r = 0; r < rects[i].h; ++r)
      for (std::size_t c = 0; c < rects[i].w; ++c)
        lab[(rects[i].r0 + r) * cols + rects[i].c0 + c] = perm[i];
  return Labeling(lab, static_cast<Label>(std::max<std::size_t>(rects.size(), 2)));
}

TEST(GridWalker, TwoStripsOnThreeByThree) {
  const auto spec = GridSpec::standard(3, 3);
  FixedSource src(Labeling::from_labels({0, 1, 1, 0, 1, 1, 0, 1, 1}));
  const auto r = run_gridwalker(spec, src);
  EXPECT_LE(r.transcript.mistakes(), 6u);
  EXPECT_EQ(r.clusters.size(), 2u);
}

TEST(GridWalker, SingleClass) {
  const auto spec = GridSpec::standard(5, 5);
  for (Label c : {0u, 1u}) {
    FixedSource src(Labeling::constant(25, c));
    const auto r = run_gridwalker(spec, src);
    EXPECT_LE(r.transcript.mistakes(), 3u);
    ASSERT_EQ(r.clusters.size(), 1u);
    EXPECT_EQ(r.clusters[0].height, 5u);
    EXPECT_EQ(r.clusters[0].width, 5u);
  }
}

TEST(GridWalker, FourStripsOnSixBySix) {
  Rng rng(4);
  const auto spec = GridSpec::standard(6, 6);
  for (int t = 0; t < 50; ++t) {
    FixedSource src(gen_strip_partition(6, 6, 4, rng).labeling);
    EXPECT_LE(run_gridwalker(spec, src).transcript.mistakes(), 12u);
  }
}

TEST(GridWalker, ThreeMistakesPerClusterOnRectanglePartitions) {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = 1 + uniform_below(rng, 8), cols = 1 + uniform_below(rng, 8);
    const std::size_t k = 1 + uniform_below(rng, std::min<std::size_t>(rows * cols, 7));
    const auto y = guillotine(rows, cols, k, rng);
    std::vector<NodeId> perm(rows * cols);
    std::iota(perm.begin(), perm.end(), 0u);
    shuffle(std::span<NodeId>(perm), rng);
    const auto spec = permuted(rows, cols, perm);
    std::vector<Label> relabeled(rows * cols);
    for (NodeId v = 0; v < rows * cols; ++v) relabeled[perm[v]] = y[v];
    FixedSource src(Labeling(relabeled, y.k()));
    const auto r = run_gridwalker(spec, src);
    EXPECT_NO_THROW(r.transcript.validate());
    EXPECT_LE(r.transcript.mistakes(), 3 * k);
    EXPECT_EQ(r.clusters.size(), k);
    std::size_t charged = 0, area = 0;
    for (const auto& c : r.clusters) {
      EXPECT_LE(c.mistakes, 3u);
      charged += c.mistakes;
      area += c.height * c.width;
    }
    EXPECT_EQ(charged, r.transcript.mistakes());
    EXPECT_EQ(area, rows * cols);
  }
}

TEST(GridWalker, ConvexPartitionsOfSmallGridsAreRectangles) {
  // Every convex bipartition of a grid splits it into two rectangles.
  const auto g = grid_graph(3, 4);
  const auto it = interval_table(DistanceTable(g));
  const auto space = enumerate_convex_bipartitions(it);
  EXPECT_EQ(space.size(), 2u * (2 + 3) + 2);
  const auto spec = GridSpec::standard(3, 4);
  for (std::size_t i = 0; i < space.size(); ++i) {
    FixedSource src(space.at(i));
    EXPECT_LE(run_gridwalker(spec, src).transcript.mistakes(), 6u);
  }
}

// ---- halving and enumeration

TEST(Enumeration, SmallCounts) {
  const auto count = [](const Graph& g) {
    return enumerate_convex_bipartitions(interval_table(DistanceTable(g))).size();
  };
  EXPECT_EQ(count(path_graph(4)), 8u);
  EXPECT_EQ(count(complete_graph(3)), 8u);
  EXPECT_EQ(count(cycle_graph(4)), 2u + 4u);
}

TEST(Enumeration, MatchesBruteForce) {
  Rng rng(6);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 4 + uniform_below(rng, 7);
    const auto g = oracle::random_connected(n, 0.2, rng);
    const auto iv = oracle::all_intervals_by_paths(g);
    std::size_t brute = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      brute += oracle::convex_set(iv, mask) && oracle::convex_set(iv, ~mask & ((1u << n) - 1));
    const auto space = enumerate_convex_bipartitions(interval_table(DistanceTable(g)));
    EXPECT_EQ(space.size(), brute);
    for (std::size_t i = 0; i < space.size(); ++i) {
      const auto h = space.at(i);
      std::vector<std::uint32_t> y(h.labels().begin(), h.labels().end());
      EXPECT_TRUE(oracle::convex_labeling(iv, y));
    }
  }
}

TEST(Halving, LogBoundWhenRealizable) {
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    const auto inst = gen_graph(Family::kTree, {.n = 14}, rng);
    const auto it = interval_table(DistanceTable(inst.graph));
    FixedSource src(gen_convex_bipartition(inst, it, rng));
    const auto r = run_halving(inst.graph, it, src);
    EXPECT_TRUE(r.realizable);
    EXPECT_EQ(r.halving_failures, 0u);
    EXPECT_LE(r.transcript.mistakes(),
              static_cast<std::size_t>(std::floor(std::log2(double(r.initial_size)))));
  }
}

TEST(Halving, UnrealizableIsReported) {
  const auto g = path_graph(5);
  const auto it = interval_table(DistanceTable(g));
  FixedSource src(Labeling::from_labels({0, 1, 0, 1, 0}));
  const auto r = run_halving(g, it, src);
  EXPECT_FALSE(r.realizable);
  EXPECT_GT(r.initial_size, 0u);
  EXPECT_FALSE(VersionSpace(5, enumerate_convex_bipartitions(it).masks())
                   .contains(Labeling::from_labels({0, 1, 0, 1, 0})));
  EXPECT_NO_THROW(r.transcript.validate());
}

TEST(Halving, RefusesLargeGraphs) {
  const auto g = path_graph(kVersionSpaceMaxNodes + 1);
  const auto it = interval_table(DistanceTable(g));
  EXPECT_THROW(enumerate_convex_bipartitions(it), Error);
}

}  // namespace
}  // namespace sdnc
