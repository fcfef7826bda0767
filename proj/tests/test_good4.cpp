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

#include <cmath>

#include "sdnc/convexity.hpp"
#include "sdnc/generators.hpp"
#include "sdnc/good4.hpp"

namespace sdnc {
namespace {

std::uint64_t need(const RoundTrace& r) {
  return ceil_div(r.epsilon.num() * r.u_size, r.epsilon.den());
}

// Checks the per-round accounting on a convex input.
void expect_convex_ledger(const Good4Result& res, const std::string& ctx) {
  for (const auto& r : res.rounds) {
    for (const auto& d : r.d_steps) EXPECT_FALSE(d.mistake()) << ctx;
    EXPECT_FALSE(r.violation_found) << ctx;
    if (!r.large()) continue;
    EXPECT_LE(r.mistakes, 3u) << ctx << " round " << r.index;
    EXPECT_GE(r.revealed, need(r)) << ctx << " round " << r.index;
    EXPECT_TRUE(r.a_is_good) << ctx << " round " << r.index;
  }
}

struct Case {
  FamilyInstance inst;
  Good4Tables tables;
};

std::vector<std::unique_ptr<Case>> small_cases(Rng& rng) {
  std::vector<std::unique_ptr<Case>> out;
  auto add = [&](FamilyInstance inst) {
    auto c = std::make_unique<Case>(Case{inst, Good4Tables(inst.graph)});
    out.push_back(std::move(c));
  };
  for (std::size_t n : {5u, 12u, 30u, 60u}) add(gen_graph(Family::kTree, {.n = n}, rng));
  add(gen_graph(Family::kGrid, {.rows = 4, .cols = 5}, rng));
  add(gen_graph(Family::kGrid, {.rows = 7, .cols = 7}, rng));
  add(gen_graph(Family::kKTree, {.n = 25, .k = 3}, rng));
  add(gen_graph(Family::kCycle, {.n = 11}, rng));
  add(gen_graph(Family::kPath, {.n = 9}, rng));
  return out;
}

TEST(Good4, PathFourSplit) {
  const auto g = path_graph(4);
  const Good4Tables tb(g);
  FixedSource src(Labeling::from_labels({0, 0, 1, 1}));
  const auto r = run_good4(g, tb.index, src);
  EXPECT_LE(r.transcript.mistakes(), 3u);
  EXPECT_NO_THROW(r.transcript.validate());
}

TEST(Good4, TreeBoundInstantiated) {
  Rng rng(1);
  const auto inst = gen_graph(Family::kTree, {.n = 80}, rng);
  const Good4Tables tb(inst.graph);
  for (int t = 0; t < 20; ++t) {
    FixedSource src(gen_convex_bipartition(inst, tb.it, rng));
    const auto r = run_good4(inst.graph, tb.index, src);
    EXPECT_LE(static_cast<double>(r.transcript.mistakes()), 3 * 81 * std::log(80.0));
  }
}

TEST(Good4, ConstantLabelingFailsStepTwoImmediately) {
  Rng rng(2);
  const auto g = random_tree(40, rng);
  const Good4Tables tb(g);
  for (Label c : {0u, 1u}) {
    FixedSource src(Labeling::constant(40, c));
    const auto r = run_good4(g, tb.index, src);
    for (const auto& round : r.rounds) {
      ASSERT_FALSE(round.b_steps.empty());
      EXPECT_TRUE(round.b_steps.front().mistake());
      EXPECT_EQ(round.b_steps.size(), 1u);
      for (const auto& d : round.d_steps) EXPECT_FALSE(d.mistake());
    }
    EXPECT_LE(static_cast<double>(r.transcript.mistakes()), bounds(40, 3, 0, 2).binary_bound);
  }
}

TEST(Good4, PerRoundLedgerOnConvexInputs) {
  Rng rng(3);
  for (auto& c : small_cases(rng)) {
    for (int t = 0; t < 15; ++t) {
      const auto y = gen_convex_bipartition(c->inst, c->tables.it, rng);
      FixedSource src(y);
      const auto r = run_good4(c->inst.graph, c->tables.index, src);
      expect_convex_ledger(r, std::string(to_string(c->inst.family)));
      EXPECT_LE(static_cast<double>(r.transcript.mistakes()),
                bounds(c->inst.graph.n(), c->inst.w, 0, 2).binary_bound);
    }
  }
}

TEST(Good4, RandomTieBreakKeepsTheLedger) {
  Rng rng(4);
  for (auto& c : small_cases(rng)) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      FixedSource src(gen_convex_bipartition(c->inst, c->tables.it, rng));
      Good4Options opt;
      opt.tie_break = TieBreak::kSeededRandom;
      opt.tie_seed = seed;
      expect_convex_ledger(run_good4(c->inst.graph, c->tables.index, src, opt), "random ties");
    }
  }
}

TEST(Good4, NearConvexLedgerAndBound) {
  Rng rng(5);
  for (auto& c : small_cases(rng)) {
    for (std::size_t m : {1u, 2u, 4u}) {
      if (m > c->inst.graph.n()) continue;
      const auto y = flip_labels(gen_convex_bipartition(c->inst, c->tables.it, rng), m, rng);
      FixedSource src(y);
      const auto r = run_good4_nearconvex(c->inst.graph, c->tables.index, src);
      for (const auto& round : r.rounds) {
        if (!round.large()) continue;
        if (round.violation_found)
          EXPECT_LE(round.mistakes, 4u);
        else {
          EXPECT_LE(round.mistakes, 3u);
          EXPECT_GE(round.revealed, need(round));
        }
      }
      EXPECT_LE(static_cast<double>(r.transcript.mistakes()),
                bounds(c->inst.graph.n(), c->inst.w, m, 2).near_convex_bound);
    }
  }
}

TEST(Good4, NearConvexEntryPointIsTheSameAlgorithm) {
  Rng rng(6);
  const auto inst = gen_graph(Family::kGrid, {.rows = 8, .cols = 8}, rng);
  const Good4Tables tb(inst.graph);
  const auto y = gen_convex_bipartition(inst, tb.it, rng);
  FixedSource a(y), b(y);
  EXPECT_EQ(run_good4(inst.graph, tb.index, a).transcript,
            run_good4_nearconvex(inst.graph, tb.index, b).transcript);
  const auto flipped = flip_labels(y, 3, rng);
  FixedSource f(flipped);
  EXPECT_LE(static_cast<double>(run_good4_nearconvex(inst.graph, tb.index, f).transcript.mistakes()),
            12 + 3 * 625 * std::log(64.0));
}

TEST(Good4, FlipsAreUndoneWithinBudgetOnTinyGraphs) {
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    const auto inst = gen_graph(Family::kTree, {.n = 12}, rng);
    const Good4Tables tb(inst.graph);
    const auto y = flip_labels(gen_convex_bipartition(inst, tb.it, rng), 2, rng);
    const auto m = min_flips_to_convex(tb.it, y, 12);
    ASSERT_TRUE(m.has_value());
    EXPECT_LE(*m, 2u);
  }
}

TEST(Good4, DeterministicTranscripts) {
  Rng rng(8);
  const auto inst = gen_graph(Family::kKTree, {.n = 40, .k = 2}, rng);
  const Good4Tables tb(inst.graph);
  const auto y = gen_convex_bipartition(inst, tb.it, rng);
  Good4Options opt;
  opt.tie_break = TieBreak::kSeededRandom;
  opt.tie_seed = 99;
  FixedSource a(y), b(y);
  EXPECT_EQ(run_good4(inst.graph, tb.index, a, opt).transcript,
            run_good4(inst.graph, tb.index, b, opt).transcript);
}

// ---- FindDistinctLabel

TEST(FindDistinctLabel, SingleLabelBaseCase) {
  const auto g = path_graph(6);
  const Good4Tables tb(g);
  {
    FixedSource src(Labeling::constant(6, 1));
    Session s(g, src);
    EXPECT_EQ(find_distinct_label(s, tb.index, NodeSet::full(6), {1}), kNotFound);
    EXPECT_LE(s.mistakes(), 1u);
  }
  {
    FixedSource src(Labeling::from_labels({1, 1, 1, 0, 1, 1}));
    Session s(g, src);
    EXPECT_EQ(find_distinct_label(s, tb.index, NodeSet::full(6), {1}), 3u);
    EXPECT_EQ(s.mistakes(), 1u);
    EXPECT_EQ(s.remaining(), 2u);
  }
}

TEST(FindDistinctLabel, TwoLabelsOnPathWithThreeClasses) {
  const auto g = path_graph(6);
  const Good4Tables tb(g);
  for (const auto& labels : std::vector<std::vector<Label>>{
           {0, 0, 1, 1, 2, 2}, {2, 2, 0, 0, 1, 1}, {0, 1, 1, 1, 1, 2}, {1, 2, 2, 2, 0, 0}}) {
    FixedSource src(Labeling::from_labels(labels));
    Session s(g, src);
    FdlLog log;
    const NodeId r = find_distinct_label(s, tb.index, NodeSet::full(6), {0, 1}, &log);
    EXPECT_LE(s.mistakes(), fdl_mistake_budget(2));
    EXPECT_EQ(fdl_mistake_budget(2), 4u);
    if (r != kNotFound) EXPECT_EQ(s.label(r), 2u);
    for (const auto& c : log.calls) EXPECT_LE(c.mistakes, fdl_mistake_budget(c.z_size));
  }
}

TEST(FindDistinctLabel, NeverPredictsAKnownNode) {
  Rng rng(10);
  const auto g = grid_graph(5, 6);
  const Good4Tables tb(g);
  for (int t = 0; t < 20; ++t) {
    FixedSource src(gen_strip_partition(5, 6, 3, rng).labeling);
    Session s(g, src);
    s.query(0, 0);
    s.query(7, 0);
    find_distinct_label(s, tb.index, NodeSet::full(30), {0, 1, 2});
    // Session::query throws on repeats, so reaching here is the check.
    EXPECT_GE(s.transcript().steps().size(), 2u);
  }
}

TEST(FindDistinctLabel, SmallSetWithSeveralLabelsReturnsAtOnce) {
  const auto g = path_graph(6);
  const Good4Tables tb(g);
  FixedSource src(Labeling::constant(6, 0));
  Session s(g, src);
  FdlLog log;
  EXPECT_EQ(find_distinct_label(s, tb.index, NodeSet(6, {0, 1, 2}), {0, 1}, &log), kNotFound);
  EXPECT_EQ(s.transcript().steps().size(), 0u);
  ASSERT_EQ(log.calls.size(), 1u);
  EXPECT_TRUE(log.calls[0].small_set);
}

// ---- Multiclass

TEST(Multiclass, BinaryConvexWithinBound) {
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    const auto inst = gen_graph(Family::kTree, {.n = 40}, rng);
    const Good4Tables tb(inst.graph);
    FixedSource src(gen_convex_bipartition(inst, tb.it, rng));
    const auto r = run_multiclass_good4(inst.graph, tb.index, src, 2);
    EXPECT_LE(static_cast<double>(r.transcript.mistakes()), bounds(40, 3, 0, 2).multiclass_bound);
    for (const auto& c : r.log.calls) EXPECT_LE(c.mistakes, fdl_mistake_budget(c.z_size));
  }
}

TEST(Multiclass, ThreeStripsOnTenByTenGrid) {
  Rng rng(12);
  const auto g = grid_graph(10, 10);
  const Good4Tables tb(g);
  for (int t = 0; t < 5; ++t) {
    FixedSource src(gen_strip_partition(10, 10, 3, rng).labeling);
    const auto r = run_multiclass_good4(g, tb.index, src, 3);
    EXPECT_NO_THROW(r.transcript.validate());
    EXPECT_LE(static_cast<double>(r.transcript.mistakes()), bounds(100, 5, 0, 3).multiclass_bound);
    for (const auto& c : r.log.calls) EXPECT_LE(c.mistakes, fdl_mistake_budget(c.z_size));
  }
}

TEST(Multiclass, SingleClassMakesNoMistakes) {
  const auto g = grid_graph(4, 4);
  const Good4Tables tb(g);
  FixedSource src(Labeling(std::vector<Label>(16, 0), 1));
  const auto r = run_multiclass_good4(g, tb.index, src, 1);
  EXPECT_EQ(r.transcript.mistakes(), 0u);
}

// ---- bounds

TEST(Bounds, Examples) {
  const auto r = bounds(100, 3, 0, 2);
  EXPECT_NEAR(r.binary_bound, 3 * 81 * std::log(100.0), 1e-9);
  EXPECT_NEAR(r.binary_bound, 1119.05, 0.01);
  EXPECT_EQ(r.near_convex_bound, r.binary_bound);
  EXPECT_NEAR(bounds(100, 3, 5, 2).near_convex_bound, 20 + r.binary_bound, 1e-9);
  // Multiclass: 2^k ceil(w^(4k) ln n) + (w^4 + 3)^k.
  EXPECT_NEAR(r.multiclass_bound, 4 * std::ceil(6561 * std::log(100.0)) + 84.0 * 84.0, 1e-6);
}

TEST(Bounds, MonotoneInEveryArgument) {
  for (std::size_t n : {10u, 100u})
    for (std::size_t w : {3u, 5u})
      for (std::size_t m : {0u, 4u})
        for (std::size_t k : {2u, 3u}) {
          const auto b = bounds(n, w, m, k);
          const auto bn = bounds(n * 2, w, m, k), bw = bounds(n, w + 1, m, k),
                     bm = bounds(n, w, m + 1, k), bk = bounds(n, w, m, k + 1);
          EXPECT_LE(b.binary_bound, bn.binary_bound);
          EXPECT_LE(b.binary_bound, bw.binary_bound);
          EXPECT_LT(b.near_convex_bound, bm.near_convex_bound);
          EXPECT_LE(b.multiclass_bound, bn.multiclass_bound);
          EXPECT_LE(b.multiclass_bound, bw.multiclass_bound);
          EXPECT_LE(b.multiclass_bound, bk.multiclass_bound);
        }
}

}  // namespace
}  // namespace sdnc
