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
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <set>

#include "sdnc/adversaries.hpp"
#include "sdnc/baselines.hpp"
#include "sdnc/convexity.hpp"
#include "sdnc/error.hpp"
#include "sdnc/generators.hpp"
#include "sdnc/good4.hpp"
#include "sdnc/gridwalker.hpp"
#include "sdnc/halving.hpp"
#include "sdnc/protocol.hpp"

namespace sdnc {
namespace {

class ScriptedLearner final : public Learner {
 public:
  explicit ScriptedLearner(std::vector<NodeId> order) : order_(std::move(order)) {}
  std::string name() const override { return "scripted"; }
  void play(Session& s) override {
    for (NodeId v : order_) s.query(v, 0);
  }

 private:
  std::vector<NodeId> order_;
};

TEST(Session, SingleNode) {
  const auto g = Graph::build(1, {});
  FixedSource src(Labeling::constant(1, 1));
  ConstantLearner learner;
  const auto t = run_session(g, learner, src);
  EXPECT_EQ(t.steps().size(), 1u);
  EXPECT_LE(t.mistakes(), 1u);
}

TEST(Session, AllZerosAgainstConstantLearner) {
  const auto g = path_graph(6);
  FixedSource src(Labeling::constant(6, 0));
  ConstantLearner learner;
  EXPECT_EQ(run_session(g, learner, src).mistakes(), 0u);
}

TEST(Session, RepeatedOrMissingQueriesAreViolations) {
  const auto g = path_graph(3);
  FixedSource src(Labeling::constant(3, 0));
  ScriptedLearner repeat({0, 1, 1});
  try {
    run_session(g, repeat, src);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kProtocolViolation);
  }
  ScriptedLearner partial({0, 2});
  EXPECT_THROW(run_session(g, partial, src), Error);
  Session s(g, src);
  EXPECT_THROW(s.label(1), Error);
  EXPECT_THROW(s.query(7, 0), Error);
}

TEST(Session, RecordsPredictionBeforeObservation) {
  const auto g = path_graph(3);
  FixedSource src(Labeling::from_labels({1, 0, 1}));
  Session s(g, src);
  EXPECT_EQ(s.query(2, 0), 1u);
  EXPECT_EQ(s.query(0, 1), 1u);
  EXPECT_EQ(s.mistakes(), 1u);
  EXPECT_EQ(s.remaining(), 1u);
  EXPECT_EQ(s.transcript().steps()[0], (Step{2, 0, 1}));
  EXPECT_FALSE(s.transcript().complete());
}

TEST(Session, Good4OnConvexPathWithinBound) {
  const auto g = path_graph(4);
  const Good4Tables tb(g);
  FixedSource src(Labeling::from_labels({0, 0, 1, 1}));
  Good4Learner learner(tb.index);
  const auto t = run_session(g, learner, src);
  EXPECT_LE(static_cast<double>(t.mistakes()), bounds(4, 3, 0, 2).binary_bound);
}

TEST(Transcript, ValidateAndObservedLabeling) {
  Transcript t(3);
  t.push({1, 0, 1});
  t.push({0, 0, 0});
  EXPECT_THROW(t.validate(), Error);
  t.push({2, 1, 1});
  EXPECT_NO_THROW(t.validate());
  EXPECT_EQ(t.mistakes(), 1u);
  EXPECT_EQ(t.observed_labeling(2).labels(), (std::vector<Label>{0, 1, 1}));
  Transcript dup(2);
  dup.push({0, 0, 0});
  dup.push({0, 0, 0});
  EXPECT_THROW(dup.validate(), Error);
}

// ---- clique + path

std::vector<std::unique_ptr<Learner>> learners_for(const Graph& g, const Good4Tables& tb,
                                                   std::optional<VersionSpace>& space) {
  std::vector<std::unique_ptr<Learner>> out;
  out.push_back(std::make_unique<Good4Learner>(tb.index));
  out.push_back(std::make_unique<MulticlassGood4Learner>(tb.index, 2));
  out.push_back(std::make_unique<TraverseLearner>());
  out.push_back(std::make_unique<ConstantLearner>());
  if (g.n() <= 14) {
    space = enumerate_convex_bipartitions(tb.it);
    out.push_back(std::make_unique<HalvingLearner>(*space));
  }
  if (is_bipartite(g)) out.push_back(std::make_unique<BipartiteLearner>());
  return out;
}

TEST(CliquePath, ForcesHMinusOneMistakesAndStaysConvex) {
  for (std::size_t h : {2u, 3u, 4u, 6u}) {
    auto inst = clique_path_adversary(h, h + 6);
    const Good4Tables tb(inst.graph);
    std::optional<VersionSpace> space;
    for (auto& learner : learners_for(inst.graph, tb, space)) {
      const auto t = run_session(inst.graph, *learner, *inst.source);
      EXPECT_GE(t.mistakes(), h - 1) << learner->name() << " h=" << h;
      EXPECT_TRUE(is_convex_labeling(tb.it, t.observed_labeling(2))) << learner->name();
    }
  }
}

TEST(CliquePath, RejectsBadParameters) {
  EXPECT_THROW(clique_path_adversary(1, 5), Error);
  EXPECT_THROW(clique_path_adversary(4, 4), Error);
}

// ---- merging degree

TEST(MergingDegree, Examples) {
  EXPECT_EQ(merging_degree(path_graph(5), Labeling::constant(5, 0)), 0u);
  EXPECT_EQ(merging_degree(path_graph(5), Labeling::from_labels({0, 0, 1, 1, 1})), 2u);
  // 2x2 checkerboard: four singleton clusters with one inner and two outer
  // border nodes each.
  EXPECT_EQ(merging_degree(grid_graph(2, 2), Labeling::from_labels({0, 1, 1, 0})), 4u);
}

TEST(MergingDegree, MatchesDefinitionOnSmallGraphs) {
  // Reference: clusters by union-find over same-label edges, borders by sets.
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_tree(12, rng);
    std::vector<Label> y(12);
    for (auto& l : y) l = static_cast<Label>(uniform_below(rng, 3));
    std::vector<NodeId> parent(12);
    std::iota(parent.begin(), parent.end(), NodeId{0});
    std::function<NodeId(NodeId)> find = [&](NodeId x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (auto [u, v] : g.edges())
      if (y[u] == y[v]) parent[find(u)] = find(v);
    std::size_t want = 0;
    for (NodeId root = 0; root < 12; ++root) {
      if (find(root) != root) continue;
      std::set<NodeId> inner, outer;
      for (auto [u, v] : g.edges()) {
        const bool iu = find(u) == root, iv = find(v) == root;
        if (iu && !iv) inner.insert(u), outer.insert(v);
        if (iv && !iu) inner.insert(v), outer.insert(u);
      }
      want += std::min(inner.size(), outer.size());
    }
    EXPECT_EQ(merging_degree(g, Labeling(y, 3)), want);
  }
}

TEST(MergingDegreeAdversary, ForcesCMistakesWithSmallMergingDegree) {
  Rng rng(5);
  for (std::size_t c : {0u, 1u, 3u, 6u}) {
    const auto g = random_tree(30, rng);
    const Good4Tables tb(g);
    std::optional<VersionSpace> space;
    for (auto& learner : learners_for(g, tb, space)) {
      auto adv = merging_degree_adversary(g, c);
      const auto t = run_session(g, *learner, *adv);
      std::size_t on_free = 0;
      for (const auto& s : t.steps())
        if (std::binary_search(adv->free_nodes().begin(), adv->free_nodes().end(), s.node))
          on_free += s.mistake() ? 1 : 0;
      EXPECT_EQ(on_free, c) << learner->name();
      const auto y = t.observed_labeling(2);
      EXPECT_LE(merging_degree(g, y), 2 * c) << learner->name();
      if (c == 0) EXPECT_EQ(y, Labeling::constant(30, 0));
    }
  }
  EXPECT_THROW(merging_degree_adversary(path_graph(3), 3), Error);
}

// ---- grid permutation

TEST(GridPermutation, SingleClusterAndLowerBound) {
  Rng rng(9);
  auto one = grid_permutation_source(3, 3, 1, rng);
  EXPECT_EQ(one->labeling(), Labeling::constant(9, 0, 2));

  // Any learner pays k - H_k in expectation; GridWalker is one of them.
  const std::size_t k = 4;
  const double lower = 4.0 - (1.0 + 1.0 / 2 + 1.0 / 3 + 1.0 / 4);
  EXPECT_NEAR(lower, 23.0 / 12.0, 1e-12);
  const auto spec = GridSpec::standard(4, 8);
  double sum = 0, sq = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    auto src = grid_permutation_source(4, 8, k, rng);
    const double m = static_cast<double>(run_gridwalker(spec, *src).transcript.mistakes());
    sum += m;
    sq += m * m;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sq / trials - mean * mean) / trials);
  EXPECT_GE(mean, lower - 3 * se);
  EXPECT_LE(mean, 3.0 * k);
}

}  // namespace
}  // namespace sdnc
