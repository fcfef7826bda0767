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

#include <benchmark/benchmark.h>

#include "sdnc/baselines.hpp"
#include "sdnc/generators.hpp"
#include "sdnc/good4.hpp"
#include "sdnc/intervals.hpp"

namespace sdnc {
namespace {

Graph tree_of(std::size_t n) {
  Rng rng(n);
  return random_tree(n, rng);
}

void BM_Distances(benchmark::State& st) {
  const auto g = tree_of(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(DistanceTable(g));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_Distances)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_Intervals(benchmark::State& st) {
  const DistanceTable dt(tree_of(static_cast<std::size_t>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(IntervalTable(dt));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_Intervals)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_IndexBuild(benchmark::State& st) {
  const auto it = interval_table(DistanceTable(tree_of(static_cast<std::size_t>(st.range(0)))));
  for (auto _ : st) benchmark::DoNotOptimize(GoodQuadrupleIndex(it));
}
BENCHMARK(BM_IndexBuild)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

// One node short of the full set, so the cached full-set counts do not apply.
void BM_PerNodeCounts(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Good4Tables tb(tree_of(n));
  NodeSet u = NodeSet::full(n);
  u.erase(0);
  for (auto _ : st) benchmark::DoNotOptimize(tb.index.per_node_good_counts(u));
}
BENCHMARK(BM_PerNodeCounts)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Good4Tree(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  Rng rng(7);
  const auto inst = gen_graph(Family::kTree, {.n = n}, rng);
  const Good4Tables tb(inst.graph);
  const auto y = gen_convex_bipartition(inst, tb.it, rng);
  for (auto _ : st) {
    FixedSource src(y);
    benchmark::DoNotOptimize(run_good4(inst.graph, tb.index, src));
  }
}
BENCHMARK(BM_Good4Tree)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Good4Grid(benchmark::State& st) {
  const auto side = static_cast<std::size_t>(st.range(0));
  Rng rng(8);
  const auto inst = gen_graph(Family::kGrid, {.rows = side, .cols = side}, rng);
  const Good4Tables tb(inst.graph);
  const auto y = gen_convex_bipartition(inst, tb.it, rng);
  for (auto _ : st) {
    FixedSource src(y);
    benchmark::DoNotOptimize(run_good4(inst.graph, tb.index, src));
  }
}
BENCHMARK(BM_Good4Grid)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Traverse(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto g = tree_of(n);
  Rng rng(9);
  const auto y = gen_homophilic(g, 20, rng).labeling;
  for (auto _ : st) {
    FixedSource src(y);
    benchmark::DoNotOptimize(run_traverse(g, src));
  }
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_Traverse)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oN);

}  // namespace
}  // namespace sdnc

BENCHMARK_MAIN();
