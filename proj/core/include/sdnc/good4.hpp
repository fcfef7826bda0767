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
#include <string>
#include <vector>

#include "sdnc/graph.hpp"
#include "sdnc/intervals.hpp"
#include "sdnc/protocol.hpp"
#include "sdnc/quadruples.hpp"
#include "sdnc/random.hpp"
#include "sdnc/rational.hpp"

namespace sdnc {

enum class TieBreak { kLowestId, kSeededRandom };

struct Good4Options {
  TieBreak tie_break = TieBreak::kLowestId;
  std::uint64_t tie_seed = 0;
  /// The arbitrary predictions (the node a of every round and the
  /// leftovers once no good quadruple remains).
  Label default_label = 0;
};

/// What happened in one iteration of the outer loop.
struct RoundTrace {
  std::size_t index = 0;
  std::size_t u_size = 0;  // |U| at round start, a included
  QuadrupleStats stats;    // over U at round start
  Fraction epsilon;
  Step a{};
  std::vector<Step> b_steps;
  std::vector<Step> c_steps;
  std::vector<Step> d_steps;
  std::size_t revealed = 0;
  std::size_t mistakes = 0;
  /// a meets the partner thresholds of a U-good node.
  bool a_is_good = false;
  /// A Step-4 mistake exposed a quadruple no convex labeling can realize.
  bool violation_found = false;

  /// |U| > ceil(1/eps) + 3, the regime in which the per-round accounting
  /// applies.
  bool large() const noexcept;
};

struct Good4Result {
  Transcript transcript;
  std::vector<RoundTrace> rounds;
  std::size_t leftover = 0;  // nodes predicted after the loop
};

/// Binary Good4. Each round picks the node a in the most good quadruples of
/// the unknown set U, walks candidates b' (predicting the opposite of
/// y(a)) and c' (predicting y(a)) in decreasing order of the counts taken
/// at the start of the step, and finally predicts y(a) on every partner d
/// of (a, b, c). Leftover nodes receive default_label.
Good4Result good4(Session& session, const GoodQuadrupleIndex& index,
                  const Good4Options& options = {});
Good4Result run_good4(const Graph& g, const GoodQuadrupleIndex& index, LabelSource& source,
                      const Good4Options& options = {});
/// The same algorithm, kept as its own entry point for near-convex runs.
Good4Result run_good4_nearconvex(const Graph& g, const GoodQuadrupleIndex& index,
                                 LabelSource& source, const Good4Options& options = {});

/// Tables Good4 needs, built once per graph.
struct Good4Tables {
  explicit Good4Tables(const Graph& g);
  DistanceTable dt;
  IntervalTable it;
  GoodQuadrupleIndex index;
};

class Good4Learner final : public Learner {
 public:
  explicit Good4Learner(const GoodQuadrupleIndex& index, Good4Options options = {})
      : index_(index), options_(options) {}
  std::string name() const override { return "good4"; }
  void play(Session& session) override { last_ = good4(session, index_, options_); }
  const Good4Result& last() const noexcept { return last_; }

 private:
  const GoodQuadrupleIndex& index_;
  Good4Options options_;
  Good4Result last_;
};

// Multiclass.

inline constexpr NodeId kNotFound = static_cast<NodeId>(-1);

struct FdlCall {
  std::size_t depth = 0;
  std::size_t set_size = 0;
  std::size_t z_size = 0;
  std::size_t mistakes = 0;  // this call and everything below it
  std::size_t revealed = 0;
  NodeId result = kNotFound;
  bool small_set = false;        // |S| < 4 with |Z| > 1, returned at once
  bool violation_found = false;  // y(d) = y(c)
};

/// Records every FindDistinctLabel invocation, nested ones included.
struct FdlLog {
  std::vector<FdlCall> calls;
};

/// Returns a node of S whose label lies outside Z, or kNotFound. Labels that
/// are already known are reused and never predicted again.
NodeId find_distinct_label(Session& session, const GoodQuadrupleIndex& index, const NodeSet& s,
                           const std::vector<Label>& z, FdlLog* log = nullptr,
                           const Good4Options& options = {});

struct MulticlassResult {
  Transcript transcript;
  FdlLog log;
  std::size_t rounds = 0;
  std::size_t leftover = 0;
};

MulticlassResult multiclass_good4(Session& session, const GoodQuadrupleIndex& index,
                                  std::size_t k, const Good4Options& options = {});
MulticlassResult run_multiclass_good4(const Graph& g, const GoodQuadrupleIndex& index,
                                      LabelSource& source, std::size_t k,
                                      const Good4Options& options = {});

class MulticlassGood4Learner final : public Learner {
 public:
  MulticlassGood4Learner(const GoodQuadrupleIndex& index, std::size_t k,
                         Good4Options options = {})
      : index_(index), k_(k), options_(options) {}
  std::string name() const override { return "multiclass_good4"; }
  void play(Session& session) override {
    last_ = multiclass_good4(session, index_, k_, options_);
  }
  const MulticlassResult& last() const noexcept { return last_; }

 private:
  const GoodQuadrupleIndex& index_;
  std::size_t k_;
  Good4Options options_;
  MulticlassResult last_;
};

/// Mistake budget of one FindDistinctLabel call with |Z| = z.
constexpr std::size_t fdl_mistake_budget(std::size_t z) noexcept {
  return z == 0 ? 0 : 3 * (std::size_t{1} << (z - 1)) - 2;
}

struct BoundReport {
  std::size_t n = 0;
  std::size_t w = 0;  // order of an excluded clique minor
  std::size_t m = 0;  // flip budget
  std::size_t k = 2;
  double binary_bound = 0;       // 3 w^4 ln n
  double near_convex_bound = 0;  // 4 M + 3 w^4 ln n
  double multiclass_bound = 0;   // 2^k ceil(w^(4k) ln n) + (w^4 + 3)^k
};

BoundReport bounds(std::size_t n, std::size_t w, std::size_t m, std::size_t k);

}  // namespace sdnc
