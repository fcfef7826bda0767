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
#include <string>
#include <vector>

#include "sdnc/graph.hpp"
#include "sdnc/intervals.hpp"
#include "sdnc/labeling.hpp"
#include "sdnc/protocol.hpp"

namespace sdnc {

inline constexpr std::size_t kVersionSpaceMaxNodes = 20;

/// Set of binary labelings on at most 20 nodes, each stored as the bit mask
/// of its label-1 nodes.
class VersionSpace {
 public:
  VersionSpace(std::size_t n, std::vector<std::uint32_t> masks);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return masks_.size(); }
  bool empty() const noexcept { return masks_.empty(); }
  const std::vector<std::uint32_t>& masks() const noexcept { return masks_; }
  Labeling at(std::size_t i) const;
  bool contains(const Labeling& y) const;

  /// Number of members labeling `v` with 1.
  std::size_t votes_for_one(NodeId v) const noexcept;
  /// Drops members that disagree with y(v) = label.
  void filter(NodeId v, Label label);

  static std::uint32_t mask_of(const Labeling& y);

 private:
  std::size_t n_;
  std::vector<std::uint32_t> masks_;
};

/// Every convex bipartition of g, the two constant labelings included.
/// Throws kSizeLimit above kVersionSpaceMaxNodes nodes.
VersionSpace enumerate_convex_bipartitions(const IntervalTable& it);

struct HalvingResult {
  Transcript transcript;
  std::size_t initial_size = 0;
  bool realizable = true;
  /// Mistakes after which the version space did not shrink to at most half.
  std::size_t halving_failures = 0;
  /// Version-space size before every step.
  std::vector<std::size_t> sizes;
};

/// Queries nodes in id order and predicts the majority vote of the version
/// space (ties predict 0). When the version space runs empty the labeling
/// is outside the class; from then on 0 is predicted.
HalvingResult halving(Session& session, VersionSpace space);
HalvingResult run_halving(const Graph& g, const IntervalTable& it, LabelSource& source);

class HalvingLearner final : public Learner {
 public:
  explicit HalvingLearner(VersionSpace space) : space_(std::move(space)) {}
  std::string name() const override { return "halving"; }
  void play(Session& session) override { last_ = halving(session, space_); }
  const HalvingResult& last() const noexcept { return last_; }

 private:
  VersionSpace space_;
  HalvingResult last_;
};

}  // namespace sdnc
