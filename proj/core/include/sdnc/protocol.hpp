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
#include <memory>
#include <string>
#include <vector>

#include "sdnc/graph.hpp"
#include "sdnc/labeling.hpp"

namespace sdnc {

struct Step {
  NodeId node;
  Label predicted;
  Label observed;
  bool mistake() const noexcept { return predicted != observed; }
  friend bool operator==(const Step&, const Step&) = default;
};

/// Ordered record of one self-directed session.
class Transcript {
 public:
  Transcript() = default;
  explicit Transcript(std::size_t n) : n_(n) {}

  std::size_t n() const noexcept { return n_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t mistakes() const noexcept;
  bool complete() const noexcept { return steps_.size() == n_; }
  void push(const Step& s) { steps_.push_back(s); }

  /// Throws kProtocolViolation unless every node appears exactly once.
  void validate() const;
  /// Observed label of every node; requires a complete transcript.
  Labeling observed_labeling(Label k) const;

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Step> steps_;
};

/// Answers a query for `node` after seeing the learner's prediction. Fixed
/// sources ignore the prediction; adaptive adversaries do not.
class LabelSource {
 public:
  virtual ~LabelSource() = default;
  virtual Label answer(NodeId node, Label predicted) = 0;
  virtual std::string name() const = 0;
  virtual Label k() const { return 2; }
};

class FixedSource final : public LabelSource {
 public:
  explicit FixedSource(Labeling y, std::string name = "fixed")
      : y_(std::move(y)), name_(std::move(name)) {}
  Label answer(NodeId node, Label) override { return y_[node]; }
  std::string name() const override { return name_; }
  Label k() const override { return y_.k(); }
  const Labeling& labeling() const noexcept { return y_; }

 private:
  Labeling y_;
  std::string name_;
};

/// One run of the protocol. The learner picks a node that has not been
/// queried yet, commits to a prediction, and only then sees the label.
class Session {
 public:
  Session(const Graph& g, LabelSource& source);

  const Graph& graph() const noexcept { return g_; }
  std::size_t n() const noexcept { return g_.n(); }

  /// Throws kProtocolViolation for an out-of-range or already queried node.
  Label query(NodeId node, Label predicted);

  bool known(NodeId node) const noexcept { return known_[node] != 0; }
  /// Observed label; throws kProtocolViolation if not yet queried.
  Label label(NodeId node) const;
  std::size_t remaining() const noexcept { return g_.n() - transcript_.steps().size(); }
  std::size_t mistakes() const noexcept { return mistakes_; }
  const Transcript& transcript() const noexcept { return transcript_; }
  Label k() const { return source_.k(); }

 private:
  const Graph& g_;
  LabelSource& source_;
  std::vector<std::uint8_t> known_;
  std::vector<Label> labels_;
  std::size_t mistakes_ = 0;
  Transcript transcript_;
};

class Learner {
 public:
  virtual ~Learner() = default;
  virtual std::string name() const = 0;
  /// Must query every node of the session's graph exactly once.
  virtual void play(Session& session) = 0;
};

/// Runs `learner` against `source` and checks that every node was queried.
Transcript run_session(const Graph& g, Learner& learner, LabelSource& source);

/// Predicts 0 for every node in id order.
class ConstantLearner final : public Learner {
 public:
  std::string name() const override { return "constant_baseline"; }
  void play(Session& session) override;
};

}  // namespace sdnc
