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

#include "sdnc/protocol.hpp"

#include <string>

#include "sdnc/error.hpp"

namespace sdnc {

std::size_t Transcript::mistakes() const noexcept {
  std::size_t c = 0;
  for (const auto& s : steps_) c += s.mistake() ? 1 : 0;
  return c;
}

void Transcript::validate() const {
  if (steps_.size() != n_)
    throw Error(ErrorKind::kProtocolViolation,
                "transcript has " + std::to_string(steps_.size()) + " steps for " +
                    std::to_string(n_) + " nodes");
  std::vector<std::uint8_t> seen(n_, 0);
  for (const auto& s : steps_) {
    if (s.node >= n_ || seen[s.node])
      throw Error(ErrorKind::kProtocolViolation,
                  "node " + std::to_string(s.node) + " is out of range or repeated");
    seen[s.node] = 1;
  }
}

Labeling Transcript::observed_labeling(Label k) const {
  validate();
  std::vector<Label> labels(n_, 0);
  for (const auto& s : steps_) labels[s.node] = s.observed;
  return Labeling(std::move(labels), k);
}

Session::Session(const Graph& g, LabelSource& source)
    : g_(g), source_(source), known_(g.n(), 0), labels_(g.n(), 0), transcript_(g.n()) {}

Label Session::query(NodeId node, Label predicted) {
  if (node >= g_.n())
    throw Error(ErrorKind::kProtocolViolation, "query for unknown node " + std::to_string(node));
  if (known_[node])
    throw Error(ErrorKind::kProtocolViolation,
                "node " + std::to_string(node) + " was already queried");
  const Label observed = source_.answer(node, predicted);
  known_[node] = 1;
  labels_[node] = observed;
  if (observed != predicted) ++mistakes_;
  transcript_.push({node, predicted, observed});
  return observed;
}

Label Session::label(NodeId node) const {
  if (node >= g_.n() || !known_[node])
    throw Error(ErrorKind::kProtocolViolation,
                "label of node " + std::to_string(node) + " is not known yet");
  return labels_[node];
}

Transcript run_session(const Graph& g, Learner& learner, LabelSource& source) {
  Session session(g, source);
  learner.play(session);
  session.transcript().validate();
  return session.transcript();
}

void ConstantLearner::play(Session& session) {
  for (NodeId v = 0; v < session.n(); ++v) session.query(v, 0);
}

}  // namespace sdnc
