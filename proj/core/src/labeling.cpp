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

#include "sdnc/labeling.hpp"

#include <algorithm>
#include <string>

#include "sdnc/error.hpp"

namespace sdnc {

Labeling::Labeling(std::vector<Label> labels, Label k)
    : labels_(std::move(labels)), k_(k) {
  if (k_ == 0) throw Error(ErrorKind::kInvalidArgument, "labeling needs k >= 1");
  for (std::size_t v = 0; v < labels_.size(); ++v)
    if (labels_[v] >= k_)
      throw Error(ErrorKind::kInvalidArgument,
                  "label " + std::to_string(labels_[v]) + " at node " +
                      std::to_string(v) + " is not below k=" + std::to_string(k_));
}

Labeling Labeling::from_labels(std::vector<Label> labels) {
  Label k = 2;
  for (Label l : labels) k = std::max(k, l + 1);
  return Labeling(std::move(labels), k);
}

Labeling Labeling::constant(std::size_t n, Label value, Label k) {
  return Labeling(std::vector<Label>(n, value), k);
}

NodeSet Labeling::cluster(Label c) const {
  NodeSet s(labels_.size());
  for (std::size_t v = 0; v < labels_.size(); ++v)
    if (labels_[v] == c) s.insert(static_cast<NodeId>(v));
  return s;
}

}  // namespace sdnc
