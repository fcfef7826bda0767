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
#include <vector>

#include "sdnc/node_set.hpp"

namespace sdnc {

using Label = std::uint32_t;

/// Total map node -> class id in [0, k).
class Labeling {
 public:
  Labeling() = default;
  /// Throws kInvalidArgument if some label is >= k or k == 0.
  Labeling(std::vector<Label> labels, Label k);

  /// k inferred as max label + 1, but at least 2.
  static Labeling from_labels(std::vector<Label> labels);
  static Labeling constant(std::size_t n, Label value, Label k = 2);

  std::size_t n() const noexcept { return labels_.size(); }
  Label k() const noexcept { return k_; }
  Label operator[](NodeId v) const noexcept { return labels_[v]; }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  NodeSet cluster(Label c) const;
  bool is_binary() const noexcept { return k_ == 2; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> labels_;
  Label k_ = 2;
};

}  // namespace sdnc
