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
#include <optional>

#include "sdnc/graph.hpp"
#include "sdnc/intervals.hpp"
#include "sdnc/labeling.hpp"
#include "sdnc/node_set.hpp"

namespace sdnc {

bool is_convex_set(const IntervalTable& it, const NodeSet& s);

/// Every cluster of `y` is convex.
bool is_convex_labeling(const IntervalTable& it, const Labeling& y);

/// Smallest convex superset of `a`, by closing under intervals until a
/// fixpoint is reached.
NodeSet convex_hull(const IntervalTable& it, const NodeSet& a);

/// Nodes incident to an edge whose endpoints carry different labels.
NodeSet cut_border(const Graph& g, const Labeling& y);

inline constexpr std::size_t kMinFlipsMaxNodes = 15;

/// Smallest number of label flips turning the binary labeling `y` convex,
/// or nullopt when it exceeds `budget`. Exhaustive; throws kSizeLimit for
/// n > kMinFlipsMaxNodes.
std::optional<std::size_t> min_flips_to_convex(const IntervalTable& it,
                                               const Labeling& y,
                                               std::size_t budget);

}  // namespace sdnc
