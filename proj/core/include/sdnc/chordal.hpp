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
#include <vector>

#include "sdnc/graph.hpp"

namespace sdnc {

/// Maximum cardinality search visiting order. Its reverse is a perfect
/// elimination ordering iff the graph is chordal.
std::vector<NodeId> maximum_cardinality_search(const Graph& g);

/// Clique number of a chordal graph (which equals its Hadwiger number).
/// Throws kNotChordal when the ordering fails verification.
std::size_t clique_number_chordal(const Graph& g);

}  // namespace sdnc
