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

#include "sdnc/error.hpp"

namespace sdnc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyGraph: return "empty_graph";
    case ErrorKind::kSelfLoop: return "self_loop";
    case ErrorKind::kDuplicateEdge: return "duplicate_edge";
    case ErrorKind::kDisconnected: return "disconnected";
    case ErrorKind::kNodeOutOfRange: return "node_out_of_range";
    case ErrorKind::kNotChordal: return "not_chordal";
    case ErrorKind::kNotBipartite: return "not_bipartite";
    case ErrorKind::kNotGrid: return "not_grid";
    case ErrorKind::kSizeLimit: return "size_limit";
    case ErrorKind::kProtocolViolation: return "protocol_violation";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kGeneratorExhausted: return "generator_exhausted";
  }
  return "unknown";
}

}  // namespace sdnc
