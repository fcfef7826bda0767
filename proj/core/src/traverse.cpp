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

#include "sdnc/baselines.hpp"

namespace sdnc {

Transcript traverse(Session& session, Label root_guess) {
  const auto tree = bfs_tree(session.graph(), 0);
  for (NodeId v : tree.order) {
    if (session.known(v)) continue;
    const NodeId p = tree.parent[v];
    const Label guess = (p != v && session.known(p)) ? session.label(p) : root_guess;
    session.query(v, guess);
  }
  return session.transcript();
}

Transcript run_traverse(const Graph& g, LabelSource& source, Label root_guess) {
  Session session(g, source);
  return traverse(session, root_guess);
}

}  // namespace sdnc
