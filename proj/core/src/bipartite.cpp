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
#include "sdnc/error.hpp"

namespace sdnc {

BipartiteResult bipartite(Session& session) {
  const Graph& g = session.graph();
  if (!is_bipartite(g)) throw Error(ErrorKind::kNotBipartite, "bipartite learner needs a bipartite graph");
  const auto tree = bfs_tree(g, 0);
  BipartiteResult r;
  std::size_t i = 0;
  for (; i < tree.order.size(); ++i) {
    const NodeId v = tree.order[i];
    if (session.known(v)) continue;
    const NodeId p = tree.parent[v];
    const bool has_parent = p != v && session.known(p);
    const Label guess = has_parent ? session.label(p) : 0;
    if (session.query(v, guess) != guess && has_parent) {
      r.distance_phase = true;
      r.cut_u = p;
      r.cut_v = v;
      ++i;
      break;
    }
  }
  if (r.distance_phase) {
    const auto du = bfs_distances(g, r.cut_u);
    const auto dv = bfs_distances(g, r.cut_v);
    const Label yu = session.label(r.cut_u), yv = session.label(r.cut_v);
    for (; i < tree.order.size(); ++i) {
      const NodeId x = tree.order[i];
      if (session.known(x)) continue;
      // Adjacent u, v sit on different sides of the 2-coloring, so their
      // distances to x have different parity.
      if (du[x] == dv[x])
        throw Error(ErrorKind::kNotBipartite, "equal distances to both ends of an edge");
      session.query(x, du[x] < dv[x] ? yu : yv);
    }
  }
  r.transcript = session.transcript();
  return r;
}

BipartiteResult run_bipartite(const Graph& g, LabelSource& source) {
  Session session(g, source);
  return bipartite(session);
}

}  // namespace sdnc
