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

#include "sdnc/gridwalker.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string>

#include "sdnc/error.hpp"

namespace sdnc {

namespace {

[[noreturn]] void not_grid(const std::string& why) { throw Error(ErrorKind::kNotGrid, why); }

}  // namespace

GridSpec::GridSpec(std::size_t rows, std::size_t cols, std::vector<Row> matrix)
    : rows_(rows), cols_(cols), matrix_(std::move(matrix)) {
  const std::size_t n = rows * cols;
  if (rows == 0 || cols == 0) not_grid("grid dimensions must be positive");
  if (matrix_.size() != n)
    not_grid("matrix has " + std::to_string(matrix_.size()) + " rows, expected " +
             std::to_string(n));
  for (const auto& r : matrix_)
    for (auto x : r)
      if (x > n) not_grid("neighbor id " + std::to_string(x) + " out of range");

  NodeId corner = kNone;
  for (NodeId v = 0; v < n; ++v)
    if (matrix_[v][kTop] == 0 && matrix_[v][kLeft] == 0) {
      if (corner != kNone) not_grid("more than one top-left corner");
      corner = v;
    }
  if (corner == kNone) not_grid("no top-left corner");
  top_left_ = corner;

  row_.assign(n, UINT32_MAX);
  col_.assign(n, UINT32_MAX);
  at_.assign(n, kNone);
  auto& at = at_;
  NodeId start = corner;
  for (std::size_t r = 0; r < rows; ++r) {
    if (start == kNone) not_grid("grid has fewer rows than declared");
    NodeId v = start;
    for (std::size_t c = 0; c < cols; ++c) {
      if (v == kNone) not_grid("row " + std::to_string(r) + " is shorter than declared");
      if (row_[v] != UINT32_MAX) not_grid("node " + std::to_string(v) + " reached twice");
      row_[v] = static_cast<std::uint32_t>(r);
      col_[v] = static_cast<std::uint32_t>(c);
      at[r * cols + c] = v;
      v = step(v, kRight);
    }
    if (v != kNone) not_grid("row " + std::to_string(r) + " is longer than declared");
    start = step(start, kBottom);
  }
  if (start != kNone) not_grid("grid has more rows than declared");

  auto expect = [&](std::size_t r, std::size_t c, bool exists) {
    return exists ? at[r * cols + c] : kNone;
  };
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t r = row_[v], c = col_[v];
    if (step(v, kTop) != expect(r - (r > 0), c, r > 0) ||
        step(v, kRight) != expect(r, c + 1, c + 1 < cols) ||
        step(v, kBottom) != expect(r + 1, c, r + 1 < rows) ||
        step(v, kLeft) != expect(r, c - (c > 0), c > 0))
      not_grid("neighbors of node " + std::to_string(v) +
               " are not the clockwise grid neighbors");
  }
}

GridSpec GridSpec::standard(std::size_t rows, std::size_t cols) {
  std::vector<Row> m(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      auto id = [&](std::size_t rr, std::size_t cc) {
        return static_cast<std::uint32_t>(rr * cols + cc + 1);
      };
      auto& row = m[r * cols + c];
      row[kTop] = r > 0 ? id(r - 1, c) : 0;
      row[kRight] = c + 1 < cols ? id(r, c + 1) : 0;
      row[kBottom] = r + 1 < rows ? id(r + 1, c) : 0;
      row[kLeft] = c > 0 ? id(r, c - 1) : 0;
    }
  return GridSpec(rows, cols, std::move(m));
}

Graph GridSpec::to_graph() const {
  std::vector<Edge> e;
  for (NodeId v = 0; v < n(); ++v)
    for (Side s : {kRight, kBottom}) {
      const NodeId u = step(v, s);
      if (u != kNone) e.emplace_back(std::min(u, v), std::max(u, v));
    }
  return Graph::build(n(), e);
}

void write_grid_spec(std::ostream& out, const GridSpec& spec) {
  out << spec.rows() << ' ' << spec.cols() << '\n';
  for (const auto& row : spec.matrix())
    out << row[0] << ' ' << row[1] << ' ' << row[2] << ' ' << row[3] << '\n';
}

GridSpec read_grid_spec(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw Error(ErrorKind::kParse, "grid spec: missing header");
  if (rows == 0 || cols == 0 || rows > (1u << 20) / cols)
    throw Error(ErrorKind::kParse, "grid spec: bad dimensions");
  std::vector<GridSpec::Row> m(rows * cols);
  for (auto& row : m)
    for (auto& x : row) {
      long long v;
      if (!(in >> v) || v < 0) throw Error(ErrorKind::kParse, "grid spec: bad matrix entry");
      x = static_cast<std::uint32_t>(v);
    }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::kParse, "grid spec: trailing content");
  return GridSpec(rows, cols, std::move(m));
}

GridSpec load_grid_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path.string());
  return read_grid_spec(in);
}

GridWalkerResult gridwalker(Session& session, const GridSpec& spec, Label default_label) {
  if (session.n() != spec.n())
    throw Error(ErrorKind::kInvalidArgument, "grid spec and session sizes differ");
  const std::size_t n = spec.n();
  std::vector<std::uint8_t> done(n, 0);
  // Columns of nodes whose label is known but whose cluster is unfinished.
  std::vector<std::set<std::size_t>> loose(spec.rows());
  GridWalkerResult result;

  // Walks from `from` in direction `side` while the cluster label persists.
  // Returns the last node of the run.
  auto walk = [&](NodeId from, GridSpec::Side side, Label label) {
    NodeId last = from;
    for (NodeId x = spec.step(from, side); x != GridSpec::kNone; x = spec.step(x, side)) {
      if (session.known(x)) {
        if (session.label(x) != label) break;
      } else if (session.query(x, label) != label) {
        loose[spec.row_of(x)].insert(spec.col_of(x));
        break;
      }
      last = x;
    }
    return last;
  };

  auto finish_cluster = [&](NodeId p) {
    const std::size_t mistakes_before = session.mistakes();
    const std::size_t r = spec.row_of(p), c = spec.col_of(p);
    if (!session.known(p)) {
      Label guess = default_label;
      // A known node further right on this row most likely shares the
      // cluster of p.
      const auto it = loose[r].lower_bound(c);
      if (it != loose[r].end()) {
        guess = session.label(spec.node_at(r, *it));
      }
      session.query(p, guess);
    }
    const Label label = session.label(p);
    const NodeId right_end = walk(p, GridSpec::kRight, label);
    const NodeId bottom_end = walk(right_end, GridSpec::kBottom, label);
    const std::size_t width = spec.col_of(right_end) - c + 1;
    const std::size_t height = spec.row_of(bottom_end) - r + 1;
    NodeId row_start = p;
    for (std::size_t i = 0; i < height; ++i) {
      NodeId x = row_start;
      for (std::size_t j = 0; j < width; ++j) {
        if (!session.known(x)) session.query(x, label);
        done[x] = 1;
        x = spec.step(x, GridSpec::kRight);
      }
      auto& cols = loose[r + i];
      cols.erase(cols.lower_bound(c), cols.upper_bound(c + width - 1));
      row_start = spec.step(row_start, GridSpec::kBottom);
    }
    result.clusters.push_back({p, label, height, width, session.mistakes() - mistakes_before});
  };

  for (NodeId start = spec.top_left(); start != GridSpec::kNone;
       start = spec.step(start, GridSpec::kBottom))
    for (NodeId v = start; v != GridSpec::kNone; v = spec.step(v, GridSpec::kRight))
      if (!done[v]) finish_cluster(v);

  result.transcript = session.transcript();
  return result;
}

GridWalkerResult run_gridwalker(const GridSpec& spec, LabelSource& source, Label default_label) {
  const Graph g = spec.to_graph();
  Session session(g, source);
  return gridwalker(session, spec, default_label);
}

}  // namespace sdnc
