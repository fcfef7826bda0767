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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdnc/graph.hpp"
#include "sdnc/protocol.hpp"

namespace sdnc {

/// A rows x cols grid given as an n x 4 neighbor matrix. Row v lists the
/// neighbors of node v clockwise (top, right, bottom, left) as 1-based ids,
/// 0 meaning "no neighbor".
class GridSpec {
 public:
  enum Side { kTop = 0, kRight = 1, kBottom = 2, kLeft = 3 };
  using Row = std::array<std::uint32_t, 4>;

  /// Checks that the matrix describes exactly a rows x cols grid with the
  /// clockwise convention; throws kNotGrid otherwise.
  GridSpec(std::size_t rows, std::size_t cols, std::vector<Row> matrix);
  /// Row-major ids r * cols + c.
  static GridSpec standard(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t n() const noexcept { return matrix_.size(); }
  const std::vector<Row>& matrix() const noexcept { return matrix_; }

  /// Neighbor in direction `side`, or kNone.
  static constexpr NodeId kNone = static_cast<NodeId>(-1);
  NodeId step(NodeId v, Side side) const noexcept {
    const auto x = matrix_[v][side];
    return x == 0 ? kNone : x - 1;
  }
  NodeId top_left() const noexcept { return top_left_; }
  std::size_t row_of(NodeId v) const noexcept { return row_[v]; }
  std::size_t col_of(NodeId v) const noexcept { return col_[v]; }
  NodeId node_at(std::size_t r, std::size_t c) const noexcept { return at_[r * cols_ + c]; }

  Graph to_graph() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Row> matrix_;
  NodeId top_left_ = 0;
  std::vector<std::uint32_t> row_, col_;
  std::vector<NodeId> at_;
};

// Text form: "rows cols", then one line of four integers per node.
void write_grid_spec(std::ostream& out, const GridSpec& spec);
GridSpec read_grid_spec(std::istream& in);
GridSpec load_grid_spec(const std::filesystem::path& path);

struct GridCluster {
  NodeId corner;        // top-left node
  Label label;
  std::size_t height, width;
  std::size_t mistakes;  // charged to this cluster
};

struct GridWalkerResult {
  Transcript transcript;
  std::vector<GridCluster> clusters;  // in the order they were completed
};

/// Learner for labelings whose clusters are rectangles (the convex sets of
/// a grid). A row-major sweep finds the top-left corner of the next
/// unfinished cluster, walks right along its top row and down its right
/// column, predicting the cluster label, and then fills the rectangle.
/// Every cluster is charged at most three mistakes: its corner, the step
/// past its right edge and the step past its bottom edge.
GridWalkerResult gridwalker(Session& session, const GridSpec& spec, Label default_label = 0);
GridWalkerResult run_gridwalker(const GridSpec& spec, LabelSource& source,
                                Label default_label = 0);

class GridWalkerLearner final : public Learner {
 public:
  explicit GridWalkerLearner(const GridSpec& spec) : spec_(spec) {}
  std::string name() const override { return "gridwalker"; }
  void play(Session& session) override { last_ = gridwalker(session, spec_); }
  const GridWalkerResult& last() const noexcept { return last_; }

 private:
  const GridSpec& spec_;
  GridWalkerResult last_;
};

}  // namespace sdnc
