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
#include <string>
#include <string_view>
#include <vector>

#include "sdnc/graph.hpp"
#include "sdnc/intervals.hpp"
#include "sdnc/labeling.hpp"
#include "sdnc/random.hpp"

namespace sdnc {

enum class Family { kPath, kCycle, kTree, kGrid, kKTree, kCliquePlusPath, kComplete };

std::string_view to_string(Family f);
/// Accepts the names produced by to_string; throws kParse otherwise.
Family parse_family(std::string_view name);

struct FamilyParams {
  std::size_t n = 0;     // path, cycle, tree, k_tree, clique_plus_path, complete
  std::size_t rows = 0;  // grid
  std::size_t cols = 0;  // grid
  std::size_t k = 0;     // k_tree
  std::size_t h = 0;     // clique_plus_path
};

/// A generated graph with a minor-freeness certificate: the family is
/// known to exclude K_w as a minor.
struct FamilyInstance {
  Graph graph;
  Family family;
  FamilyParams params;
  std::size_t w;
};

// Deterministic families. Grids use row-major ids r * cols + c.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph grid_graph(std::size_t rows, std::size_t cols);
/// K_h on 0..h-1 plus a path h..n-1 attached to node 0.
Graph clique_plus_path_graph(std::size_t h, std::size_t n);

/// Uniform labeled tree from a random Pruefer sequence.
Graph random_tree(std::size_t n, Rng& rng);
/// Start from K_{k+1}; every further node joins a uniformly chosen k-clique.
Graph random_k_tree(std::size_t n, std::size_t k, Rng& rng);

/// Throws kInvalidArgument on sizes the family cannot realize.
FamilyInstance gen_graph(Family family, const FamilyParams& params, Rng& rng);

/// A random convex bipartition, verified before it is returned. Trees cut
/// one edge, grids split along one axis, paths and cycles take arcs,
/// complete graphs take any subset, other graphs with n <= 20 sample the
/// full enumeration, and the rest grow a convex hull until the complement
/// is convex too (kGeneratorExhausted after repeated failures).
Labeling gen_convex_bipartition(const FamilyInstance& inst, const IntervalTable& it, Rng& rng);

/// Flips exactly m distinct nodes of a binary labeling.
Labeling flip_labels(const Labeling& y, std::size_t m, Rng& rng);

struct HomophilicLabeling {
  Labeling labeling;
  std::size_t border;  // measured |cut_border|
};

/// Grows a BFS ball from a random root and keeps the prefix whose cut
/// border is at most `border_target`. If no prefix qualifies the one with
/// the smallest border is returned; `border` always holds the real value.
HomophilicLabeling gen_homophilic(const Graph& g, std::size_t border_target, Rng& rng);

struct StripPartition {
  std::size_t rows = 0, cols = 0, k = 0;
  std::vector<std::size_t> band_of_col;  // band index of every column
  std::vector<Label> permutation;        // label of every band
  Labeling labeling;
};

/// k contiguous bands of columns, with a random cut of the columns and a
/// uniformly random assignment of the labels 0..k-1 to the bands.
StripPartition gen_strip_partition(std::size_t rows, std::size_t cols, std::size_t k, Rng& rng);

/// Convex k-labeling of a tree: cut k-1 distinct random edges and label the
/// components by a random permutation of 0..k-1.
Labeling gen_tree_multiclass(const Graph& tree, std::size_t k, Rng& rng);

}  // namespace sdnc
