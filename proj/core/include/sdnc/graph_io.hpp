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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "sdnc/graph.hpp"
#include "sdnc/labeling.hpp"

namespace sdnc {

// Edge list: "n m" then m lines "u v" with u < v, ascending, LF endings.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

// Labeling: n lines, one integer label each.
void write_labeling(std::ostream& out, const Labeling& y);
Labeling read_labeling(std::istream& in, std::size_t expected_n);

std::string to_edge_list_string(const Graph& g);

void save_edge_list(const std::filesystem::path& path, const Graph& g);
Graph load_edge_list(const std::filesystem::path& path);
void save_labeling(const std::filesystem::path& path, const Labeling& y);
Labeling load_labeling(const std::filesystem::path& path, std::size_t expected_n);

}  // namespace sdnc
