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

#include "sdnc/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sdnc/error.hpp"

namespace sdnc {
namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kParse, "cannot write " + path.string());
  return out;
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw Error(ErrorKind::kParse, "edge list header must be \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v))
      throw Error(ErrorKind::kParse, "edge list truncated at edge " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::kNodeOutOfRange,
                  "edge " + std::to_string(i) + " references a node outside [0, n)");
    if (u >= v)
      throw Error(ErrorKind::kParse,
                  "edge " + std::to_string(i) + " must be written with u < v");
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  std::string rest;
  if (in >> rest) throw Error(ErrorKind::kParse, "trailing content after edge list");
  return Graph::build(static_cast<std::size_t>(n), edges);
}

void write_labeling(std::ostream& out, const Labeling& y) {
  for (Label l : y.labels()) out << l << '\n';
}

Labeling read_labeling(std::istream& in, std::size_t expected_n) {
  std::vector<Label> labels;
  long long l = 0;
  while (in >> l) {
    if (l < 0) throw Error(ErrorKind::kParse, "labels must be non-negative");
    labels.push_back(static_cast<Label>(l));
  }
  if (!in.eof()) throw Error(ErrorKind::kParse, "labeling contains a non-integer token");
  if (labels.size() != expected_n)
    throw Error(ErrorKind::kParse, "labeling has " + std::to_string(labels.size()) +
                                       " entries, expected " + std::to_string(expected_n));
  return Labeling::from_labels(std::move(labels));
}

std::string to_edge_list_string(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

void save_edge_list(const std::filesystem::path& path, const Graph& g) {
  auto out = open_out(path);
  write_edge_list(out, g);
}

Graph load_edge_list(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_edge_list(in);
}

void save_labeling(const std::filesystem::path& path, const Labeling& y) {
  auto out = open_out(path);
  write_labeling(out, y);
}

Labeling load_labeling(const std::filesystem::path& path, std::size_t expected_n) {
  auto in = open_in(path);
  return read_labeling(in, expected_n);
}

}  // namespace sdnc
