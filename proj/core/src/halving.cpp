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

#include "sdnc/halving.hpp"

#include <algorithm>
#include <string>

#include "sdnc/error.hpp"

namespace sdnc {

VersionSpace::VersionSpace(std::size_t n, std::vector<std::uint32_t> masks)
    : n_(n), masks_(std::move(masks)) {
  if (n > kVersionSpaceMaxNodes)
    throw Error(ErrorKind::kSizeLimit, "version spaces are limited to " +
                                           std::to_string(kVersionSpaceMaxNodes) + " nodes");
}

Labeling VersionSpace::at(std::size_t i) const {
  std::vector<Label> labels(n_);
  for (std::size_t v = 0; v < n_; ++v) labels[v] = (masks_[i] >> v) & 1u;
  return Labeling(std::move(labels), 2);
}

std::uint32_t VersionSpace::mask_of(const Labeling& y) {
  if (!y.is_binary() || y.n() > kVersionSpaceMaxNodes)
    throw Error(ErrorKind::kInvalidArgument, "mask_of needs a binary labeling on <= 20 nodes");
  std::uint32_t m = 0;
  for (std::size_t v = 0; v < y.n(); ++v)
    if (y[static_cast<NodeId>(v)]) m |= std::uint32_t{1} << v;
  return m;
}

bool VersionSpace::contains(const Labeling& y) const {
  if (y.n() != n_ || !y.is_binary()) return false;
  const auto m = mask_of(y);
  return std::find(masks_.begin(), masks_.end(), m) != masks_.end();
}

std::size_t VersionSpace::votes_for_one(NodeId v) const noexcept {
  std::size_t c = 0;
  for (auto m : masks_) c += (m >> v) & 1u;
  return c;
}

void VersionSpace::filter(NodeId v, Label label) {
  std::erase_if(masks_, [&](std::uint32_t m) { return ((m >> v) & 1u) != label; });
}

VersionSpace enumerate_convex_bipartitions(const IntervalTable& it) {
  const std::size_t n = it.n();
  if (n > kVersionSpaceMaxNodes)
    throw Error(ErrorKind::kSizeLimit, "enumerate_convex_bipartitions supports n <= " +
                                           std::to_string(kVersionSpaceMaxNodes));
  struct PairMask {
    std::uint32_t ends;
    std::uint32_t interval;
  };
  std::vector<PairMask> pairs;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) {
      std::uint32_t m = 0;
      it(u, v).for_each([&](NodeId x) { m |= std::uint32_t{1} << x; });
      // Adjacent pairs have trivial intervals and never constrain anything.
      if (m != ((std::uint32_t{1} << u) | (std::uint32_t{1} << v)))
        pairs.push_back({(std::uint32_t{1} << u) | (std::uint32_t{1} << v), m});
    }
  const std::uint32_t full = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
  auto convex = [&](std::uint32_t a) {
    for (const auto& p : pairs)
      if ((p.ends & a) == p.ends && (p.interval & ~a)) return false;
    return true;
  };
  std::vector<std::uint32_t> masks;
  for (std::uint64_t a = 0; a <= full; ++a) {
    const auto m = static_cast<std::uint32_t>(a);
    if (convex(m) && convex(full & ~m)) masks.push_back(m);
  }
  return VersionSpace(n, std::move(masks));
}

HalvingResult halving(Session& session, VersionSpace space) {
  HalvingResult r;
  r.initial_size = space.size();
  r.realizable = !space.empty();
  for (NodeId v = 0; v < session.n(); ++v) {
    if (session.known(v)) continue;
    const std::size_t before = space.size();
    r.sizes.push_back(before);
    Label predicted = 0;
    if (!space.empty()) predicted = 2 * space.votes_for_one(v) > before ? 1 : 0;
    const Label observed = session.query(v, predicted);
    if (space.empty()) continue;
    space.filter(v, observed);
    if (space.empty()) r.realizable = false;
    if (predicted != observed && space.size() > before / 2) ++r.halving_failures;
  }
  r.transcript = session.transcript();
  return r;
}

HalvingResult run_halving(const Graph& g, const IntervalTable& it, LabelSource& source) {
  Session session(g, source);
  return halving(session, enumerate_convex_bipartitions(it));
}

}  // namespace sdnc
