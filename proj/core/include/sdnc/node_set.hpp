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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sdnc {

using NodeId = std::uint32_t;

/// Fixed-width bit-packed set of node ids in [0, width).
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t width)
      : width_(width), words_((width + 63) / 64, 0) {}
  NodeSet(std::size_t width, std::initializer_list<NodeId> members)
      : NodeSet(width) {
    for (NodeId v : members) insert(v);
  }

  static NodeSet full(std::size_t width) {
    NodeSet s(width);
    for (std::size_t v = 0; v < width; ++v) s.insert(static_cast<NodeId>(v));
    return s;
  }

  std::size_t width() const noexcept { return width_; }

  bool contains(NodeId v) const noexcept {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(NodeId v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(NodeId v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool intersects(const NodeSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const NodeSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  NodeSet& operator|=(const NodeSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  NodeSet& operator&=(const NodeSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  NodeSet& subtract(const NodeSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  NodeSet complement() const {
    NodeSet out(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.trim();
    return out;
  }

  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
  friend bool operator==(const NodeSet&, const NodeSet&) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int bit = std::countr_zero(w);
        fn(static_cast<NodeId>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  /// Members in ascending order.
  std::vector<NodeId> members() const {
    std::vector<NodeId> out;
    out.reserve(size());
    for_each([&](NodeId v) { out.push_back(v); });
    return out;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  void trim() noexcept {
    if (width_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
  }

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sdnc
