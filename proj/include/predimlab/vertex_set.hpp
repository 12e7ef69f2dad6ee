// Copyright 2026 The Authors.
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
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace predimlab {

/// A subset of a structure's vertex positions, stored as a dynamic bitmask.
///
/// Positions are indices into the owning structure's sorted vertex list, not
/// external vertex ids. All binary operations require equal universes.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members) : VertexSet(universe) {
    for (auto p : members) insert(p);
  }

  static VertexSet from_positions(std::size_t universe, std::span<const std::size_t> members) {
    VertexSet s(universe);
    for (auto p : members) s.insert(p);
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  /// Positions of the low bits of `mask` taken from `positions` (bit i -> positions[i]).
  static VertexSet from_mask(std::size_t universe, std::span<const std::size_t> positions, std::uint64_t mask) {
    VertexSet s(universe);
    while (mask != 0) {
      const int bit = std::countr_zero(mask);
      s.insert(positions[static_cast<std::size_t>(bit)]);
      mask &= mask - 1;
    }
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t p) const noexcept {
    return p < universe_ && ((words_[p / 64] >> (p % 64)) & 1U) != 0;
  }

  void insert(std::size_t p) {
    check(p);
    words_[p / 64] |= std::uint64_t{1} << (p % 64);
  }

  void erase(std::size_t p) {
    check(p);
    words_[p / 64] &= ~(std::uint64_t{1} << (p % 64));
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within the universe.
  VertexSet operator~() const {
    VertexSet s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  VertexSet with(std::size_t p) const {
    VertexSet s = *this;
    s.insert(p);
    return s;
  }

  std::vector<std::size_t> positions() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t p) { out.push_back(p); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        f(i * 64 + static_cast<std::size_t>(bit));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Total order: compares the sets as binary numbers with position 0 least
  /// significant. This is the "least bitmask" order used for tie-breaking.
  friend bool mask_less(const VertexSet& a, const VertexSet& b) {
    a.same_universe(b);
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    }
    return false;
  }

  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
    return mask_less(a, b);
  }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(universe_);
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check(std::size_t p) const {
    if (p >= universe_) throw std::out_of_range("vertex position outside structure");
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw std::invalid_argument("vertex sets over different structures");
  }
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Prints positions, e.g. {0,3,4}.
inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  s.for_each([&](std::size_t p) {
    os << (first ? "" : ",") << p;
    first = false;
  });
  return os << '}';
}

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace predimlab
