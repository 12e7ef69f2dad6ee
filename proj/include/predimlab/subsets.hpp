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

// Enumeration of connected vertex sets (connectivity in the primal graph:
// two vertices are adjacent when some instance contains both).

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "predimlab/structure.hpp"

namespace predimlab {

/// Incremental delta over a growing and shrinking vertex set.
class DeltaTracker {
 public:
  explicit DeltaTracker(const FiniteStructure& s) : s_(&s), in_(s.order(), 0), inside_(s.instances().size(), 0) {}

  std::int64_t value() const noexcept { return value_; }
  bool contains(std::size_t p) const noexcept { return in_[p] != 0; }

  void add(std::size_t p) {
    in_[p] = 1;
    value_ += s_->signature().vertex_weight();
    for (auto idx : s_->incident(p)) {
      const auto& inst = s_->instances()[idx];
      if (++inside_[idx] == inst.members.size()) value_ -= s_->signature().relations()[inst.relation].weight;
    }
  }

  void remove(std::size_t p) {
    in_[p] = 0;
    value_ -= s_->signature().vertex_weight();
    for (auto idx : s_->incident(p)) {
      const auto& inst = s_->instances()[idx];
      if (inside_[idx]-- == inst.members.size()) value_ += s_->signature().relations()[inst.relation].weight;
    }
  }

 private:
  const FiniteStructure* s_;
  std::vector<char> in_;
  std::vector<std::size_t> inside_;
  std::int64_t value_ = 0;
};

namespace detail {

template <typename Visit>
struct ConnectedWalker {
  const FiniteStructure& s;
  std::size_t max_size;
  Visit& visit;
  DeltaTracker tracker;
  std::vector<std::uint32_t> current;
  std::vector<int> near;  // how many members of `current` are equal or adjacent
  std::size_t root = 0;
  bool stopped = false;

  ConnectedWalker(const FiniteStructure& st, std::size_t k, Visit& v)
      : s(st), max_size(k), visit(v), tracker(st), near(st.order(), 0) {}

  void push(std::size_t w) {
    current.push_back(static_cast<std::uint32_t>(w));
    tracker.add(w);
    ++near[w];
    for (auto u : s.neighbours(w)) ++near[u];
  }
  void pop() {
    const auto w = current.back();
    current.pop_back();
    tracker.remove(w);
    --near[w];
    for (auto u : s.neighbours(w)) --near[u];
  }

  // Each connected set whose least position is `root` is produced once.
  void extend(std::vector<std::uint32_t> ext) {
    if (!visit(static_cast<const std::vector<std::uint32_t>&>(current), tracker.value())) {
      stopped = true;
      return;
    }
    if (current.size() >= max_size) return;
    while (!ext.empty() && !stopped) {
      const auto w = ext.back();
      ext.pop_back();
      std::vector<std::uint32_t> next = ext;
      for (auto u : s.neighbours(w))
        if (u > root && near[u] == 0) next.push_back(u);
      push(w);
      extend(std::move(next));
      pop();
    }
  }
};

}  // namespace detail

/// Calls visit(members, delta) for every connected set of at most `max_size`
/// vertices whose least position lies in `roots` (all positions if empty).
/// `members` lists positions in insertion order. Returning false stops.
template <typename Visit>
void for_each_connected_subset(const FiniteStructure& s, std::size_t max_size, Visit&& visit,
                               const std::vector<std::size_t>& roots = {}) {
  if (max_size == 0) return;
  detail::ConnectedWalker<Visit> w(s, max_size, visit);
  auto run = [&](std::size_t v) {
    w.root = v;
    std::vector<std::uint32_t> ext;
    for (auto u : s.neighbours(v))
      if (u > v) ext.push_back(u);
    w.push(v);
    w.extend(std::move(ext));
    w.pop();
  };
  if (roots.empty()) {
    for (std::size_t v = 0; v < s.order() && !w.stopped; ++v) run(v);
  } else {
    for (auto v : roots) {
      if (w.stopped) break;
      run(v);
    }
  }
}

/// A random connected set: start at a uniform vertex and add uniformly chosen
/// boundary vertices until `size` is reached or the component is exhausted.
inline VertexSet random_connected_subset(const FiniteStructure& s, std::size_t size, std::mt19937_64& rng) {
  VertexSet out(s.order());
  if (s.order() == 0 || size == 0) return out;
  std::vector<std::size_t> frontier;
  std::vector<char> queued(s.order(), 0);
  std::uniform_int_distribution<std::size_t> pick_start(0, s.order() - 1);
  frontier.push_back(pick_start(rng));
  queued[frontier.back()] = 1;
  while (!frontier.empty() && out.size() < size) {
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    const auto i = pick(rng);
    const auto v = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    out.insert(v);
    for (auto u : s.neighbours(v))
      if (!queued[u]) {
        queued[u] = 1;
        frontier.push_back(u);
      }
  }
  return out;
}

/// Connected components of the primal graph restricted to `x`.
inline std::vector<VertexSet> components(const FiniteStructure& s, const VertexSet& x) {
  std::vector<VertexSet> out;
  VertexSet left = x;
  while (!left.empty()) {
    const std::size_t start = left.positions().front();
    VertexSet comp(s.order());
    std::vector<std::size_t> stack{start};
    comp.insert(start);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto u : s.neighbours(v))
        if (x.contains(u) && !comp.contains(u)) {
          comp.insert(u);
          stack.push_back(u);
        }
    }
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const FiniteStructure& s, const VertexSet& x) { return components(s, x).size() <= 1; }

}  // namespace predimlab
