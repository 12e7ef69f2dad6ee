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

// Minimising delta over the sets between X and W.
//
// delta(X u T) = delta(X) + n|T| - sum of weights of instances whose members
// outside X all lie in T. Maximising the bracket is a maximum-weight closure
// problem, so one s-t minimum cut gives the minimum. Because delta is
// submodular the minimisers form a lattice: the source side of the residual
// graph is the least minimiser, and the vertices that cannot reach the sink
// form the greatest one.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "predimlab/predimension.hpp"

namespace predimlab {

/// Dinic's algorithm on an adjacency-list residual graph.
class MaxFlow {
 public:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(std::size_t nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

  void add_edge(std::size_t u, std::size_t v, std::int64_t cap) {
    edges_.push_back({v, cap, head_[u]});
    head_[u] = static_cast<int>(edges_.size() - 1);
    edges_.push_back({u, 0, head_[v]});
    head_[v] = static_cast<int>(edges_.size() - 1);
  }

  std::int64_t run(std::size_t s, std::size_t t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      for (std::size_t i = 0; i < head_.size(); ++i) it_[i] = head_[i];
      while (std::int64_t f = dfs(s, t, kInf)) flow += f;
    }
    return flow;
  }

  /// Nodes reachable from s along edges with residual capacity.
  std::vector<char> reachable_from(std::size_t s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (int e = head_[u]; e >= 0; e = edges_[e].next)
        if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
          seen[edges_[e].to] = 1;
          stack.push_back(edges_[e].to);
        }
    }
    return seen;
  }

  /// Nodes that can still reach t along edges with residual capacity.
  std::vector<char> reaching(std::size_t t) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{t};
    seen[t] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      // Edge e^1 runs u -> v when e runs v -> u.
      for (int e = head_[v]; e >= 0; e = edges_[e].next) {
        const auto u = edges_[e].to;
        if (edges_[e ^ 1].cap > 0 && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    std::size_t to;
    std::int64_t cap;
    int next;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = edges_[e].next)
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          q.push(edges_[e].to);
        }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t u, std::size_t t, std::int64_t pushed) {
    if (u == t) return pushed;
    for (int& e = it_[u]; e >= 0; e = edges_[e].next) {
      auto& ed = edges_[e];
      if (ed.cap <= 0 || level_[ed.to] != level_[u] + 1) continue;
      if (std::int64_t got = dfs(ed.to, t, std::min(pushed, ed.cap))) {
        ed.cap -= got;
        edges_[e ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<int> it_;
};

struct SupersetMinimum {
  std::int64_t value = 0;
  VertexSet smallest;  // least minimiser
  VertexSet largest;   // greatest minimiser
};

/// min delta(Y) over X subset Y subset W, with the least and greatest minimisers.
inline SupersetMinimum minimize_superset(const FiniteStructure& s, const VertexSet& x, const VertexSet& within) {
  detail::require_universe(s, x);
  detail::require_universe(s, within);
  if (!x.is_subset_of(within)) throw ContractError("minimize_superset: X is not inside the bounding set");
  const auto n = s.signature().vertex_weight();
  const auto& rels = s.signature().relations();

  std::vector<int> node_of(s.order(), -1);
  const auto free = (within - x).positions();
  for (std::size_t i = 0; i < free.size(); ++i) node_of[free[i]] = static_cast<int>(2 + i);

  struct Item {
    std::int64_t w;
    std::vector<int> nodes;
  };
  std::vector<Item> items;
  for (const auto& inst : s.instances()) {
    const auto w = rels[inst.relation].weight;
    if (w == 0) continue;
    Item it{w, {}};
    bool ok = true;
    for (auto p : inst.members) {
      if (node_of[p] >= 0)
        it.nodes.push_back(node_of[p]);
      else if (!x.contains(p)) {
        ok = false;
        break;
      }
    }
    if (ok && !it.nodes.empty()) items.push_back(std::move(it));
  }

  const std::size_t src = 0, snk = 1;
  MaxFlow g(2 + free.size() + items.size());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::size_t node = 2 + free.size() + i;
    g.add_edge(src, node, items[i].w);
    total += items[i].w;
    for (int v : items[i].nodes) g.add_edge(node, static_cast<std::size_t>(v), MaxFlow::kInf);
  }
  for (std::size_t i = 0; i < free.size(); ++i) g.add_edge(2 + i, snk, n);
  const std::int64_t cut = g.run(src, snk);

  SupersetMinimum r;
  r.value = delta(s, x) - (total - cut);
  r.smallest = x;
  r.largest = x;
  const auto from_src = g.reachable_from(src);
  const auto to_snk = g.reaching(snk);
  for (std::size_t i = 0; i < free.size(); ++i) {
    if (from_src[2 + i]) r.smallest.insert(free[i]);
    if (!to_snk[2 + i]) r.largest.insert(free[i]);
  }
  return r;
}

inline SupersetMinimum minimize_superset(const FiniteStructure& s, const VertexSet& x) {
  return minimize_superset(s, x, s.all());
}

inline SelfSufficiency is_self_sufficient_flow(const FiniteStructure& s, const VertexSet& a, const VertexSet& b) {
  SelfSufficiency r;
  r.base_delta = delta(s, a);
  auto m = minimize_superset(s, a, b);
  if (m.value < r.base_delta) {
    r.holds = false;
    r.witness = m.smallest;
    r.witness_delta = m.value;
  }
  return r;
}

}  // namespace predimlab
