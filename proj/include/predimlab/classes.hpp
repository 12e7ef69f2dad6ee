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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "predimlab/closure.hpp"
#include "predimlab/control_function.hpp"
#include "predimlab/limits.hpp"
#include "predimlab/min_cut.hpp"
#include "predimlab/predimension.hpp"
#include "predimlab/subsets.hpp"

namespace predimlab {

struct MembershipOptions {
  std::size_t exhaustive_cap = Caps{}.membership;
  std::size_t connected_k = Caps{}.connected_k;
  std::size_t samples = Caps{}.samples;
  std::uint64_t seed = 1;
  /// Restricts the connected-subset pass to sets whose least vertex is one of
  /// these positions; only sound when every orbit of the structure's
  /// automorphisms meets them.
  std::vector<std::size_t> roots;
  std::size_t max_cycles = 200000;
};

struct Membership {
  bool member = true;
  bool partial = false;            // true when not every subset was examined
  std::optional<VertexSet> witness;
  Rational margin = 0;             // least (value - bound) over examined sets
  std::string condition;           // the failed condition, if any
  std::uint64_t checked = 0;

  explicit operator bool() const noexcept { return member; }
};

/// C0: delta(X) >= 0 for all X. Exact for any size: the least delta over all
/// subsets is one minimum cut away. The witness is the smallest set of least delta.
inline Membership in_C0(const FiniteStructure& s) {
  Membership r;
  const auto m = minimize_superset(s, s.none());
  r.margin = m.value;
  if (m.value < 0) {
    r.member = false;
    r.witness = m.smallest;
    r.condition = "delta >= 0";
  }
  return r;
}

/// C_f: in C0 and delta(X) >= f(|X|) for all X. Exhaustive up to the cap;
/// above it, all connected sets up to connected_k vertices plus seeded random
/// connected sets are examined and the verdict is marked partial.
inline Membership in_Cf(const FiniteStructure& s, const ControlFunction& f, const MembershipOptions& opt = {}) {
  Membership r = in_C0(s);
  if (!r.member) return r;
  const std::size_t k = s.order();
  const auto th = f.thresholds(k);
  const std::int64_t sentinel = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> best(k + 1, sentinel);
  std::vector<std::optional<VertexSet>> best_set(k + 1);
  r.margin = 0;

  auto consider = [&](const VertexSet& x, std::int64_t d) {
    const auto sz = x.size();
    if (d < best[sz] || (d == best[sz] && best_set[sz] && mask_less(x, *best_set[sz]))) {
      best[sz] = d;
      best_set[sz] = x;
    }
  };

  if (k <= opt.exhaustive_cap) {
    SubsetEngine eng(s, s.none(), s.all(), opt.exhaustive_cap);
    std::vector<std::uint64_t> best_mask(k + 1, 0);
    eng.for_each([&](std::uint64_t mask, std::int64_t d) {
      const auto sz = static_cast<std::size_t>(std::popcount(mask));
      if (d < best[sz] || (d == best[sz] && mask < best_mask[sz])) {
        best[sz] = d;
        best_mask[sz] = mask;
      }
      ++r.checked;
      return true;
    });
    for (std::size_t sz = 0; sz <= k; ++sz)
      if (best[sz] != sentinel) best_set[sz] = eng.to_set(best_mask[sz]);
  } else {
    r.partial = true;
    for_each_connected_subset(
        s, opt.connected_k,
        [&](const std::vector<std::uint32_t>& members, std::int64_t d) {
          if (d <= best[members.size()]) {
            VertexSet x(k);
            for (auto p : members) x.insert(p);
            consider(x, d);
          }
          ++r.checked;
          return true;
        },
        opt.roots);
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> size_dist(1, std::max<std::size_t>(k, 1));
    for (std::size_t i = 0; i < opt.samples && k > 0; ++i) {
      auto x = random_connected_subset(s, size_dist(rng), rng);
      consider(x, delta(s, x));
      ++r.checked;
    }
  }

  bool first = true;
  for (std::size_t sz = 1; sz <= k; ++sz) {
    if (best[sz] == sentinel) continue;
    const Rational m = Rational(best[sz]) - f.eval(sz);
    if (first || m < r.margin) r.margin = m;
    first = false;
    if (r.member && best[sz] < th[sz]) {
      r.member = false;
      r.witness = best_set[sz];
      r.condition = "delta >= f(|X|)";
    }
  }
  return r;
}

struct GirthResult {
  std::optional<std::size_t> length;  // empty for forests
  std::vector<std::size_t> cycle;     // a shortest cycle, in order
};

namespace detail {
inline std::vector<std::vector<std::size_t>> binary_adjacency(const FiniteStructure& s) {
  bool any = false;
  for (const auto& r : s.signature().relations()) any = any || r.arity == 2;
  if (!any) throw InputError("girth needs a binary relation");
  std::vector<std::vector<std::size_t>> adj(s.order());
  for (const auto& inst : s.instances()) {
    if (inst.members.size() != 2) continue;
    adj[inst.members[0]].push_back(inst.members[1]);
    adj[inst.members[1]].push_back(inst.members[0]);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}
}  // namespace detail

/// Shortest cycle length in the graph of binary instances, by a BFS from
/// every vertex.
inline GirthResult girth(const FiniteStructure& s) {
  const auto adj = detail::binary_adjacency(s);
  const std::size_t k = s.order();
  GirthResult best;
  std::vector<int> dist(k), parent(k);
  for (std::size_t root = 0; root < k; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<std::size_t> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      if (best.length && static_cast<std::size_t>(2 * dist[u] + 1) >= *best.length) break;
      for (auto w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = static_cast<int>(u);
          q.push(w);
        } else if (parent[u] != static_cast<int>(w)) {
          const auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
          if (!best.length || len < *best.length) {
            best.length = len;
            std::vector<std::size_t> left, right;
            for (int x = static_cast<int>(u); x >= 0; x = parent[x]) left.push_back(static_cast<std::size_t>(x));
            for (int x = static_cast<int>(w); x >= 0; x = parent[x]) right.push_back(static_cast<std::size_t>(x));
            right.pop_back();  // root already in left
            std::reverse(left.begin(), left.end());
            best.cycle = left;
            best.cycle.insert(best.cycle.end(), right.begin(), right.end());
          }
        }
      }
    }
  }
  return best;
}

/// Calls visit(cycle) for each simple cycle of the binary-instance graph once
/// (least vertex first, second vertex below the last). Stops after `limit`
/// cycles; returns false if it had to stop early.
template <typename Visit>
bool for_each_simple_cycle(const FiniteStructure& s, std::size_t limit, Visit&& visit) {
  const auto adj = detail::binary_adjacency(s);
  const std::size_t k = s.order();
  std::vector<char> on_path(k, 0);
  std::vector<std::size_t> path;
  std::size_t found = 0;
  bool complete = true;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t u) {
    for (auto w : adj[u]) {
      if (!complete) return;
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        if (found++ >= limit) {
          complete = false;
          return;
        }
        visit(static_cast<const std::vector<std::size_t>&>(path));
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(w);
        dfs(start, w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (std::size_t v = 0; v < k && complete; ++v) {
    path = {v};
    on_path[v] = 1;
    dfs(v, v);
    on_path[v] = 0;
  }
  return complete;
}

/// K_n for the generalized n-gon signature: no 2m-cycle with m < n, every set
/// containing a 2m-cycle with m > n has delta >= 2n + 2, and the structure is
/// in C0. The second condition reduces to d(V(C)) >= 2n + 2 for each long
/// cycle C, since the least delta over sets containing C is d(V(C)).
inline Membership in_Kn(const FiniteStructure& s, int n_gon, const MembershipOptions& opt = {}) {
  if (s.signature().mode() != Mode::Bipartite) throw InputError("K_n membership needs a bipartite structure");
  if (!(s.signature() == Signature::polygon(n_gon)))
    throw InputError("K_n membership needs the polygon weights (n-1, n-2) for n = " + std::to_string(n_gon));
  Membership r;
  const std::size_t limit = 2 * static_cast<std::size_t>(n_gon);
  const auto g = girth(s);
  if (g.length && *g.length < limit) {
    r.member = false;
    r.condition = "no 2m-cycle with m < n";
    r.witness = VertexSet(s.order());
    for (auto p : g.cycle) r.witness->insert(p);
    r.margin = Rational(static_cast<std::int64_t>(*g.length)) - Rational(static_cast<std::int64_t>(limit));
    return r;
  }
  Membership c0 = in_C0(s);
  if (!c0.member) {
    c0.condition = "C0";
    return c0;
  }
  const std::int64_t need = 2 * n_gon + 2;
  bool have_margin = false;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  const bool complete = for_each_simple_cycle(s, opt.max_cycles, [&](const std::vector<std::size_t>& cyc) {
    ++r.checked;
    if (cyc.size() <= limit || !r.member) return;
    VertexSet v(s.order());
    for (auto p : cyc) v.insert(p);
    if (!seen.insert(v).second) return;
    const auto m = minimize_superset(s, v);
    const Rational margin = Rational(m.value - need);
    if (!have_margin || margin < r.margin) r.margin = margin;
    have_margin = true;
    if (m.value < need) {
      r.member = false;
      r.condition = "delta >= 2n+2 over long cycles";
      r.witness = m.smallest;
    }
  });
  r.partial = !complete && r.member;
  return r;
}

}  // namespace predimlab
