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

// Brute-force reference implementations. These deliberately share nothing
// with the library's engines beyond the structure type: every value is
// recomputed from the raw instance list by plain subset enumeration.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "predimlab/structure.hpp"

namespace oracle {

using predimlab::FiniteStructure;

using Mask = std::uint64_t;

inline std::int64_t delta(const FiniteStructure& s, Mask x) {
  std::int64_t d = s.signature().vertex_weight() * static_cast<std::int64_t>(__builtin_popcountll(x));
  for (const auto& inst : s.instances()) {
    bool in = true;
    for (auto p : inst.members) in = in && ((x >> p) & 1U);
    if (in) d -= s.signature().relations()[inst.relation].weight;
  }
  return d;
}

inline Mask full(const FiniteStructure& s) { return s.order() == 64 ? ~Mask{0} : (Mask{1} << s.order()) - 1; }

template <typename F>
void for_supersets(Mask x, Mask universe, F&& f) {
  const Mask free = universe & ~x;
  Mask t = 0;
  do {
    f(x | t);
    t = (t - free) & free;
  } while (t != 0);
}

/// min delta(Y) for x subset Y subset within.
inline std::int64_t dim(const FiniteStructure& s, Mask x, std::optional<Mask> within = std::nullopt) {
  std::int64_t best = delta(s, x);
  for_supersets(x, within.value_or(full(s)), [&](Mask y) { best = std::min(best, delta(s, y)); });
  return best;
}

inline bool self_sufficient(const FiniteStructure& s, Mask a, Mask b) {
  const auto da = delta(s, a);
  bool ok = true;
  for_supersets(a, b, [&](Mask y) { ok = ok && delta(s, y) >= da; });
  return ok;
}

/// Least (delta, size, mask) violating set between a and b, if any.
inline std::optional<Mask> ss_witness(const FiniteStructure& s, Mask a, Mask b) {
  const auto da = delta(s, a);
  std::optional<Mask> best;
  std::int64_t bd = 0;
  for_supersets(a, b, [&](Mask y) {
    const auto d = delta(s, y);
    if (d >= da) return;
    const int sz = __builtin_popcountll(y);
    if (!best || d < bd || (d == bd && (sz < __builtin_popcountll(*best) || (sz == __builtin_popcountll(*best) && y < *best)))) {
      best = y;
      bd = d;
    }
  });
  return best;
}

/// Intersection of all self-sufficient supersets.
inline Mask cl0(const FiniteStructure& s, Mask x) {
  Mask acc = full(s);
  for_supersets(x, full(s), [&](Mask y) {
    if (self_sufficient(s, y, full(s))) acc &= y;
  });
  return acc;
}

inline Mask cld(const FiniteStructure& s, Mask x) {
  const auto d = dim(s, x);
  Mask out = 0;
  for (std::size_t p = 0; p < s.order(); ++p)
    if (dim(s, x | (Mask{1} << p)) == d) out |= Mask{1} << p;
  return out;
}

inline bool in_c0(const FiniteStructure& s) {
  bool ok = true;
  for_supersets(0, full(s), [&](Mask y) { ok = ok && delta(s, y) >= 0; });
  return ok;
}

/// Tables over every subset, for ambients up to ~16 vertices: delta by
/// direct count, d by a plain superset-minimum sweep, and the closures read
/// off those tables.
struct Tables {
  const FiniteStructure& s;
  std::vector<std::int64_t> dl, dm;

  explicit Tables(const FiniteStructure& st) : s(st), dl(std::size_t{1} << st.order()), dm(dl.size()) {
    for (Mask m = 0; m < dl.size(); ++m) dl[m] = oracle::delta(st, m);
    dm = dl;
    for (Mask m = dm.size(); m-- > 0;)
      for (std::size_t p = 0; p < st.order(); ++p)
        if (!((m >> p) & 1U)) dm[m] = std::min(dm[m], dm[m | (Mask{1} << p)]);
  }

  std::int64_t dim(Mask x) const { return dm[x]; }
  bool closed_in_s(Mask y) const { return dm[y] == dl[y]; }
  /// Intersection of the self-sufficient supersets of x.
  Mask cl0(Mask x) const {
    Mask acc = full(s);
    for_supersets(x, full(s), [&](Mask y) {
      if (closed_in_s(y)) acc &= y;
    });
    return acc;
  }
  Mask cld(Mask x) const {
    Mask out = 0;
    for (std::size_t p = 0; p < s.order(); ++p)
      if (dm[x | (Mask{1} << p)] == dm[x]) out |= Mask{1} << p;
    return out;
  }
};

/// Random structure on k vertices: each possible r-set becomes an instance
/// with probability p.
inline FiniteStructure random_structure(const predimlab::Signature& sig, std::size_t k, double p, std::mt19937_64& rng) {
  predimlab::StructureBuilder b(sig);
  for (std::size_t i = 0; i < k; ++i) b.add_vertex(static_cast<predimlab::VertexId>(i));
  std::bernoulli_distribution coin(p);
  for (std::size_t rel = 0; rel < sig.relations().size(); ++rel) {
    const int r = sig.relations()[rel].arity;
    if (static_cast<std::size_t>(r) > k) continue;
    for (Mask m = 0; m < (Mask{1} << k); ++m) {
      if (__builtin_popcountll(m) != r || !coin(rng)) continue;
      std::vector<predimlab::VertexId> members;
      for (std::size_t i = 0; i < k; ++i)
        if ((m >> i) & 1U) members.push_back(static_cast<predimlab::VertexId>(i));
      b.add_instance(rel, members);
    }
  }
  return b.build();
}

/// Every graph on k labelled vertices (relation 0 binary), by edge mask.
inline FiniteStructure graph_from_mask(const predimlab::Signature& sig, std::size_t k, Mask edges) {
  predimlab::StructureBuilder b(sig);
  for (std::size_t i = 0; i < k; ++i) b.add_vertex(static_cast<predimlab::VertexId>(i));
  std::size_t bit = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j, ++bit)
      if ((edges >> bit) & 1U) b.add_edge(static_cast<predimlab::VertexId>(i), static_cast<predimlab::VertexId>(j));
  return b.build();
}

}  // namespace oracle
