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

// Closures and dimension inside a finite ambient structure. Every value here
// is relative to the ambient; nothing is claimed about a generic limit.

#include <cstdint>
#include <vector>

#include "predimlab/errors.hpp"
#include "predimlab/min_cut.hpp"
#include "predimlab/predimension.hpp"

namespace predimlab {

struct ClosureResult {
  VertexSet closure;
  std::int64_t dimension = 0;
  std::vector<VertexSet> trace;  // absorbed sets, in order
};

/// Smallest Y with X subset Y <= S. Absorbs, while Y is not self-sufficient,
/// the violating superset of least delta, then least size; that set is
/// itself self-sufficient, so the trace has at most one entry.
inline ClosureResult cl0(const FiniteStructure& s, const VertexSet& x) {
  detail::require_universe(s, x);
  ClosureResult r;
  r.closure = x;
  for (;;) {
    const auto m = minimize_superset(s, r.closure);
    const auto here = delta(s, r.closure);
    if (m.value >= here) {
      r.dimension = here;
      break;
    }
    r.trace.push_back(m.smallest - r.closure);
    r.closure = m.smallest;
  }
  return r;
}

/// d(X) = delta(cl0(X)) = min delta(Y) over supersets Y of X.
inline std::int64_t dim(const FiniteStructure& s, const VertexSet& x) { return minimize_superset(s, x).value; }

/// d(A/B) = d(A u B) - d(B).
inline std::int64_t dim_rel(const FiniteStructure& s, const VertexSet& a, const VertexSet& b) {
  return dim(s, a | b) - dim(s, b);
}

/// cl^d(X) = {a : d(X a) = d(X)}, the greatest minimiser of delta above X.
inline VertexSet cld(const FiniteStructure& s, const VertexSet& x) { return minimize_superset(s, x).largest; }

inline bool is_d_closed(const FiniteStructure& s, const VertexSet& x) { return cld(s, x) == x; }

/// A <=_d S inside the ambient: A is d-closed (which implies A <= S).
inline bool is_d_embedded(const FiniteStructure& s, const VertexSet& a) { return is_d_closed(s, a); }

/// d(X) for every X subset S, by a superset-minimum transform over the
/// table of delta values. Index bit i stands for position i.
inline std::vector<std::int64_t> dim_table(const FiniteStructure& s, std::size_t cap = 20) {
  const std::size_t k = s.order();
  if (k > cap) throw CapacityError("dimension table", cap, k);
  SubsetEngine eng(s, s.none(), s.all(), cap);
  std::vector<std::int64_t> t(std::size_t{1} << k);
  eng.for_each([&](std::uint64_t mask, std::int64_t d) {
    t[mask] = d;
    return true;
  });
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t m = 0; m < t.size(); ++m)
      if (!(m & (std::size_t{1} << i))) t[m] = std::min(t[m], t[m | (std::size_t{1} << i)]);
  return t;
}

}  // namespace predimlab
