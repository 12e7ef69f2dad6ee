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
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "predimlab/errors.hpp"
#include "predimlab/limits.hpp"
#include "predimlab/structure.hpp"

namespace predimlab {

/// Isomorphism-invariant encoding. `order[k]` is the position placed at
/// canonical index k by the minimising permutation.
struct CanonicalForm {
  std::vector<std::int64_t> code;
  std::vector<std::size_t> order;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.code == b.code; }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) { return a.code < b.code; }

  std::string key() const {
    std::string s;
    for (auto v : code) {
      s += std::to_string(v);
      s += '.';
    }
    return s;
  }
};

namespace detail {

/// Stable colour refinement. Returns colour classes numbered by an
/// isomorphism-invariant order.
inline std::vector<int> refine_colours(const FiniteStructure& s, std::span<const int> extra) {
  const std::size_t k = s.order();
  std::vector<int> colour(k, 0);
  {
    std::vector<std::pair<int, int>> init(k);
    for (std::size_t p = 0; p < k; ++p)
      init[p] = {s.has_parts() ? static_cast<int>(s.part(p)) : 0, extra.empty() ? 0 : extra[p]};
    auto keys = init;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (std::size_t p = 0; p < k; ++p)
      colour[p] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), init[p]) - keys.begin());
  }
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::vector<int>> sig(k);
    for (std::size_t p = 0; p < k; ++p) {
      std::vector<std::vector<int>> around;
      for (auto idx : s.incident(p)) {
        const auto& inst = s.instances()[idx];
        std::vector<int> t{static_cast<int>(inst.relation)};
        for (auto q : inst.members)
          if (q != p) t.push_back(colour[q]);
        std::sort(t.begin() + 1, t.end());
        around.push_back(std::move(t));
      }
      std::sort(around.begin(), around.end());
      sig[p].push_back(colour[p]);
      for (const auto& t : around) {
        sig[p].push_back(-1);
        sig[p].insert(sig[p].end(), t.begin(), t.end());
      }
    }
    auto keys = sig;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (std::size_t p = 0; p < k; ++p)
      colour[p] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[p]) - keys.begin());
    if (keys.size() == classes) break;
    classes = keys.size();
  }
  return colour;
}

inline std::size_t factorial_capped(std::size_t n, std::size_t limit) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > limit) return limit + 1;
  }
  return f;
}

}  // namespace detail

/// Minimal encoding over all vertex orders that respect part labels, optional
/// vertex colours and the refined colour classes. Structures with more than
/// `cap` vertices are accepted when refinement leaves at most cap! orders.
inline CanonicalForm canonical_form(const FiniteStructure& s, std::span<const int> colours = {},
                                    std::size_t cap = Caps{}.canonical) {
  const std::size_t k = s.order();
  if (!colours.empty() && colours.size() != k) throw InputError("canonical_form: colour list has the wrong length");
  const auto colour = detail::refine_colours(s, colours);

  std::map<int, std::vector<std::size_t>> cells;
  for (std::size_t p = 0; p < k; ++p) cells[colour[p]].push_back(p);

  const std::size_t budget = detail::factorial_capped(cap, std::size_t{1} << 40);
  std::size_t product = 1;
  for (const auto& [c, cell] : cells) {
    product *= detail::factorial_capped(cell.size(), budget);
    if (product > budget) throw CapacityError("canonical form", cap, k);
  }

  // Header: signature, then per-index colour.
  std::vector<std::int64_t> header;
  const auto& sig = s.signature();
  header.push_back(sig.vertex_weight());
  header.push_back(sig.mode() == Mode::Bipartite ? 1 : 0);
  header.push_back(static_cast<std::int64_t>(sig.relations().size()));
  for (const auto& r : sig.relations()) {
    header.push_back(r.arity);
    header.push_back(r.weight);
  }
  header.push_back(static_cast<std::int64_t>(k));

  std::vector<std::vector<std::size_t>> perm;
  for (auto& [c, cell] : cells) perm.push_back(cell);

  CanonicalForm best;
  bool have = false;
  std::vector<std::size_t> order(k), index(k);
  std::vector<std::vector<std::int64_t>> body;
  for (;;) {
    std::size_t at = 0;
    for (const auto& cell : perm)
      for (auto p : cell) order[at++] = p;
    for (std::size_t i = 0; i < k; ++i) index[order[i]] = i;

    std::vector<std::int64_t> code = header;
    for (std::size_t i = 0; i < k; ++i) {
      code.push_back(s.has_parts() ? static_cast<std::int64_t>(s.part(order[i])) : 0);
      code.push_back(colours.empty() ? 0 : colours[order[i]]);
    }
    body.clear();
    for (const auto& inst : s.instances()) {
      std::vector<std::int64_t> t{static_cast<std::int64_t>(inst.relation)};
      for (auto q : inst.members) t.push_back(static_cast<std::int64_t>(index[q]));
      std::sort(t.begin() + 1, t.end());
      body.push_back(std::move(t));
    }
    std::sort(body.begin(), body.end());
    code.push_back(static_cast<std::int64_t>(body.size()));
    for (const auto& t : body) code.insert(code.end(), t.begin(), t.end());

    if (!have || code < best.code) {
      best.code = std::move(code);
      best.order = order;
      have = true;
    }

    // Next combination of within-cell permutations (odometer, last cell fastest).
    std::size_t c = perm.size();
    bool advanced = false;
    while (c-- > 0) {
      if (std::next_permutation(perm[c].begin(), perm[c].end())) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  if (!have) best.code = header;
  return best;
}

/// The structure relabelled so that the vertex at canonical index k gets id k.
inline FiniteStructure canonical_structure(const FiniteStructure& s, const CanonicalForm& cf) {
  StructureBuilder b(s.signature());
  std::vector<VertexId> new_id(s.order());
  for (std::size_t i = 0; i < cf.order.size(); ++i) new_id[cf.order[i]] = static_cast<VertexId>(i);
  for (std::size_t i = 0; i < cf.order.size(); ++i)
    b.add_vertex(static_cast<VertexId>(i), s.has_parts() ? std::optional<Part>(s.part(cf.order[i])) : std::nullopt);
  for (const auto& inst : s.instances()) {
    std::vector<VertexId> m;
    for (auto q : inst.members) m.push_back(new_id[q]);
    b.add_instance(inst.relation, std::move(m));
  }
  return b.build();
}

inline bool isomorphic(const FiniteStructure& a, const FiniteStructure& b, std::size_t cap = Caps{}.canonical) {
  if (a.order() != b.order() || a.instances().size() != b.instances().size()) return false;
  return canonical_form(a, {}, cap) == canonical_form(b, {}, cap);
}

}  // namespace predimlab
