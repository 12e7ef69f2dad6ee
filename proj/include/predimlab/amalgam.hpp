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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "predimlab/errors.hpp"
#include "predimlab/structure.hpp"

namespace predimlab {

struct Amalgam {
  FiniteStructure structure;
  /// Where each vertex of the right factor landed.
  std::map<VertexId, VertexId> right_map;
};

/// Free amalgam of `left` and `right` over the glued part: `glue` sends right
/// vertices to left vertices, the rest of `right` gets fresh ids above every
/// left id (or above `min_fresh`, if larger). The glued parts must induce the
/// same structure on both sides; no new instances cross between the
/// unglued parts.
inline Amalgam free_amalgam(const FiniteStructure& left, const FiniteStructure& right,
                            const std::map<VertexId, VertexId>& glue, VertexId min_fresh = 0) {
  if (!(left.signature() == right.signature())) throw InputError("free amalgam of structures over different signatures");
  std::set<VertexId> images;
  for (const auto& [r, l] : glue) {
    auto rp = right.position(r);
    auto lp = left.position(l);
    if (!rp || !lp) throw InputError("free amalgam: glue names a missing vertex");
    if (!images.insert(l).second) throw InputError("free amalgam: glue is not injective");
    if (left.has_parts() && left.part(*lp) != right.part(*rp)) throw InputError("free amalgam: glue mixes parts");
  }

  StructureBuilder b = StructureBuilder::from(left);
  Amalgam out;
  VertexId next = std::max(b.next_free_id(), min_fresh);
  for (std::size_t p = 0; p < right.order(); ++p) {
    const VertexId r = right.id(p);
    auto g = glue.find(r);
    if (g != glue.end()) {
      out.right_map[r] = g->second;
    } else {
      out.right_map[r] = next;
      b.add_vertex(next, right.has_parts() ? std::optional<Part>(right.part(p)) : std::nullopt);
      ++next;
    }
  }

  // Instances inside the glued part must agree on both sides.
  std::size_t right_inside = 0;
  for (const auto& inst : right.instances()) {
    std::vector<VertexId> m;
    bool inside = true;
    for (auto q : inst.members) {
      m.push_back(out.right_map.at(right.id(q)));
      inside = inside && glue.count(right.id(q)) != 0;
    }
    if (inside) {
      ++right_inside;
      if (!left.has_instance_ids(right.signature().relations()[inst.relation].name, m))
        throw InputError("free amalgam: glued parts carry different relations");
    } else {
      b.add_instance(inst.relation, std::move(m));
    }
  }
  std::size_t left_inside = 0;
  for (const auto& inst : left.instances()) {
    bool inside = true;
    for (auto q : inst.members) inside = inside && images.count(left.id(q)) != 0;
    left_inside += inside ? 1 : 0;
  }
  if (left_inside != right_inside) throw InputError("free amalgam: glued parts carry different relations");
  out.structure = b.build();
  return out;
}

inline Amalgam disjoint_union(const FiniteStructure& left, const FiniteStructure& right) {
  return free_amalgam(left, right, {});
}

/// True when no instance of `s` meets both X \ Z and Y \ Z, where Z = X n Y:
/// X u Y is then the free amalgam of X and Y over Z.
inline bool freely_amalgamated(const FiniteStructure& s, const VertexSet& x, const VertexSet& y) {
  const VertexSet both = x | y;
  const VertexSet only_x = x - y, only_y = y - x;
  for (const auto& inst : s.instances()) {
    if (!s.instance_inside(inst, both)) continue;
    bool hx = false, hy = false;
    for (auto q : inst.members) {
      hx = hx || only_x.contains(q);
      hy = hy || only_y.contains(q);
    }
    if (hx && hy) return false;
  }
  return true;
}

}  // namespace predimlab
