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
#include <bit>
#include <cstdio>
#include <limits>
#include <sstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "predimlab/amalgam.hpp"
#include "predimlab/canonical.hpp"
#include "predimlab/closure.hpp"
#include "predimlab/limits.hpp"
#include "predimlab/predimension.hpp"
#include "predimlab/report.hpp"
#include "predimlab/subsets.hpp"

namespace predimlab {

/// Z subset Y is simply algebraic: delta(Y/Z) = 0 and delta(Y/Z1) < 0 for
/// every Z subset Z1 subset Y (both proper).
inline bool is_simply_algebraic(const FiniteStructure& s, const VertexSet& z, const VertexSet& y,
                                std::size_t cap = Caps{}.sa_extension) {
  if (!z.is_subset_of(y) || z == y) throw InputError("simply algebraic check needs Z a proper subset of Y");
  const std::int64_t dy = delta(s, y);
  if (dy != delta(s, z)) return false;
  SubsetEngine eng(s, z, y - z, cap);
  const std::uint64_t full = (std::uint64_t{1} << eng.width()) - 1;
  bool ok = true;
  eng.for_each([&](std::uint64_t m, std::int64_t d) {
    if (m != 0 && m != full && d <= dy) ok = false;
    return ok;
  });
  return ok;
}

/// sa, and Z0 subset Z0 u (Y \ Z) is not sa for any proper subset Z0 of Z.
inline bool is_msa(const FiniteStructure& s, const VertexSet& z, const VertexSet& y, std::size_t cap = Caps{}.sa_extension) {
  if (!is_simply_algebraic(s, z, y, cap)) return false;
  const VertexSet v = y - z;
  const auto zs = z.positions();
  if (zs.size() > cap) throw CapacityError("msa base minimality", cap, zs.size());
  const std::uint64_t full = (std::uint64_t{1} << zs.size()) - 1;
  for (std::uint64_t m = 0; m < full; ++m) {
    const VertexSet z0 = VertexSet::from_mask(s.order(), zs, m);
    if (is_simply_algebraic(s, z0, z0 | v, cap)) return false;
  }
  return true;
}

struct MsaBase {
  VertexSet z1;
  VertexSet y1;
};

/// Z1 = points of Z in an instance (inside Y) that meets Y \ Z; Y1 = Z1 u (Y \ Z).
inline MsaBase msa_base(const FiniteStructure& s, const VertexSet& z, const VertexSet& y,
                        std::size_t cap = Caps{}.sa_extension) {
  if (!is_simply_algebraic(s, z, y, cap)) throw ContractError("msa_base needs a simply algebraic extension");
  const VertexSet v = y - z;
  VertexSet z1(s.order());
  for (const auto& inst : s.instances()) {
    if (!s.instance_inside(inst, y)) continue;
    bool meets = false;
    for (auto q : inst.members) meets = meets || v.contains(q);
    if (!meets) continue;
    for (auto q : inst.members)
      if (z.contains(q)) z1.insert(q);
  }
  MsaBase out{z1, z1 | v};
  // Y is the free amalgam of Z and Y1 over Z1.
  if (!freely_amalgamated(s, z, out.y1) || (z & out.y1) != z1)
    throw InternalError("msa base does not split Y as a free amalgam");
  return out;
}

// ---------------------------------------------------------------------------
// Types and copies

/// An msa pair up to isomorphism fixing the base pointwise: the extension is
/// stored with base vertices first, so base vertex i is the i-th base point.
struct MsaType {
  FiniteStructure extension;  // Y1, ids 0..|Y1|-1
  std::size_t base_size = 0;  // ids 0..base_size-1 form Z1
  std::string key;            // canonical form with each base point its own colour

  std::vector<VertexId> base_ids() const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < base_size; ++i) out.push_back(static_cast<VertexId>(i));
    return out;
  }
};

/// The type of Z1 subset Y1 in `s`, with the base listed in `base_order`.
inline MsaType make_msa_type(const FiniteStructure& s, const std::vector<std::size_t>& base_order, const VertexSet& y1) {
  std::vector<std::size_t> order = base_order;
  VertexSet zb(s.order());
  for (auto p : base_order) zb.insert(p);
  (y1 - zb).for_each([&](std::size_t p) { order.push_back(p); });
  std::map<std::size_t, VertexId> idx;
  for (std::size_t i = 0; i < order.size(); ++i) idx[order[i]] = static_cast<VertexId>(i);
  StructureBuilder b(s.signature());
  for (std::size_t i = 0; i < order.size(); ++i)
    b.add_vertex(static_cast<VertexId>(i), s.has_parts() ? std::optional<Part>(s.part(order[i])) : std::nullopt);
  for (const auto& inst : s.instances()) {
    if (!s.instance_inside(inst, y1)) continue;
    std::vector<VertexId> m;
    for (auto q : inst.members) m.push_back(idx.at(q));
    b.add_instance(inst.relation, m);
  }
  MsaType t;
  t.extension = b.build();
  t.base_size = base_order.size();
  std::vector<int> colours(order.size(), 0);
  for (std::size_t i = 0; i < base_order.size(); ++i) colours[i] = static_cast<int>(i) + 1;
  t.key = canonical_form(t.extension, colours).key();
  return t;
}

/// A type read from a file: the whole structure is Y1, `base` names Z1.
/// Throws InputError unless Z1 subset Y1 is msa.
inline MsaType msa_type_of(const FiniteStructure& y1, const std::vector<VertexId>& base,
                           std::size_t cap = Caps{}.sa_extension) {
  const VertexSet z = y1.set_of(base);
  if (z.size() != base.size()) throw InputError("type base repeats a vertex");
  if (z == y1.all() || !is_msa(y1, z, y1.all(), cap)) throw InputError("type is not a minimally simply algebraic pair");
  std::vector<std::size_t> order;
  for (auto id : base) order.push_back(y1.position_of(id));
  return make_msa_type(y1, order, y1.all());
}

struct MsaCopies {
  std::vector<VertexSet> copies;  // the sets W, distinct, in mask order
  bool pairwise_disjoint = true;
  std::size_t count() const noexcept { return copies.size(); }
};

namespace detail {

struct CopySearch {
  const FiniteStructure& s;
  const VertexSet& a;
  const MsaType& t;
  std::vector<std::size_t> order;          // non-base type vertices, in search order
  std::vector<std::int64_t> image;         // type position -> ambient position, -1 if unset
  std::vector<char> used;
  std::set<VertexSet> found;
  std::vector<std::vector<std::uint32_t>> inst_by_vertex;

  CopySearch(const FiniteStructure& st, const VertexSet& av, const MsaType& ty)
      : s(st), a(av), t(ty), image(ty.extension.order(), -1), used(st.order(), 0),
        inst_by_vertex(ty.extension.order()) {
    const auto& y = t.extension;
    for (std::uint32_t i = 0; i < y.instances().size(); ++i)
      for (auto q : y.instances()[i].members) inst_by_vertex[q].push_back(i);
    // Breadth-first from the base so that most vertices have a mapped neighbour.
    std::vector<char> seen(y.order(), 0);
    std::vector<std::size_t> queue;
    for (std::size_t p = 0; p < t.base_size; ++p) {
      seen[p] = 1;
      queue.push_back(p);
    }
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (auto u : y.neighbours(queue[h]))
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
          order.push_back(u);
        }
    for (std::size_t p = t.base_size; p < y.order(); ++p)
      if (!seen[p]) order.push_back(p);
  }

  bool instances_ok(std::size_t p) const {
    const auto& y = t.extension;
    for (auto i : inst_by_vertex[p]) {
      const auto& inst = y.instances()[i];
      std::vector<std::uint32_t> m;
      bool all = true;
      for (auto q : inst.members) {
        if (image[q] < 0) {
          all = false;
          break;
        }
        m.push_back(static_cast<std::uint32_t>(image[q]));
      }
      if (all && !s.has_instance(inst.relation, m)) return false;
    }
    return true;
  }

  // Every ambient instance inside A u W that meets W must be the image of a
  // type instance (induced copy, free over the base).
  bool closing_ok(const VertexSet& w, const VertexSet& img) const {
    const VertexSet aw = a | w;
    std::size_t hits = 0;
    for (const auto& inst : s.instances()) {
      if (!s.instance_inside(inst, aw)) continue;
      bool meets = false;
      for (auto q : inst.members) meets = meets || w.contains(q);
      if (!meets) continue;
      if (!s.instance_inside(inst, img)) return false;
      ++hits;
    }
    std::size_t need = 0;
    for (const auto& inst : t.extension.instances()) {
      bool meets = false;
      for (auto q : inst.members) meets = meets || q >= t.base_size;
      need += meets ? 1 : 0;
    }
    return hits == need;
  }

  void run(std::size_t depth) {
    if (depth == order.size()) {
      VertexSet w(s.order()), img(s.order());
      for (std::size_t p = 0; p < image.size(); ++p) {
        img.insert(static_cast<std::size_t>(image[p]));
        if (p >= t.base_size) w.insert(static_cast<std::size_t>(image[p]));
      }
      if (closing_ok(w, img)) found.insert(w);
      return;
    }
    const std::size_t p = order[depth];
    std::vector<std::size_t> cand;
    std::int64_t anchor = -1;
    for (auto u : t.extension.neighbours(p))
      if (image[u] >= 0) {
        anchor = image[u];
        break;
      }
    if (anchor >= 0) {
      for (auto u : s.neighbours(static_cast<std::size_t>(anchor))) cand.push_back(u);
    } else {
      for (std::size_t u = 0; u < s.order(); ++u) cand.push_back(u);
    }
    const auto deg = t.extension.incident(p).size();
    for (auto u : cand) {
      if (used[u] || a.contains(u)) continue;
      if (s.incident(u).size() < deg) continue;
      if (s.has_parts() && s.part(u) != t.extension.part(p)) continue;
      image[p] = static_cast<std::int64_t>(u);
      used[u] = 1;
      if (instances_ok(p)) run(depth + 1);
      used[u] = 0;
      image[p] = -1;
    }
  }
};

}  // namespace detail

/// Copies of the type over A: sets W outside A such that A u W is a simply
/// algebraic extension of A of this type. `base_image[i]` fixes where base
/// vertex i goes; when empty, every embedding of the base into A is tried.
inline MsaCopies count_msa_copies(const FiniteStructure& s, const VertexSet& a, const MsaType& t,
                                  const std::vector<std::size_t>& base_image = {},
                                  std::size_t cap = Caps{}.sa_extension) {
  const std::size_t ext = t.extension.order() - t.base_size;
  if (ext > cap) throw CapacityError("msa copy search", cap, ext);
  if (ext == 0) throw InputError("msa type with an empty extension");
  detail::CopySearch search(s, a, t);

  auto with_base = [&](const std::vector<std::size_t>& img) {
    for (std::size_t i = 0; i < img.size(); ++i) search.image[i] = static_cast<std::int64_t>(img[i]);
    // base relations must match inside A
    for (const auto& inst : t.extension.instances()) {
      bool base_only = true;
      std::vector<std::uint32_t> m;
      for (auto q : inst.members) {
        base_only = base_only && q < t.base_size;
        if (q < t.base_size) m.push_back(static_cast<std::uint32_t>(img[q]));
      }
      if (base_only && !s.has_instance(inst.relation, m)) return;
    }
    search.run(0);
  };

  if (!base_image.empty()) {
    if (base_image.size() != t.base_size) throw InputError("base image has the wrong size");
    for (auto p : base_image)
      if (!a.contains(p)) throw InputError("base image must lie in A");
    with_base(base_image);
  } else {
    const auto as = a.positions();
    std::vector<std::size_t> img;
    std::vector<char> taken(s.order(), 0);
    auto rec = [&](auto&& self) -> void {
      if (img.size() == t.base_size) {
        with_base(img);
        return;
      }
      for (auto p : as) {
        if (taken[p]) continue;
        taken[p] = 1;
        img.push_back(p);
        self(self);
        img.pop_back();
        taken[p] = 0;
      }
    };
    rec(rec);
  }

  MsaCopies out;
  out.copies.assign(search.found.begin(), search.found.end());
  std::sort(out.copies.begin(), out.copies.end(), [](const VertexSet& x, const VertexSet& y) { return mask_less(x, y); });
  for (std::size_t i = 0; i < out.copies.size(); ++i)
    for (std::size_t j = i + 1; j < out.copies.size(); ++j)
      if (out.copies[i].intersects(out.copies[j])) out.pairwise_disjoint = false;
  return out;
}

/// Graph on the vertices of `keep`, u ~ v when some instance holds both.
/// The sets W of an sa extension are connected here: a split of W with no
/// instance across gives an intermediate set of non-negative relative delta.
inline FiniteStructure shadow_graph(const FiniteStructure& s, const VertexSet& keep) {
  StructureBuilder b(Signature::uniform(1, 1, 2));
  keep.for_each([&](std::size_t p) { b.add_vertex(static_cast<VertexId>(p)); });
  keep.for_each([&](std::size_t p) {
    for (auto q : s.neighbours(p))
      if (q > p && keep.contains(q)) b.add_edge(static_cast<VertexId>(p), static_cast<VertexId>(q));
  });
  return b.build();
}

/// Calls visit(W) with W a connected set of the shadow graph outside `a`.
template <typename Visit>
void for_each_shadow_connected(const FiniteStructure& s, const VertexSet& a, std::size_t max_size, Visit&& visit) {
  const auto g = shadow_graph(s, ~a);
  for_each_connected_subset(g, max_size, [&](const std::vector<std::uint32_t>& members, std::int64_t) {
    VertexSet w(s.order());
    for (auto q : members) w.insert(static_cast<std::size_t>(g.id(q)));
    return visit(w);
  });
}

struct RealisedMsa {
  VertexSet z1;
  VertexSet v;
};

/// Every msa extension realised over A inside `s` with |W| <= max_ext: pairs
/// (Z1, W) with A u W simply algebraic over A and Z1 its msa base.
inline std::vector<RealisedMsa> realised_msa_extensions(const FiniteStructure& s, const VertexSet& a, std::size_t max_ext,
                                                        std::size_t cap = Caps{}.sa_extension) {
  std::vector<RealisedMsa> out;
  for_each_shadow_connected(s, a, max_ext, [&](const VertexSet& w) {
    if (is_simply_algebraic(s, a, a | w, cap)) out.push_back({msa_base(s, a, a | w, cap).z1, w});
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Copy bound over a straddling base

struct MsaBoundOptions {
  std::size_t max_ext = 4;   // |Y \ Z|
  std::size_t max_base = 6;  // |Z|
  std::size_t cap = Caps{}.sa_extension;
};

struct MsaBoundTally {
  std::size_t pairs = 0;      // straddling msa pairs examined
  std::int64_t min_slack = std::numeric_limits<std::int64_t>::max();  // least delta(Z) - copies
};

/// For S the free amalgam of P and Q, with `only_p` = P \ Q and `only_q` =
/// Q \ P: every msa Z subset Y inside S whose base meets both sides has at
/// most delta(Z) copies of Y over Z in S. One FAIL case per violation,
/// keyed prefix:Z-ids:W-ids; PASS bookkeeping goes in the returned tally.
inline MsaBoundTally check_msa_bound(const FiniteStructure& s, const VertexSet& only_p, const VertexSet& only_q,
                                     VerificationReport& rep, const std::string& prefix, const MsaBoundOptions& opt = {}) {
  MsaBoundTally tally;
  std::set<std::pair<VertexSet, std::string>> seen;
  for_each_shadow_connected(s, s.none(), opt.max_ext, [&](const VertexSet& w) {
    VertexSet nb(s.order());
    w.for_each([&](std::size_t p) {
      for (auto q : s.neighbours(p))
        if (!w.contains(q)) nb.insert(q);
    });
    const auto pos = nb.positions();
    if (pos.empty() || pos.size() > 20) return true;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << pos.size()); ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) > opt.max_base) continue;
      const VertexSet z = VertexSet::from_mask(s.order(), pos, m);
      if (!z.intersects(only_p) || !z.intersects(only_q)) continue;
      if (!is_msa(s, z, z | w, opt.cap)) continue;
      const auto t = make_msa_type(s, z.positions(), z | w);
      if (!seen.insert({z, t.key}).second) continue;
      ++tally.pairs;
      const auto copies = count_msa_copies(s, z, t, z.positions(), opt.cap);
      const std::int64_t dz = delta(s, z);
      const std::int64_t slack = dz - static_cast<std::int64_t>(copies.count());
      tally.min_slack = std::min(tally.min_slack, slack);
      if (slack < 0) {
        std::ostringstream key;
        key << prefix << ":Z" << z << ":W" << w;
        rep.fail(key.str(),
                 Witness::of("msa-bound", s, {{"Z", s.ids_of(z)}, {"W", s.ids_of(w)}, {"P", s.ids_of(only_p)}, {"Q", s.ids_of(only_q)}}, {}),
                 Rational(slack),
                 std::to_string(copies.count()) + " copies over a base of delta " + std::to_string(dz));
      }
    }
    return true;
  });
  return tally;
}

// ---------------------------------------------------------------------------
// Potential extendability

struct PartialMap {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // domain position -> image position

  VertexSet domain(std::size_t universe) const {
    VertexSet d(universe);
    for (auto [x, y] : pairs) d.insert(x);
    return d;
  }
  VertexSet image(std::size_t universe) const {
    VertexSet d(universe);
    for (auto [x, y] : pairs) d.insert(y);
    return d;
  }
};

/// True when the map is a bijection preserving relations both ways.
inline bool is_partial_isomorphism(const FiniteStructure& s, const PartialMap& k) {
  std::map<std::size_t, std::size_t> fwd, back;
  for (auto [x, y] : k.pairs) {
    if (!fwd.emplace(x, y).second || !back.emplace(y, x).second) return false;
    if (s.has_parts() && s.part(x) != s.part(y)) return false;
  }
  const auto dom = k.domain(s.order()), img = k.image(s.order());
  std::size_t in_dom = 0, in_img = 0;
  for (const auto& inst : s.instances()) {
    if (s.instance_inside(inst, img)) ++in_img;
    if (!s.instance_inside(inst, dom)) continue;
    ++in_dom;
    std::vector<std::uint32_t> m;
    for (auto q : inst.members) m.push_back(static_cast<std::uint32_t>(fwd.at(q)));
    if (!s.has_instance(inst.relation, m)) return false;
  }
  return in_dom == in_img;
}

struct ExtendabilityOptions {
  std::size_t max_ext = 4;     // largest |Y1 \ Z1| enumerated
  std::size_t saturation = 3;  // multiplicities at or above compare equal
  std::size_t cap = Caps{}.sa_extension;
};

/// Compares, for every msa type realised over the domain or over the image,
/// the multiplicity over the domain with that over the image transported by
/// the map. Cases: "type:<n>" in canonical order of the type key.
inline VerificationReport check_potential_extendability(const FiniteStructure& s, const PartialMap& k,
                                                        const ExtendabilityOptions& opt = {}) {
  VerificationReport rep("extendability", 0);
  rep.label("ambient-relative multiplicities; saturation threshold " + std::to_string(opt.saturation));
  if (!is_partial_isomorphism(s, k)) throw InputError("map is not a partial isomorphism");
  std::map<std::size_t, std::size_t> fwd, back;
  for (auto [x, y] : k.pairs) {
    fwd[x] = y;
    back[y] = x;
  }
  const VertexSet dom = k.domain(s.order()), img = k.image(s.order());

  // type key + base (as domain positions) -> exemplar type
  struct Entry {
    MsaType type;
    std::vector<std::size_t> base_dom;
  };
  std::map<std::pair<std::string, std::vector<std::size_t>>, Entry> types;
  auto collect = [&](const VertexSet& side, bool from_domain) {
    for (const auto& r : realised_msa_extensions(s, side, opt.max_ext, opt.cap)) {
      auto base = r.z1.positions();
      std::vector<std::size_t> base_dom;
      for (auto p : base) base_dom.push_back(from_domain ? p : back.at(p));
      // canonical base order: sort base_dom, permuting the type accordingly
      std::vector<std::size_t> idx(base.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return base_dom[i] < base_dom[j]; });
      std::vector<std::size_t> sorted_base, sorted_dom;
      for (auto i : idx) {
        sorted_base.push_back(base[i]);
        sorted_dom.push_back(base_dom[i]);
      }
      auto t2 = make_msa_type(s, sorted_base, r.z1 | r.v);
      types.try_emplace({t2.key, sorted_dom}, Entry{t2, sorted_dom});
    }
  };
  collect(dom, true);
  collect(img, false);

  std::size_t n = 0;
  for (const auto& [key, entry] : types) {
    std::vector<std::size_t> base_img;
    for (auto p : entry.base_dom) base_img.push_back(fwd.at(p));
    const auto c1 = count_msa_copies(s, dom, entry.type, entry.base_dom, opt.cap).count();
    const auto c2 = count_msa_copies(s, img, entry.type, base_img, opt.cap).count();
    const bool sat = c1 >= opt.saturation && c2 >= opt.saturation;
    char buf[16];
    std::snprintf(buf, sizeof buf, "type:%03zu", n++);
    const std::string note = "mult " + std::to_string(c1) + " over domain, " + std::to_string(c2) + " over image" +
                             (sat ? " (SATURATED)" : "");
    if (c1 == c2 || sat) {
      rep.pass(buf, std::nullopt, note);
    } else {
      std::vector<VertexId> zd, zi;
      for (auto p : entry.base_dom) zd.push_back(s.id(p));
      for (auto p : base_img) zi.push_back(s.id(p));
      std::vector<VertexId> pd, pi;
      for (auto [x, y] : k.pairs) {
        pd.push_back(s.id(x));
        pi.push_back(s.id(y));
      }
      rep.fail(buf,
               Witness::of("mult-equal", s, {{"A1", pd}, {"A2", pi}, {"Z1", zd}, {"Z2", zi}},
                           {{"type", to_text(entry.type.extension)}, {"base_size", std::to_string(entry.type.base_size)}}),
               Rational(static_cast<std::int64_t>(c1) - static_cast<std::int64_t>(c2)), note);
    }
  }
  rep.finalize();
  return rep;
}

// ---------------------------------------------------------------------------
// Duplication transform

/// Replaces the base Z by the disjoint union of the non-empty r n Z over the
/// instances r that meet Y \ Z: afterwards each base point lies in exactly
/// one such instance. Relations inside Z are dropped. Returns the new
/// ambient (just Y') with the new base.
struct Duplicated {
  FiniteStructure y;
  VertexSet z;
};

inline Duplicated duplicate_base(const FiniteStructure& s, const VertexSet& z, const VertexSet& y) {
  const VertexSet v = y - z;
  StructureBuilder b(s.signature());
  auto part_of = [&](std::size_t p) { return s.has_parts() ? std::optional<Part>(s.part(p)) : std::nullopt; };
  v.for_each([&](std::size_t p) { b.add_vertex(s.id(p), part_of(p)); });
  VertexId next = 0;
  for (auto id : s.ids()) next = std::max(next, id + 1);
  std::vector<VertexId> base_ids;
  for (const auto& inst : s.instances()) {
    if (!s.instance_inside(inst, y)) continue;
    bool meets = false;
    for (auto q : inst.members) meets = meets || v.contains(q);
    if (!meets) continue;
    std::vector<VertexId> m;
    for (auto q : inst.members) {
      if (v.contains(q)) {
        m.push_back(s.id(q));
      } else {
        b.add_vertex(next, part_of(q));
        base_ids.push_back(next);
        m.push_back(next++);
      }
    }
    b.add_instance(inst.relation, m);
  }
  Duplicated out;
  out.y = b.build();
  out.z = out.y.set_of(base_ids);
  return out;
}

}  // namespace predimlab
