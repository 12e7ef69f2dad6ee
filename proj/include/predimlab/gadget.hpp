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
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "predimlab/amalgam.hpp"
#include "predimlab/classes.hpp"
#include "predimlab/closure.hpp"
#include "predimlab/limits.hpp"
#include "predimlab/predimension.hpp"
#include "predimlab/report.hpp"

namespace predimlab {

// ---------------------------------------------------------------------------
// Beatty sequences

namespace detail {
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
}  // namespace detail

/// a_i = floor(i l / b) - floor((i-1) l / b), for any integer i.
inline int beatty_term(std::int64_t ell, std::int64_t b, std::int64_t i) {
  return static_cast<int>(detail::floor_div(i * ell, b) - detail::floor_div((i - 1) * ell, b));
}

struct BeattySequence {
  int ell = 0;
  int b = 0;
  std::vector<int> period;  // a_1, ..., a_b

  /// a_i via the period, for any integer i.
  int at(std::int64_t i) const {
    const std::int64_t k = ((i - 1) % b + b) % b;
    return period[static_cast<std::size_t>(k)];
  }

  /// a_{i+1} + ... + a_{i+s}
  std::int64_t window(std::int64_t i, std::int64_t s) const {
    std::int64_t t = 0;
    for (std::int64_t j = i + 1; j <= i + s; ++j) t += at(j);
    return t;
  }
};

inline BeattySequence beatty(int ell, int b) {
  if (!(0 < ell && ell < b)) throw InputError("beatty needs 0 < l < b");
  BeattySequence s{ell, b, {}};
  for (int i = 1; i <= b; ++i) s.period.push_back(beatty_term(ell, b, i));
  return s;
}

// ---------------------------------------------------------------------------
// Gadget parameters

enum class GadgetCase { MEqualsOne, BEqualsOne, BGeTwo };

inline const char* gadget_case_name(GadgetCase c) {
  switch (c) {
    case GadgetCase::MEqualsOne: return "M_EQUALS_1";
    case GadgetCase::BEqualsOne: return "B_EQUALS_1";
    case GadgetCase::BGeTwo: return "B_GE_2";
  }
  return "?";
}

struct GadgetParams {
  std::int64_t n = 0, m = 0;
  int r = 2;
  std::int64_t a = 0, c = 0, ell = 0, b = 0;  // unused when m = 1
  GadgetCase tag = GadgetCase::MEqualsOne;
};

/// n = m a + c with 0 < c < m, b the inverse of -c modulo m in (0, m), and
/// l = (1 + c b) / m, so that l m - c b = 1.
inline GadgetParams gadget_params(std::int64_t n, std::int64_t m, int r = 2) {
  if (n < 1 || m < 1) throw InputError("gadget parameters must be positive");
  if (n < m) throw InputError("gadget needs n >= m");
  if (std::gcd(n, m) != 1) throw InputError("gadget needs gcd(n, m) = 1");
  GadgetParams p;
  p.n = n;
  p.m = m;
  p.r = r;
  if (m == 1) return p;
  p.a = n / m;
  p.c = n % m;
  const std::int64_t target = (m - p.c) % m;  // -c mod m
  for (std::int64_t b = 1; b < m; ++b)
    if ((target * b) % m == 1) {
      p.b = b;
      break;
    }
  if (p.b == 0) throw InternalError("no inverse of -c modulo m");
  p.ell = (1 + p.c * p.b) / p.m;
  if (p.ell * p.m - p.c * p.b != 1) throw InternalError("Bezout identity fails");
  p.tag = p.b == 1 ? GadgetCase::BEqualsOne : GadgetCase::BGeTwo;
  return p;
}

struct GadgetPair {
  FiniteStructure structure;  // Y
  VertexSet x;                // X inside Y
  GadgetParams params;
  bool degenerate = false;
  std::string degenerate_reason;
};

/// Builds X subset Y. Ids: the x points come first, then (for r >= 3) the
/// padding tuple z, which also belongs to X, then the y points.
inline GadgetPair build_gadget(std::int64_t n, std::int64_t m, int r) {
  if (r < 2) throw InputError("gadget needs r >= 2");
  if (r == 2 && !(n > m)) throw InputError("gadget with r = 2 needs n > m");
  const GadgetParams p = gadget_params(n, m, r);

  std::int64_t x_count = 0;
  std::vector<std::vector<VertexId>> edges;  // binary edges before padding
  std::vector<VertexId> ys;
  auto y_id = [&](std::int64_t i) { return x_count + (r - 2) + i; };

  if (p.tag == GadgetCase::MEqualsOne) {
    x_count = n + 1;
    ys = {y_id(0)};
    for (VertexId x = 0; x < x_count; ++x) edges.push_back({ys[0], x});
  } else if (p.tag == GadgetCase::BEqualsOne) {
    x_count = p.a + p.ell;
    ys = {y_id(0)};
    for (VertexId x = 0; x < x_count; ++x) edges.push_back({ys[0], x});
  } else {
    x_count = (p.a - 1) * p.b + p.ell;
    for (std::int64_t i = 0; i < p.b; ++i) ys.push_back(y_id(i));
    const auto seq = beatty(static_cast<int>(p.ell), static_cast<int>(p.b));
    std::set<std::vector<VertexId>> cyc;
    for (std::int64_t i = 0; i < p.b; ++i) {
      std::vector<VertexId> e{ys[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>((i + 1) % p.b)]};
      std::sort(e.begin(), e.end());
      if (cyc.insert(e).second) edges.push_back(e);
    }
    VertexId next_x = 0;
    for (std::int64_t i = 0; i < p.b; ++i) {
      const std::int64_t extra = seq.at(i);  // a_0 = a_b
      for (std::int64_t t = 0; t < p.a - 1 + extra; ++t) edges.push_back({ys[static_cast<std::size_t>(i)], next_x++});
    }
    if (next_x != x_count) throw InternalError("gadget: x points not used exactly once");
  }

  StructureBuilder bld(Signature::uniform(n, m, r));
  const VertexId total = x_count + (r - 2) + static_cast<VertexId>(ys.size());
  for (VertexId v = 0; v < total; ++v) bld.add_vertex(v);
  for (auto e : edges) {
    for (int t = 0; t < r - 2; ++t) e.push_back(x_count + t);
    bld.add_instance(0, e);
  }

  GadgetPair g;
  g.structure = bld.build();
  g.params = p;
  g.x = VertexSet(g.structure.order());
  for (VertexId v = 0; v < x_count + (r - 2); ++v) g.x.insert(g.structure.position_of(v));
  if (p.tag == GadgetCase::BGeTwo && p.b == 2) {
    g.degenerate = true;
    g.degenerate_reason = "b = 2: the y-cycle collapses to a single edge";
  } else if (g.x.size() < 2) {
    g.degenerate = true;
    g.degenerate_reason = "|X| = " + std::to_string(g.x.size()) + " < 2";
  }
  return g;
}

// ---------------------------------------------------------------------------
// Verification

struct GadgetClauses {
  std::int64_t relative_delta = 0;  // delta(Y/X)
  bool clause1 = false;
  std::optional<VertexSet> clause2_witness;  // U with U n X not <= U
  std::int64_t clause2_margin = 0;           // min delta(W) - delta(W n X)
  std::optional<VertexSet> clause3_witness;  // X subset Z proper subset Y with delta(Z) < delta(X)
  std::int64_t clause3_margin = 0;           // min delta(Z) - delta(X)
  Membership c0;
};

/// Clause (2) holds iff delta(W) >= delta(W n X) for every W subset Y not
/// containing X (take U = W; conversely each W between U n X and U meets X in
/// U n X). So one pass over the subsets of Y settles (2) and (3).
inline GadgetClauses check_gadget_clauses(const FiniteStructure& y, const VertexSet& x, std::size_t cap = Caps{}.gadget) {
  if (!x.is_subset_of(y.all())) throw ContractError("gadget: X is not inside Y");
  const std::size_t k = y.order();
  if (k > cap) throw CapacityError("gadget verification", cap, k);
  GadgetClauses out;
  const std::int64_t dx = delta(y, x);
  out.relative_delta = delta(y) - dx;
  out.clause1 = out.relative_delta == -1 && x.size() >= 2;
  out.c0 = in_C0(y);

  SubsetEngine eng(y, y.none(), y.all(), cap);
  const auto xs = x.positions();
  std::uint64_t xmask = 0;
  for (auto p : xs) xmask |= std::uint64_t{1} << p;  // free positions are 0..k-1
  SubsetEngine xeng(y, y.none(), x, cap);
  std::vector<std::int64_t> dsub(std::size_t{1} << xs.size());
  xeng.for_each([&](std::uint64_t m, std::int64_t d) {
    dsub[m] = d;
    return true;
  });
  auto compress = [&](std::uint64_t m) {
    std::uint64_t out_mask = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if ((m >> xs[i]) & 1U) out_mask |= std::uint64_t{1} << i;
    return out_mask;
  };

  std::optional<std::uint64_t> w2, w3;
  bool have2 = false, have3 = false;
  const std::uint64_t full = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  WitnessOrder less;
  std::int64_t best2 = 0, best3 = 0;
  eng.for_each([&](std::uint64_t m, std::int64_t d) {
    if ((m & xmask) != xmask) {
      const std::int64_t gap = d - dsub[compress(m)];
      if (!have2 || gap < out.clause2_margin) out.clause2_margin = gap;
      have2 = true;
      if (gap < 0 && (!w2 || less(gap, std::popcount(m), m, best2, std::popcount(*w2), *w2))) {
        w2 = m;
        best2 = gap;
      }
    } else if (m != full) {
      const std::int64_t gap = d - dx;
      if (!have3 || gap < out.clause3_margin) out.clause3_margin = gap;
      have3 = true;
      if (gap < 0 && (!w3 || less(gap, std::popcount(m), m, best3, std::popcount(*w3), *w3))) {
        w3 = m;
        best3 = gap;
      }
    }
    return true;
  });
  if (w2) out.clause2_witness = eng.to_set(*w2);
  if (w3) out.clause3_witness = eng.to_set(*w3);
  return out;
}

/// Adds the gadget's cases to `report` under keys "<prefix>:clause1" and so
/// on. Degenerate parameters give a single DEGENERATE case instead.
inline void verify_gadget(const GadgetPair& g, VerificationReport& report, const std::string& prefix,
                          std::size_t cap = Caps{}.gadget) {
  const auto& y = g.structure;
  const auto xs = y.ids_of(g.x);
  const auto cl = check_gadget_clauses(y, g.x, cap);
  if (g.degenerate) {
    std::string note = g.degenerate_reason + "; delta(Y/X) = " + std::to_string(cl.relative_delta) +
                       (cl.clause2_witness ? ", clause 2 fails" : ", clause 2 holds") +
                       (cl.clause3_witness ? ", clause 3 fails" : ", clause 3 holds");
    report.add(Case{prefix, Status::Degenerate, std::nullopt, Rational(cl.relative_delta), note});
    return;
  }
  if (cl.clause1)
    report.pass(prefix + ":clause1", Rational(cl.relative_delta));
  else
    report.fail(prefix + ":clause1", Witness::of("gadget-clause1", y, {{"X", xs}}), Rational(cl.relative_delta),
                "delta(Y/X) = " + std::to_string(cl.relative_delta) + ", |X| = " + std::to_string(xs.size()));
  if (!cl.clause2_witness)
    report.pass(prefix + ":clause2", Rational(cl.clause2_margin));
  else
    report.fail(prefix + ":clause2", Witness::of("gadget-clause2", y, {{"X", xs}, {"U", y.ids_of(*cl.clause2_witness)}}),
                Rational(cl.clause2_margin));
  if (!cl.clause3_witness)
    report.pass(prefix + ":clause3", Rational(cl.clause3_margin));
  else
    report.fail(prefix + ":clause3", Witness::of("gadget-clause3", y, {{"X", xs}, {"Z", y.ids_of(*cl.clause3_witness)}}),
                Rational(cl.clause3_margin));
  if (cl.c0.member)
    report.pass(prefix + ":c0", cl.c0.margin);
  else
    report.fail(prefix + ":c0", Witness::of("c0", y, {{"X", y.ids_of(*cl.c0.witness)}}), cl.c0.margin);
}

inline VerificationReport verify_gadget(const GadgetPair& g, std::size_t cap = Caps{}.gadget) {
  VerificationReport r("gadget", 0);
  verify_gadget(g, r, "n=" + std::to_string(g.params.n) + ",m=" + std::to_string(g.params.m) + ",r=" + std::to_string(g.params.r), cap);
  r.finalize();
  return r;
}

/// Removes one instance (the first in canonical order) from a gadget.
inline GadgetPair corrupt_gadget(const GadgetPair& g) {
  StructureBuilder b(g.structure.signature());
  for (auto id : g.structure.ids()) b.add_vertex(id);
  const auto& insts = g.structure.instances();
  for (std::size_t i = 1; i < insts.size(); ++i) {
    std::vector<VertexId> m;
    for (auto q : insts[i].members) m.push_back(g.structure.id(q));
    b.add_instance(insts[i].relation, m);
  }
  GadgetPair out = g;
  out.structure = b.build();
  out.degenerate = false;
  return out;
}

// ---------------------------------------------------------------------------
// The amalgam E = Z u_X Y, Z = C with k-1 copies of B over A0.

struct GadgetAmalgam {
  FiniteStructure e;
  FiniteStructure z;
  VertexSet c_set;               // C inside E
  std::vector<VertexSet> b_sets;  // B_2..B_k inside E
  VertexSet x_set;               // the identified points x_1..x_k inside E
  VertexSet y_set;               // the gadget inside E
  VertexSet z_in_e;              // Z inside E
  std::size_t k = 0;
};

/// `a0` lists the shared base (same ids in C and B), `c` is a point of C \ A0,
/// `u0` a point of B \ A0. When `u0` is empty (B = A0) the points x_2..x_k are
/// fresh isolated vertices. `copies`, when given, must equal |X| - 1.
inline GadgetAmalgam build_gadget_amalgam(const FiniteStructure& c_struct, const FiniteStructure& b_struct,
                                          const std::vector<VertexId>& a0, VertexId c, std::optional<VertexId> u0,
                                          const GadgetPair& g, std::optional<std::size_t> copies = std::nullopt) {
  const std::size_t k = g.x.size();
  if (copies && *copies + 1 != k)
    throw InputError("gadget amalgam: " + std::to_string(*copies) + " copies of B but |X| = " + std::to_string(k));
  for (const auto& inst : g.structure.instances())
    if (g.structure.instance_inside(inst, g.x)) throw InputError("gadget amalgam: X must carry no relations");
  std::set<VertexId> base(a0.begin(), a0.end());
  if (base.count(c) || !c_struct.position(c)) throw InputError("gadget amalgam: c must lie in C \\ A0");
  if (u0 && (base.count(*u0) || !b_struct.position(*u0))) throw InputError("gadget amalgam: u0 must lie in B \\ A0");

  std::map<VertexId, VertexId> glue;
  for (auto a : a0) glue[a] = a;
  FiniteStructure z = c_struct;
  std::vector<VertexId> xs{c};
  std::vector<std::vector<VertexId>> copy_ids;
  for (std::size_t i = 2; i <= k; ++i) {
    if (u0) {
      auto am = free_amalgam(z, b_struct, glue);
      z = am.structure;
      xs.push_back(am.right_map.at(*u0));
      std::vector<VertexId> ids;
      for (const auto& [from, to] : am.right_map) ids.push_back(to);
      copy_ids.push_back(ids);
    } else {
      StructureBuilder bz = StructureBuilder::from(z);
      const VertexId fresh = bz.next_free_id();
      bz.add_vertex(fresh);
      z = bz.build();
      xs.push_back(fresh);
      std::vector<VertexId> ids = a0;
      ids.push_back(fresh);
      copy_ids.push_back(ids);
    }
  }

  std::map<VertexId, VertexId> xglue;
  const auto gx = g.structure.ids_of(g.x);
  for (std::size_t i = 0; i < k; ++i) xglue[gx[i]] = xs[i];
  auto am = free_amalgam(z, g.structure, xglue);

  GadgetAmalgam out;
  out.e = am.structure;
  out.z = z;
  out.k = k;
  out.c_set = out.e.set_of(std::vector<VertexId>(c_struct.ids().begin(), c_struct.ids().end()));
  for (const auto& ids : copy_ids) out.b_sets.push_back(out.e.set_of(ids));
  out.x_set = out.e.set_of(xs);
  std::vector<VertexId> yids;
  for (const auto& [from, to] : am.right_map) yids.push_back(to);
  out.y_set = out.e.set_of(yids);
  out.z_in_e = out.e.set_of(std::vector<VertexId>(z.ids().begin(), z.ids().end()));
  return out;
}

}  // namespace predimlab
