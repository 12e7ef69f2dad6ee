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
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <set>
#include <string>
#include <vector>

#include "predimlab/amalgam.hpp"
#include "predimlab/canonical.hpp"
#include "predimlab/classes.hpp"
#include "predimlab/closure.hpp"
#include "predimlab/control_function.hpp"
#include "predimlab/independence.hpp"
#include "predimlab/report.hpp"

namespace predimlab {

inline std::map<std::string, std::string> control_params(const ControlFunction& f) {
  return {{"f_n", std::to_string(f.n())}, {"f_slope", to_string(f.slope())}};
}

namespace detail {
inline void record_membership(VerificationReport& rep, const std::string& key, const FiniteStructure& s,
                              const Membership& m, const ControlFunction* f) {
  if (m.member) {
    rep.add(Case{key, m.partial ? Status::Partial : Status::Pass, std::nullopt, m.margin,
                 m.partial ? std::to_string(m.checked) + " sets examined" : std::string{}});
    return;
  }
  const bool c0 = m.condition == "delta >= 0";
  auto params = (f && !c0) ? control_params(*f) : std::map<std::string, std::string>{};
  rep.fail(key, Witness::of(c0 ? "c0" : "cf", s, {{"X", s.ids_of(*m.witness)}}, params), m.margin, m.condition);
}

inline void record_d_closed(VerificationReport& rep, const std::string& key, const FiniteStructure& s,
                            const VertexSet& x) {
  const auto cl = cld(s, x);
  if (cl == x)
    rep.pass(key);
  else
    rep.fail(key, Witness::of("d-closed", s, {{"X", s.ids_of(x)}}), std::nullopt,
             "cl^d adds " + std::to_string((cl - x).size()) + " points");
}
}  // namespace detail

// ---------------------------------------------------------------------------
// The r >= 3, n = m = 1 construction: E = F u {c}, F = r-1 copies of B over A.

/// The harmonic control function with slope min(1, (r-2)/H_{r-1}), the
/// steepest member of the family under which a single relation on r points
/// lies in C_f (f(r) <= r - 1).
inline ControlFunction ex511_control(int r) {
  Rational h = 0;
  for (int j = 1; j <= r - 1; ++j) h += Rational(1, j);
  Rational slope = Rational(r - 2) / h;
  if (slope > 1) slope = 1;
  return ControlFunction::harmonic(1, slope);
}

struct Ex511 {
  int r = 3;
  FiniteStructure e;  // the amalgam E
  VertexSet a, c;
  std::vector<VertexSet> b_sets;
  std::vector<VertexId> b_points;
  VertexId c_point = 0;
  FiniteStructure f2;  // B over a, with the e's attached
  VertexSet f2_a;
  VertexId f2_point = 0;  // the point a
  std::vector<VertexId> f2_e;
};

/// `b` is B with A given by `a_ids`; `b_point` is the b with B = cl^d(A, b).
inline Ex511 build_ex511(const FiniteStructure& b, const std::vector<VertexId>& a_ids, VertexId b_point,
                         int r) {
  const auto& sig = b.signature();
  if (r < 3) throw InputError("this construction needs r >= 3");
  if (sig.vertex_weight() != 1 || sig.relations().size() != 1 || sig.relations()[0].weight != 1 ||
      sig.relations()[0].arity != r)
    throw InputError("this construction needs the signature (1,1,r)");
  const std::set<VertexId> aset(a_ids.begin(), a_ids.end());
  if (aset.count(b_point) || !b.position(b_point)) throw InputError("b must lie in B \\ A");

  Ex511 ex;
  ex.r = r;
  std::map<VertexId, VertexId> glue;
  for (auto v : a_ids) glue[v] = v;
  FiniteStructure f = b;
  std::vector<std::vector<VertexId>> copies{std::vector<VertexId>(b.ids().begin(), b.ids().end())};
  ex.b_points.push_back(b_point);
  for (int i = 2; i <= r - 1; ++i) {
    auto am = free_amalgam(f, b, glue);
    f = am.structure;
    std::vector<VertexId> ids;
    for (const auto& [from, to] : am.right_map) ids.push_back(to);
    copies.push_back(ids);
    ex.b_points.push_back(am.right_map.at(b_point));
  }
  StructureBuilder eb = StructureBuilder::from(f);
  ex.c_point = eb.next_free_id();
  eb.add_vertex(ex.c_point);
  std::vector<VertexId> rel = ex.b_points;
  rel.push_back(ex.c_point);
  eb.add_instance(0, rel);
  ex.e = eb.build();
  ex.a = ex.e.set_of(a_ids);
  ex.c = ex.e.set_of({ex.c_point});
  for (const auto& ids : copies) ex.b_sets.push_back(ex.e.set_of(ids));

  // B over the point a = b, freely amalgamated with R(a, e_1..e_{r-1}).
  StructureBuilder star(sig);
  star.add_vertex(0);
  std::vector<VertexId> srel{0};
  for (int i = 1; i <= r - 1; ++i) {
    star.add_vertex(i);
    srel.push_back(i);
  }
  star.add_instance(0, srel);
  auto am = free_amalgam(b, star.build(), {{0, b_point}});
  ex.f2 = am.structure;
  ex.f2_a = ex.f2.set_of(a_ids);
  ex.f2_point = b_point;
  for (int i = 1; i <= r - 1; ++i) ex.f2_e.push_back(am.right_map.at(i));
  return ex;
}

struct Ex511Options {
  std::size_t exhaustive_cap = Caps{}.membership;
};

/// Adds the checks for one instance under keys "<prefix>:...".
inline void verify_ex511(const Ex511& ex, const ControlFunction& f, VerificationReport& rep,
                         const std::string& prefix, const Ex511Options& opt = {}) {
  const auto& e = ex.e;
  MembershipOptions mo;
  mo.exhaustive_cap = opt.exhaustive_cap;
  const auto mem = in_Cf(e, f, mo);
  detail::record_membership(rep, prefix + ":e-in-cf", e, mem, &f);

  // Spot-check of the logarithmic inequality on every Y covered by the argument.
  const std::size_t k = e.order();
  if (k > opt.exhaustive_cap) throw CapacityError("star construction membership", opt.exhaustive_cap, k);
  const int r = ex.r;
  const Rational bound = Rational(2 * r - 1, 2);
  std::uint64_t need = 0, amask = 0;
  auto bits = [](const VertexSet& x) {
    std::uint64_t m = 0;
    x.for_each([&](std::size_t p) { m |= std::uint64_t{1} << p; });
    return m;
  };
  need = bits(ex.c);
  for (auto bp : ex.b_points) need |= std::uint64_t{1} << e.position_of(bp);
  amask = bits(ex.a);
  std::vector<std::uint64_t> bmask;
  for (const auto& bs : ex.b_sets) bmask.push_back(bits(bs));
  std::uint64_t spots = 0;
  std::optional<std::uint64_t> bad;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << k) && !bad; ++y) {
    if ((y & need) != need || (y & amask) == 0) continue;
    std::size_t best = 0, bi = 0;
    for (std::size_t i = 0; i < bmask.size(); ++i) {
      const auto q = static_cast<std::size_t>(std::popcount(y & bmask[i] & ~amask));
      if (q > best) best = q, bi = i;
    }
    if (best < 2) continue;
    const auto yb1 = static_cast<std::int64_t>(std::popcount(y & bmask[bi]));
    const Rational ratio = Rational(yb1 + (r - 2) * static_cast<std::int64_t>(best)) / Rational(yb1 - 1);
    ++spots;
    if (ratio > bound || static_cast<double>(r - 2) < std::log(static_cast<double>(ratio))) bad = y;
  }
  if (!bad) {
    rep.pass(prefix + ":log-inequality", std::nullopt, std::to_string(spots) + " sets");
  } else {
    VertexSet y(k);
    for (std::size_t p = 0; p < k; ++p)
      if ((*bad >> p) & 1U) y.insert(p);
    std::map<std::string, std::vector<VertexId>> sets{{"Y", e.ids_of(y)}, {"A", e.ids_of(ex.a)}};
    for (std::size_t i = 0; i < ex.b_sets.size(); ++i) sets["B" + std::to_string(i + 1)] = e.ids_of(ex.b_sets[i]);
    rep.fail(prefix + ":log-inequality", Witness::of("ex511-log", e, sets, {{"r", std::to_string(r)}}));
  }

  for (std::size_t i = 0; i < ex.b_sets.size(); ++i)
    detail::record_d_closed(rep, prefix + ":b" + std::to_string(i + 1) + "-d-closed", e, ex.b_sets[i]);
  detail::record_d_closed(rep, prefix + ":ac-d-closed", e, ex.a | ex.c);

  // the base B over a
  const auto& f2 = ex.f2;
  detail::record_membership(rep, prefix + ":base-in-cf", f2, in_Cf(f2, f, mo), &f);
  detail::record_d_closed(rep, prefix + ":base-a-d-closed", f2, ex.f2_a);
  for (std::size_t i = 0; i < ex.f2_e.size(); ++i) {
    const auto ei = f2.set_of({ex.f2_e[i]});
    bool ok = false;
    std::string why;
    try {
      ok = perp(f2, ei, f2.none(), ex.f2_a);
    } catch (const ContractError& err) {
      why = err.what();
    }
    const std::string key = prefix + ":e" + std::to_string(i + 1) + "-perp-a";
    if (ok)
      rep.pass(key);
    else
      rep.fail(key, Witness::of("perp", f2, {{"b", {ex.f2_e[i]}}, {"A", {}}, {"C", f2.ids_of(ex.f2_a)}}), std::nullopt,
               why);
  }
  const auto es = f2.set_of(ex.f2_e);
  const auto ap = f2.set_of({ex.f2_point});
  for (const auto& [name, base] : std::vector<std::pair<std::string, VertexSet>>{{"ae", ex.f2_a | es}, {"e", es}}) {
    const std::string key = prefix + ":a-in-cld-" + name;
    if (cld(f2, base).contains(f2.position_of(ex.f2_point)))
      rep.pass(key);
    else
      rep.fail(key, Witness::of("in-closure", f2, {{"X", f2.ids_of(base)}, {"P", f2.ids_of(ap)}}));
  }
}

struct Ex511Base {
  FiniteStructure b;
  std::vector<VertexId> a;
  VertexId b_point = 0;
  std::string key;  // canonical description
};

/// All (A, B, b) up to isomorphism with |A| <= max_a, |B \ A| <= max_new,
/// B in C_f, A d-closed in B and B = cl^d(A, b). Ids: A = 0..|A|-1.
inline std::vector<Ex511Base> enumerate_ex511_bases(int r, const ControlFunction& f, std::size_t max_a = 3,
                                                    std::size_t max_new = 2) {
  const Signature sig = Signature::uniform(1, 1, r);
  std::vector<Ex511Base> out;
  std::set<std::string> seen;
  for (std::size_t na = 0; na <= max_a; ++na)
    for (std::size_t nb = 1; nb <= max_new; ++nb) {
      const std::size_t k = na + nb;
      std::vector<std::vector<VertexId>> tuples;
      std::vector<VertexId> cur;
      auto rec = [&](auto&& self, VertexId from) -> void {
        if (cur.size() == static_cast<std::size_t>(r)) {
          tuples.push_back(cur);
          return;
        }
        for (VertexId v = from; v < static_cast<VertexId>(k); ++v) {
          cur.push_back(v);
          self(self, v + 1);
          cur.pop_back();
        }
      };
      rec(rec, 0);
      if (tuples.size() > 20) throw CapacityError("star construction base enumeration", 20, tuples.size());
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << tuples.size()); ++pick) {
        StructureBuilder bld(sig);
        for (VertexId v = 0; v < static_cast<VertexId>(k); ++v) bld.add_vertex(v);
        for (std::size_t t = 0; t < tuples.size(); ++t)
          if ((pick >> t) & 1U) bld.add_instance(0, tuples[t]);
        const auto b = bld.build();
        std::vector<VertexId> a_ids;
        for (VertexId v = 0; v < static_cast<VertexId>(na); ++v) a_ids.push_back(v);
        const auto aset = b.set_of(a_ids);
        if (!is_d_closed(b, aset)) continue;
        if (!in_Cf(b, f).member) continue;
        for (VertexId bp = static_cast<VertexId>(na); bp < static_cast<VertexId>(k); ++bp) {
          if (cld(b, aset.with(b.position_of(bp))) != b.all()) continue;
          std::vector<int> colours(k, 0);
          for (std::size_t p = 0; p < na; ++p) colours[p] = 1;
          colours[static_cast<std::size_t>(bp)] = 2;
          const auto key = canonical_form(b, colours).key();
          if (!seen.insert(key).second) continue;
          out.push_back({b, a_ids, bp, "a" + std::to_string(na) + "n" + std::to_string(nb) + "#" + std::to_string(out.size())});
        }
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// The (2,1,2) construction: the CD graph and E = B u C u D.

/// c_0 d_0 c_1 d_1 ... is a 2s-cycle and d_i ~ d_{i+l}. Ids: c_i = i, d_i = s + i.
inline FiniteStructure cd_graph(std::int64_t s, std::int64_t ell, bool check_params = true) {
  if (s < 3 || ell < 1 || ell >= s) throw InputError("cd graph needs s >= 3 and 0 < l < s");
  if (std::gcd(s, ell) != 1) throw InputError("cd graph needs gcd(s, l) = 1");
  if (check_params && !(6 <= ell && 12 * ell < s)) throw InputError("cd graph needs 6 <= l < s/12");
  StructureBuilder b(Signature::uniform(2, 1, 2));
  for (VertexId v = 0; v < 2 * s; ++v) b.add_vertex(v);
  for (std::int64_t i = 0; i < s; ++i) {
    b.add_edge(i, s + i);
    b.add_edge(s + i, (i + 1) % s);
    b.add_edge(s + i, s + (i + ell) % s);
  }
  return b.build();
}

struct Ex512 {
  std::int64_t s = 0, ell = 0;
  FiniteStructure e;
  VertexSet a, c, d;
  std::vector<VertexSet> b_sets;
  std::vector<VertexId> b_points;
};

/// E: s copies of B' over A (ids from 2s up), the CD graph, and b_i ~ c_i.
inline Ex512 build_ex512(std::int64_t s, std::int64_t ell, const FiniteStructure& b_prime,
                         const std::vector<VertexId>& a_ids, VertexId b_point, bool check_params = true) {
  if (!(b_prime.signature() == Signature::uniform(2, 1, 2))) throw InputError("this construction needs (2,1,2)");
  if (std::count(a_ids.begin(), a_ids.end(), b_point) || !b_prime.position(b_point))
    throw InputError("b must lie in B' \\ A");
  Ex512 ex;
  ex.s = s;
  ex.ell = ell;
  const auto cd = cd_graph(s, ell, check_params);
  auto first = free_amalgam(cd, b_prime, {}, 2 * s);
  FiniteStructure z = first.structure;
  std::map<VertexId, VertexId> glue;
  for (auto v : a_ids) glue[v] = first.right_map.at(v);
  std::vector<std::vector<VertexId>> copies;
  auto record = [&](const Amalgam& am) {
    std::vector<VertexId> ids;
    for (const auto& [from, to] : am.right_map) ids.push_back(to);
    copies.push_back(ids);
    ex.b_points.push_back(am.right_map.at(b_point));
  };
  record(first);
  for (std::int64_t i = 1; i < s; ++i) {
    auto am = free_amalgam(z, b_prime, glue);
    z = am.structure;
    record(am);
  }
  StructureBuilder eb = StructureBuilder::from(z);
  for (std::int64_t i = 0; i < s; ++i) eb.add_edge(ex.b_points[static_cast<std::size_t>(i)], i);
  ex.e = eb.build();
  std::vector<VertexId> cs, ds, as;
  for (std::int64_t i = 0; i < s; ++i) {
    cs.push_back(i);
    ds.push_back(s + i);
  }
  for (const auto& [from, to] : glue) as.push_back(to);
  ex.a = ex.e.set_of(as);
  ex.c = ex.e.set_of(cs);
  ex.d = ex.e.set_of(ds);
  for (const auto& ids : copies) ex.b_sets.push_back(ex.e.set_of(ids));
  return ex;
}

/// delta(E(s)) = delta(A) + s delta(B'/A) and |E(s)| = |A| + s(|B' \ A| + 2):
/// the least s >= 1 with delta(E(s)) >= f(|E(s)|), if one exists below `limit`.
inline std::optional<std::int64_t> ex512_least_s(const FiniteStructure& b_prime, const std::vector<VertexId>& a_ids,
                                                 const ControlFunction& f, std::int64_t limit = 100000) {
  const auto aset = b_prime.set_of(a_ids);
  const std::int64_t da = delta(b_prime, aset);
  const std::int64_t rel = delta(b_prime) - da;
  const auto na = static_cast<std::int64_t>(a_ids.size());
  const auto extra = static_cast<std::int64_t>(b_prime.order()) - na;
  Rational fv = f.eval(static_cast<std::size_t>(na));
  std::int64_t size = na;
  for (std::int64_t s = 1; s <= limit; ++s) {
    for (std::int64_t j = 0; j < extra + 2; ++j) fv += f.increment(static_cast<std::size_t>(++size));
    if (Rational(da + s * rel) >= fv) return s;
  }
  return std::nullopt;
}

struct Ex512Options {
  std::uint64_t seed = 1;
  std::size_t samples = 1000;      // accepted d-closed samples of CD
  std::size_t max_sample = 18;     // largest accepted d-closed sample
  std::size_t closure_samples = 1000;
  std::size_t cd_connected_k = 14;  // depth of the PARTIAL C_f pass on CD
  std::size_t e_connected_k = 7;    // depth of the PARTIAL C_f pass on E
  std::size_t random_samples = 1000;
  bool drop_d_edge = false;  // fault injection: remove d_0 ~ d_l
};

inline FiniteStructure without_instance(const FiniteStructure& s, std::uint32_t rel, std::vector<VertexId> ids) {
  StructureBuilder b(s.signature());
  for (std::size_t p = 0; p < s.order(); ++p) b.add_vertex(s.id(p), s.has_parts() ? std::optional<Part>(s.part(p)) : std::nullopt);
  std::sort(ids.begin(), ids.end());
  bool removed = false;
  for (const auto& inst : s.instances()) {
    std::vector<VertexId> m;
    for (auto q : inst.members) m.push_back(s.id(q));
    if (inst.relation == rel && m == ids) {
      removed = true;
      continue;
    }
    b.add_instance(inst.relation, m);
  }
  if (!removed) throw InputError("instance to remove is not present");
  return b.build();
}

/// All checks on the (2,1,2) construction. Keys are fixed names; `prefix`
/// separates several runs inside one report.
inline void verify_ex512(const Ex512& ex, const FiniteStructure& b_prime, const std::vector<VertexId>& a_ids,
                         const ControlFunction& f, VerificationReport& rep, const std::string& prefix,
                         const Ex512Options& opt = {}) {
  const std::int64_t s = ex.s;
  FiniteStructure cd = ex.e.induced(ex.c | ex.d);
  if (opt.drop_d_edge) cd = without_instance(cd, 0, {s, s + ex.ell});
  const auto p = prefix.empty() ? std::string{} : prefix + ":";

  // the cycle CD
  const auto g = girth(cd);
  if (!g.length || *g.length >= 6)
    rep.pass(p + "cd-girth", g.length ? std::optional<Rational>(Rational(static_cast<std::int64_t>(*g.length))) : std::nullopt);
  else
    rep.fail(p + "cd-girth", Witness::of("girth", cd, {{"cycle", [&] {
                                                         std::vector<VertexId> ids;
                                                         for (auto q : g.cycle) ids.push_back(cd.id(q));
                                                         return ids;
                                                       }()}},
                                         {{"min", "6"}}));
  const auto dcd = delta(cd);
  if (dcd == s && cd.order() == static_cast<std::size_t>(2 * s))
    rep.pass(p + "cd-delta", Rational(dcd), "|CD| = " + std::to_string(cd.order()));
  else
    rep.fail(p + "cd-delta", Witness::of("delta-eq", cd, {}, {{"expected", std::to_string(s)}}), Rational(dcd - s),
             "delta(CD) = " + std::to_string(dcd));

  // C_f membership of CD: connected sets through c_0 or d_0 (every orbit of
  // the rotation i -> i+1 meets them) plus seeded random connected sets.
  {
    MembershipOptions mo;
    mo.exhaustive_cap = 0;
    mo.connected_k = opt.cd_connected_k;
    mo.samples = opt.random_samples;
    mo.seed = opt.seed;
    mo.roots = {0, static_cast<std::size_t>(s)};
    detail::record_membership(rep, p + "cd-in-cf", cd, in_Cf(cd, f, mo), &f);
  }

  // seeded d-closed connected samples.
  std::mt19937_64 rng(opt.seed);
  {
    std::uniform_int_distribution<std::size_t> size_dist(1, opt.max_sample);
    std::size_t accepted = 0, attempts = 0;
    std::optional<VertexSet> bad, bad_f;
    Rational least = 0;
    bool first = true;
    const auto th = f.thresholds(opt.max_sample);
    std::set<std::string> distinct;
    while (accepted < opt.samples && attempts < 50 * opt.samples) {
      ++attempts;
      const auto x0 = random_connected_subset(cd, size_dist(rng), rng);
      const auto x = cld(cd, x0);
      if (x.size() > opt.max_sample || !is_connected(cd, x)) continue;
      ++accepted;
      std::ostringstream os;
      os << x;
      distinct.insert(os.str());
      const auto dx = delta(cd, x);
      const Rational gap = Rational(dx) - Rational(static_cast<std::int64_t>(x.size()) + 3, 2);
      if (first || gap < least) least = gap;
      first = false;
      if (gap < 0 && !bad) bad = x;
      if (dx < th[x.size()] && !bad_f) bad_f = x;
    }
    const std::string note = std::to_string(accepted) + " samples (" + std::to_string(distinct.size()) + " distinct) in " +
                             std::to_string(attempts) + " draws";
    if (accepted < opt.samples)
      rep.fail(p + "samples", Witness::of("sample-shortfall", cd, {}, {{"accepted", std::to_string(accepted)}}),
               std::nullopt, note);
    else if (!bad)
      rep.pass(p + "samples", least, note);
    else
      rep.fail(p + "samples", Witness::of("ex512-sample-bound", cd, {{"X", cd.ids_of(*bad)}}), least, note);
    if (!bad_f)
      rep.pass(p + "samples-in-cf", std::nullopt, note);
    else
      rep.fail(p + "samples-in-cf", Witness::of("cf", cd, {{"X", cd.ids_of(*bad_f)}}, control_params(f)));
  }

  // closures of C-subsets.
  {
    std::uniform_int_distribution<std::int64_t> t_dist(1, s);
    std::optional<VertexSet> bad;
    std::int64_t least = 0;
    std::size_t largest_t = 0;
    for (std::size_t i = 0; i < opt.closure_samples; ++i) {
      std::vector<std::int64_t> cs(static_cast<std::size_t>(s));
      std::iota(cs.begin(), cs.end(), 0);
      std::shuffle(cs.begin(), cs.end(), rng);
      const auto t0 = static_cast<std::size_t>(t_dist(rng));
      VertexSet x0(cd.order());
      for (std::size_t j = 0; j < t0; ++j) x0.insert(cd.position_of(cs[j]));
      const auto x = cld(cd, x0);
      const auto t = static_cast<std::int64_t>((x & cd.set_of(std::vector<VertexId>(cs.begin(), cs.end()))).size());
      largest_t = std::max(largest_t, static_cast<std::size_t>(t));
      const std::int64_t gap = 4 * t - 3 - static_cast<std::int64_t>(x.size());
      if (i == 0 || gap < least) least = gap;
      if (gap < 0 && !bad) bad = x0;
    }
    if (!bad)
      rep.pass(p + "c-closure-bound", Rational(least), std::to_string(opt.closure_samples) + " C-subsets");
    else
      rep.fail(p + "c-closure-bound", Witness::of("ex512-closure-bound", cd, {{"XC", cd.ids_of(*bad)}}), Rational(least));
  }

  // E: s copies of B' glued over A
  const auto& e = ex.e;
  {
    const std::int64_t de = delta(e);
    const auto aset = b_prime.set_of(a_ids);
    const std::int64_t expect = delta(b_prime, aset) + s * (delta(b_prime) - delta(b_prime, aset));
    const auto expect_size = static_cast<std::int64_t>(a_ids.size()) +
                             s * (static_cast<std::int64_t>(b_prime.order() - a_ids.size()) + 2);
    const auto ls = ex512_least_s(b_prime, a_ids, f);
    const std::string note = "delta(E) = " + std::to_string(de) + ", |E| = " + std::to_string(e.order()) +
                             ", least s with delta(E(s)) >= f(|E(s)|): " + (ls ? std::to_string(*ls) : "none");
    if (de == expect && static_cast<std::int64_t>(e.order()) == expect_size)
      rep.pass(p + "e-counts", Rational(de), note);
    else
      rep.fail(p + "e-counts", Witness::of("delta-eq", e, {}, {{"expected", std::to_string(expect)}}), std::nullopt, note);
    const Rational margin = Rational(de) - f.eval(e.order());
    if (margin >= 0)
      rep.pass(p + "e-delta-vs-f", margin, note);
    else
      rep.fail(p + "e-delta-vs-f", Witness::of("cf", e, {{"X", e.ids_of(e.all())}}, control_params(f)), margin, note);

    MembershipOptions mo;
    mo.exhaustive_cap = 0;
    mo.connected_k = opt.e_connected_k;
    mo.samples = opt.random_samples;
    mo.seed = opt.seed;
    mo.roots = {0, static_cast<std::size_t>(s)};
    ex.a.for_each([&](std::size_t q) { mo.roots.push_back(q); });
    ex.b_sets.front().for_each([&](std::size_t q) {
      if (!ex.a.contains(q)) mo.roots.push_back(q);
    });
    std::sort(mo.roots.begin(), mo.roots.end());
    detail::record_membership(rep, p + "e-in-cf", e, in_Cf(e, f, mo), &f);
  }

  // Steps 5 and 6, exact at full size.
  {
    std::optional<VertexSet> bad5;
    ex.d.for_each([&](std::size_t q) {
      if (!bad5 && !is_d_closed(e, ex.a.with(q))) bad5 = ex.a.with(q);
    });
    if (!bad5)
      rep.pass(p + "ae-d-closed", std::nullopt, std::to_string(s) + " points e");
    else
      rep.fail(p + "ae-d-closed", Witness::of("d-closed", e, {{"X", e.ids_of(*bad5)}}));
    std::optional<VertexSet> bad6;
    for (const auto& bs : ex.b_sets)
      if (!bad6 && !is_d_closed(e, bs)) bad6 = bs;
    if (!bad6)
      rep.pass(p + "b-d-closed", std::nullopt, std::to_string(ex.b_sets.size()) + " copies");
    else
      rep.fail(p + "b-d-closed", Witness::of("d-closed", e, {{"X", e.ids_of(*bad6)}}));
  }
}

}  // namespace predimlab
