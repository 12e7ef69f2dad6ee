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

// Named verification suites. Each one checks a single finite claim and,
// with `negative_control`, runs the same checks on a deliberately broken
// input so that the checker itself is seen to fail.

#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "predimlab/constructions.hpp"
#include "predimlab/gadget.hpp"
#include "predimlab/generic_builder.hpp"
#include "predimlab/independence.hpp"
#include "predimlab/io.hpp"
#include "predimlab/limits.hpp"
#include "predimlab/report.hpp"
#include "predimlab/sa_extensions.hpp"

namespace predimlab {

struct SuiteOptions {
  std::uint64_t seed = 1;
  bool negative_control = false;
  Caps caps = caps_from_env();
};

namespace detail {

inline std::string padded(std::int64_t v, int width = 2) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*lld", width, static_cast<long long>(v));
  return buf;
}

inline FiniteStructure no_structure() { return StructureBuilder(Signature::uniform(2, 1, 2)).build(); }

inline std::vector<VertexId> all_ids(const FiniteStructure& s) { return {s.ids().begin(), s.ids().end()}; }

inline void record_ss(VerificationReport& rep, const std::string& key, const FiniteStructure& s, const VertexSet& a,
                      const VertexSet& b) {
  const auto r = is_self_sufficient(s, a, b, SearchMethod::Flow);
  if (r.holds)
    rep.pass(key);
  else
    rep.fail(key, Witness::of("ss", s, {{"A", s.ids_of(a)}, {"B", s.ids_of(b)}, {"W", s.ids_of(*r.witness)}}),
             Rational(r.witness_delta - r.base_delta), "a set between A and B has smaller delta");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// beatty

/// The property that fails at (i, s) for the given period, or "" if none.
/// Properties: "formula" (entry i against the floor formula), "periodicity",
/// "window-sum" (b consecutive entries from i+1 sum to l) and "ratio"
/// (b (sum - 1) <= l s over the window of length s from i+1).
inline std::string beatty_violation(const BeattySequence& seq, const std::string& property, std::int64_t i, std::int64_t s) {
  const int l = seq.ell, b = seq.b;
  if (property == "formula") return seq.at(i) == beatty_term(l, b, i) ? "" : property;
  if (property == "periodicity") return seq.at(i + b) == seq.at(i) ? "" : property;
  if (property == "window-sum") return seq.window(i, b) == l ? "" : property;
  if (property == "ratio") return static_cast<std::int64_t>(b) * (seq.window(i, s) - 1) <= static_cast<std::int64_t>(l) * s ? "" : property;
  throw InputError("unknown beatty property '" + property + "'");
}

inline BeattySequence beatty_with_fault(int l, int b, bool fault) {
  auto seq = beatty(l, b);
  if (fault) seq.period[0] ^= 1;
  return seq;
}

/// One (l, b) row under key "b=BB,l=LL".
inline void beatty_row(VerificationReport& rep, int l, int b, bool fault) {
  const auto seq = beatty_with_fault(l, b, fault);
  const std::string key = "b=" + detail::padded(b) + ",l=" + detail::padded(l);
  std::string bad;
  std::int64_t bi = 0, bs = 0;
  auto check = [&](const std::string& prop, std::int64_t i, std::int64_t s) {
    if (bad.empty() && !beatty_violation(seq, prop, i, s).empty()) {
      bad = prop;
      bi = i;
      bs = s;
    }
  };
  for (std::int64_t i = -b; i <= 4 * b; ++i) {
    check("formula", i, 0);
    check("periodicity", i, 0);
  }
  // least l/b - (sum - 1)/s, kept as a fraction num/den
  std::int64_t num = 1, den = 0;
  for (std::int64_t i = -b; i <= b; ++i) {
    check("window-sum", i, b);
    std::int64_t sum = 0;
    for (std::int64_t s = 1; s <= 3 * b; ++s) {
      sum += seq.at(i + s);
      const std::int64_t n = l * s - b * (sum - 1), d = static_cast<std::int64_t>(b) * s;
      if (den == 0 || n * den < num * d) num = n, den = d;
      if (bad.empty() && b * (sum - 1) > l * s) {
        bad = "ratio";
        bi = i;
        bs = s;
      }
    }
  }
  const Rational margin(num, den);
  if (bad.empty()) {
    rep.pass(key, margin);
  } else {
    rep.fail(key,
             Witness::of("beatty", detail::no_structure(), {},
                         {{"l", std::to_string(l)}, {"b", std::to_string(b)}, {"property", bad},
                          {"i", std::to_string(bi)}, {"s", std::to_string(bs)}, {"fault", fault ? "flip-first" : "none"}}),
             margin, bad + " fails at i=" + std::to_string(bi));
  }
}

inline void beatty_suite(VerificationReport& rep, int max_b, bool fault) {
  for (int b = 2; b <= max_b; ++b)
    for (int l = 1; l < b; ++l) beatty_row(rep, l, b, fault);
}

// ---------------------------------------------------------------------------
// gadget

inline std::vector<std::array<int, 3>> gadget_suite_params() {
  std::vector<std::array<int, 3>> out;
  for (int n = 2; n <= 10; ++n)
    for (int m = 1; m < n; ++m)
      if (std::gcd(n, m) == 1) out.push_back({n, m, 2});
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= n; ++m)
      if (std::gcd(n, m) == 1) out.push_back({n, m, 3});
  return out;
}

inline void gadget_suite(VerificationReport& rep, bool fault, std::size_t cap) {
  for (const auto& [n, m, r] : gadget_suite_params()) {
    auto g = build_gadget(n, m, r);
    if (fault) {
      if (g.degenerate) continue;
      g = corrupt_gadget(g);
    }
    verify_gadget(g, rep, "r=" + std::to_string(r) + ",n=" + detail::padded(n) + ",m=" + detail::padded(m), cap);
  }
}

// ---------------------------------------------------------------------------
// gadget-amalgam: C and k-1 copies of B over A0, glued to the gadget over X

struct GadgetAmalgamInstance {
  std::string name;
  std::array<int, 3> gadget{};  // (n, m, r): also the signature of C and B
  std::size_t c_order = 0;
  std::vector<std::vector<VertexId>> c_inst;
  std::size_t b_order = 0;
  std::vector<std::vector<VertexId>> b_inst;
  std::vector<VertexId> a0;
  VertexId c_point = 0;
  std::optional<VertexId> u0;
};

inline std::vector<GadgetAmalgamInstance> gadget_amalgam_instances() {
  return {
      // single points over the empty base
      {"point-212", {2, 1, 2}, 1, {}, 1, {}, {}, 0, VertexId{0}},
      // pendant edges over one shared point
      {"edge-312", {3, 1, 2}, 2, {{0, 1}}, 2, {{0, 1}}, {0}, 1, VertexId{1}},
      {"edge-322", {3, 2, 2}, 2, {{0, 1}}, 2, {{0, 1}}, {0}, 1, VertexId{1}},
      // B = A0: the x_i are fresh points
      {"b-equals-a0", {3, 2, 2}, 1, {}, 0, {}, {}, 0, std::nullopt},
      // a two-point base with a path through c
      {"path-522", {5, 2, 2}, 3, {{0, 2}, {1, 2}}, 3, {{0, 2}}, {0, 1}, 2, VertexId{2}},
      // ternary relations
      {"point-113", {1, 1, 3}, 1, {}, 1, {}, {}, 0, VertexId{0}},
      {"point-213", {2, 1, 3}, 1, {}, 1, {}, {}, 0, VertexId{0}},
  };
}

/// The checks on one amalgam, in the structure `e` (which may be reweighted
/// for the negative control; `z` is taken inside `e`).
inline void gadget_amalgam_checks(VerificationReport& rep, const std::string& p, const FiniteStructure& e,
                                  const GadgetAmalgam& am, const std::vector<VertexId>& a0, VertexId c_point) {
  const auto k = static_cast<std::int64_t>(am.k);
  detail::record_ss(rep, p + ":c-le-e", e, am.c_set, e.all());
  for (std::size_t i = 0; i < am.b_sets.size(); ++i)
    detail::record_ss(rep, p + ":b" + std::to_string(i + 2) + "-le-e", e, am.b_sets[i], e.all());
  detail::record_membership(rep, p + ":e-in-c0", e, in_C0(e), nullptr);

  // min over F containing C u Y of delta(F) >= d_Z(XC) + delta(Y/X)
  //   = d_Z(C) + d_Z(X/C) - 1 >= delta(C) + k - 2.
  const auto z = e.induced(am.z_in_e);
  auto in_z = [&](const VertexSet& x) { return z.set_of(e.ids_of(x)); };
  const std::int64_t f_min = minimize_superset(e, am.c_set | am.y_set).value;
  const std::int64_t dzxc = dim(z, in_z(am.x_set | am.c_set));
  const std::int64_t dyx = delta(e, am.y_set) - delta(e, am.x_set);
  const std::int64_t dzc = dim(z, in_z(am.c_set));
  const std::int64_t dzx_c = dim_rel(z, in_z(am.x_set), in_z(am.c_set));
  const std::int64_t dc = delta(e, am.c_set);
  const bool ok = f_min >= dzxc + dyx && dyx == -1 && dzxc == dzc + dzx_c && dzc + dzx_c - 1 >= dc + k - 2;
  const std::string note = "min delta(F) = " + std::to_string(f_min) + ", d_Z(XC) = " + std::to_string(dzxc) +
                           ", delta(Y/X) = " + std::to_string(dyx) + ", delta(C) + k - 2 = " + std::to_string(dc + k - 2);
  if (ok)
    rep.pass(p + ":delta-chain", Rational(f_min - (dc + k - 2)), note);
  else
    rep.fail(p + ":delta-chain",
             Witness::of("delta-chain", e,
                         {{"C", e.ids_of(am.c_set)}, {"X", e.ids_of(am.x_set)}, {"Y", e.ids_of(am.y_set)}, {"Z", e.ids_of(am.z_in_e)}}),
             Rational(f_min - (dc + k - 2)), note);

  // c depends on x_2..x_k over A0: the dimension drops by exactly one.
  VertexSet a0s = e.set_of(a0), rest = am.x_set;
  const auto cset = e.set_of({c_point});
  rest -= cset;
  const std::int64_t drop = dim_rel(e, cset, a0s) - dim_rel(e, cset, a0s | rest);
  if (drop == 1)
    rep.pass(p + ":dependence", std::nullopt, "d(c/A0) drops by 1 over x_2..x_k");
  else
    rep.fail(p + ":dependence", Witness::of("dependence", e, {{"c", {c_point}}, {"A0", a0}, {"X", e.ids_of(rest)}}, {{"drop", "1"}}),
             Rational(drop - 1), "d(c/A0) drops by " + std::to_string(drop));
}

inline void gadget_amalgam_suite(VerificationReport& rep, bool fault) {
  for (const auto& in : gadget_amalgam_instances()) {
    const auto g = build_gadget(in.gadget[0], in.gadget[1], in.gadget[2]);
    const auto sig = Signature::uniform(in.gadget[0], in.gadget[1], in.gadget[2]);
    const auto am = build_gadget_amalgam(make_structure(sig, in.c_order, in.c_inst), make_structure(sig, in.b_order, in.b_inst),
                                         in.a0, in.c_point, in.u0, g, g.x.size() - 1);
    if (!fault) {
      gadget_amalgam_checks(rep, in.name, am.e, am, in.a0, in.c_point);
    } else if (in.gadget[2] == 2) {
      // corrupted weight: relations weigh 3 instead of 1
      const auto bad = am.e.reweighted(Signature::uniform(in.gadget[0], 3, 2));
      gadget_amalgam_checks(rep, in.name + "-m3", bad, am, in.a0, in.c_point);
    }
  }
}

// ---------------------------------------------------------------------------
// path-fact: {u, v} is d-closed in the path with l edges iff l >= 3

inline FiniteStructure path_structure(const Signature& sig, int edges) {
  std::vector<std::vector<VertexId>> inst;
  for (int i = 0; i < edges; ++i) inst.push_back({i, i + 1});
  return make_structure(sig, static_cast<std::size_t>(edges) + 1, inst);
}

inline void path_fact_suite(VerificationReport& rep, bool fault) {
  const auto sig = fault ? Signature::uniform(2, 2, 2) : Signature::uniform(2, 1, 2);
  for (int l = 2; l <= 8; ++l) {
    const auto p = path_structure(sig, l);
    const auto uv = p.set_of({0, static_cast<VertexId>(l)});
    const bool expected = l >= 3, closed = is_d_closed(p, uv);
    const std::string key = "l=" + std::to_string(l);
    const std::string note = std::string("uv ") + (closed ? "is" : "is not") + " d-closed";
    if (closed == expected)
      rep.pass(key, std::nullopt, note);
    else
      rep.fail(key, Witness::of("d-closed", p, {{"X", p.ids_of(uv)}}, {{"expected", expected ? "true" : "false"}}), std::nullopt,
               note);
  }
}

// ---------------------------------------------------------------------------
// ex511 and ex512

inline void ex511_suite(VerificationReport& rep, bool fault, std::size_t cap, const std::vector<int>& rs = {3, 4}) {
  Ex511Options opt;
  opt.exhaustive_cap = cap;
  for (int r : rs) {
    if (fault && r != 3) continue;
    const auto f = ex511_control(r);
    const auto use = fault ? ControlFunction::harmonic(1) : f;
    const std::string pre = "r=" + std::to_string(r) + ":";
    for (const auto& base : enumerate_ex511_bases(r, f)) {
      const auto ex = build_ex511(base.b, base.a, base.b_point, r);
      verify_ex511(ex, use, rep, pre + base.key, opt);
    }
    if (!fault && r == 3) {
      // recorded conflict: the default control function rejects one relation on 3 points
      const auto one = make_structure(Signature::uniform(1, 1, 3), 3, {{0, 1, 2}});
      const auto m = in_Cf(one, ControlFunction::harmonic(1));
      if (!m.member)
        rep.pass(pre + "default-f-rejects-one-relation", m.margin, "harmonic f with slope 1 gives f(3) = 5/2 > 2");
      else
        rep.fail(pre + "default-f-rejects-one-relation",
                 Witness::of("cf", one, {{"X", detail::all_ids(one)}}, control_params(ControlFunction::harmonic(1))),
                 m.margin, "expected the single relation to be rejected");
    }
  }
}

inline void ex512_suite(VerificationReport& rep, bool fault, std::uint64_t seed, std::int64_t s = 73, std::int64_t l = 6) {
  const auto bp = make_structure(Signature::uniform(2, 1, 2), 2, {{0, 1}});
  const auto ex = build_ex512(s, l, bp, {0}, 1);
  Ex512Options opt;
  opt.seed = seed;
  opt.drop_d_edge = fault;
  verify_ex512(ex, bp, {0}, ControlFunction::harmonic(2), rep, "s=" + std::to_string(s) + ",l=" + std::to_string(l), opt);
}

// ---------------------------------------------------------------------------
// msa-bound

struct RandomAmalgam {
  FiniteStructure s;
  VertexSet only_p, only_q;
};

/// P and Q over a shared relation-free R with R <= P, R <= Q, both in C0,
/// at most 6 vertices each; S is their free amalgam.
inline RandomAmalgam random_free_amalgam(const Signature& sig, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto ar = static_cast<std::size_t>(sig.relations().front().arity);
  const double p = ar == 2 ? 0.45 : 0.25;
  const std::size_t rk = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
  const auto r0 = make_structure(sig, rk, {});
  auto side = [&](std::size_t k) {
    for (;;) {
      auto b = StructureBuilder::from(r0);
      for (std::size_t i = rk; i < k; ++i) b.add_vertex(static_cast<VertexId>(i));
      std::vector<VertexId> cur;
      auto rec = [&](auto&& self, VertexId from) -> void {
        if (cur.size() == ar) {
          if (static_cast<std::size_t>(cur.back()) >= rk && std::bernoulli_distribution(p)(rng)) b.add_instance(0, cur);
          return;
        }
        for (VertexId v = from; v < static_cast<VertexId>(k); ++v) {
          cur.push_back(v);
          self(self, v + 1);
          cur.pop_back();
        }
      };
      rec(rec, 0);
      auto s = b.build();
      VertexSet r(s.order());
      for (std::size_t i = 0; i < rk; ++i) r.insert(i);
      if (in_C0(s).member && is_self_sufficient(s, r, s.all(), SearchMethod::Flow).holds) return s;
    }
  };
  std::uniform_int_distribution<std::size_t> size(rk + 1, 6);
  const auto pp = side(size(rng));
  const auto qq = side(size(rng));
  std::map<VertexId, VertexId> glue;
  for (std::size_t i = 0; i < rk; ++i) glue[static_cast<VertexId>(i)] = static_cast<VertexId>(i);
  const auto am = free_amalgam(pp, qq, glue);
  RandomAmalgam out{am.structure, VertexSet(am.structure.order()), VertexSet(am.structure.order())};
  for (std::size_t i = rk; i < pp.order(); ++i) out.only_p.insert(out.s.position_of(static_cast<VertexId>(i)));
  for (const auto& [from, to] : am.right_map)
    if (from >= static_cast<VertexId>(rk)) out.only_q.insert(out.s.position_of(to));
  return out;
}

/// p and q with five common neighbours: five copies over a base of delta 4.
inline RandomAmalgam msa_bound_control() {
  std::vector<std::vector<VertexId>> inst;
  for (VertexId y = 2; y < 7; ++y) {
    inst.push_back({0, y});
    inst.push_back({1, y});
  }
  auto s = make_structure(Signature::uniform(2, 1, 2), 7, inst);
  return {s, s.set_of({0}), s.set_of({1})};
}

inline void msa_bound_suite(VerificationReport& rep, bool fault, std::uint64_t seed, std::size_t cap) {
  MsaBoundOptions opt;
  opt.cap = cap;
  if (fault) {
    const auto c = msa_bound_control();
    check_msa_bound(c.s, c.only_p, c.only_q, rep, "control", opt);
    return;
  }
  const std::vector<std::pair<std::string, Signature>> sigs{{"212", Signature::uniform(2, 1, 2)},
                                                           {"113", Signature::uniform(1, 1, 3)}};
  for (const auto& [name, sig] : sigs)
    for (std::uint64_t i = 0; i < 100; ++i) {
      const auto am = random_free_amalgam(sig, seed * 1000003 + i * 2 + (name == "113" ? 1 : 0));
      const std::string key = "sig=" + name + ",amalgam=" + detail::padded(static_cast<std::int64_t>(i), 3);
      const std::size_t before = rep.cases().size();
      const auto t = check_msa_bound(am.s, am.only_p, am.only_q, rep, key, opt);
      if (rep.cases().size() == before)
        rep.pass(key, t.pairs ? std::optional<Rational>(Rational(t.min_slack)) : std::nullopt,
                 std::to_string(am.s.order()) + " vertices, " + std::to_string(t.pairs) + " straddling msa pairs");
    }
}

// ---------------------------------------------------------------------------
// submodularity: delta is submodular, <= restricts to subsets and is
// transitive, on every graph with at most 7 vertices

namespace detail {

/// delta over every mask, with relation weights multiplied by `sign`.
inline std::vector<std::int64_t> signed_delta_table(const FiniteStructure& s, std::int64_t sign) {
  const std::size_t k = s.order();
  std::vector<std::int64_t> t(std::size_t{1} << k);
  for (std::size_t m = 0; m < t.size(); ++m) {
    std::int64_t d = s.signature().vertex_weight() * std::popcount(m);
    for (const auto& inst : s.instances()) {
      bool in = true;
      for (auto q : inst.members) in = in && ((m >> q) & 1U);
      if (in) d -= sign * s.signature().relations()[inst.relation].weight;
    }
    t[m] = d;
  }
  return t;
}

/// le[b][a] for a subset of b: every c with a <= c <= b has delta(c) >= delta(a).
inline std::vector<std::vector<char>> le_table(const std::vector<std::int64_t>& d, std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  std::vector<std::int64_t> mn(n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) mn[a] = d[a];
    for (std::size_t i = 0; i < k; ++i)
      if (b >> i & 1U)
        for (std::size_t a = b;; a = (a - 1) & b) {
          if (!(a >> i & 1U)) mn[a] = std::min(mn[a], mn[a | (std::size_t{1} << i)]);
          if (a == 0) break;
        }
    for (std::size_t a = b;; a = (a - 1) & b) {
      le[b][a] = mn[a] >= d[a];
      if (a == 0) break;
    }
  }
  return le;
}

struct SubmodularityFailure {
  std::string property;
  std::uint64_t a = 0, b = 0, c = 0;
};

inline std::optional<SubmodularityFailure> submodularity_failure(const FiniteStructure& s, std::int64_t sign,
                                                                 std::array<std::uint64_t, 3>& counts) {
  const std::size_t k = s.order(), n = std::size_t{1} << k;
  const auto d = signed_delta_table(s, sign);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ++counts[0];
      if (d[a | b] + d[a & b] > d[a] + d[b]) return SubmodularityFailure{"submodular", a, b, 0};
    }
  const auto le = le_table(d, k);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = b;; a = (a - 1) & b) {
      if (le[b][a])
        for (std::size_t x = b;; x = (x - 1) & b) {
          ++counts[1];
          if (!le[x][a & x]) return SubmodularityFailure{"restriction", a, b, x};
          if (x == 0) break;
        }
      if (a == 0) break;
    }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t b = c;; b = (b - 1) & c) {
      if (le[c][b])
        for (std::size_t a = b;; a = (a - 1) & b) {
          ++counts[2];
          if (le[b][a] && !le[c][a]) return SubmodularityFailure{"transitivity", a, b, c};
          if (a == 0) break;
        }
      if (b == 0) break;
    }
  return std::nullopt;
}

}  // namespace detail

inline void submodularity_suite(VerificationReport& rep, bool fault, std::size_t max_k = 7) {
  const auto sig = Signature::uniform(2, 1, 2);
  const auto graphs = enumerate_structures(sig, max_k, [](const FiniteStructure&) { return true; });
  const std::int64_t sign = fault ? -1 : 1;
  std::map<std::size_t, std::vector<const FiniteStructure*>> by_size;
  for (const auto& g : graphs) by_size[g.order()].push_back(&g);
  for (const auto& [k, list] : by_size) {
    std::array<std::uint64_t, 3> counts{};
    std::optional<std::pair<const FiniteStructure*, detail::SubmodularityFailure>> bad;
    for (const auto* g : list) {
      if (auto f = detail::submodularity_failure(*g, sign, counts)) {
        bad = {g, *f};
        break;
      }
    }
    const std::string key = "k=" + std::to_string(k);
    const std::string note = std::to_string(list.size()) + " graphs; " + std::to_string(counts[0]) + " pairs, " +
                             std::to_string(counts[1]) + " restrictions, " + std::to_string(counts[2]) + " chains";
    if (!bad) {
      rep.pass(key, std::nullopt, note);
    } else {
      const auto& s = *bad->first;
      auto ids = [&](std::uint64_t m) {
        std::vector<VertexId> v;
        for (std::size_t p = 0; p < s.order(); ++p)
          if (m >> p & 1U) v.push_back(s.id(p));
        return v;
      };
      rep.fail(key,
               Witness::of("submodularity", s, {{"A", ids(bad->second.a)}, {"B", ids(bad->second.b)}, {"C", ids(bad->second.c)}},
                           {{"property", bad->second.property}, {"sign", std::to_string(sign)}}),
               std::nullopt, bad->second.property + " fails");
    }
  }
}

// ---------------------------------------------------------------------------
// axioms: over the chain of small built approximants

inline std::vector<std::pair<std::string, FiniteStructure>> small_approximants(std::size_t max_order, std::uint64_t seed) {
  std::vector<std::pair<std::string, BuildConfig>> cfgs;
  BuildConfig c;
  c.seed = seed;
  c.budget = 40;
  cfgs.push_back({"c0-212-p3", c});
  c.max_pattern = 4;
  cfgs.push_back({"c0-212-p4", c});
  c.max_pattern = 3;
  c.cls = ClassSpec{Signature::uniform(2, 1, 2), ClassTag::CF, ControlFunction::harmonic(2), {}};
  cfgs.push_back({"cf-212-p3", c});
  c.cls = ClassSpec{Signature::uniform(1, 1, 3), ClassTag::C0, {}, {}};
  c.max_pattern = 4;
  cfgs.push_back({"c0-113-p4", c});
  c.cls = ClassSpec{Signature::uniform(3, 2, 2), ClassTag::C0, {}, {}};
  cfgs.push_back({"c0-322-p4", c});
  std::vector<std::pair<std::string, FiniteStructure>> out;
  for (auto& [name, cfg] : cfgs) {
    // stop the chain once it outgrows max_order
    std::size_t step = 0;
    try {
      build_generic(cfg, [&](const FiniteStructure& s) {
        ++step;
        if (s.order() > max_order) throw std::out_of_range("approximant bound");
        out.push_back({name + ":step" + detail::padded(static_cast<std::int64_t>(step)), s});
      });
    } catch (const std::out_of_range&) {
    }
  }
  return out;
}

inline void axioms_suite(VerificationReport& rep, bool fault, std::uint64_t seed) {
  AxiomOptions opt;
  opt.raw_delta = fault;
  const auto list = small_approximants(12, seed);
  for (const auto& [label, s] : list) axiom_suite(s, rep, label, opt);
}

// ---------------------------------------------------------------------------
// extension-property

inline void merge_report(VerificationReport& into, const VerificationReport& from, const std::string& prefix) {
  for (const auto& c : from.cases()) {
    Case d = c;
    d.key = prefix + c.key;
    into.add(std::move(d));
  }
  for (const auto& l : from.labels()) into.label(prefix + " " + l);
}

inline double realised_ratio(const VerificationReport& audit) {
  std::size_t ok = 0, all = 0;
  for (const auto& c : audit.cases()) {
    unsigned a = 0, b = 0;
    if (std::sscanf(c.note.c_str(), "realised %u/%u", &a, &b) == 2) ok += a, all += b;
  }
  return all == 0 ? 1.0 : static_cast<double>(ok) / static_cast<double>(all);
}

inline void extension_property_suite(VerificationReport& rep, bool fault, std::uint64_t seed, std::size_t cap_per_task = 10) {
  BuildConfig cfg;
  cfg.seed = seed;
  cfg.max_pattern = 3;
  cfg.budget = fault ? 0 : 200;
  if (fault) {
    // no build at all: the empty structure realises nothing
    const auto tasks = enumerate_tasks(cfg.cls, cfg.max_pattern, 0);
    const auto empty = StructureBuilder(cfg.cls.signature).build();
    merge_report(rep, audit_extension_property(empty, {tasks.front()}, cap_per_task, EmbedMode::LE), "audit:");
    return;
  }
  const auto r = build_generic(cfg);
  rep.label("build " + cfg.line());
  rep.pass("build:chain-and-class", std::nullopt,
           std::to_string(r.log.entries.size()) + " steps, each checked in class and embedded; " +
               std::to_string(r.structure.order()) + " vertices");
  detail::record_membership(rep, "build:final-in-c0", r.structure, in_C0(r.structure), nullptr);

  const auto again = build_generic(cfg);
  const auto d1 = sha256_hex(r.log.text()), d2 = sha256_hex(again.log.text());
  if (d1 == d2)
    rep.pass("build:deterministic-log", std::nullopt, "log digest " + d1.substr(0, 16));
  else
    rep.fail("build:deterministic-log", Witness::of("determinism", r.structure, {}, {{"first", d1}, {"second", d2}}));

  try {
    (void)replay_build(cfg, BuildLog::parse(r.log.text()));
    rep.pass("build:replay", std::nullopt, "digest " + r.log.digest.substr(0, 16));
  } catch (const InputError& e) {
    rep.fail("build:replay", Witness::of("determinism", r.structure, {}, {{"error", e.what()}}));
  }

  const auto audit = audit_extension_property(r.structure, r.tasks, cap_per_task, EmbedMode::LE, 1);
  merge_report(rep, audit, "audit:");

  // monotone audit: the chain prefix of half the budget realises no larger share
  BuildConfig half_cfg = cfg;
  half_cfg.budget = cfg.budget / 2;
  const auto h = build_generic(half_cfg);
  const double r_half = realised_ratio(audit_extension_property(h.structure, h.tasks, cap_per_task, EmbedMode::LE, 1));
  const double r_full = realised_ratio(audit);
  char note[96];
  std::snprintf(note, sizeof note, "realised share %.4f at budget %zu, %.4f at %zu", r_half, half_cfg.budget, r_full, cfg.budget);
  if (r_half <= r_full)
    rep.pass("audit-monotone", std::nullopt, note);
  else
    rep.fail("audit-monotone", Witness::of("determinism", h.structure, {}, {}), std::nullopt, note);
}

// ---------------------------------------------------------------------------
// kn

inline FiniteStructure bipartite_cycle(int n_gon, int half_length) {
  StructureBuilder b(Signature::polygon(n_gon));
  const int len = 2 * half_length;
  for (int i = 0; i < len; ++i) b.add_vertex(i, i % 2 == 0 ? Part::Point : Part::Line);
  for (int i = 0; i < len; ++i) b.add_edge(i, (i + 1) % len);
  return b.build();
}

inline void kn_suite(VerificationReport& rep, bool fault) {
  for (int n = 3; n <= 5; ++n) {
    const std::string pre = "n=" + std::to_string(n) + ":";
    const auto sig = Signature::polygon(n);
    if (sig.vertex_weight() == n - 1 && sig.relations().front().weight == n - 2)
      rep.pass(pre + "weights", std::nullopt, "delta = " + std::to_string(n - 1) + "|A| - " + std::to_string(n - 2) + "|R[A]|");
    else
      rep.fail(pre + "weights", Witness::of("kn", detail::no_structure(), {}, {{"n", std::to_string(n)}}));

    auto cyc = bipartite_cycle(n, n);
    if (fault) {
      auto b = StructureBuilder::from(cyc);
      b.add_edge(0, 3);  // chord: a 4-cycle
      cyc = b.build();
    }
    const auto m = in_Kn(cyc, n);
    const std::int64_t d = delta(cyc);
    if (m.member && (fault || d == 2 * n))
      rep.pass(pre + "cycle-" + std::to_string(2 * n) + "-accepted", m.margin, "delta = " + std::to_string(d));
    else
      rep.fail(pre + "cycle-" + std::to_string(2 * n) + "-accepted",
               Witness::of("kn", cyc, m.witness ? std::map<std::string, std::vector<VertexId>>{{"X", cyc.ids_of(*m.witness)}}
                                                : std::map<std::string, std::vector<VertexId>>{},
                           {{"n", std::to_string(n)}, {"expect", "member"}}),
               m.margin, m.condition);
    if (fault) continue;
    for (int h = 2; h < n; ++h) {
      const auto shortc = bipartite_cycle(n, h);
      const auto r = in_Kn(shortc, n);
      const std::string key = pre + "cycle-" + std::to_string(2 * h) + "-rejected";
      if (!r.member && r.witness && r.witness->size() == static_cast<std::size_t>(2 * h))
        rep.pass(key, r.margin, "cycle witness of length " + std::to_string(r.witness->size()));
      else
        rep.fail(key, Witness::of("kn", shortc, {}, {{"n", std::to_string(n)}, {"expect", "non-member"}}), std::nullopt,
                 "short cycle not rejected with a cycle witness");
    }
  }
}

// ---------------------------------------------------------------------------
// dispatch

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms",         "beatty",    "ex511",         "ex512",
                                              "extension-property", "gadget", "gadget-amalgam", "kn",
                                              "msa-bound",      "path-fact", "submodularity"};
  return names;
}

/// Runs a suite by name. Throws InputError for an unknown name.
inline VerificationReport run_suite(const std::string& name, const SuiteOptions& opt = {}) {
  VerificationReport rep(name, opt.seed);
  const bool nc = opt.negative_control;
  if (nc) rep.label("negative control: injected fault");
  if (name == "beatty")
    beatty_suite(rep, 40, nc);
  else if (name == "gadget")
    gadget_suite(rep, nc, opt.caps.gadget);
  else if (name == "gadget-amalgam")
    gadget_amalgam_suite(rep, nc);
  else if (name == "path-fact")
    path_fact_suite(rep, nc);
  else if (name == "ex511")
    ex511_suite(rep, nc, opt.caps.membership);
  else if (name == "ex512")
    ex512_suite(rep, nc, opt.seed);
  else if (name == "msa-bound")
    msa_bound_suite(rep, nc, opt.seed, opt.caps.sa_extension);
  else if (name == "submodularity")
    submodularity_suite(rep, nc);
  else if (name == "axioms")
    axioms_suite(rep, nc, opt.seed);
  else if (name == "extension-property")
    extension_property_suite(rep, nc, opt.seed);
  else if (name == "kn")
    kn_suite(rep, nc);
  else
    throw InputError("unknown suite '" + name + "'");
  rep.finalize();
  return rep;
}

}  // namespace predimlab
