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

// Independent re-evaluation of FAIL witnesses. Each claim is recomputed from
// the witness structure and its named sets alone, so a reported failure can
// be confirmed without rerunning the suite that produced it.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "predimlab/suites.hpp"

namespace predimlab {

struct ReplayOutcome {
  bool reproduced = false;
  std::string detail;
};

namespace detail {

struct WitnessView {
  const Witness& w;
  LoadedStructure loaded;

  const FiniteStructure& s() const { return loaded.structure; }
  bool has(const std::string& name) const { return loaded.sets.count(name) != 0; }
  VertexSet set(const std::string& name) const {
    const auto it = loaded.sets.find(name);
    if (it == loaded.sets.end()) throw InputError("witness '" + w.claim + "' lacks set " + name);
    return loaded.structure.set_of(it->second);
  }
  const std::vector<VertexId>& ids(const std::string& name) const {
    const auto it = loaded.sets.find(name);
    if (it == loaded.sets.end()) throw InputError("witness '" + w.claim + "' lacks set " + name);
    return it->second;
  }
  std::string param(const std::string& name, std::optional<std::string> fallback = std::nullopt) const {
    const auto it = w.params.find(name);
    if (it != w.params.end()) return it->second;
    if (fallback) return *fallback;
    throw InputError("witness '" + w.claim + "' lacks parameter " + name);
  }
  std::int64_t num(const std::string& name) const {
    try {
      return std::stoll(param(name));
    } catch (const std::logic_error&) {
      throw InputError("witness parameter " + name + " is not an integer");
    }
  }
};

inline ReplayOutcome outcome(bool reproduced, std::string detail) { return {reproduced, std::move(detail)}; }

inline ControlFunction control_from(const WitnessView& v) {
  return ControlFunction::harmonic(v.num("f_n"), Rational(v.param("f_slope", std::string("1"))));
}

inline std::vector<std::size_t> positions_of(const FiniteStructure& s, const std::vector<VertexId>& ids) {
  std::vector<std::size_t> out;
  for (auto id : ids) out.push_back(s.position_of(id));
  return out;
}

using ReplayFn = ReplayOutcome (*)(const WitnessView&);

inline ReplayOutcome replay_ss(const WitnessView& v) {
  const auto a = v.set("A"), b = v.set("B"), w = v.set("W");
  if (!a.is_subset_of(w) || !w.is_subset_of(b)) return outcome(false, "W is not between A and B");
  const auto da = delta(v.s(), a), dw = delta(v.s(), w);
  return outcome(dw < da, "delta(A) = " + std::to_string(da) + ", delta(W) = " + std::to_string(dw));
}

inline ReplayOutcome replay_d_closed(const WitnessView& v) {
  const bool expected = v.param("expected", std::string("true")) == "true";
  const bool closed = is_d_closed(v.s(), v.set("X"));
  return outcome(closed != expected, std::string("X is ") + (closed ? "" : "not ") + "d-closed");
}

inline ReplayOutcome replay_c0(const WitnessView& v) {
  const auto d = delta(v.s(), v.set("X"));
  return outcome(d < 0, "delta(X) = " + std::to_string(d));
}

inline ReplayOutcome replay_cf(const WitnessView& v) {
  const auto x = v.set("X");
  const auto f = control_from(v);
  const auto d = delta(v.s(), x);
  const auto bound = f.eval(x.size());
  return outcome(!x.empty() && Rational(d) < bound, "delta(X) = " + std::to_string(d) + ", f(|X|) = " + to_string(bound));
}

inline ReplayOutcome replay_clause1(const WitnessView& v) {
  const auto x = v.set("X");
  const auto rel = delta(v.s()) - delta(v.s(), x);
  return outcome(!(rel == -1 && x.size() >= 2), "delta(Y/X) = " + std::to_string(rel) + ", |X| = " + std::to_string(x.size()));
}

inline ReplayOutcome replay_clause2(const WitnessView& v) {
  const auto x = v.set("X"), u = v.set("U");
  const auto du = delta(v.s(), u), dux = delta(v.s(), u & x);
  return outcome(!x.is_subset_of(u) && du < dux, "delta(U) = " + std::to_string(du) + ", delta(U n X) = " + std::to_string(dux));
}

inline ReplayOutcome replay_clause3(const WitnessView& v) {
  const auto x = v.set("X"), z = v.set("Z");
  const auto dz = delta(v.s(), z), dx = delta(v.s(), x);
  return outcome(x.is_subset_of(z) && z != v.s().all() && dz < dx,
                 "delta(Z) = " + std::to_string(dz) + ", delta(X) = " + std::to_string(dx));
}

inline ReplayOutcome replay_beatty(const WitnessView& v) {
  const auto seq = beatty_with_fault(static_cast<int>(v.num("l")), static_cast<int>(v.num("b")), v.param("fault", std::string("none")) != "none");
  const auto bad = beatty_violation(seq, v.param("property"), v.num("i"), v.num("s"));
  return outcome(!bad.empty(), bad.empty() ? "property holds" : bad + " fails");
}

inline ReplayOutcome replay_kn(const WitnessView& v) {
  const int n = static_cast<int>(v.num("n"));
  const auto expect = v.param("expect", std::string("weights"));
  if (expect == "weights") {
    const auto sig = Signature::polygon(n);
    return outcome(!(sig.vertex_weight() == n - 1 && sig.relations().front().weight == n - 2), "polygon weights");
  }
  const auto m = in_Kn(v.s(), n);
  if (expect == "member") return outcome(!m.member, m.member ? "member" : "rejected: " + m.condition);
  return outcome(m.member || !m.witness, m.member ? "accepted" : "rejected: " + m.condition);
}

inline ReplayOutcome replay_girth(const WitnessView& v) {
  const auto& cyc = v.ids("cycle");
  const auto min = static_cast<std::size_t>(v.num("min"));
  const auto adj = binary_adjacency(v.s());
  bool closed = cyc.size() >= 3;
  for (std::size_t i = 0; closed && i < cyc.size(); ++i) {
    const auto a = v.s().position_of(cyc[i]), b = v.s().position_of(cyc[(i + 1) % cyc.size()]);
    closed = std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
  }
  return outcome(closed && cyc.size() < min, "cycle of length " + std::to_string(cyc.size()));
}

inline ReplayOutcome replay_delta_eq(const WitnessView& v) {
  const auto d = delta(v.s());
  return outcome(d != v.num("expected"), "delta = " + std::to_string(d));
}

inline ReplayOutcome replay_msa_bound(const WitnessView& v) {
  const auto z = v.set("Z"), w = v.set("W");
  if (!is_msa(v.s(), z, z | w)) return outcome(false, "Z, ZW is not msa");
  const auto t = make_msa_type(v.s(), z.positions(), z | w);
  const auto n = count_msa_copies(v.s(), z, t, z.positions()).count();
  const auto dz = delta(v.s(), z);
  return outcome(static_cast<std::int64_t>(n) > dz, std::to_string(n) + " copies, delta(Z) = " + std::to_string(dz));
}

inline ReplayOutcome replay_axioms(const WitnessView& v) {
  const auto& s = v.s();
  auto get = [&](const char* n) { return v.has(n) ? v.set(n) : s.none(); };
  const bool bad = axiom_violated(s, v.param("axiom"), get("A"), get("B"), get("C"), get("D"),
                                  v.param("dimension", std::string("d")) == "delta");
  return outcome(bad, v.param("axiom") + (bad ? " violated" : " holds"));
}

inline ReplayOutcome replay_in_closure(const WitnessView& v) {
  const bool in = v.set("P").is_subset_of(cld(v.s(), v.set("X")));
  return outcome(!in, in ? "P is inside cl^d(X)" : "P is outside cl^d(X)");
}

inline ReplayOutcome replay_perp(const WitnessView& v) {
  try {
    const bool p = perp(v.s(), v.set("b"), v.set("A"), v.set("C"));
    return outcome(!p, p ? "perp holds" : "perp fails");
  } catch (const ContractError& e) {
    return outcome(true, e.what());
  }
}

inline ReplayOutcome replay_ex511_log(const WitnessView& v) {
  const auto& s = v.s();
  const auto y = v.set("Y"), a = v.set("A");
  const auto r = v.num("r");
  std::size_t best = 0, yb1 = 0;
  for (int i = 1; v.has("B" + std::to_string(i)); ++i) {
    const auto b = v.set("B" + std::to_string(i));
    const auto q = ((y & b) - a).size();
    if (q > best) best = q, yb1 = (y & b).size();
  }
  if (best < 2) return outcome(false, "no copy of B meets Y in two new points");
  const Rational ratio = Rational(static_cast<std::int64_t>(yb1) + (r - 2) * static_cast<std::int64_t>(best)) /
                         Rational(static_cast<std::int64_t>(yb1) - 1);
  const bool bad = ratio > Rational(2 * r - 1, 2) || static_cast<double>(r - 2) < std::log(static_cast<double>(ratio));
  (void)s;
  return outcome(bad, "ratio " + to_string(ratio));
}

inline ReplayOutcome replay_ex512_sample_bound(const WitnessView& v) {
  const auto x = v.set("X");
  const auto d = delta(v.s(), x);
  return outcome(2 * d < static_cast<std::int64_t>(x.size()) + 3, "2 delta(X) = " + std::to_string(2 * d) + ", |X| = " + std::to_string(x.size()));
}

inline ReplayOutcome replay_ex512_closure_bound(const WitnessView& v) {
  // C is the first half of the ids: c_i = i for i < s
  const auto& s = v.s();
  const auto half = static_cast<VertexId>(s.order() / 2);
  std::vector<VertexId> cs;
  for (VertexId i = 0; i < half; ++i) cs.push_back(i);
  const auto x = cld(s, v.set("XC"));
  const auto t = static_cast<std::int64_t>((x & s.set_of(cs)).size());
  return outcome(4 * t - 3 < static_cast<std::int64_t>(x.size()),
                 "|cl^d| = " + std::to_string(x.size()) + ", C-points " + std::to_string(t));
}

inline ReplayOutcome replay_sample_shortfall(const WitnessView& v) {
  const auto n = v.num("accepted");
  return outcome(n < static_cast<std::int64_t>(Ex512Options{}.samples), std::to_string(n) + " accepted samples");
}

inline ReplayOutcome replay_mult_equal(const WitnessView& v) {
  const auto& s = v.s();
  const auto ext = parse_structure(v.param("type")).structure;
  const auto b = static_cast<std::size_t>(v.num("base_size"));
  std::vector<std::size_t> base(b);
  std::iota(base.begin(), base.end(), 0);
  const auto t = make_msa_type(ext, base, ext.all());
  const auto c1 = count_msa_copies(s, v.set("A1"), t, positions_of(s, v.ids("Z1"))).count();
  const auto c2 = count_msa_copies(s, v.set("A2"), t, positions_of(s, v.ids("Z2"))).count();
  const auto sat = ExtendabilityOptions{}.saturation;
  return outcome(c1 != c2 && !(c1 >= sat && c2 >= sat), "mult " + std::to_string(c1) + " against " + std::to_string(c2));
}

inline ReplayOutcome replay_extension_realized(const WitnessView& v) {
  const auto& s = v.s();
  const auto task_in = parse_structure(v.param("task"));
  ExtensionTask t;
  t.ext = task_in.structure;
  const auto it = task_in.sets.find("base");
  const std::vector<VertexId> base_ids = it == task_in.sets.end() ? std::vector<VertexId>{} : it->second;
  t.base_size = base_ids.size();
  t.base = t.ext.induced(t.ext.set_of(base_ids));
  const auto mode = v.param("mode", std::string("le")) == "le_d" ? EmbedMode::LE_D : EmbedMode::LE;
  const auto map = positions_of(s, v.ids("X"));
  const bool ok = extension_realized(s, t, map, mode);
  return outcome(!ok, ok ? "extension realised" : "no extension over the base map");
}

inline ReplayOutcome replay_submodularity(const WitnessView& v) {
  const auto& s = v.s();
  auto mask = [&](const char* n) {
    std::uint64_t m = 0;
    v.set(n).for_each([&](std::size_t p) { m |= std::uint64_t{1} << p; });
    return m;
  };
  const auto a = mask("A"), b = mask("B"), c = mask("C");
  const auto d = signed_delta_table(s, v.num("sign"));
  const auto prop = v.param("property");
  bool bad = false;
  if (prop == "submodular") {
    bad = d[a | b] + d[a & b] > d[a] + d[b];
  } else {
    const auto le = le_table(d, s.order());
    if (prop == "restriction")
      bad = (a & ~b) == 0 && (c & ~b) == 0 && le[b][a] && !le[c][a & c];
    else if (prop == "transitivity")
      bad = (a & ~b) == 0 && (b & ~c) == 0 && le[b][a] && le[c][b] && !le[c][a];
    else
      throw InputError("unknown submodularity property '" + prop + "'");
  }
  return outcome(bad, prop + (bad ? " fails" : " holds"));
}

inline ReplayOutcome replay_delta_chain(const WitnessView& v) {
  const auto& e = v.s();
  const auto c = v.set("C"), x = v.set("X"), y = v.set("Y"), zs = v.set("Z");
  const auto z = e.induced(zs);
  auto in_z = [&](const VertexSet& q) { return z.set_of(e.ids_of(q)); };
  const auto k = static_cast<std::int64_t>(x.size());
  const std::int64_t f_min = minimize_superset(e, c | y).value;
  const std::int64_t dzxc = dim(z, in_z(x | c)), dyx = delta(e, y) - delta(e, x);
  const std::int64_t dzc = dim(z, in_z(c)), dzx_c = dim_rel(z, in_z(x), in_z(c)), dc = delta(e, c);
  const bool ok = f_min >= dzxc + dyx && dyx == -1 && dzxc == dzc + dzx_c && dzc + dzx_c - 1 >= dc + k - 2;
  return outcome(!ok, "min delta(F) = " + std::to_string(f_min) + ", bound " + std::to_string(dc + k - 2));
}

inline ReplayOutcome replay_dependence(const WitnessView& v) {
  const auto& e = v.s();
  const auto c = v.set("c"), a0 = v.set("A0"), x = v.set("X");
  const auto drop = dim_rel(e, c, a0) - dim_rel(e, c, a0 | x);
  return outcome(drop != v.num("drop"), "dimension drops by " + std::to_string(drop));
}

inline ReplayOutcome replay_determinism(const WitnessView& v) {
  if (v.w.params.count("error")) return outcome(true, v.param("error"));
  return outcome(v.param("first", std::string()) != v.param("second", std::string()), "digests differ");
}

inline const std::map<std::string, ReplayFn>& replay_registry() {
  static const std::map<std::string, ReplayFn> r{
      {"axioms", replay_axioms},
      {"beatty", replay_beatty},
      {"c0", replay_c0},
      {"cf", replay_cf},
      {"d-closed", replay_d_closed},
      {"delta-chain", replay_delta_chain},
      {"delta-eq", replay_delta_eq},
      {"dependence", replay_dependence},
      {"determinism", replay_determinism},
      {"ex511-log", replay_ex511_log},
      {"ex512-sample-bound", replay_ex512_sample_bound},
      {"ex512-closure-bound", replay_ex512_closure_bound},
      {"extension-realized", replay_extension_realized},
      {"gadget-clause1", replay_clause1},
      {"gadget-clause2", replay_clause2},
      {"gadget-clause3", replay_clause3},
      {"girth", replay_girth},
      {"in-closure", replay_in_closure},
      {"kn", replay_kn},
      {"msa-bound", replay_msa_bound},
      {"mult-equal", replay_mult_equal},
      {"perp", replay_perp},
      {"sample-shortfall", replay_sample_shortfall},
      {"ss", replay_ss},
      {"submodularity", replay_submodularity},
  };
  return r;
}

}  // namespace detail

inline std::vector<std::string> replayable_claims() {
  std::vector<std::string> out;
  for (const auto& [k, f] : detail::replay_registry()) out.push_back(k);
  return out;
}

/// Recomputes the claim behind a FAIL witness. `reproduced` is true when the
/// failure shows again. Unknown claims and malformed witnesses: InputError.
inline ReplayOutcome replay_witness(const Witness& w) {
  const auto& reg = detail::replay_registry();
  const auto it = reg.find(w.claim);
  if (it == reg.end()) throw InputError("no replay for witness claim '" + w.claim + "'");
  const detail::WitnessView v{w, parse_structure(w.structure)};
  return it->second(v);
}

}  // namespace predimlab
