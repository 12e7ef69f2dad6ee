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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "predimlab/amalgam.hpp"
#include "predimlab/closure.hpp"
#include "predimlab/report.hpp"

namespace predimlab {

// All notions here are computed inside the given finite ambient.

/// A independent from C over B: d(A/BC) = d(A/B).
inline bool d_independent(const FiniteStructure& s, const VertexSet& a, const VertexSet& b, const VertexSet& c) {
  return dim(s, a | b | c) - dim(s, b | c) == dim(s, a | b) - dim(s, b);
}

struct SplitConditions {
  bool intersection = false;     // cl^d(AB) n cl^d(BC) = B
  bool free = false;             // freely amalgamated over B
  bool self_sufficient = false;  // cl^d(AB) u cl^d(BC) <= S
  bool holds() const noexcept { return intersection && free && self_sufficient; }
};

inline SplitConditions split_conditions(const FiniteStructure& s, const VertexSet& a, const VertexSet& b,
                                            const VertexSet& c) {
  SplitConditions out;
  const VertexSet x = cld(s, a | b), y = cld(s, b | c);
  out.intersection = (x & y) == b;
  out.free = freely_amalgamated(s, x, y);
  const auto m = minimize_superset(s, x | y);
  out.self_sufficient = m.value >= delta(s, x | y);
  return out;
}

/// The characterization needs B d-closed (so that cl^d(AB) n cl^d(BC) can
/// be compared with B itself); ContractError otherwise.
inline bool check_split_characterization(const FiniteStructure& s, const VertexSet& a, const VertexSet& b,
                                           const VertexSet& c) {
  if (!is_d_closed(s, b)) throw ContractError("characterization needs a d-closed base");
  return split_conditions(s, a, b, c).holds();
}

/// b perp_A C: b independent from C over A and cl^d(bC) = cl^d(bA) u C.
inline bool perp(const FiniteStructure& s, const VertexSet& b, const VertexSet& a, const VertexSet& c) {
  if (!a.is_subset_of(c)) throw ContractError("perp needs A inside C");
  if (!is_d_closed(s, a) || !is_d_closed(s, c)) throw ContractError("perp needs A and C d-closed");
  return d_independent(s, b, a, c) && cld(s, b | c) == (cld(s, b | a) | c);
}

// ---------------------------------------------------------------------------
// Axiom checks, by table lookup.

namespace detail {

struct DimOracle {
  const FiniteStructure& s;
  std::vector<std::int64_t> t, raw;
  std::vector<std::uint64_t> inst;  // instance masks
  DimOracle(const FiniteStructure& st, std::size_t cap, bool raw_delta = false) : s(st), t(dim_table(st, cap)) {
    SubsetEngine eng(st, st.none(), st.all(), cap);
    raw.resize(t.size());
    eng.for_each([&](std::uint64_t m, std::int64_t v) {
      raw[m] = v;
      return true;
    });
    if (raw_delta) t = raw;
    for (const auto& i : st.instances()) {
      std::uint64_t m = 0;
      for (auto p : i.members) m |= std::uint64_t{1} << p;
      inst.push_back(m);
    }
  }

  std::int64_t delta(std::uint64_t x) const { return raw[x]; }
  /// No instance inside x u y meets both x \ y and y \ x.
  bool free(std::uint64_t x, std::uint64_t y) const {
    const std::uint64_t u = x | y, ox = x & ~y, oy = y & ~x;
    for (auto m : inst)
      if ((m & ~u) == 0 && (m & ox) != 0 && (m & oy) != 0) return false;
    return true;
  }

  std::int64_t d(std::uint64_t x) const { return t[x]; }
  bool indep(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
    return d(a | b | c) - d(b | c) == d(a | b) - d(b);
  }
  std::uint64_t closure(std::uint64_t x) const {
    std::uint64_t out = x;
    for (std::size_t p = 0; p < s.order(); ++p)
      if (d(x | (std::uint64_t{1} << p)) == d(x)) out |= std::uint64_t{1} << p;
    return out;
  }
};

inline std::vector<VertexId> mask_ids(const FiniteStructure& s, std::uint64_t m) {
  std::vector<VertexId> out;
  for (std::size_t p = 0; p < s.order(); ++p)
    if ((m >> p) & 1U) out.push_back(s.id(p));
  return out;
}

}  // namespace detail

struct AxiomOptions {
  std::size_t size_cap = 3;    // largest set in triples
  std::size_t quad_cap = 2;    // largest set in the four-set axioms
  std::size_t table_cap = 20;  // largest ambient
  bool characterization = true;
  /// Fault injection: use delta in place of d (delta is not monotone, so
  /// this is not a dimension function).
  bool raw_delta = false;
};

/// Exhaustive check of compatibility, monotonicity, transitivity and
/// symmetry for d-independence, and of the three-condition
/// characterization, over d-closed sets: triples of sets with at most
/// `size_cap` points, quadruples with at most `quad_cap`. Cases are keyed "<name>:<ambient label>".
inline void axiom_suite(const FiniteStructure& s, VerificationReport& rep, const std::string& label,
                        const AxiomOptions& opt = {}) {
  const detail::DimOracle o(s, opt.table_cap, opt.raw_delta);
  const std::size_t k = s.order();
  std::vector<std::uint64_t> closed, quad, small;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    const auto sz = static_cast<std::size_t>(std::popcount(m));
    if (sz > opt.size_cap) continue;
    small.push_back(m);
    if (o.closure(m) == m) {
      closed.push_back(m);
      if (sz <= opt.quad_cap) quad.push_back(m);
    }
  }

  auto fail = [&](const std::string& axiom, std::map<std::string, std::uint64_t> sets, std::string note) {
    std::map<std::string, std::vector<VertexId>> named;
    for (auto& [n, m] : sets) named[n] = detail::mask_ids(s, m);
    std::map<std::string, std::string> params{{"axiom", axiom}};
    if (opt.raw_delta) params["dimension"] = "delta";
    rep.fail(axiom + ":" + label, Witness::of("axioms", s, named, params), std::nullopt, std::move(note));
  };

  std::uint64_t checked = 0;
  bool ok_sym = true, ok_mono = true, ok_trans = true, ok_compat = true, ok_char = true;
  for (auto a : closed)
    for (auto b : closed)
      for (auto c : closed) {
        ++checked;
        const bool abc = o.indep(a, b, c);
        if (ok_sym && abc != o.indep(c, b, a) && abc) {
          ok_sym = false;
          fail("symmetry", {{"A", a}, {"B", b}, {"C", c}}, "A indep_B C but not C indep_B A");
        }
        if (ok_compat) {
          const auto cab = o.closure(a | b);
          bool each = true;
          for (std::size_t p = 0; p < k; ++p)
            if ((cab >> p) & 1U) each = each && o.indep(std::uint64_t{1} << p, b, c);
          if (abc != o.indep(cab, b, c) || (abc && !each)) {
            ok_compat = false;
            fail("compatibility", {{"A", a}, {"B", b}, {"C", c}}, "closure of AB changes the verdict");
          }
        }
        if (opt.characterization && ok_char) {
          const std::uint64_t x = o.closure(a | b), y = o.closure(b | c);
          const bool cond = (x & y) == b && o.free(x, y) && o.d(x | y) == o.delta(x | y);
          if (cond != abc) {
            ok_char = false;
            fail("characterization", {{"A", a}, {"B", b}, {"C", c}}, "dimension verdict and the three conditions disagree");
          }
        }
      }
  for (auto a : quad)
    for (auto b : quad)
      for (auto c : quad) {
        const bool abc = o.indep(a, b, c);
        for (auto d : quad) {
          if (!ok_mono && !ok_trans) break;
          const bool a_cd = o.indep(a, b, c | d);
          const bool a_bc_d = o.indep(a, b | c, d);
          if (ok_mono && a_cd && !(abc && a_bc_d)) {
            ok_mono = false;
            fail("monotonicity", {{"A", a}, {"B", b}, {"C", c}, {"D", d}}, "A indep_B CD fails to restrict");
          }
          if (ok_trans && abc && a_bc_d && !a_cd) {
            ok_trans = false;
            fail("transitivity", {{"A", a}, {"B", b}, {"C", c}, {"D", d}}, "A indep_B C and A indep_BC D but not A indep_B CD");
          }
        }
      }
  // Compatibility with arbitrary (not closed) small a, b: a indep_b C iff a indep_cl(b) C.
  for (auto a : small)
    for (auto b : small)
      for (auto c : closed) {
        if (!ok_compat) break;
        if (o.indep(a, b, c) != o.indep(a, o.closure(b), c)) {
          ok_compat = false;
          fail("compatibility", {{"A", a}, {"B", b}, {"C", c}}, "closing the base changes the verdict");
        }
      }
  const std::string note = std::to_string(closed.size()) + " d-closed sets, " + std::to_string(checked) +
                           " triples, ambient-relative";
  if (ok_sym) rep.pass("symmetry:" + label, std::nullopt, note);
  if (ok_mono) rep.pass("monotonicity:" + label, std::nullopt, note);
  if (ok_trans) rep.pass("transitivity:" + label, std::nullopt, note);
  if (ok_compat) rep.pass("compatibility:" + label, std::nullopt, note);
  if (opt.characterization && ok_char) rep.pass("characterization:" + label, std::nullopt, note);
}

/// Re-evaluates one axiom instance on the sets (A, B, C, D); true when it
/// is violated. Used to replay witnesses.
inline bool axiom_violated(const FiniteStructure& s, const std::string& axiom, const VertexSet& a, const VertexSet& b,
                           const VertexSet& c, const VertexSet& d, bool raw_delta = false, std::size_t cap = 20) {
  const detail::DimOracle o(s, cap, raw_delta);
  auto mask = [](const VertexSet& x) {
    std::uint64_t m = 0;
    x.for_each([&](std::size_t p) { m |= std::uint64_t{1} << p; });
    return m;
  };
  const auto ma = mask(a), mb = mask(b), mc = mask(c), md = mask(d);
  const bool abc = o.indep(ma, mb, mc);
  if (axiom == "symmetry") return abc && !o.indep(mc, mb, ma);
  if (axiom == "monotonicity") return o.indep(ma, mb, mc | md) && !(abc && o.indep(ma, mb | mc, md));
  if (axiom == "transitivity") return abc && o.indep(ma, mb | mc, md) && !o.indep(ma, mb, mc | md);
  if (axiom == "compatibility") {
    if (abc != o.indep(ma, o.closure(mb), mc)) return true;
    if (o.closure(mb) != mb) return false;
    const auto cab = o.closure(ma | mb);
    bool each = true;
    for (std::size_t p = 0; p < s.order(); ++p)
      if ((cab >> p) & 1U) each = each && o.indep(std::uint64_t{1} << p, mb, mc);
    return abc != o.indep(cab, mb, mc) || (abc && !each);
  }
  if (axiom == "characterization") {
    const auto x = o.closure(ma | mb), y = o.closure(mb | mc);
    const bool cond = (x & y) == mb && o.free(x, y) && o.d(x | y) == o.delta(x | y);
    return cond != abc;
  }
  throw InputError("unknown axiom '" + axiom + "'");
}

}  // namespace predimlab
