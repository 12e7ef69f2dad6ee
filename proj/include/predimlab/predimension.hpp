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
#include <optional>
#include <string>
#include <vector>

#include "predimlab/errors.hpp"
#include "predimlab/limits.hpp"
#include "predimlab/structure.hpp"
#include "predimlab/vertex_set.hpp"

namespace predimlab {

namespace detail {
inline void require_universe(const FiniteStructure& s, const VertexSet& x) {
  if (x.universe() != s.order()) throw InputError("vertex set does not belong to this structure");
}
}  // namespace detail

/// n|X| minus the weighted number of instances inside X.
inline std::int64_t delta(const FiniteStructure& s, const VertexSet& x) {
  detail::require_universe(s, x);
  std::int64_t d = s.signature().vertex_weight() * static_cast<std::int64_t>(x.size());
  const auto& rels = s.signature().relations();
  for (const auto& inst : s.instances())
    if (s.instance_inside(inst, x)) d -= rels[inst.relation].weight;
  return d;
}

inline std::int64_t delta(const FiniteStructure& s) { return delta(s, s.all()); }

/// delta(A u B) - delta(B).
inline std::int64_t delta_rel(const FiniteStructure& s, const VertexSet& a, const VertexSet& b) {
  return delta(s, a | b) - delta(s, b);
}

/// Evaluates delta on every set base u T for T ranging over subsets of a small
/// free set. Subsets are indexed by bitmasks over free_positions().
class SubsetEngine {
 public:
  SubsetEngine(const FiniteStructure& s, const VertexSet& base, const VertexSet& free, std::size_t cap)
      : structure_(&s), base_(base) {
    detail::require_universe(s, base);
    detail::require_universe(s, free);
    if (base.intersects(free)) throw ContractError("subset engine: base and free set overlap");
    free_ = free.positions();
    if (free_.size() > cap || free_.size() > 62)
      throw CapacityError("exhaustive subset enumeration", cap, free_.size());
    std::vector<int> bit_of(s.order(), -1);
    for (std::size_t i = 0; i < free_.size(); ++i) bit_of[free_[i]] = static_cast<int>(i);

    const auto& rels = s.signature().relations();
    vertex_weight_ = s.signature().vertex_weight();
    base_delta_ = vertex_weight_ * static_cast<std::int64_t>(base.size());
    by_bit_.assign(free_.size(), {});
    for (const auto& inst : s.instances()) {
      const std::int64_t w = rels[inst.relation].weight;
      std::uint64_t mask = 0;
      bool ok = true;
      for (auto p : inst.members) {
        if (bit_of[p] >= 0) {
          mask |= std::uint64_t{1} << bit_of[p];
        } else if (!base.contains(p)) {
          ok = false;
          break;
        }
      }
      if (!ok || w == 0) continue;
      if (mask == 0) {
        base_delta_ -= w;
        continue;
      }
      const auto idx = static_cast<std::uint32_t>(terms_.size());
      terms_.push_back({mask, w});
      for (std::uint64_t m = mask; m != 0; m &= m - 1) by_bit_[static_cast<std::size_t>(std::countr_zero(m))].push_back(idx);
    }
  }

  std::size_t width() const noexcept { return free_.size(); }
  const std::vector<std::size_t>& free_positions() const noexcept { return free_; }
  std::int64_t base_delta() const noexcept { return base_delta_; }

  std::int64_t delta(std::uint64_t mask) const {
    std::int64_t d = base_delta_ + vertex_weight_ * std::popcount(mask);
    for (const auto& t : terms_)
      if ((t.mask & ~mask) == 0) d -= t.weight;
    return d;
  }

  VertexSet to_set(std::uint64_t mask) const {
    return base_ | VertexSet::from_mask(structure_->order(), free_, mask);
  }

  /// Calls visit(mask, delta) for all 2^width masks in Gray-code order.
  /// Returning false from visit stops the walk.
  template <typename Visit>
  void for_each(Visit&& visit) const {
    std::uint64_t mask = 0;
    std::int64_t d = base_delta_;
    if (!visit(mask, d)) return;
    const std::uint64_t total = std::uint64_t{1} << free_.size();
    for (std::uint64_t i = 1; i < total; ++i) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(i));
      const std::uint64_t b = std::uint64_t{1} << bit;
      const bool adding = (mask & b) == 0;
      // Terms through this bit whose other members are already present flip.
      std::int64_t change = vertex_weight_;
      for (auto idx : by_bit_[bit]) {
        const auto& t = terms_[idx];
        if (((t.mask & ~b) & ~mask) == 0) change -= t.weight;
      }
      if (adding) {
        mask |= b;
        d += change;
      } else {
        mask &= ~b;
        d -= change;
      }
      if (!visit(mask, d)) return;
    }
  }

 private:
  struct Term {
    std::uint64_t mask;
    std::int64_t weight;
  };

  const FiniteStructure* structure_;
  VertexSet base_;
  std::vector<std::size_t> free_;
  std::int64_t vertex_weight_ = 0;
  std::int64_t base_delta_ = 0;
  std::vector<Term> terms_;
  std::vector<std::vector<std::uint32_t>> by_bit_;
};

/// Orders candidate witnesses: smaller delta, then fewer vertices, then least mask.
struct WitnessOrder {
  bool operator()(std::int64_t da, int sa, std::uint64_t ma, std::int64_t db, int sb, std::uint64_t mb) const {
    if (da != db) return da < db;
    if (sa != sb) return sa < sb;
    return ma < mb;
  }
};

/// The best (delta, size, mask) set among base u T, T over all free subsets
/// satisfying `admit(mask)`.
template <typename Admit>
std::optional<std::pair<std::uint64_t, std::int64_t>> best_subset(const SubsetEngine& eng, Admit&& admit) {
  std::optional<std::pair<std::uint64_t, std::int64_t>> best;
  WitnessOrder less;
  eng.for_each([&](std::uint64_t mask, std::int64_t d) {
    if (!admit(mask)) return true;
    if (!best || less(d, std::popcount(mask), mask, best->second, std::popcount(best->first), best->first))
      best = {mask, d};
    return true;
  });
  return best;
}

enum class SearchMethod { Exhaustive, Flow };

struct SelfSufficiency {
  bool holds = true;
  std::int64_t base_delta = 0;
  std::optional<VertexSet> witness;  // minimal-delta violating intermediate set
  std::int64_t witness_delta = 0;

  explicit operator bool() const noexcept { return holds; }
};

inline SelfSufficiency is_self_sufficient_flow(const FiniteStructure& s, const VertexSet& a, const VertexSet& b);

/// A <= B: every A subset B' subset B has delta(B') >= delta(A). On failure the
/// witness is the violating B' of least delta, then least size, then least mask;
/// this set is unique, so both methods report the same one.
inline SelfSufficiency is_self_sufficient(const FiniteStructure& s, const VertexSet& a, const VertexSet& b,
                                          SearchMethod method = SearchMethod::Exhaustive, std::size_t cap = Caps{}.subset) {
  detail::require_universe(s, a);
  detail::require_universe(s, b);
  if (!a.is_subset_of(b)) throw ContractError("is_self_sufficient: A is not a subset of B");
  if (method == SearchMethod::Flow) return is_self_sufficient_flow(s, a, b);
  SubsetEngine eng(s, a, b - a, cap);
  SelfSufficiency r;
  r.base_delta = eng.base_delta();
  auto best = best_subset(eng, [](std::uint64_t) { return true; });
  if (best && best->second < r.base_delta) {
    r.holds = false;
    r.witness = eng.to_set(best->first);
    r.witness_delta = best->second;
  }
  return r;
}

/// Subsets of `x`, as vertex sets, in mask order (test and oracle helper).
inline std::vector<VertexSet> all_subsets(const FiniteStructure& s, const VertexSet& x, std::size_t cap = Caps{}.subset) {
  auto pos = x.positions();
  if (pos.size() > cap) throw CapacityError("subset listing", cap, pos.size());
  std::vector<VertexSet> out;
  out.reserve(std::size_t{1} << pos.size());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pos.size()); ++m) out.push_back(VertexSet::from_mask(s.order(), pos, m));
  return out;
}

}  // namespace predimlab

#include "predimlab/min_cut.hpp"
