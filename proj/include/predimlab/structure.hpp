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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "predimlab/errors.hpp"
#include "predimlab/vertex_set.hpp"

namespace predimlab {

using VertexId = std::int64_t;

enum class Mode { Hypergraph, Bipartite };

/// Point/line label of a vertex in bipartite mode.
enum class Part : std::uint8_t { Point, Line };

struct RelationSymbol {
  std::string name;
  int arity = 2;
  std::int64_t weight = 1;

  friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

/// Vertex weight plus weighted symmetric relations; determines the predimension
///   delta(X) = vertex_weight * |X| - sum_i weight_i * |R_i[X]|.
class Signature {
 public:
  Signature(std::int64_t vertex_weight, std::vector<RelationSymbol> relations, Mode mode = Mode::Hypergraph)
      : vertex_weight_(vertex_weight), relations_(std::move(relations)), mode_(mode) {
    if (vertex_weight_ <= 0) throw InputError("vertex weight must be positive");
    if (relations_.empty()) throw InputError("signature needs at least one relation");
    std::set<std::string> names;
    for (const auto& r : relations_) {
      if (r.name.empty()) throw InputError("relation name must be non-empty");
      if (r.arity < 2) throw InputError("relation arity must be at least 2: " + r.name);
      if (r.weight < 0) throw InputError("relation weight must be non-negative: " + r.name);
      if (!names.insert(r.name).second) throw InputError("duplicate relation name: " + r.name);
    }
    if (mode_ == Mode::Bipartite && (relations_.size() != 1 || relations_[0].arity != 2))
      throw InputError("bipartite mode needs exactly one binary relation");
  }

  /// One r-ary relation R with weight m and vertex weight n.
  static Signature uniform(std::int64_t n, std::int64_t m, int r) { return Signature(n, {{"R", r, m}}); }

  /// The generalized n-gon signature: bipartite incidence with weights (n-1, n-2).
  static Signature polygon(int n_gon) {
    if (n_gon < 3) throw InputError("polygon class needs n >= 3");
    return Signature(n_gon - 1, {{"R", 2, n_gon - 2}}, Mode::Bipartite);
  }

  std::int64_t vertex_weight() const noexcept { return vertex_weight_; }
  const std::vector<RelationSymbol>& relations() const noexcept { return relations_; }
  Mode mode() const noexcept { return mode_; }

  std::size_t relation_index(const std::string& name) const {
    for (std::size_t i = 0; i < relations_.size(); ++i)
      if (relations_[i].name == name) return i;
    throw InputError("unknown relation: " + name);
  }

  /// gcd(n, m_i) == 1 for every relation; metadata only.
  bool coprime() const {
    return std::all_of(relations_.begin(), relations_.end(),
                       [&](const RelationSymbol& r) { return std::gcd(vertex_weight_, r.weight) == 1; });
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::int64_t vertex_weight_;
  std::vector<RelationSymbol> relations_;
  Mode mode_;
};

/// One relation instance: an unordered set of distinct vertices, stored as
/// sorted positions.
struct Instance {
  std::uint32_t relation = 0;
  std::vector<std::uint32_t> members;

  friend auto operator<=>(const Instance&, const Instance&) = default;
};

class StructureBuilder;

/// A finite structure over a signature. Immutable once built: vertices are kept
/// sorted by id and instances in canonical order, so equal encodings mean equal
/// structures.
class FiniteStructure {
 public:
  FiniteStructure() : signature_(Signature::uniform(1, 1, 2)) {}

  const Signature& signature() const noexcept { return signature_; }
  std::size_t order() const noexcept { return ids_.size(); }
  std::span<const VertexId> ids() const noexcept { return ids_; }
  VertexId id(std::size_t pos) const { return ids_.at(pos); }
  const std::vector<Instance>& instances() const noexcept { return instances_; }

  /// Instance indices incident to the vertex at `pos`.
  std::span<const std::uint32_t> incident(std::size_t pos) const { return incidence_.at(pos); }

  /// Vertices sharing an instance with `pos`, sorted.
  std::span<const std::uint32_t> neighbours(std::size_t pos) const { return adjacency_.at(pos); }

  bool has_parts() const noexcept { return !parts_.empty(); }
  Part part(std::size_t pos) const { return parts_.at(pos); }

  std::optional<std::size_t> position(VertexId id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
  }

  std::size_t position_of(VertexId id) const {
    auto p = position(id);
    if (!p) throw InputError("vertex id " + std::to_string(id) + " is not in the structure");
    return *p;
  }

  VertexSet none() const { return VertexSet(order()); }
  VertexSet all() const { return VertexSet::full(order()); }

  VertexSet set_of(std::span<const VertexId> ids) const {
    VertexSet s(order());
    for (auto id : ids) s.insert(position_of(id));
    return s;
  }
  VertexSet set_of(std::initializer_list<VertexId> ids) const {
    return set_of(std::span<const VertexId>(ids.begin(), ids.size()));
  }

  std::vector<VertexId> ids_of(const VertexSet& s) const {
    std::vector<VertexId> out;
    s.for_each([&](std::size_t p) { out.push_back(ids_[p]); });
    return out;
  }

  bool has_instance(std::uint32_t relation, std::vector<std::uint32_t> members) const {
    std::sort(members.begin(), members.end());
    Instance key{relation, std::move(members)};
    return std::binary_search(instances_.begin(), instances_.end(), key);
  }

  bool has_instance_ids(const std::string& relation, std::span<const VertexId> ids) const {
    std::vector<std::uint32_t> members;
    for (auto id : ids) {
      auto p = position(id);
      if (!p) return false;
      members.push_back(static_cast<std::uint32_t>(*p));
    }
    return has_instance(static_cast<std::uint32_t>(signature_.relation_index(relation)), std::move(members));
  }

  bool instance_inside(const Instance& inst, const VertexSet& s) const {
    return std::all_of(inst.members.begin(), inst.members.end(), [&](std::uint32_t p) { return s.contains(p); });
  }

  /// Induced substructure on `s`, keeping vertex ids.
  FiniteStructure induced(const VertexSet& s) const;

  /// Same structure under a different signature (weights only; names and arities must match).
  FiniteStructure reweighted(const Signature& sig) const;

  friend bool operator==(const FiniteStructure& a, const FiniteStructure& b) {
    return a.signature_ == b.signature_ && a.ids_ == b.ids_ && a.instances_ == b.instances_ && a.parts_ == b.parts_;
  }

 private:
  friend class StructureBuilder;

  void finalize() {
    std::sort(instances_.begin(), instances_.end());
    incidence_.assign(ids_.size(), {});
    adjacency_.assign(ids_.size(), {});
    for (std::uint32_t i = 0; i < instances_.size(); ++i) {
      for (auto p : instances_[i].members) {
        incidence_[p].push_back(i);
        for (auto q : instances_[i].members)
          if (q != p) adjacency_[p].push_back(q);
      }
    }
    for (auto& a : adjacency_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }

  Signature signature_;
  std::vector<VertexId> ids_;
  std::vector<Instance> instances_;
  std::vector<Part> parts_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Accumulates vertices and instances, validating as it goes.
class StructureBuilder {
 public:
  explicit StructureBuilder(Signature sig) : signature_(std::move(sig)) {}

  const Signature& signature() const noexcept { return signature_; }

  /// Adds a vertex; returns false if it already exists (with the same part).
  bool add_vertex(VertexId id, std::optional<Part> part = std::nullopt) {
    const bool bip = signature_.mode() == Mode::Bipartite;
    if (bip && !part) throw InputError("bipartite structure needs a part label for vertex " + std::to_string(id));
    if (!bip && part) throw InputError("part labels are only allowed in bipartite mode");
    auto [it, inserted] = vertices_.emplace(id, part.value_or(Part::Point));
    if (!inserted && it->second != part.value_or(Part::Point))
      throw InputError("vertex " + std::to_string(id) + " given two part labels");
    return inserted;
  }

  bool has_vertex(VertexId id) const { return vertices_.count(id) != 0; }

  /// Adds an instance; vertices must exist. Returns false for an exact duplicate.
  bool add_instance(std::size_t relation, std::vector<VertexId> members) {
    if (relation >= signature_.relations().size()) throw InputError("relation index out of range");
    const auto& sym = signature_.relations()[relation];
    if (static_cast<int>(members.size()) != sym.arity)
      throw InputError("instance of " + sym.name + " has " + std::to_string(members.size()) + " vertices, arity is " +
                       std::to_string(sym.arity));
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      throw InputError("instance of " + sym.name + " repeats a vertex");
    for (auto v : members)
      if (!has_vertex(v)) throw InputError("instance references unknown vertex " + std::to_string(v));
    if (signature_.mode() == Mode::Bipartite && vertices_.at(members[0]) == vertices_.at(members[1]))
      throw InputError("bipartite instance joins two vertices of the same part");
    return instances_.emplace(relation, std::move(members)).second;
  }

  bool add_instance(const std::string& relation, std::vector<VertexId> members) {
    return add_instance(signature_.relation_index(relation), std::move(members));
  }

  bool add_edge(VertexId a, VertexId b) { return add_instance(0, {a, b}); }

  FiniteStructure build() const {
    FiniteStructure s;
    s.signature_ = signature_;
    s.ids_.reserve(vertices_.size());
    for (const auto& [id, part] : vertices_) {
      s.ids_.push_back(id);
      if (signature_.mode() == Mode::Bipartite) s.parts_.push_back(part);
    }
    for (const auto& [rel, members] : instances_) {
      Instance inst{static_cast<std::uint32_t>(rel), {}};
      for (auto v : members) inst.members.push_back(static_cast<std::uint32_t>(*s.position(v)));
      s.instances_.push_back(std::move(inst));
    }
    s.finalize();
    return s;
  }

  /// Starts from an existing structure (same ids, same instances).
  static StructureBuilder from(const FiniteStructure& s) {
    StructureBuilder b(s.signature());
    for (std::size_t p = 0; p < s.order(); ++p)
      b.add_vertex(s.id(p), s.has_parts() ? std::optional<Part>(s.part(p)) : std::nullopt);
    for (const auto& inst : s.instances()) {
      std::vector<VertexId> m;
      for (auto q : inst.members) m.push_back(s.id(q));
      b.add_instance(inst.relation, std::move(m));
    }
    return b;
  }

  VertexId next_free_id() const { return vertices_.empty() ? 0 : vertices_.rbegin()->first + 1; }

 private:
  Signature signature_;
  std::map<VertexId, Part> vertices_;
  std::set<std::pair<std::size_t, std::vector<VertexId>>> instances_;
};

inline FiniteStructure FiniteStructure::induced(const VertexSet& s) const {
  StructureBuilder b(signature_);
  s.for_each([&](std::size_t p) { b.add_vertex(ids_[p], has_parts() ? std::optional<Part>(parts_[p]) : std::nullopt); });
  for (const auto& inst : instances_) {
    if (!instance_inside(inst, s)) continue;
    std::vector<VertexId> m;
    for (auto q : inst.members) m.push_back(ids_[q]);
    b.add_instance(inst.relation, std::move(m));
  }
  return b.build();
}

inline FiniteStructure FiniteStructure::reweighted(const Signature& sig) const {
  if (sig.relations().size() != signature_.relations().size() || sig.mode() != signature_.mode())
    throw InputError("reweighting needs the same relation list and mode");
  for (std::size_t i = 0; i < sig.relations().size(); ++i) {
    if (sig.relations()[i].name != signature_.relations()[i].name ||
        sig.relations()[i].arity != signature_.relations()[i].arity)
      throw InputError("reweighting needs the same relation names and arities");
  }
  FiniteStructure out = *this;
  out.signature_ = sig;
  return out;
}

/// Structure on vertices 0..k-1 built from a list of instances of relation 0.
inline FiniteStructure make_structure(const Signature& sig, std::size_t k,
                                      std::initializer_list<std::vector<VertexId>> instances) {
  StructureBuilder b(sig);
  for (std::size_t i = 0; i < k; ++i) b.add_vertex(static_cast<VertexId>(i));
  for (const auto& inst : instances) b.add_instance(0, inst);
  return b.build();
}

inline FiniteStructure make_structure(const Signature& sig, std::size_t k,
                                      const std::vector<std::vector<VertexId>>& instances) {
  StructureBuilder b(sig);
  for (std::size_t i = 0; i < k; ++i) b.add_vertex(static_cast<VertexId>(i));
  for (const auto& inst : instances) b.add_instance(0, inst);
  return b.build();
}

}  // namespace predimlab
