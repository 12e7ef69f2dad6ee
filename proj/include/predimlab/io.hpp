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

// The predimlab/1 text format.
//
//   predimlab/1
//   vertex-weight 2
//   mode hypergraph            (or: bipartite)
//   relation R 2 1             (name arity weight; one line per relation)
//   vertices 0 1 2 3           (hypergraph mode)
//   points 0 1 / lines 2 3     (bipartite mode)
//   instance R 0 1             (one per instance)
//   set X 0 1                  (optional named vertex sets)
//   end
//
// Blank lines and lines starting with '#' are ignored.

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "predimlab/errors.hpp"
#include "predimlab/structure.hpp"

namespace predimlab {

inline constexpr const char* kFormatTag = "predimlab/1";

struct LoadedStructure {
  FiniteStructure structure;
  std::map<std::string, std::vector<VertexId>> sets;
};

namespace detail {
inline std::vector<VertexId> parse_ids(std::istringstream& in, int line) {
  std::vector<VertexId> ids;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("line " + std::to_string(line) + ": bad vertex id '" + tok + "'");
    }
  }
  return ids;
}
}  // namespace detail

/// Parses a structure. Duplicate instances, repeated vertices inside one
/// instance and same-part edges are rejected.
inline LoadedStructure read_structure(std::istream& in) {
  std::string raw;
  int line = 0;
  bool header = false, ended = false;
  std::optional<std::int64_t> vw;
  Mode mode = Mode::Hypergraph;
  std::vector<RelationSymbol> rels;
  std::vector<std::pair<VertexId, std::optional<Part>>> verts;
  std::vector<std::pair<std::string, std::vector<VertexId>>> insts;
  LoadedStructure out;

  auto fail = [&](const std::string& msg) { throw InputError("line " + std::to_string(line) + ": " + msg); };

  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string word;
    if (!(ls >> word)) continue;
    if (ended) fail("content after 'end'");
    if (!header) {
      if (word != kFormatTag) fail("expected header '" + std::string(kFormatTag) + "'");
      header = true;
      continue;
    }
    if (word == "vertex-weight") {
      std::int64_t v;
      if (!(ls >> v)) fail("vertex-weight needs an integer");
      vw = v;
    } else if (word == "mode") {
      std::string m;
      ls >> m;
      if (m == "hypergraph")
        mode = Mode::Hypergraph;
      else if (m == "bipartite")
        mode = Mode::Bipartite;
      else
        fail("unknown mode '" + m + "'");
    } else if (word == "relation") {
      RelationSymbol r;
      if (!(ls >> r.name >> r.arity >> r.weight)) fail("relation needs: name arity weight");
      rels.push_back(r);
    } else if (word == "vertices") {
      for (auto id : detail::parse_ids(ls, line)) verts.emplace_back(id, std::nullopt);
    } else if (word == "points" || word == "lines") {
      const Part p = word == "points" ? Part::Point : Part::Line;
      for (auto id : detail::parse_ids(ls, line)) verts.emplace_back(id, p);
    } else if (word == "instance") {
      std::string name;
      if (!(ls >> name)) fail("instance needs a relation name");
      insts.emplace_back(name, detail::parse_ids(ls, line));
    } else if (word == "set") {
      std::string name;
      if (!(ls >> name)) fail("set needs a name");
      if (out.sets.count(name)) fail("set '" + name + "' given twice");
      out.sets[name] = detail::parse_ids(ls, line);
    } else if (word == "end") {
      ended = true;
    } else {
      fail("unknown directive '" + word + "'");
    }
  }
  if (!header) throw InputError("empty input: missing '" + std::string(kFormatTag) + "' header");
  if (!vw) throw InputError("missing vertex-weight");

  StructureBuilder b(Signature(*vw, rels, mode));
  for (const auto& [id, part] : verts)
    if (!b.add_vertex(id, part)) throw InputError("vertex " + std::to_string(id) + " listed twice");
  for (auto& [name, ids] : insts)
    if (!b.add_instance(name, ids)) throw InputError("duplicate instance of " + name);
  out.structure = b.build();
  for (const auto& [name, ids] : out.sets)
    for (auto id : ids)
      if (!out.structure.position(id)) throw InputError("set '" + name + "' names unknown vertex " + std::to_string(id));
  return out;
}

inline LoadedStructure read_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_structure(in);
}

inline LoadedStructure parse_structure(const std::string& text) {
  std::istringstream in(text);
  return read_structure(in);
}

/// Writes `s` (and named sets) in canonical line order.
inline void write_structure(std::ostream& os, const FiniteStructure& s,
                            const std::map<std::string, std::vector<VertexId>>& sets = {}) {
  const auto& sig = s.signature();
  os << kFormatTag << '\n';
  os << "vertex-weight " << sig.vertex_weight() << '\n';
  os << "mode " << (sig.mode() == Mode::Bipartite ? "bipartite" : "hypergraph") << '\n';
  for (const auto& r : sig.relations()) os << "relation " << r.name << ' ' << r.arity << ' ' << r.weight << '\n';
  if (sig.mode() == Mode::Bipartite) {
    for (Part part : {Part::Point, Part::Line}) {
      os << (part == Part::Point ? "points" : "lines");
      for (std::size_t p = 0; p < s.order(); ++p)
        if (s.part(p) == part) os << ' ' << s.id(p);
      os << '\n';
    }
  } else {
    os << "vertices";
    for (auto id : s.ids()) os << ' ' << id;
    os << '\n';
  }
  for (const auto& inst : s.instances()) {
    os << "instance " << sig.relations()[inst.relation].name;
    for (auto q : inst.members) os << ' ' << s.id(q);
    os << '\n';
  }
  for (const auto& [name, ids] : sets) {
    os << "set " << name;
    for (auto id : ids) os << ' ' << id;
    os << '\n';
  }
  os << "end\n";
}

inline std::string to_text(const FiniteStructure& s, const std::map<std::string, std::vector<VertexId>>& sets = {}) {
  std::ostringstream os;
  write_structure(os, s, sets);
  return os.str();
}

}  // namespace predimlab
