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

// Finite approximants of the generic structures: a chain S_0 <= S_1 <= ...
// built by free amalgamation of small extension patterns. Nothing here says
// anything about the infinite limit itself.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "predimlab/amalgam.hpp"
#include "predimlab/canonical.hpp"
#include "predimlab/classes.hpp"
#include "predimlab/closure.hpp"
#include "predimlab/control_function.hpp"
#include "predimlab/io.hpp"
#include "predimlab/report.hpp"

namespace predimlab {

enum class ClassTag { C0, CF, KN };

inline const char* class_tag_name(ClassTag t) {
  switch (t) {
    case ClassTag::C0: return "c0";
    case ClassTag::CF: return "cf";
    case ClassTag::KN: return "kn";
  }
  return "?";
}

inline ClassTag parse_class_tag(const std::string& s) {
  if (s == "c0") return ClassTag::C0;
  if (s == "cf") return ClassTag::CF;
  if (s == "kn") return ClassTag::KN;
  throw InputError("unknown class '" + s + "' (expected c0, cf or kn)");
}

enum class EmbedMode { LE, LE_D };

/// The class a builder or enumeration works in.
struct ClassSpec {
  Signature signature = Signature::uniform(2, 1, 2);
  ClassTag tag = ClassTag::C0;
  std::optional<ControlFunction> f;
  std::optional<int> ngon;

  void validate() const {
    if (tag == ClassTag::CF && !f) throw InputError("class cf needs a control function");
    if (tag == ClassTag::KN) {
      if (!ngon) throw InputError("class kn needs --ngon");
      if (!(signature == Signature::polygon(*ngon))) throw InputError("class kn needs the polygon signature");
    }
  }

  EmbedMode mode() const { return tag == ClassTag::CF ? EmbedMode::LE_D : EmbedMode::LE; }

  Membership member(const FiniteStructure& s, const MembershipOptions& opt = {}) const {
    switch (tag) {
      case ClassTag::C0: return in_C0(s);
      case ClassTag::CF: return in_Cf(s, *f, opt);
      case ClassTag::KN: return in_Kn(s, *ngon, opt);
    }
    return {};
  }
};

inline bool embedded(const FiniteStructure& s, const VertexSet& x, EmbedMode mode) {
  const auto m = minimize_superset(s, x);
  return mode == EmbedMode::LE_D ? m.largest == x : m.value == delta(s, x);
}

// ---------------------------------------------------------------------------
// Embeddings

namespace detail {

/// Backtracking search for induced embeddings of `p` into `s`. Pattern
/// positions already in `image` stay fixed; the others map to positions
/// below `limit`.
struct Embedder {
  const FiniteStructure& s;
  const FiniteStructure& p;
  std::vector<std::int64_t> image;
  std::vector<std::int64_t> back;  // ambient position -> pattern position
  std::vector<std::size_t> order;
  std::size_t limit;

  Embedder(const FiniteStructure& st, const FiniteStructure& pt, std::size_t lim)
      : s(st), p(pt), image(pt.order(), -1), back(st.order(), -1), limit(lim) {}

  bool fix(std::size_t q, std::size_t u) {
    if (back[u] >= 0 || !compatible(q, u, false)) return false;
    image[q] = static_cast<std::int64_t>(u);
    back[u] = static_cast<std::int64_t>(q);
    return true;
  }

  void plan() {
    order.clear();
    std::vector<char> seen(p.order(), 0);
    std::vector<std::size_t> queue;
    for (std::size_t q = 0; q < p.order(); ++q)
      if (image[q] >= 0) {
        seen[q] = 1;
        queue.push_back(q);
      }
    auto flood = [&](std::size_t from) {
      for (std::size_t h = from; h < queue.size(); ++h)
        for (auto u : p.neighbours(queue[h]))
          if (!seen[u]) {
            seen[u] = 1;
            queue.push_back(u);
            order.push_back(u);
          }
    };
    flood(0);
    for (std::size_t q = 0; q < p.order(); ++q)
      if (!seen[q]) {
        seen[q] = 1;
        queue.push_back(q);
        order.push_back(q);
        flood(queue.size() - 1);
      }
  }

  // Relations among mapped vertices agree in both directions.
  bool compatible(std::size_t q, std::size_t u, bool degree = true) const {
    if (s.has_parts() && s.part(u) != p.part(q)) return false;
    if (degree && s.incident(u).size() < p.incident(q).size()) return false;
    for (auto i : p.incident(q)) {
      const auto& inst = p.instances()[i];
      std::vector<std::uint32_t> m;
      bool all = true;
      for (auto w : inst.members) {
        const std::int64_t img = w == q ? static_cast<std::int64_t>(u) : image[w];
        if (img < 0) {
          all = false;
          break;
        }
        m.push_back(static_cast<std::uint32_t>(img));
      }
      if (all && !s.has_instance(inst.relation, m)) return false;
    }
    for (auto i : s.incident(u)) {
      const auto& inst = s.instances()[i];
      std::vector<std::uint32_t> m;
      bool all = true;
      for (auto w : inst.members) {
        const std::int64_t pre = w == u ? static_cast<std::int64_t>(q) : back[w];
        if (pre < 0) {
          all = false;
          break;
        }
        m.push_back(static_cast<std::uint32_t>(pre));
      }
      if (all && !p.has_instance(inst.relation, m)) return false;
    }
    return true;
  }

  template <typename Visit>
  bool run(std::size_t depth, Visit& visit) {
    if (depth == order.size()) return visit(image);
    const std::size_t q = order[depth];
    std::int64_t anchor = -1;
    for (auto w : p.neighbours(q))
      if (image[w] >= 0) {
        anchor = image[w];
        break;
      }
    auto attempt = [&](std::size_t u) {
      if (u >= limit || back[u] >= 0 || !compatible(q, u)) return true;
      image[q] = static_cast<std::int64_t>(u);
      back[u] = static_cast<std::int64_t>(q);
      const bool go = run(depth + 1, visit);
      back[u] = -1;
      image[q] = -1;
      return go;
    };
    if (anchor >= 0) {
      for (auto u : s.neighbours(static_cast<std::size_t>(anchor)))
        if (!attempt(u)) return false;
    } else {
      for (std::size_t u = 0; u < std::min(limit, s.order()); ++u)
        if (!attempt(u)) return false;
    }
    return true;
  }
};

inline VertexSet image_set(const FiniteStructure& s, const std::vector<std::int64_t>& image) {
  VertexSet x(s.order());
  for (auto u : image) x.insert(static_cast<std::size_t>(u));
  return x;
}

}  // namespace detail

/// Embeddings of `pattern` into `s` whose largest image position is `top`,
/// with image <= s (or d-closed), as position lists in lexicographic order.
inline std::vector<std::vector<std::size_t>> embeddings_with_top(const FiniteStructure& s, const FiniteStructure& pattern,
                                                                 EmbedMode mode, std::size_t top) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t q = 0; q < pattern.order(); ++q) {
    detail::Embedder e(s, pattern, top);
    if (!e.fix(q, top)) continue;
    e.plan();
    auto visit = [&](const std::vector<std::int64_t>& img) {
      if (embedded(s, detail::image_set(s, img), mode)) {
        std::vector<std::size_t> v(img.begin(), img.end());
        out.push_back(std::move(v));
      }
      return true;
    };
    e.run(0, visit);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All embeddings of `pattern` into `s` with image <= s (LE) or d-closed in s
/// (LE_D), each as the ambient ids of pattern positions 0, 1, ... Ordered by
/// largest image position, then lexicographically, so that embeddings into an
/// initial segment of a chain come first.
inline std::vector<std::vector<VertexId>> find_sese_embeddings(const FiniteStructure& s, const FiniteStructure& pattern,
                                                               EmbedMode mode, std::size_t cap = Caps{}.canonical) {
  if (pattern.order() > cap) throw CapacityError("embedding pattern", cap, pattern.order());
  if (!(pattern.signature() == s.signature())) throw InputError("pattern and structure have different signatures");
  std::vector<std::vector<VertexId>> out;
  auto push = [&](const std::vector<std::size_t>& e) {
    std::vector<VertexId> ids;
    for (auto p : e) ids.push_back(s.id(p));
    out.push_back(std::move(ids));
  };
  if (pattern.order() == 0) {
    if (embedded(s, s.none(), mode)) out.emplace_back();
    return out;
  }
  for (std::size_t top = 0; top < s.order(); ++top)
    for (const auto& e : embeddings_with_top(s, pattern, mode, top)) push(e);
  return out;
}

// ---------------------------------------------------------------------------
// Class enumeration and tasks

/// All isomorphism types over `sig` with at most max_size vertices that pass
/// `keep`, as canonical structures (ids 0..k-1), ordered by size then
/// canonical code. `keep` must describe a hereditary class: types are grown
/// one vertex at a time from accepted ones.
template <typename Keep>
std::vector<FiniteStructure> enumerate_structures(const Signature& sig, std::size_t max_size, Keep&& keep,
                                                  std::size_t cap = Caps{}.canonical) {
  if (max_size > cap) throw CapacityError("class enumeration", cap, max_size);
  std::vector<FiniteStructure> out{StructureBuilder(sig).build()};
  std::vector<FiniteStructure> layer = out;
  const bool bip = sig.mode() == Mode::Bipartite;
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::map<std::vector<std::int64_t>, FiniteStructure> next;
    for (const auto& prev : layer) {
      const auto fresh = static_cast<VertexId>(k - 1);
      const std::vector<std::optional<Part>> parts =
          bip ? std::vector<std::optional<Part>>{Part::Point, Part::Line} : std::vector<std::optional<Part>>{std::nullopt};
      for (const auto& part : parts) {
        // candidate instances through the fresh vertex
        std::vector<std::pair<std::size_t, std::vector<VertexId>>> cands;
        for (std::size_t rel = 0; rel < sig.relations().size(); ++rel) {
          const auto ar = static_cast<std::size_t>(sig.relations()[rel].arity);
          std::vector<VertexId> cur;
          auto rec = [&](auto&& self, VertexId from) -> void {
            if (cur.size() + 1 == ar) {
              auto m = cur;
              m.push_back(fresh);
              cands.push_back({rel, m});
              return;
            }
            for (VertexId v = from; v < fresh; ++v) {
              if (bip && prev.part(static_cast<std::size_t>(v)) == *part) continue;
              cur.push_back(v);
              self(self, v + 1);
              cur.pop_back();
            }
          };
          rec(rec, 0);
        }
        if (cands.size() > 20) throw CapacityError("class enumeration instances per vertex", 20, cands.size());
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << cands.size()); ++m) {
          auto b = StructureBuilder::from(prev);
          b.add_vertex(fresh, part);
          for (std::size_t i = 0; i < cands.size(); ++i)
            if (m >> i & 1) b.add_instance(cands[i].first, cands[i].second);
          auto s = b.build();
          const auto cf = canonical_form(s, {}, cap);
          if (next.count(cf.code)) continue;
          if (!keep(s)) continue;
          next.emplace(cf.code, canonical_structure(s, cf));
        }
      }
    }
    layer.clear();
    for (auto& [code, s] : next) layer.push_back(s);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// All isomorphism types in the class with at most max_size vertices.
inline std::vector<FiniteStructure> enumerate_class(const ClassSpec& cls, std::size_t max_size,
                                                    std::size_t cap = Caps{}.canonical) {
  cls.validate();
  return enumerate_structures(cls.signature, max_size, [&](const FiniteStructure& s) { return cls.member(s).member; }, cap);
}

/// A demand X <= A (X <=_d A in C_f): ext has ids 0..k-1 and the base is the
/// first base_size of them.
struct ExtensionTask {
  std::size_t id = 0;
  FiniteStructure base;
  FiniteStructure ext;
  std::size_t base_size = 0;
  ClassTag tag = ClassTag::C0;
  std::string key;

  std::vector<VertexId> base_ids() const {
    std::vector<VertexId> v;
    for (std::size_t i = 0; i < base_size; ++i) v.push_back(static_cast<VertexId>(i));
    return v;
  }
  std::string text() const { return to_text(ext, {{"base", base_ids()}}); }
};

/// Relabels `a` so that X comes first, both parts in canonical order.
inline ExtensionTask make_task(const FiniteStructure& a, const VertexSet& x, ClassTag tag, std::size_t cap = Caps{}.canonical) {
  std::vector<int> colours(a.order(), 0);
  x.for_each([&](std::size_t p) { colours[p] = 1; });
  const auto cf = canonical_form(a, colours, cap);
  std::vector<std::size_t> order;
  for (auto p : cf.order)
    if (x.contains(p)) order.push_back(p);
  for (auto p : cf.order)
    if (!x.contains(p)) order.push_back(p);
  std::vector<VertexId> new_id(a.order());
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<VertexId>(i);
  StructureBuilder b(a.signature());
  for (std::size_t i = 0; i < order.size(); ++i)
    b.add_vertex(static_cast<VertexId>(i), a.has_parts() ? std::optional<Part>(a.part(order[i])) : std::nullopt);
  for (const auto& inst : a.instances()) {
    std::vector<VertexId> m;
    for (auto q : inst.members) m.push_back(new_id[q]);
    b.add_instance(inst.relation, m);
  }
  ExtensionTask t;
  t.ext = b.build();
  t.base_size = x.size();
  VertexSet base(a.order());
  for (std::size_t i = 0; i < t.base_size; ++i) base.insert(i);
  t.base = t.ext.induced(base);
  t.tag = tag;
  t.key = std::to_string(t.base_size) + "/" + std::to_string(a.order()) + ":" + cf.key();
  return t;
}

/// Every task X subset A with A in the class, |A| <= max_pattern, X a proper
/// subset with X <= A (d-closed in A for C_f), up to isomorphism of the pair.
/// Ordered by base size, then extension size, then canonical code.
inline std::vector<ExtensionTask> enumerate_tasks(const ClassSpec& cls, std::size_t max_pattern,
                                                  std::optional<std::size_t> max_base = std::nullopt) {
  std::map<std::string, ExtensionTask> found;
  for (const auto& a : enumerate_class(cls, max_pattern)) {
    const auto all = a.all().positions();
    for (std::uint64_t m = 0; m + 1 < (std::uint64_t{1} << a.order()); ++m) {
      const VertexSet x = VertexSet::from_mask(a.order(), all, m);
      if (max_base && x.size() > *max_base) continue;
      if (!embedded(a, x, cls.mode())) continue;
      auto t = make_task(a, x, cls.tag);
      found.try_emplace(t.key, std::move(t));
    }
  }
  std::vector<ExtensionTask> out;
  for (auto& [k, t] : found) out.push_back(std::move(t));
  std::stable_sort(out.begin(), out.end(), [](const ExtensionTask& p, const ExtensionTask& q) {
    if (p.base_size != q.base_size) return p.base_size < q.base_size;
    return p.ext.order() < q.ext.order();
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = i;
  return out;
}

/// True when some embedding of the task's extension extends `base_map`
/// (ambient positions of base vertices 0, 1, ...) with image <= s (or
/// d-closed). Fills `found` with the image positions when asked.
inline bool extension_realized(const FiniteStructure& s, const ExtensionTask& t, const std::vector<std::size_t>& base_map,
                               EmbedMode mode, std::vector<std::size_t>* found = nullptr) {
  if (base_map.size() != t.base_size) throw InputError("base map has the wrong length");
  detail::Embedder e(s, t.ext, s.order());
  for (std::size_t i = 0; i < base_map.size(); ++i)
    if (!e.fix(i, base_map[i])) throw InputError("base map is not an embedding of the task base");
  e.plan();
  bool ok = false;
  auto visit = [&](const std::vector<std::int64_t>& img) {
    if (!embedded(s, detail::image_set(s, img), mode)) return true;
    ok = true;
    if (found) found->assign(img.begin(), img.end());
    return false;
  };
  e.run(0, visit);
  return ok;
}

// ---------------------------------------------------------------------------
// Builder

struct BuildConfig {
  ClassSpec cls;
  std::size_t max_pattern = 3;
  std::size_t budget = 50;
  std::uint64_t seed = 1;
  std::size_t cf_connected_k = 6;  // depth of the per-step C_f check above the exhaustive cap

  void validate() const {
    cls.validate();
    if (max_pattern == 0) throw InputError("max pattern size must be positive");
  }

  std::string line() const {
    std::ostringstream os;
    os << "class " << class_tag_name(cls.tag) << " weight " << cls.signature.vertex_weight();
    for (const auto& r : cls.signature.relations()) os << " relation " << r.name << ' ' << r.arity << ' ' << r.weight;
    if (cls.f) os << " f " << cls.f->name() << " n " << cls.f->n() << " slope " << to_string(cls.f->slope());
    if (cls.ngon) os << " ngon " << *cls.ngon;
    os << " max-pattern " << max_pattern << " budget " << budget << " seed " << seed;
    return os.str();
  }
};

struct BuildLogEntry {
  std::size_t step = 0;
  std::size_t task = 0;
  std::vector<VertexId> embedding;  // ambient ids of the task base
  std::size_t size_after = 0;
};

struct BuildLog {
  std::string config;
  std::size_t tasks = 0;
  std::vector<BuildLogEntry> entries;
  std::vector<std::string> notes;
  std::string digest;  // SHA-256 of the final structure's text form

  std::string text() const {
    std::ostringstream os;
    os << "predimlab-buildlog/1\n" << "config " << config << "\n" << "tasks " << tasks << "\n";
    for (const auto& e : entries) {
      os << "step " << e.step << " task " << e.task << " size " << e.size_after << " embed";
      for (auto v : e.embedding) os << ' ' << v;
      os << "\n";
    }
    for (const auto& n : notes) os << "note " << n << "\n";
    os << "digest " << digest << "\nend\n";
    return os.str();
  }

  static BuildLog parse(const std::string& text) {
    BuildLog log;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    bool ended = false;
    auto bad = [&](const std::string& why) { throw InputError("build log line " + std::to_string(no) + ": " + why); };
    while (std::getline(in, line)) {
      ++no;
      if (line.empty()) continue;
      if (no == 1) {
        if (line != "predimlab-buildlog/1") bad("expected header predimlab-buildlog/1");
        continue;
      }
      std::istringstream ls(line);
      std::string word;
      ls >> word;
      if (word == "config") {
        log.config = line.size() > 7 ? line.substr(7) : "";
      } else if (word == "tasks") {
        if (!(ls >> log.tasks)) bad("bad task count");
      } else if (word == "step") {
        BuildLogEntry e;
        std::string w1, w2, w3;
        if (!(ls >> e.step >> w1 >> e.task >> w2 >> e.size_after >> w3) || w1 != "task" || w2 != "size" || w3 != "embed")
          bad("malformed step");
        VertexId v;
        while (ls >> v) e.embedding.push_back(v);
        log.entries.push_back(std::move(e));
      } else if (word == "note") {
        log.notes.push_back(line.substr(5));
      } else if (word == "digest") {
        ls >> log.digest;
      } else if (word == "end") {
        ended = true;
        break;
      } else {
        bad("unknown keyword '" + word + "'");
      }
    }
    if (!ended) throw InputError("build log is missing 'end'");
    return log;
  }
};

struct BuildResult {
  FiniteStructure structure;
  BuildLog log;
  std::vector<ExtensionTask> tasks;
};

namespace detail {

inline std::map<VertexId, VertexId> task_glue(const ExtensionTask& t, const std::vector<VertexId>& embedding) {
  std::map<VertexId, VertexId> glue;
  for (std::size_t i = 0; i < embedding.size(); ++i) glue[static_cast<VertexId>(i)] = embedding[i];
  return glue;
}

/// One chain step: S' = S amalgamated with a fresh copy of the task
/// extension over the embedding, checked in-class and S <= S' (<=_d).
inline FiniteStructure amalgamate_step(const FiniteStructure& s, const ExtensionTask& t, const std::vector<VertexId>& embedding,
                                       const BuildConfig& cfg) {
  const auto am = free_amalgam(s, t.ext, task_glue(t, embedding));
  const FiniteStructure& next = am.structure;
  VertexSet old(next.order());
  for (auto id : s.ids()) old.insert(next.position_of(id));
  MembershipOptions opt;
  opt.connected_k = cfg.cf_connected_k;
  opt.seed = cfg.seed;
  opt.samples = 100;
  (~old).for_each([&](std::size_t p) { opt.roots.push_back(p); });
  const auto m = cfg.cls.member(next, opt);
  if (!m.member)
    throw InternalError(std::string("build step left the class ") + class_tag_name(cfg.cls.tag) + " (" + m.condition +
                        ") after task " + std::to_string(t.id));
  if (!embedded(next, old, cfg.cls.mode())) throw InternalError("build step broke the chain: S is not embedded in S'");
  return next;
}

}  // namespace detail

/// Round-robin over the tasks; each turn amalgamates over the first base
/// embedding (in find_sese_embeddings order) that the task has not realised.
/// Stops after `budget` amalgamations or when a full round changes nothing.
/// In K_n only d-closed base images are used; others are skipped and noted.
inline BuildResult build_generic(const BuildConfig& cfg,
                                 const std::function<void(const FiniteStructure&)>& on_step = {}) {
  cfg.validate();
  BuildResult r;
  r.tasks = enumerate_tasks(cfg.cls, cfg.max_pattern);
  r.structure = StructureBuilder(cfg.cls.signature).build();
  r.log.config = cfg.line();
  r.log.tasks = r.tasks.size();
  const EmbedMode mode = cfg.cls.mode();

  // Embeddings only ever become realised, and new embeddings always involve
  // a new (larger) position, so each task keeps a cursor.
  struct Cursor {
    std::size_t top = 0;
    bool empty_done = false;
    std::vector<std::vector<std::size_t>> list;
    bool listed = false;
    std::size_t idx = 0;
  };
  std::vector<Cursor> cur(r.tasks.size());
  std::size_t skipped_kn = 0;

  auto next_unrealised = [&](std::size_t ti) -> std::optional<std::vector<std::size_t>> {
    const auto& t = r.tasks[ti];
    auto& c = cur[ti];
    const auto& s = r.structure;
    if (t.base_size == 0) {
      if (c.empty_done) return std::nullopt;
      if (extension_realized(s, t, {}, mode)) {
        c.empty_done = true;
        return std::nullopt;
      }
      return std::vector<std::size_t>{};
    }
    while (c.top < s.order()) {
      if (!c.listed) {
        c.list = embeddings_with_top(s, t.base, mode, c.top);
        c.listed = true;
        c.idx = 0;
      }
      while (c.idx < c.list.size()) {
        const auto& e = c.list[c.idx];
        if (cfg.cls.tag == ClassTag::KN) {
          VertexSet x(s.order());
          for (auto p : e) x.insert(p);
          if (!is_d_closed(s, x)) {
            ++skipped_kn;
            ++c.idx;
            continue;
          }
        }
        if (extension_realized(s, t, e, mode)) {
          ++c.idx;
          continue;
        }
        return e;
      }
      ++c.top;
      c.listed = false;
    }
    return std::nullopt;
  };

  std::size_t idle = 0, ti = 0, step = 0;
  while (step < cfg.budget && !r.tasks.empty() && idle < r.tasks.size()) {
    const std::size_t t = ti;
    ti = (ti + 1) % r.tasks.size();
    auto e = next_unrealised(t);
    if (!e) {
      ++idle;
      continue;
    }
    idle = 0;
    std::vector<VertexId> emb;
    for (auto p : *e) emb.push_back(r.structure.id(p));
    r.structure = detail::amalgamate_step(r.structure, r.tasks[t], emb, cfg);
    // positions are ids in insertion order, so cursors stay valid
    r.log.entries.push_back({step, t, emb, r.structure.order()});
    if (on_step) on_step(r.structure);
    ++step;
  }
  if (skipped_kn) r.log.notes.push_back("skipped " + std::to_string(skipped_kn) + " base images that are not d-closed");
  if (step < cfg.budget) r.log.notes.push_back("stopped after " + std::to_string(step) + " steps: every task realised");
  r.log.notes.push_back("finite approximant");
  r.log.digest = sha256_hex(to_text(r.structure));
  return r;
}

/// Re-applies a log to the empty structure. Throws InputError when the log
/// does not match the configuration or the digest differs.
inline FiniteStructure replay_build(const BuildConfig& cfg, const BuildLog& log) {
  cfg.validate();
  if (log.config != cfg.line()) throw InputError("build log was written for a different configuration");
  const auto tasks = enumerate_tasks(cfg.cls, cfg.max_pattern);
  if (tasks.size() != log.tasks) throw InputError("build log task count does not match");
  FiniteStructure s = StructureBuilder(cfg.cls.signature).build();
  for (const auto& e : log.entries) {
    if (e.task >= tasks.size()) throw InputError("build log names an unknown task");
    if (e.embedding.size() != tasks[e.task].base_size) throw InputError("build log embedding has the wrong length");
    for (auto id : e.embedding) s.position_of(id);
    s = detail::amalgamate_step(s, tasks[e.task], e.embedding, cfg);
    if (s.order() != e.size_after) throw InputError("build log size mismatch at step " + std::to_string(e.step));
  }
  if (sha256_hex(to_text(s)) != log.digest) throw InputError("replayed structure does not match the logged digest");
  return s;
}

// ---------------------------------------------------------------------------
// Audit

/// For each task and the first cap_per_task base embeddings (in
/// find_sese_embeddings order), whether an extension copy with embedded image
/// exists over it. Case "task:NNN" per task; a task passes when every
/// examined embedding is realised (vacuously when there is none).
inline VerificationReport audit_extension_property(const FiniteStructure& s, const std::vector<ExtensionTask>& tasks,
                                                   std::size_t cap_per_task, EmbedMode mode,
                                                   std::optional<std::size_t> max_base = std::nullopt) {
  VerificationReport rep("extension-property", 0);
  rep.label("finite approximant; at most " + std::to_string(cap_per_task) + " base embeddings per task");
  std::size_t total = 0, realised = 0;
  for (const auto& t : tasks) {
    if (max_base && t.base_size > *max_base) continue;
    std::vector<std::vector<std::size_t>> embs;
    if (t.base_size == 0) {
      if (embedded(s, s.none(), mode)) embs.emplace_back();
    } else {
      for (std::size_t top = 0; top < s.order() && embs.size() < cap_per_task; ++top)
        for (auto& e : embeddings_with_top(s, t.base, mode, top))
          if (embs.size() < cap_per_task) embs.push_back(std::move(e));
    }
    std::size_t ok = 0;
    std::optional<std::vector<std::size_t>> miss;
    for (const auto& e : embs) {
      if (extension_realized(s, t, e, mode))
        ++ok;
      else if (!miss)
        miss = e;
    }
    total += embs.size();
    realised += ok;
    char key[32];
    std::snprintf(key, sizeof key, "task:%03zu", t.id);
    const std::string note = "realised " + std::to_string(ok) + "/" + std::to_string(embs.size()) +
                             (embs.empty() ? " (vacuous)" : "") + ", base " + std::to_string(t.base_size) + ", ext " +
                             std::to_string(t.ext.order());
    if (!miss) {
      rep.pass(key, std::nullopt, note);
    } else {
      std::vector<VertexId> ids;
      std::string map;
      for (auto p : *miss) {
        ids.push_back(s.id(p));
        map += (map.empty() ? "" : " ") + std::to_string(s.id(p));
      }
      rep.fail(key,
               Witness::of("extension-realized", s, {{"X", ids}},
                           {{"task", t.text()}, {"map", map}, {"mode", mode == EmbedMode::LE_D ? "le_d" : "le"}}),
               Rational(static_cast<std::int64_t>(ok)) - Rational(static_cast<std::int64_t>(embs.size())), note);
    }
  }
  rep.label("realised " + std::to_string(realised) + "/" + std::to_string(total));
  rep.finalize();
  return rep;
}

}  // namespace predimlab
