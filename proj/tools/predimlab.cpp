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

// predimlab: command-line front end. Every subcommand produces a report;
// exit code 0 when it has no FAIL, 1 when it has one, 2 on usage or input
// errors, 3 when an internal invariant breaks.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "predimlab/predimlab.hpp"

using namespace predimlab;

namespace {

struct Global {
  std::string report = "text";
  std::uint64_t seed = 1;
  std::optional<std::size_t> cap;
  std::string out;
  bool wall_time = false;

  Caps caps() const {
    Caps c = caps_from_env();
    if (cap) c.membership = c.gadget = c.subset = *cap;
    return c;
  }
};

// A set argument: the name of a set stored in the file, or a comma or
// space separated id list ("" is the empty set).
VertexSet resolve(const LoadedStructure& in, const std::string& arg) {
  const auto& s = in.structure;
  if (const auto it = in.sets.find(arg); it != in.sets.end()) return s.set_of(it->second);
  std::string t = arg;
  for (auto& ch : t)
    if (ch == ',' || ch == '{' || ch == '}') ch = ' ';
  std::istringstream is(t);
  std::vector<VertexId> ids;
  for (std::string w; is >> w;) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoll(w, &used));
      if (used != w.size()) throw std::invalid_argument(w);
    } catch (const std::logic_error&) {
      throw InputError("'" + arg + "' is neither a set in the file nor a list of ids");
    }
  }
  for (auto id : ids)
    if (!s.position(id)) throw InputError("vertex " + std::to_string(id) + " is not in the structure");
  return s.set_of(ids);
}

std::vector<VertexId> ordered_ids(const LoadedStructure& in, const std::string& arg) {
  if (const auto it = in.sets.find(arg); it != in.sets.end()) return it->second;
  (void)resolve(in, arg);  // validates the ids
  std::vector<VertexId> ids;
  std::string t = arg;
  for (auto& ch : t)
    if (ch == ',' || ch == '{' || ch == '}') ch = ' ';
  std::istringstream is(t);
  for (VertexId v; is >> v;) ids.push_back(v);
  return ids;
}

std::string ids_text(const FiniteStructure& s, const VertexSet& x) {
  std::string out = "{";
  for (auto id : s.ids_of(x)) out += (out.size() > 1 ? "," : "") + std::to_string(id);
  return out + "}";
}

Signature parse_signature(const std::string& text) {
  std::string t = text;
  for (auto& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream is(t);
  std::int64_t n = 0, m = 0;
  int r = 0;
  if (!(is >> n >> m >> r)) throw InputError("signature must be n,m,r");
  return Signature::uniform(n, m, r);
}

struct ClassArgs {
  std::string name = "c0";
  std::string signature = "2,1,2";
  std::int64_t f_n = 0;  // 0: the signature's vertex weight
  std::string f_slope = "1";
  int ngon = 0;

  void add(CLI::App* app, bool with_signature) {
    app->add_option("--class", name, "c0, cf or kn")->check(CLI::IsMember({"c0", "cf", "kn"}));
    if (with_signature) app->add_option("--signature", signature, "vertex weight, relation weight, arity (n,m,r)");
    app->add_option("--f-n", f_n, "control function: harmonic f for vertex weight n");
    app->add_option("--f-slope", f_slope, "control function slope in (0, 1]");
    app->add_option("--ngon", ngon, "kn: the polygon parameter n");
  }

  ControlFunction control(std::int64_t vertex_weight) const {
    return ControlFunction::harmonic(f_n ? f_n : vertex_weight, Rational(f_slope));
  }

  ClassSpec spec(const Signature& sig) const {
    ClassSpec c;
    c.tag = parse_class_tag(name);
    c.signature = sig;
    if (c.tag == ClassTag::CF) c.f = control(sig.vertex_weight());
    if (c.tag == ClassTag::KN) {
      if (ngon == 0) throw InputError("class kn needs --ngon");
      c.ngon = ngon;
    }
    return c;
  }

  ClassSpec spec() const { return spec(ngon && name == "kn" ? Signature::polygon(ngon) : parse_signature(signature)); }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

int emit(const VerificationReport& r, const Global& g) {
  const auto fmt = g.report == "machine" ? ReportFormat::Machine : ReportFormat::Text;
  const auto text = emit_report(r, fmt, g.wall_time && fmt == ReportFormat::Text);
  if (g.out.empty())
    std::cout << text;
  else
    write_file(g.out, text);
  return r.has_fail() ? 1 : 0;
}

VerificationReport replay_report(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("not a machine report: ") + e.what());
  }
  if (!j.is_object() || j.value("schema", "") != kReportSchema) throw InputError("not a " + std::string(kReportSchema) + " report");
  VerificationReport rep("replay", j.value("seed", std::uint64_t{0}));
  rep.label("witnesses from suite " + j.value("suite", std::string("?")));
  for (const auto& c : j.at("cases")) {
    if (!c.contains("witness")) continue;
    const auto& jw = c.at("witness");
    Witness w{jw.at("claim").get<std::string>(), jw.at("params").get<std::map<std::string, std::string>>(),
              jw.at("structure").get<std::string>()};
    const auto key = c.at("caseKey").get<std::string>();
    const auto o = replay_witness(w);
    if (o.reproduced)
      rep.pass(key, std::nullopt, "reproduced: " + o.detail);
    else
      rep.fail(key, w, std::nullopt, "not reproduced: " + o.detail);
  }
  rep.finalize();
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"predimlab: predimension calculus on finite structures"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Global g;
  app.add_option("--report", g.report, "report format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--cap", g.cap, "exhaustive-search cap (vertices)");
  app.add_option("--out", g.out, "write the report here instead of stdout");
  app.add_flag("--wall-time", g.wall_time, "include the wall time in text reports");

  std::function<VerificationReport()> run;

  std::string file, set_a = "", set_b = "", set_c = "";
  ClassArgs cls;

  auto* check = app.add_subcommand("check", "class membership of a structure");
  check->add_option("file", file, "structure file")->required();
  cls.add(check, false);
  check->callback([&] {
    run = [&] {
      const auto in = read_structure_file(file);
      const auto& s = in.structure;
      const auto spec = cls.spec(s.signature());
      MembershipOptions mo;
      mo.exhaustive_cap = g.caps().membership;
      mo.seed = g.seed;
      VerificationReport rep("check", g.seed);
      rep.label("class " + cls.name + ", " + std::to_string(s.order()) + " vertices");
      const auto m = spec.member(s, mo);
      if (spec.tag == ClassTag::KN && !m.member)
        rep.fail("membership",
                 Witness::of("kn", s, {{"X", s.ids_of(*m.witness)}}, {{"n", std::to_string(*spec.ngon)}, {"expect", "member"}}),
                 m.margin, m.condition);
      else
        detail::record_membership(rep, "membership", s, m, spec.f ? &*spec.f : nullptr);
      rep.finalize();
      return rep;
    };
  });

  auto* dcmd = app.add_subcommand("delta", "predimension of a set (default: the whole structure)");
  dcmd->add_option("file", file)->required();
  dcmd->add_option("--set", set_a, "set name or ids");
  dcmd->callback([&] {
    run = [&] {
      const auto in = read_structure_file(file);
      const auto x = set_a.empty() ? in.structure.all() : resolve(in, set_a);
      VerificationReport rep("delta", g.seed);
      rep.pass("delta", Rational(delta(in.structure, x)), "X = " + ids_text(in.structure, x));
      rep.finalize();
      return rep;
    };
  });

  auto* ccmd = app.add_subcommand("closure", "cl0, d and cl^d of a set");
  ccmd->add_option("file", file)->required();
  ccmd->add_option("--set", set_a, "set name or ids")->required();
  ccmd->callback([&] {
    run = [&] {
      const auto in = read_structure_file(file);
      const auto& s = in.structure;
      const auto x = resolve(in, set_a);
      const auto c = cl0(s, x);
      VerificationReport rep("closure", g.seed);
      rep.pass("cl0", Rational(delta(s, c.closure)), ids_text(s, c.closure));
      rep.pass("dim", Rational(dim(s, x)));
      rep.pass("cld", std::nullopt, ids_text(s, cld(s, x)));
      rep.finalize();
      return rep;
    };
  });

  auto* icmd = app.add_subcommand("indep", "d-independence of A and C over B");
  icmd->add_option("file", file)->required();
  icmd->add_option("--a", set_a)->required();
  icmd->add_option("--b", set_b)->required();
  icmd->add_option("--c", set_c)->required();
  icmd->callback([&] {
    run = [&] {
      const auto in = read_structure_file(file);
      const auto& s = in.structure;
      const auto a = resolve(in, set_a), b = resolve(in, set_b), c = resolve(in, set_c);
      VerificationReport rep("indep", g.seed);
      const bool ind = d_independent(s, a, b, c);
      rep.pass("independent", std::nullopt, ind ? "yes" : "no");
      const auto sc = split_conditions(s, a, b, c);
      rep.pass("conditions", std::nullopt,
               std::string("closures meet in B: ") + (sc.intersection ? "yes" : "no") + ", free: " + (sc.free ? "yes" : "no") +
                   ", union self-sufficient: " + (sc.self_sufficient ? "yes" : "no"));
      rep.finalize();
      return rep;
    };
  });

  AxiomOptions ax;
  auto* acmd = app.add_subcommand("axioms", "independence axioms over the d-closed sets of a structure");
  acmd->add_option("file", file)->required();
  acmd->add_option("--size-cap", ax.size_cap, "largest set in triples");
  acmd->add_flag("--raw-delta", ax.raw_delta, "fault injection: use delta for d");
  acmd->callback([&] {
    run = [&] {
      const auto in = read_structure_file(file);
      VerificationReport rep("axioms", g.seed);
      axiom_suite(in.structure, rep, "input", ax);
      rep.finalize();
      return rep;
    };
  });

  auto* mcmd = app.add_subcommand("msa", "simple algebraicity of Y over Z, its msa base and copy count");
  mcmd->add_option("file", file)->required();
  mcmd->add_option("--z", set_a)->required();
  mcmd->add_option("--y", set_b)->required();
  mcmd->callback([&] {
    run = [&] {
      const auto in = read_structure_file(file);
      const auto& s = in.structure;
      const auto z = resolve(in, set_a), y = resolve(in, set_b);
      const auto cap = g.caps().sa_extension;
      VerificationReport rep("msa", g.seed);
      const bool sa = is_simply_algebraic(s, z, y, cap);
      rep.pass("sa", std::nullopt, sa ? "yes" : "no");
      if (sa) {
        const bool msa = is_msa(s, z, y, cap);
        rep.pass("msa", std::nullopt, msa ? "yes" : "no");
        const auto base = msa_base(s, z, y, cap);
        rep.pass("msa-base", std::nullopt, "Z1 = " + ids_text(s, base.z1) + ", Y1 = " + ids_text(s, base.y1));
        const auto t = make_msa_type(s, base.z1.positions(), base.y1);
        rep.pass("copies", Rational(static_cast<std::int64_t>(count_msa_copies(s, base.z1, t, base.z1.positions(), cap).count())),
                 "copies over Z1 with the identity base");
      }
      rep.finalize();
      return rep;
    };
  });

  ExtendabilityOptions eo;
  auto* ucmd = app.add_subcommand("mult", "msa multiplicities over the domain and image of a partial map");
  ucmd->add_option("file", file)->required();
  ucmd->add_option("--domain", set_a, "domain ids, in order")->required();
  ucmd->add_option("--image", set_b, "image ids, in the same order")->required();
  ucmd->add_option("--max-ext", eo.max_ext);
  ucmd->add_option("--saturation", eo.saturation);
  ucmd->callback([&] {
    run = [&] {
      const auto in = read_structure_file(file);
      const auto& s = in.structure;
      const auto d = ordered_ids(in, set_a), im = ordered_ids(in, set_b);
      if (d.size() != im.size()) throw InputError("domain and image differ in length");
      PartialMap k;
      for (std::size_t i = 0; i < d.size(); ++i) k.pairs.emplace_back(s.position_of(d[i]), s.position_of(im[i]));
      eo.cap = g.caps().sa_extension;
      return check_potential_extendability(s, k, eo);
    };
  });

  std::int64_t gn = 0, gm = 0;
  int gr = 2;
  std::string structure_out;
  auto* gcmd = app.add_subcommand("gadget", "build and verify the gadget X inside Y");
  gcmd->add_option("n", gn)->required();
  gcmd->add_option("m", gm)->required();
  gcmd->add_option("--arity", gr, "relation arity r");
  gcmd->add_option("--structure-out", structure_out, "write Y (with set X) here");
  bool nc = false;
  gcmd->add_flag("--negative-control", nc, "corrupt the gadget first");
  gcmd->callback([&] {
    run = [&] {
      auto gp = build_gadget(gn, gm, gr);
      if (nc) gp = corrupt_gadget(gp);
      if (!structure_out.empty())
        write_file(structure_out, to_text(gp.structure, {{"X", gp.structure.ids_of(gp.x)}}));
      VerificationReport rep("gadget", g.seed);
      verify_gadget(gp, rep, "n=" + std::to_string(gn) + ",m=" + std::to_string(gm) + ",r=" + std::to_string(gr), g.caps().gadget);
      rep.finalize();
      return rep;
    };
  });

  int bl = 0, bb = 0;
  auto* bcmd = app.add_subcommand("beatty", "the sequence a_i for l/b and its window properties");
  bcmd->add_option("l", bl)->required();
  bcmd->add_option("b", bb)->required();
  bcmd->add_flag("--negative-control", nc, "flip the first entry");
  bcmd->callback([&] {
    run = [&] {
      VerificationReport rep("beatty", g.seed);
      const auto seq = beatty(bl, bb);
      std::string p;
      for (auto v : seq.period) p += std::to_string(v);
      rep.label("period " + p);
      beatty_row(rep, bl, bb, nc);
      rep.finalize();
      return rep;
    };
  });

  std::vector<int> rs{3, 4};
  auto* e1 = app.add_subcommand("ex511", "the r-ary star construction over every small base");
  e1->add_option("--r", rs, "arities");
  e1->add_flag("--negative-control", nc, "check against the harmonic f of slope 1");
  e1->callback([&] {
    run = [&] {
      VerificationReport rep("ex511", g.seed);
      ex511_suite(rep, nc, g.caps().membership, rs);
      rep.finalize();
      return rep;
    };
  });

  std::int64_t es = 73, el = 6;
  auto* e2 = app.add_subcommand("ex512", "the cycle construction CD and its amalgam E");
  e2->add_option("--s", es);
  e2->add_option("--l", el);
  e2->add_flag("--negative-control", nc, "drop the edge d_0 d_l");
  e2->callback([&] {
    run = [&] {
      VerificationReport rep("ex512", g.seed);
      ex512_suite(rep, nc, g.seed, es, el);
      rep.finalize();
      return rep;
    };
  });

  BuildConfig bc;
  std::string log_out, log_in;
  auto* bu = app.add_subcommand("build", "finite approximant of the generic structure");
  cls.add(bu, true);
  bu->add_option("--max-pattern", bc.max_pattern);
  bu->add_option("--budget", bc.budget);
  bu->add_option("--structure-out", structure_out, "write the structure here");
  bu->add_option("--log-out", log_out, "write the build log here");
  bu->add_option("--replay", log_in, "replay this log instead of building");
  bu->callback([&] {
    run = [&] {
      bc.cls = cls.spec();
      bc.seed = g.seed;
      VerificationReport rep("build", g.seed);
      rep.label(bc.line());
      FiniteStructure s = StructureBuilder(bc.cls.signature).build();
      if (!log_in.empty()) {
        std::ifstream f(log_in);
        if (!f) throw InputError("cannot read " + log_in);
        std::stringstream buf;
        buf << f.rdbuf();
        s = replay_build(bc, BuildLog::parse(buf.str()));
        rep.pass("replay", std::nullopt, "digest matches");
      } else {
        const auto r = build_generic(bc);
        s = r.structure;
        for (const auto& n : r.log.notes) rep.label(n);
        rep.pass("chain", std::nullopt, std::to_string(r.log.entries.size()) + " steps, digest " + r.log.digest.substr(0, 16));
        if (!log_out.empty()) write_file(log_out, r.log.text());
      }
      MembershipOptions mo;
      mo.exhaustive_cap = g.caps().membership;
      mo.seed = g.seed;
      detail::record_membership(rep, "final-in-class", s, bc.cls.member(s, mo), bc.cls.f ? &*bc.cls.f : nullptr);
      if (!structure_out.empty()) write_file(structure_out, to_text(s));
      rep.finalize();
      return rep;
    };
  });

  std::size_t cap_per_task = 10, max_base = 1;
  auto* au = app.add_subcommand("audit", "extension property audit of a structure");
  au->add_option("file", file)->required();
  cls.add(au, false);
  au->add_option("--max-pattern", bc.max_pattern);
  au->add_option("--cap-per-task", cap_per_task, "base embeddings examined per task");
  au->add_option("--max-base", max_base, "largest task base");
  au->callback([&] {
    run = [&] {
      const auto in = read_structure_file(file);
      const auto spec = cls.spec(in.structure.signature());
      return audit_extension_property(in.structure, enumerate_tasks(spec, bc.max_pattern), cap_per_task, spec.mode(), max_base);
    };
  });

  std::string suite;
  auto* ve = app.add_subcommand("verify", "run a named suite");
  ve->add_option("suite", suite, "suite name, or 'list'")->required();
  ve->add_flag("--negative-control", nc, "inject the suite's fault");
  ve->callback([&] {
    run = [&] {
      if (suite == "list") {
        for (const auto& n : suite_names()) std::cout << n << '\n';
        std::exit(0);
      }
      SuiteOptions so;
      so.seed = g.seed;
      so.negative_control = nc;
      so.caps = g.caps();
      return run_suite(suite, so);
    };
  });

  std::string report_in;
  auto* rp = app.add_subcommand("replay", "re-evaluate every witness in a machine report");
  rp->add_option("report", report_in)->required();
  rp->callback([&] { run = [&] { return replay_report(report_in); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    return emit(run(), g);
  } catch (const InputError& e) {
    std::cerr << "predimlab: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "predimlab: " << e.what() << '\n';
    return 2;
  } catch (const ContractError& e) {
    std::cerr << "predimlab: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "predimlab: internal error: " << e.what() << '\n';
    return 3;
  }
}
