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

// Acceptance checks, one per criterion: `acceptance N [cli]` prints a single
// "criterion N: PASS|FAIL ..." line and exits 0 on PASS.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "predimlab/predimlab.hpp"

using namespace predimlab;

namespace {

struct Verdict {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

VerificationReport suite(const std::string& name, bool fault = false) {
  SuiteOptions o;
  o.negative_control = fault;
  return run_suite(name, o);
}

void clean(Verdict& v, const VerificationReport& r) {
  for (const auto& c : r.cases())
    if (c.status == Status::Fail) v.require(false, "FAIL " + c.key + " (" + c.note + ")");
}

std::string status_of(const VerificationReport& r, const std::string& key) {
  const auto* c = r.find(key);
  return c ? status_name(c->status) : "missing";
}

// 1: all 0 < l < b <= 40 PASS, every window checked.
Verdict beatty_criterion() {
  Verdict v;
  const auto r = suite("beatty");
  clean(v, r);
  v.require(r.cases().size() == 780, "expected 780 (l, b) rows, got " + std::to_string(r.cases().size()));
  v.require(r.count(Status::Pass) == 780, "not every row passes");
  return v;
}

// 2: clauses for every non-degenerate coprime pair; degenerate ones tagged.
Verdict gadget_criterion() {
  Verdict v;
  const auto r = suite("gadget");
  clean(v, r);
  std::size_t full = 0, degenerate = 0;
  for (const auto& [n, m, ar] : gadget_suite_params()) {
    const auto g = build_gadget(n, m, ar);
    const std::string p = "r=" + std::to_string(ar) + ",n=" + (n < 10 ? "0" : "") + std::to_string(n) + ",m=" +
                          (m < 10 ? "0" : "") + std::to_string(m);
    const bool expect_degenerate = g.params.b == 2 || g.x.size() < 2;
    v.require(expect_degenerate == g.degenerate, p + ": degenerate tag does not match b = 2 or |X| = 1");
    if (g.degenerate) {
      ++degenerate;
      v.require(status_of(r, p) == "DEGENERATE", p + ": not reported DEGENERATE");
      for (const auto& c : r.cases())
        if (c.key.rfind(p + ":", 0) == 0) v.require(false, p + ": degenerate pair also has " + c.key);
      continue;
    }
    ++full;
    v.require(g.structure.order() <= 22, p + ": |Y| above 22");
    for (const char* cl : {":clause1", ":clause2", ":clause3"}) v.require(status_of(r, p + cl) == "PASS", p + cl + " not PASS");
    const auto* c1 = r.find(p + ":clause1");
    v.require(c1 && c1->margin && *c1->margin == -1, p + ": delta(Y/X) is not exactly -1");
  }
  v.require(full > 0 && degenerate > 0, "parameter grid is missing a kind");
  if (v.ok) v.why = std::to_string(full) + " gadgets verified, " + std::to_string(degenerate) + " degenerate";
  return v;
}

// 3: uv d-closed in P_l exactly for l >= 3.
Verdict path_criterion() {
  Verdict v;
  const auto sig = Signature::uniform(2, 1, 2);
  for (int l = 2; l <= 8; ++l) {
    const auto p = path_structure(sig, l);
    v.require(is_d_closed(p, p.set_of({0, static_cast<VertexId>(l)})) == (l >= 3), "wrong verdict at l = " + std::to_string(l));
  }
  const auto r = suite("path-fact");
  clean(v, r);
  v.require(r.count(Status::Pass) == 7, "suite does not pass l = 2..8");
  return v;
}

// 4: the star construction for r = 3, 4.
Verdict ex511_criterion() {
  Verdict v;
  const auto r = suite("ex511");
  clean(v, r);
  std::size_t bases = 0;
  for (int ar : {3, 4}) {
    const auto f = ex511_control(ar);
    for (const auto& b : enumerate_ex511_bases(ar, f)) {
      v.require(b.a.size() <= 3, "base with |A| > 3");
      ++bases;
      const std::string p = "r=" + std::to_string(ar) + ":" + b.key + ":";
      for (const char* k : {"e-in-cf", "ac-d-closed", "a-in-cld-ae", "a-in-cld-e", "e1-perp-a", "b1-d-closed"})
        v.require(status_of(r, p + k) == "PASS", p + k + " is " + status_of(r, p + k));
      for (int i = 1; i <= ar - 1; ++i) {
        v.require(status_of(r, p + "b" + std::to_string(i) + "-d-closed") == "PASS", p + "B_i not d-closed");
        v.require(status_of(r, p + "e" + std::to_string(i) + "-perp-a") == "PASS", p + "e_i perp A fails");
      }
    }
  }
  if (v.ok) v.why = std::to_string(bases) + " bases";
  return v;
}

// 5: the cycle construction at s = 73, l = 6.
Verdict ex512_criterion() {
  Verdict v;
  const auto r = suite("ex512");
  clean(v, r);
  const std::string p = "s=73,l=6:";
  const auto* girth = r.find(p + "cd-girth");
  v.require(girth && girth->status == Status::Pass && girth->margin && *girth->margin >= 6, "girth(CD) < 6");
  const auto* d = r.find(p + "cd-delta");
  v.require(d && d->status == Status::Pass && d->margin && *d->margin == 73, "delta(CD) != 73");
  const auto* st2 = r.find(p + "samples");
  v.require(st2 && st2->status == Status::Pass && st2->note.rfind("1000 samples", 0) == 0, "sampling of CD incomplete");
  v.require(status_of(r, p + "c-closure-bound") == "PASS", "closure bound on C-subsets");
  v.require(status_of(r, p + "ae-d-closed") == "PASS", "A e not d-closed in E");
  v.require(status_of(r, p + "b-d-closed") == "PASS", "B_i not d-closed in E");
  v.require(status_of(r, p + "cd-in-cf") == "PARTIAL", "C_f membership of CD should be PARTIAL");
  return v;
}

// 6: 200 random free amalgams, copy counts within delta(Z).
Verdict msa_criterion() {
  Verdict v;
  const auto r = suite("msa-bound");
  clean(v, r);
  v.require(r.count(Status::Pass) == 200, "expected 200 amalgams, got " + std::to_string(r.count(Status::Pass)));
  std::size_t pairs = 0;
  for (const auto& c : r.cases()) {
    unsigned k = 0, np = 0;
    if (std::sscanf(c.note.c_str(), "%u vertices, %u", &k, &np) == 2) pairs += np;
  }
  v.require(pairs > 0, "no straddling msa pair was exercised");
  if (v.ok) v.why = std::to_string(pairs) + " straddling msa pairs";
  return v;
}

// 7: submodularity suite plus closure oracles on 10^4 seeded ambients.
Verdict closure_criterion() {
  Verdict v;
  clean(v, suite("submodularity"));
  std::mt19937_64 rng(20260101);
  const std::vector<Signature> sigs{Signature::uniform(2, 1, 2), Signature::uniform(1, 1, 3), Signature::uniform(3, 2, 2)};
  std::size_t queries = 0;
  for (int t = 0; t < 10000 && v.ok; ++t) {
    const auto& sig = sigs[static_cast<std::size_t>(t) % sigs.size()];
    const auto k = std::uniform_int_distribution<std::size_t>(1, 14)(rng);
    const double p = sig.relations()[0].arity == 2 ? std::uniform_real_distribution<double>(0.1, 0.5)(rng) : 0.15;
    const auto s = oracle::random_structure(sig, k, p, rng);
    const oracle::Tables tab(s);
    for (int q = 0; q < 3; ++q) {
      const auto x = std::uniform_int_distribution<oracle::Mask>(0, oracle::full(s))(rng);
      const auto xs = VertexSet::from_mask(k, s.all().positions(), x);
      ++queries;
      const auto bits = [&](const VertexSet& y) {
        oracle::Mask m = 0;
        y.for_each([&](std::size_t pp) { m |= oracle::Mask{1} << pp; });
        return m;
      };
      const std::string at = " (seed case " + std::to_string(t) + ")";
      v.require(bits(cl0(s, xs).closure) == tab.cl0(x), "cl0 disagrees" + at);
      v.require(dim(s, xs) == tab.dim(x), "d disagrees" + at);
      v.require(bits(cld(s, xs)) == tab.cld(x), "cl^d disagrees" + at);
    }
  }
  if (v.ok) v.why = std::to_string(queries) + " oracle queries";
  return v;
}

// 8: independence axioms and the characterization.
Verdict axioms_criterion() {
  Verdict v;
  const auto r = suite("axioms");
  clean(v, r);
  for (const char* ax : {"symmetry", "monotonicity", "transitivity", "compatibility", "characterization"}) {
    std::size_t n = 0;
    for (const auto& c : r.cases()) n += c.key.rfind(std::string(ax) + ":", 0) == 0;
    v.require(n > 0, std::string("no ") + ax + " cases");
  }
  return v;
}

// 9: the builder audit.
Verdict builder_criterion() {
  Verdict v;
  const auto r = suite("extension-property");
  clean(v, r);
  for (const char* k : {"build:chain-and-class", "build:final-in-c0", "build:deterministic-log", "build:replay"})
    v.require(status_of(r, k) == "PASS", std::string(k) + " is " + status_of(r, k));
  std::size_t audited = 0;
  for (const auto& c : r.cases())
    if (c.key.rfind("audit:task:", 0) == 0) {
      ++audited;
      unsigned a = 0, b = 0;
      v.require(std::sscanf(c.note.c_str(), "realised %u/%u", &a, &b) == 2 && a == b, c.key + ": " + c.note);
    }
  v.require(audited > 0, "no audited tasks");
  if (v.ok) v.why = std::to_string(audited) + " tasks with base size <= 1 fully realised";
  return v;
}

// 10: K_n cycles.
Verdict kn_criterion() {
  Verdict v;
  const auto r = suite("kn");
  clean(v, r);
  for (int n = 3; n <= 5; ++n) {
    const std::string p = "n=" + std::to_string(n) + ":";
    v.require(status_of(r, p + "weights") == "PASS", p + "weights");
    v.require(status_of(r, p + "cycle-" + std::to_string(2 * n) + "-accepted") == "PASS", p + "2n-cycle");
    for (int m = 2; m < n; ++m)
      v.require(status_of(r, p + "cycle-" + std::to_string(2 * m) + "-rejected") == "PASS", p + "short cycle");
  }
  return v;
}

int run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

// 11: every suite's injected fault is caught with replayable witnesses;
// exit codes end to end.
Verdict negative_criterion(const std::string& cli) {
  Verdict v;
  std::size_t fails = 0;
  for (const auto& name : suite_names()) {
    const auto r = suite(name, true);
    v.require(r.has_fail(), name + ": fault not detected");
    for (const auto& c : r.cases()) {
      if (c.status != Status::Fail) continue;
      ++fails;
      const auto o = replay_witness(*c.witness);
      v.require(o.reproduced, name + ": witness of " + c.key + " does not replay (" + o.detail + ")");
    }
  }
  if (cli.empty()) {
    v.require(false, "no CLI path given");
  } else {
    v.require(run_cli(cli, "verify path-fact") == 0, "exit code for a clean suite is not 0");
    v.require(run_cli(cli, "verify path-fact --negative-control") == 1, "exit code for a failing suite is not 1");
    v.require(run_cli(cli, "verify no-such-suite") == 2, "exit code for an unknown suite is not 2");
    v.require(run_cli(cli, "closure /nonexistent --set X") == 2, "exit code for a missing file is not 2");
  }
  if (v.ok) v.why = std::to_string(fails) + " injected failures replayed";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance N [path-to-cli]\n";
    return 2;
  }
  const int n = std::atoi(argv[1]);
  const std::string cli = argc > 2 ? argv[2] : "";
  // criterion -> (check, time limit in seconds)
  const std::map<int, std::pair<std::function<Verdict()>, double>> table{
      {1, {beatty_criterion, 10}},     {2, {gadget_criterion, 300}}, {3, {path_criterion, 1}},
      {4, {ex511_criterion, 60}},      {5, {ex512_criterion, 300}},  {6, {msa_criterion, 120}},
      {7, {closure_criterion, 300}},   {8, {axioms_criterion, 300}}, {9, {builder_criterion, 120}},
      {10, {kn_criterion, 1}},         {11, {[&] { return negative_criterion(cli); }, 600}},
  };
  const auto it = table.find(n);
  if (it == table.end()) {
    std::cerr << "unknown criterion " << argv[1] << '\n';
    return 2;
  }
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = it->second.first();
  } catch (const std::exception& e) {
    v.ok = false;
    v.why = std::string("exception: ") + e.what();
  }
  const double secs = seconds_since(t0);
  if (v.ok && secs > it->second.second) {
    v.ok = false;
    v.why = "took " + std::to_string(secs) + " s, limit " + std::to_string(it->second.second) + " s";
  }
  char t[32];
  std::snprintf(t, sizeof t, "%.2f s", secs);
  std::cout << "criterion " << n << ": " << (v.ok ? "PASS" : "FAIL") << " [" << t << "]" << (v.why.empty() ? "" : " " + v.why)
            << std::endl;
  return v.ok ? 0 : 1;
}
