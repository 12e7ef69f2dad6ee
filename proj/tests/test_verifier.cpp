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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "predimlab/replay.hpp"

using namespace predimlab;

TEST(Report, EmptySuite) {
  VerificationReport r("empty", 3);
  r.finalize();
  const auto j = nlohmann::json::parse(emit_report(r, ReportFormat::Machine));
  EXPECT_EQ(j["summary"]["total"], 0);
  EXPECT_TRUE(j["cases"].empty());
  EXPECT_NE(emit_report(r, ReportFormat::Text).find("summary: 0 cases"), std::string::npos);
}

TEST(Report, SortedUniqueAndFailNeedsWitness) {
  VerificationReport r("x", 0);
  r.pass("b");
  r.pass("a");
  r.finalize();
  EXPECT_EQ(r.cases()[0].key, "a");
  VerificationReport dup("x", 0);
  dup.pass("a");
  dup.pass("a");
  EXPECT_THROW(dup.finalize(), InternalError);
  EXPECT_THROW(r.add(Case{"c", Status::Fail, std::nullopt, std::nullopt, ""}), InternalError);
}

TEST(Report, MachineAndTextCarrySameCases) {
  const auto r = run_suite("kn");
  const auto j = nlohmann::json::parse(emit_report(r, ReportFormat::Machine));
  const auto text = emit_report(r, ReportFormat::Text);
  ASSERT_EQ(j["cases"].size(), r.cases().size());
  for (const auto& c : j["cases"]) EXPECT_NE(text.find(c["caseKey"].get<std::string>()), std::string::npos);
  EXPECT_EQ(j["schema"], kReportSchema);
}

TEST(Suites, DeterministicMachineReports) {
  for (const char* name : {"beatty", "msa-bound", "path-fact", "kn"}) {
    SuiteOptions o;
    o.seed = 5;
    EXPECT_EQ(report_digest(run_suite(name, o)), report_digest(run_suite(name, o))) << name;
  }
}

TEST(Suites, NamesAndUnknown) {
  EXPECT_EQ(suite_names().size(), 11u);
  EXPECT_THROW(run_suite("lemma"), InputError);
}

TEST(Suites, NegativeControlWitnessesReplay) {
  for (const char* name : {"beatty", "gadget", "gadget-amalgam", "path-fact", "kn", "msa-bound", "submodularity", "ex511"}) {
    SuiteOptions o;
    o.negative_control = true;
    const auto r = run_suite(name, o);
    ASSERT_TRUE(r.has_fail()) << name;
    for (const auto& c : r.cases())
      if (c.status == Status::Fail) EXPECT_TRUE(replay_witness(*c.witness).reproduced) << name << " " << c.key;
  }
}

TEST(Replay, CleanWitnessDoesNotReproduce) {
  // a d-closed claim that is actually true
  const auto p = path_structure(Signature::uniform(2, 1, 2), 4);
  const auto w = Witness::of("d-closed", p, {{"X", {0, 4}}}, {{"expected", "true"}});
  EXPECT_FALSE(replay_witness(w).reproduced);
  EXPECT_THROW(replay_witness(Witness::of("no-such-claim", p)), InputError);
  EXPECT_THROW(replay_witness(Witness::of("c0", p)), InputError);  // lacks X
}

TEST(RandomAmalgam, FactorsAreStrongAndInC0) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto am = random_free_amalgam(Signature::uniform(2, 1, 2), seed);
    EXPECT_TRUE(in_C0(am.s).member);
    EXPECT_FALSE(am.only_p.intersects(am.only_q));
    EXPECT_TRUE(freely_amalgamated(am.s, ~am.only_q, ~am.only_p));
  }
}
