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

#include "predimlab/independence.hpp"
#include "predimlab/report.hpp"

using namespace predimlab;

namespace {
const Signature kGraph = Signature::uniform(2, 1, 2);
}

TEST(DIndependent, PathAndTriangle) {
  // x = 0, a = 1, y = 2
  const auto path = make_structure(kGraph, 3, {{0, 1}, {1, 2}});
  const auto x = path.set_of({0}), a = path.set_of({1}), y = path.set_of({2});
  EXPECT_TRUE(d_independent(path, x, a, y));
  EXPECT_TRUE(check_split_characterization(path, x, a, y));
  const auto sc = split_conditions(path, x, a, y);
  EXPECT_TRUE(sc.intersection && sc.free && sc.self_sufficient);

  const auto tri = make_structure(kGraph, 3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_FALSE(d_independent(tri, x, a, y));
  EXPECT_FALSE(check_split_characterization(tri, x, a, y));
  // both closures are the whole triangle, so the intersection condition fails
  EXPECT_FALSE(split_conditions(tri, x, a, y).intersection);
}

TEST(DIndependent, Trivialities) {
  const auto path = make_structure(kGraph, 3, {{0, 1}, {1, 2}});
  const auto x = path.set_of({0}), ab = path.set_of({1, 2});
  EXPECT_TRUE(d_independent(path, x, ab, path.set_of({2})));
  EXPECT_TRUE(d_independent(path, ab, ab, ab));
  EXPECT_TRUE(check_split_characterization(path, path.set_of({1}), path.set_of({1}), path.set_of({1})));
}

TEST(Perp, Examples) {
  // b = 3 hangs off c = 2, which hangs off a = 0; a isolated from b
  const auto s = make_structure(kGraph, 4, {{0, 1}, {2, 3}});
  const auto a = s.set_of({0});
  EXPECT_TRUE(perp(s, s.set_of({3}), a, a));
  EXPECT_TRUE(perp(s, s.set_of({1}), a, s.set_of({0, 2})));
  // an edge from b into C \ A lowers d(b/C) below d(b/A)
  const auto t = make_structure(kGraph, 4, {{3, 1}});
  EXPECT_FALSE(perp(t, t.set_of({3}), t.set_of({0}), t.set_of({0, 1})));
  EXPECT_THROW(perp(t, t.set_of({3}), t.set_of({1}), t.set_of({0})), ContractError);
}

TEST(Axioms, HoldOnSmallGraphsAndFailOnRawDelta) {
  const auto s = make_structure(kGraph, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  VerificationReport good("axioms", 0);
  axiom_suite(s, good, "c5");
  EXPECT_FALSE(good.has_fail());
  EXPECT_EQ(good.count(Status::Pass), 5u);

  VerificationReport empty("axioms", 0);
  axiom_suite(StructureBuilder(kGraph).build(), empty, "empty");
  EXPECT_FALSE(empty.has_fail());

  // (1,1,3): a ternary relation makes delta drop below d
  const auto t = make_structure(Signature::uniform(1, 1, 3), 5, {{0, 1, 2}, {2, 3, 4}});
  VerificationReport raw("axioms", 0);
  AxiomOptions o;
  o.raw_delta = true;
  axiom_suite(t, raw, "raw", o);
  VerificationReport ok("axioms", 0);
  axiom_suite(t, ok, "d");
  EXPECT_FALSE(ok.has_fail());
  for (const auto& c : raw.cases())
    if (c.status == Status::Fail) EXPECT_EQ(c.witness->params.at("dimension"), "delta");
}
