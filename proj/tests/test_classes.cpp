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

#include <random>

#include "oracles.hpp"
#include "predimlab/classes.hpp"

using namespace predimlab;

namespace {

const Signature kGraph = Signature::uniform(2, 1, 2);

FiniteStructure cycle(const Signature& sig, std::size_t k) {
  StructureBuilder b(sig);
  const bool bip = sig.mode() == Mode::Bipartite;
  for (std::size_t i = 0; i < k; ++i)
    b.add_vertex(static_cast<VertexId>(i), bip ? std::optional<Part>(i % 2 ? Part::Line : Part::Point) : std::nullopt);
  for (std::size_t i = 0; i < k; ++i) b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % k));
  return b.build();
}

}  // namespace

TEST(ControlFunctionTest, Values) {
  auto f = ControlFunction::harmonic(2);
  EXPECT_EQ(eval_f(f, 0), 0);
  EXPECT_EQ(eval_f(f, 1), 2);
  EXPECT_EQ(eval_f(f, 2), 3);
  EXPECT_EQ(eval_f(f, 3), Rational(7, 2));
  EXPECT_EQ(eval_f(f, 4), Rational(23, 6));
  EXPECT_EQ(to_string(eval_f(f, 4)), "23/6");
  EXPECT_EQ(f.thresholds(4), (std::vector<std::int64_t>{0, 2, 3, 4, 4}));
  EXPECT_EQ(f.goodness_violation(60), "");
  EXPECT_EQ(ControlFunction::harmonic(1, Rational(2, 3)).goodness_violation(40), "");
  EXPECT_THROW(ControlFunction::harmonic(1, 2), InputError);
}

TEST(CeilInt, Signs) {
  EXPECT_EQ(ceil_int(Rational(7, 2)), 4);
  EXPECT_EQ(ceil_int(Rational(-7, 2)), -3);
  EXPECT_EQ(ceil_int(Rational(4)), 4);
}

TEST(InC0, SmallCases) {
  EXPECT_TRUE(in_C0(make_structure(kGraph, 3, {{0, 1}, {1, 2}, {0, 2}})).member);
  EXPECT_TRUE(in_C0(make_structure(kGraph, 0, {})).member);
  EXPECT_TRUE(in_C0(make_structure(Signature::uniform(1, 2, 2), 2, {{0, 1}})).member);
  auto bad = make_structure(Signature::uniform(1, 3, 2), 2, {{0, 1}});
  auto r = in_C0(bad);
  EXPECT_FALSE(r.member);
  EXPECT_EQ(*r.witness, bad.all());
  EXPECT_EQ(r.margin, -1);
}

TEST(InC0, MatchesOracle) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    auto s = oracle::random_structure(i % 2 ? Signature::uniform(1, 1, 2) : Signature::uniform(1, 1, 3), 3 + i % 7, 0.3, rng);
    EXPECT_EQ(in_C0(s).member, oracle::in_c0(s));
  }
}

TEST(InCf, SmallCases) {
  auto f = ControlFunction::harmonic(2);
  auto c6 = in_Cf(cycle(kGraph, 6), f);
  EXPECT_TRUE(c6.member);
  EXPECT_FALSE(c6.partial);
  auto tri = in_Cf(cycle(kGraph, 3), f);
  EXPECT_FALSE(tri.member);
  EXPECT_EQ(tri.witness->size(), 3u);
  EXPECT_EQ(tri.margin, Rational(-1, 2));
  EXPECT_TRUE(in_Cf(make_structure(kGraph, 1, {}), f).member);
  EXPECT_EQ(in_Cf(make_structure(kGraph, 1, {}), f).margin, 0);
}

TEST(InCf, MatchesOracleWhenExhaustive) {
  auto f = ControlFunction::harmonic(2);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto s = oracle::random_structure(kGraph, 3 + i % 6, 0.3, rng);
    auto th = f.thresholds(s.order());
    bool ok = true;
    oracle::for_supersets(0, oracle::full(s), [&](oracle::Mask x) {
      ok = ok && oracle::delta(s, x) >= th[static_cast<std::size_t>(__builtin_popcountll(x))];
    });
    EXPECT_EQ(in_Cf(s, f).member, ok);
  }
}

TEST(InCf, PartialAboveCap) {
  auto f = ControlFunction::harmonic(2);
  MembershipOptions opt;
  opt.exhaustive_cap = 10;
  opt.connected_k = 8;
  opt.samples = 50;
  auto big = in_Cf(cycle(kGraph, 30), f, opt);
  EXPECT_TRUE(big.member);
  EXPECT_TRUE(big.partial);
  // A triangle hanging off a long path is found by the connected pass.
  StructureBuilder b(kGraph);
  for (VertexId v = 0; v < 25; ++v) b.add_vertex(v);
  for (VertexId v = 0; v + 1 < 25; ++v) b.add_edge(v, v + 1);
  b.add_edge(10, 12);
  auto bad = in_Cf(b.build(), f, opt);
  EXPECT_FALSE(bad.member);
  EXPECT_EQ(*bad.witness, b.build().set_of({10, 11, 12}));
}

TEST(Girth, Basics) {
  EXPECT_EQ(*girth(cycle(kGraph, 6)).length, 6u);
  EXPECT_EQ(girth(cycle(kGraph, 6)).cycle.size(), 6u);
  auto p = make_structure(kGraph, 4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_FALSE(girth(p).length.has_value());
  // Petersen graph has girth 5.
  StructureBuilder b(kGraph);
  for (VertexId v = 0; v < 10; ++v) b.add_vertex(v);
  for (VertexId i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  auto g = girth(b.build());
  EXPECT_EQ(*g.length, 5u);
  EXPECT_THROW(girth(make_structure(Signature::uniform(1, 1, 3), 3, {{0, 1, 2}})), InputError);
}

TEST(SimpleCycles, CountsK4) {
  auto k4 = make_structure(kGraph, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  std::size_t n = 0;
  EXPECT_TRUE(for_each_simple_cycle(k4, 100, [&](const std::vector<std::size_t>&) { ++n; }));
  EXPECT_EQ(n, 7u);  // four triangles, three 4-cycles
  n = 0;
  EXPECT_FALSE(for_each_simple_cycle(k4, 3, [&](const std::vector<std::size_t>&) { ++n; }));
}

TEST(InKn, Examples) {
  for (int n = 3; n <= 5; ++n) {
    const auto sig = Signature::polygon(n);
    EXPECT_TRUE(in_Kn(cycle(sig, 2 * static_cast<std::size_t>(n)), n).member) << n;
    for (int m = 2; m < n; ++m) {
      auto r = in_Kn(cycle(sig, 2 * static_cast<std::size_t>(m)), n);
      EXPECT_FALSE(r.member);
      EXPECT_EQ(r.witness->size(), 2u * static_cast<std::size_t>(m));
    }
    StructureBuilder e(sig);
    e.add_vertex(0, Part::Point);
    e.add_vertex(1, Part::Line);
    e.add_edge(0, 1);
    EXPECT_TRUE(in_Kn(e.build(), n).member);
  }
  EXPECT_TRUE(in_Kn(cycle(Signature::polygon(3), 8), 3).member);
  EXPECT_THROW(in_Kn(cycle(kGraph, 6), 3), InputError);
  EXPECT_THROW(in_Kn(cycle(Signature::polygon(4), 8), 3), InputError);
}

TEST(InKn, LongCycleCondition) {
  // An 8-cycle plus a 5-edge path from 0 to 5: cycles of length 8, 8 and 10,
  // whole structure delta = 2*12 - 13 = 11 >= 8.
  const auto sig = Signature::polygon(3);
  StructureBuilder b(sig);
  for (VertexId v = 0; v < 12; ++v) b.add_vertex(v, v % 2 ? Part::Line : Part::Point);
  for (VertexId v = 0; v < 8; ++v) b.add_edge(v, (v + 1) % 8);
  b.add_edge(0, 9);
  b.add_edge(9, 8);
  b.add_edge(8, 11);
  b.add_edge(11, 10);
  b.add_edge(10, 5);
  auto r = in_Kn(b.build(), 3);
  EXPECT_TRUE(r.member) << r.condition;
  EXPECT_FALSE(r.partial);
}
