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
#include "predimlab/closure.hpp"

using namespace predimlab;

namespace {

const Signature kGraph = Signature::uniform(2, 1, 2);

FiniteStructure path(std::size_t k) {
  StructureBuilder b(kGraph);
  for (std::size_t i = 0; i < k; ++i) b.add_vertex(static_cast<VertexId>(i));
  for (std::size_t i = 0; i + 1 < k; ++i) b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  return b.build();
}

VertexSet from_mask(const FiniteStructure& s, oracle::Mask m) {
  return VertexSet::from_mask(s.order(), s.all().positions(), m);
}

}  // namespace

TEST(Cl0, Examples) {
  auto p2 = path(3);
  auto r = cl0(p2, p2.set_of({0, 2}));
  EXPECT_EQ(r.closure, p2.set_of({0, 2}));
  EXPECT_EQ(r.dimension, 4);
  EXPECT_TRUE(r.trace.empty());

  auto tri = make_structure(kGraph, 3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(cl0(tri, tri.set_of({0})).closure, tri.set_of({0}));
}

TEST(Cl0, AbsorbsAndTraces) {
  // Weights (1,1,2): a triangle has delta 0 while each pair has delta 1.
  auto s = make_structure(Signature::uniform(1, 1, 2), 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  auto r = cl0(s, s.set_of({0, 1}));
  EXPECT_EQ(r.closure, s.set_of({0, 1, 2}));
  EXPECT_EQ(r.dimension, 0);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0], s.set_of({2}));
}

TEST(Dim, Examples) {
  auto p3 = path(4);
  EXPECT_EQ(dim(p3, p3.set_of({0, 3})), 4);
  EXPECT_EQ(dim(p3, p3.none()), 0);
  auto tri = make_structure(kGraph, 3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(dim(tri, tri.all()), 3);
}

TEST(Cld, PathFacts) {
  auto p2 = path(3);
  EXPECT_EQ(cld(p2, p2.set_of({0, 2})), p2.all());
  EXPECT_FALSE(is_d_closed(p2, p2.set_of({0, 2})));
  auto p3 = path(4);
  EXPECT_EQ(cld(p3, p3.set_of({0, 3})), p3.set_of({0, 3}));
  EXPECT_EQ(cld(p3, p3.all()), p3.all());
}

TEST(Cld, PointsAndEmptyInCf) {
  // A 6-cycle lies in C_f for n = 2; single vertices and the empty set are d-closed.
  StructureBuilder b(kGraph);
  for (VertexId v = 0; v < 6; ++v) b.add_vertex(v);
  for (VertexId v = 0; v < 6; ++v) b.add_edge(v, (v + 1) % 6);
  auto c6 = b.build();
  EXPECT_TRUE(is_d_closed(c6, c6.none()));
  for (VertexId v = 0; v < 6; ++v) EXPECT_TRUE(is_d_closed(c6, c6.set_of({v})));
}

TEST(ClosureOracles, RandomAmbients) {
  std::mt19937_64 rng(2024);
  const std::vector<Signature> sigs = {kGraph, Signature::uniform(1, 1, 2), Signature::uniform(3, 2, 2),
                                       Signature::uniform(1, 1, 3), Signature(3, {{"E", 2, 1}, {"T", 3, 2}})};
  for (int round = 0; round < 300; ++round) {
    const auto& sig = sigs[round % sigs.size()];
    auto s = oracle::random_structure(sig, 2 + round % 9, 0.35, rng);
    const oracle::Mask x = rng() & oracle::full(s);
    const auto X = from_mask(s, x);
    EXPECT_EQ(dim(s, X), oracle::dim(s, x));
    EXPECT_EQ(cld(s, X), from_mask(s, oracle::cld(s, x)));
    const auto c = cl0(s, X);
    EXPECT_EQ(c.closure, from_mask(s, oracle::cl0(s, x)));
    EXPECT_EQ(c.dimension, delta(s, c.closure));
    EXPECT_TRUE(c.closure.is_subset_of(cld(s, X)));
    EXPECT_EQ(delta(s, cld(s, X)), dim(s, X));
  }
}

TEST(ClosureLaws, ExtensiveMonotoneIdempotent) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 40; ++round) {
    auto s = oracle::random_structure(kGraph, 6, 0.4, rng);
    if (!oracle::in_c0(s)) continue;
    for (oracle::Mask x = 0; x < 64; ++x) {
      const auto X = from_mask(s, x);
      const auto c = cl0(s, X).closure;
      EXPECT_TRUE(X.is_subset_of(c));
      EXPECT_EQ(cl0(s, c).closure, c);
      EXPECT_EQ(cld(s, cld(s, X)), cld(s, X));
      const oracle::Mask y = x | (rng() & 63);
      const auto Y = from_mask(s, y);
      EXPECT_TRUE(c.is_subset_of(cl0(s, Y).closure));
      EXPECT_TRUE(cld(s, X).is_subset_of(cld(s, Y)));
      EXPECT_LE(dim(s, X), dim(s, Y));
      EXPECT_LE(dim(s, Y), dim(s, X) + 2 * static_cast<std::int64_t>((Y - X).size()));
    }
  }
}

TEST(DimTable, MatchesFlow) {
  std::mt19937_64 rng(1);
  auto s = oracle::random_structure(Signature(2, {{"E", 2, 1}, {"T", 3, 1}}), 9, 0.3, rng);
  auto t = dim_table(s);
  for (oracle::Mask m = 0; m < t.size(); ++m) EXPECT_EQ(t[m], oracle::dim(s, m));
}
