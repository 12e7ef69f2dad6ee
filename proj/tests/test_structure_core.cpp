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
#include "predimlab/amalgam.hpp"
#include "predimlab/canonical.hpp"
#include "predimlab/io.hpp"
#include "predimlab/predimension.hpp"

using namespace predimlab;

namespace {

const Signature kGraph = Signature::uniform(2, 1, 2);

FiniteStructure path(std::size_t k) {
  StructureBuilder b(kGraph);
  for (std::size_t i = 0; i < k; ++i) b.add_vertex(static_cast<VertexId>(i));
  for (std::size_t i = 0; i + 1 < k; ++i) b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  return b.build();
}

FiniteStructure cycle(std::size_t k) {
  StructureBuilder b(kGraph);
  for (std::size_t i = 0; i < k; ++i) b.add_vertex(static_cast<VertexId>(i));
  for (std::size_t i = 0; i < k; ++i) b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % k));
  return b.build();
}

}  // namespace

TEST(Delta, SingleVertexAndEmpty) {
  auto s = make_structure(kGraph, 1, {});
  EXPECT_EQ(delta(s, s.all()), 2);
  EXPECT_EQ(delta(s, s.none()), 0);
}

TEST(Delta, PathOnFourVertices) {
  auto p = path(4);
  EXPECT_EQ(delta(p), 5);
}

TEST(Delta, MultiRelationWeights) {
  Signature sig(3, {{"E", 2, 1}, {"T", 3, 2}});
  StructureBuilder b(sig);
  for (VertexId v : {10, 20, 30}) b.add_vertex(v);
  b.add_instance("E", {10, 20});
  b.add_instance("E", {20, 30});
  b.add_instance("T", {30, 10, 20});
  auto s = b.build();
  EXPECT_EQ(delta(s), 9 - 2 - 2);
  EXPECT_EQ(delta(s, s.set_of({10, 20})), 6 - 1);
}

TEST(Delta, Relative) {
  auto two = make_structure(kGraph, 3, {{0, 1}, {0, 2}});
  EXPECT_EQ(delta_rel(two, two.set_of({0}), two.set_of({1, 2})), 0);
  auto one = make_structure(kGraph, 2, {{0, 1}});
  EXPECT_EQ(delta_rel(one, one.set_of({0}), one.set_of({1})), 1);
  EXPECT_EQ(delta_rel(one, one.set_of({1}), one.set_of({1})), 0);
}

TEST(Delta, ForeignSetIsInputError) {
  auto p = path(3);
  EXPECT_THROW(delta(p, VertexSet(5)), InputError);
  EXPECT_THROW(p.set_of({7}), InputError);
}

TEST(SelfSufficiency, PathEndpoints) {
  auto p3 = path(4);  // u-w1-w2-v
  EXPECT_TRUE(is_self_sufficient(p3, p3.set_of({0, 3}), p3.all()).holds);
  auto p2 = path(3);  // u-w-v
  auto r = is_self_sufficient(p2, p2.set_of({0, 2}), p2.all());
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(delta(p2), 4);
  EXPECT_EQ(delta(p2, p2.set_of({0, 2})), 4);
  EXPECT_TRUE(is_self_sufficient(p2, p2.all(), p2.all()).holds);
}

TEST(SelfSufficiency, WitnessIsMinimal) {
  // Weights (1,1,2): the triangle {0,1,2} and the whole structure both have
  // delta 0 < delta({0}) = 1; the smaller one is reported.
  auto s = make_structure(Signature::uniform(1, 1, 2), 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  auto r = is_self_sufficient(s, s.set_of({0}), s.all());
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness_delta, 0);
  EXPECT_EQ(*r.witness, s.set_of({0, 1, 2}));
  auto f = is_self_sufficient(s, s.set_of({0}), s.all(), SearchMethod::Flow);
  EXPECT_EQ(*f.witness, *r.witness);
}

TEST(SelfSufficiency, CapacityErrorNamesCap) {
  auto p = path(30);
  try {
    is_self_sufficient(p, p.none(), p.all());
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.cap(), 24u);
    EXPECT_EQ(e.requested(), 30u);
  }
  EXPECT_TRUE(is_self_sufficient(p, p.none(), p.all(), SearchMethod::Flow).holds);
}

TEST(SelfSufficiency, AgreesWithOracleAndFlow) {
  std::mt19937_64 rng(7);
  const std::vector<Signature> sigs = {kGraph, Signature::uniform(1, 1, 2), Signature::uniform(3, 2, 2),
                                       Signature::uniform(1, 1, 3), Signature(2, {{"E", 2, 1}, {"T", 3, 1}})};
  for (int round = 0; round < 400; ++round) {
    const auto& sig = sigs[round % sigs.size()];
    auto s = oracle::random_structure(sig, 3 + round % 6, 0.4, rng);
    const oracle::Mask all = oracle::full(s);
    const oracle::Mask b = rng() & all, a = b & rng();
    auto A = VertexSet::from_mask(s.order(), s.all().positions(), a);
    auto B = VertexSet::from_mask(s.order(), s.all().positions(), b);
    auto ex = is_self_sufficient(s, A, B);
    auto fl = is_self_sufficient(s, A, B, SearchMethod::Flow);
    EXPECT_EQ(ex.holds, oracle::self_sufficient(s, a, b));
    EXPECT_EQ(fl.holds, ex.holds);
    if (!ex.holds) {
      auto w = oracle::ss_witness(s, a, b);
      EXPECT_EQ(*ex.witness, VertexSet::from_mask(s.order(), s.all().positions(), *w));
      EXPECT_EQ(*fl.witness, *ex.witness);
    }
  }
}

TEST(SubsetEngine, GrayWalkMatchesDirect) {
  std::mt19937_64 rng(3);
  auto s = oracle::random_structure(Signature(3, {{"E", 2, 1}, {"T", 3, 2}}), 9, 0.3, rng);
  SubsetEngine eng(s, s.set_of({0, 1}), s.all() - s.set_of({0, 1}), 24);
  std::size_t seen = 0;
  eng.for_each([&](std::uint64_t mask, std::int64_t d) {
    EXPECT_EQ(d, eng.delta(mask));
    EXPECT_EQ(d, delta(s, eng.to_set(mask)));
    ++seen;
    return true;
  });
  EXPECT_EQ(seen, std::size_t{1} << 7);
}

TEST(Submodularity, SubmodularityAndRestriction) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    auto s = oracle::random_structure(round % 2 ? kGraph : Signature::uniform(1, 1, 3), 6, 0.35, rng);
    const auto all = oracle::full(s);
    for (oracle::Mask a = 0; a <= all; ++a)
      for (oracle::Mask b = 0; b <= all; b += 3) {
        EXPECT_LE(oracle::delta(s, a | b), oracle::delta(s, a) + oracle::delta(s, b) - oracle::delta(s, a & b));
      }
  }
}

TEST(Submodularity, RelabellingInvariance) {
  std::mt19937_64 rng(5);
  auto s = oracle::random_structure(kGraph, 7, 0.4, rng);
  StructureBuilder b(kGraph);
  for (VertexId v = 0; v < 7; ++v) b.add_vertex(100 - 3 * v);
  for (const auto& inst : s.instances()) b.add_edge(100 - 3 * s.id(inst.members[0]), 100 - 3 * s.id(inst.members[1]));
  auto t = b.build();
  for (oracle::Mask m = 0; m < 128; ++m) {
    std::vector<VertexId> ids, mapped;
    for (VertexId v = 0; v < 7; ++v)
      if ((m >> v) & 1U) {
        ids.push_back(v);
        mapped.push_back(100 - 3 * v);
      }
    EXPECT_EQ(delta(s, s.set_of(ids)), delta(t, t.set_of(mapped)));
  }
}

TEST(Canonical, TriangleRelabellings) {
  auto t1 = make_structure(kGraph, 3, {{0, 1}, {1, 2}, {0, 2}});
  StructureBuilder b(kGraph);
  for (VertexId v : {5, 9, 40}) b.add_vertex(v);
  b.add_edge(40, 5);
  b.add_edge(9, 5);
  b.add_edge(40, 9);
  EXPECT_EQ(canonical_form(t1), canonical_form(b.build()));
  EXPECT_NE(canonical_form(t1), canonical_form(path(3)));
  EXPECT_NE(canonical_form(cycle(4)), canonical_form(path(4)));
}

TEST(Canonical, AgreesWithBruteIsomorphismOnSmallGraphs) {
  // All graphs on 5 labelled vertices: classes must number 34.
  std::set<std::vector<std::int64_t>> codes;
  for (oracle::Mask e = 0; e < (1U << 10); ++e) codes.insert(canonical_form(oracle::graph_from_mask(kGraph, 5, e)).code);
  EXPECT_EQ(codes.size(), 34u);
}

TEST(Canonical, CapacityAndRefinement) {
  // 9 isolated vertices form one cell of size 9: 9! orders exceed the cap.
  auto iso = make_structure(kGraph, 9, {});
  EXPECT_THROW(canonical_form(iso), CapacityError);
  // A long path refines into cells of size <= 2.
  EXPECT_NO_THROW(canonical_form(path(20)));
}

TEST(Canonical, ColoursDistinguish) {
  auto p = path(3);
  std::vector<int> end_coloured{1, 0, 0}, other_end{0, 0, 1}, mid{0, 1, 0};
  EXPECT_EQ(canonical_form(p, end_coloured), canonical_form(p, other_end));
  EXPECT_NE(canonical_form(p, end_coloured), canonical_form(p, mid));
}

TEST(Builder, RejectsBadInstances) {
  StructureBuilder b(kGraph);
  b.add_vertex(1);
  b.add_vertex(2);
  EXPECT_THROW(b.add_instance(0, {1, 1}), InputError);
  EXPECT_THROW(b.add_instance(0, {1, 3}), InputError);
  EXPECT_THROW(b.add_instance(0, {1}), InputError);
  EXPECT_TRUE(b.add_edge(2, 1));
  EXPECT_FALSE(b.add_edge(1, 2));
  StructureBuilder bp(Signature::polygon(3));
  bp.add_vertex(1, Part::Point);
  bp.add_vertex(2, Part::Point);
  EXPECT_THROW(bp.add_edge(1, 2), InputError);
  EXPECT_THROW(bp.add_vertex(3), InputError);
}

TEST(SignatureTest, Invariants) {
  EXPECT_THROW(Signature(0, {{"R", 2, 1}}), InputError);
  EXPECT_THROW(Signature(1, {}), InputError);
  EXPECT_THROW(Signature(1, {{"R", 1, 1}}), InputError);
  EXPECT_THROW(Signature(1, {{"R", 2, 1}, {"R", 3, 1}}), InputError);
  EXPECT_THROW(Signature(1, {{"R", 3, 1}}, Mode::Bipartite), InputError);
  EXPECT_TRUE(Signature::uniform(3, 2, 2).coprime());
  EXPECT_FALSE(Signature::uniform(4, 2, 2).coprime());
  EXPECT_EQ(Signature::polygon(4).vertex_weight(), 3);
  EXPECT_EQ(Signature::polygon(4).relations()[0].weight, 2);
}

TEST(Io, RoundTrip) {
  StructureBuilder b(Signature::polygon(3));
  b.add_vertex(1, Part::Point);
  b.add_vertex(2, Part::Line);
  b.add_vertex(3, Part::Point);
  b.add_edge(1, 2);
  b.add_edge(3, 2);
  auto s = b.build();
  auto text = to_text(s, {{"X", {1, 3}}});
  auto back = parse_structure(text);
  EXPECT_EQ(back.structure, s);
  EXPECT_EQ(back.sets.at("X"), (std::vector<VertexId>{1, 3}));
  EXPECT_EQ(to_text(back.structure, back.sets), text);
}

TEST(Io, LoaderRejections) {
  const std::string head = "predimlab/1\nvertex-weight 2\nmode hypergraph\nrelation R 2 1\nvertices 0 1 2\n";
  EXPECT_NO_THROW(parse_structure(head + "instance R 1 0\nend\n"));
  EXPECT_THROW(parse_structure(head + "instance R 0 1\ninstance R 1 0\nend\n"), InputError);
  EXPECT_THROW(parse_structure(head + "instance R 1 1\nend\n"), InputError);
  EXPECT_THROW(parse_structure(head + "instance R 0 9\nend\n"), InputError);
  EXPECT_THROW(parse_structure(head + "instance Q 0 1\nend\n"), InputError);
  EXPECT_THROW(parse_structure("predimlab/0\n"), InputError);
  EXPECT_THROW(parse_structure(""), InputError);
  EXPECT_THROW(parse_structure("predimlab/1\nvertex-weight 2\nmode bipartite\nrelation R 2 1\npoints 0 1\ninstance R 0 1\n"),
               InputError);
}

TEST(Amalgam, FreeAmalgamOverSharedVertex) {
  auto b = make_structure(kGraph, 2, {{0, 1}});
  auto a = free_amalgam(b, b, {{0, 0}});
  EXPECT_EQ(a.structure.order(), 3u);
  EXPECT_EQ(a.structure.instances().size(), 2u);
  EXPECT_EQ(a.right_map.at(1), 2);
  auto tri = make_structure(kGraph, 3, {{0, 1}});
  EXPECT_THROW(free_amalgam(tri, b, {{0, 0}, {1, 2}}), InputError);
  EXPECT_TRUE(freely_amalgamated(a.structure, a.structure.set_of({0, 1}), a.structure.set_of({0, 2})));
}
