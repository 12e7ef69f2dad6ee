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

#include "predimlab/sa_extensions.hpp"
#include "predimlab/suites.hpp"

using namespace predimlab;

namespace {

const Signature kGraph = Signature::uniform(2, 1, 2);

// z1 = 0, z2 = 1, y = 2, optional y' = 3 and isolated z3 = 4.
FiniteStructure two_edges(bool second_y, bool extra_z) {
  StructureBuilder b(kGraph);
  for (VertexId v : {0, 1, 2}) b.add_vertex(v);
  b.add_edge(0, 2);
  b.add_edge(1, 2);
  if (second_y) {
    b.add_vertex(3);
    b.add_edge(0, 3);
    b.add_edge(1, 3);
  }
  if (extra_z) b.add_vertex(4);
  return b.build();
}

}  // namespace

TEST(SimplyAlgebraic, Examples) {
  const auto s = two_edges(false, false);
  EXPECT_TRUE(is_simply_algebraic(s, s.set_of({0, 1}), s.all()));
  const auto edge = make_structure(kGraph, 2, {{0, 1}});
  EXPECT_FALSE(is_simply_algebraic(edge, edge.set_of({0}), edge.all()));
  const auto iso = make_structure(kGraph, 2, {});
  EXPECT_FALSE(is_simply_algebraic(iso, iso.set_of({0}), iso.all()));
  EXPECT_THROW(is_simply_algebraic(s, s.all(), s.all()), InputError);
}

TEST(Msa, BaseStripsIdleBasePoints) {
  const auto s = two_edges(false, false);
  EXPECT_TRUE(is_msa(s, s.set_of({0, 1}), s.all()));
  const auto b = msa_base(s, s.set_of({0, 1}), s.all());
  EXPECT_EQ(b.z1, s.set_of({0, 1}));
  EXPECT_EQ(b.y1, s.all());

  const auto t = two_edges(false, true);
  const auto z = t.set_of({0, 1, 4});
  EXPECT_TRUE(is_simply_algebraic(t, z, t.all()));
  EXPECT_FALSE(is_msa(t, z, t.all()));
  const auto b2 = msa_base(t, z, t.all());
  EXPECT_EQ(b2.z1, t.set_of({0, 1}));
  EXPECT_TRUE(is_msa(t, b2.z1, b2.y1));

  const auto edge = make_structure(kGraph, 2, {{0, 1}});
  EXPECT_THROW(msa_base(edge, edge.set_of({0}), edge.all()), ContractError);
}

TEST(Msa, BaseIsAlwaysMsaOnSmallAmbients) {
  std::mt19937_64 rng(7);
  std::size_t checked = 0;
  for (int t = 0; t < 400; ++t) {
    const auto am = random_free_amalgam(t % 2 ? Signature::uniform(1, 1, 3) : kGraph, static_cast<std::uint64_t>(t));
    const auto& s = am.s;
    if (s.order() > 8) continue;
    const auto all = s.all().positions();
    for (std::uint64_t zm = 1; zm + 1 < (std::uint64_t{1} << s.order()); zm += 3) {
      const auto z = VertexSet::from_mask(s.order(), all, zm);
      if (!is_simply_algebraic(s, z, s.all())) continue;
      const auto b = msa_base(s, z, s.all());
      EXPECT_TRUE(is_msa(s, b.z1, b.y1));
      EXPECT_TRUE(b.z1.is_subset_of(z));
      ++checked;
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(MsaCopiesTest, CountsTwoCopies) {
  const auto s = two_edges(true, false);
  const auto z = s.set_of({0, 1});
  const auto t = make_msa_type(s, z.positions(), s.set_of({0, 1, 2}));
  const auto c = count_msa_copies(s, z, t);
  EXPECT_EQ(c.count(), 2u);
  EXPECT_TRUE(c.pairwise_disjoint);

  const auto lone = make_structure(kGraph, 2, {});
  EXPECT_EQ(count_msa_copies(lone, lone.all(), t).count(), 0u);
}

TEST(MsaCopiesTest, TypeOfValidates) {
  const auto y = two_edges(false, false);
  const auto t = msa_type_of(y, {0, 1});
  EXPECT_EQ(t.base_size, 2u);
  EXPECT_THROW(msa_type_of(two_edges(false, true), {0, 1, 4}), InputError);
}

TEST(Duplication, KeepsMsa) {
  const auto s = two_edges(true, false);
  const auto d = duplicate_base(s, s.set_of({0, 1}), s.all());
  // each of the four edges gets its own base point
  EXPECT_EQ(d.z.size(), 4u);
  // base points are no longer shared, so the two new vertices fall apart
  EXPECT_FALSE(is_simply_algebraic(d.y, d.z, d.y.all()));
  for (auto p : d.z.positions()) {
    std::size_t deg = 0;
    for (const auto& inst : d.y.instances())
      for (auto q : inst.members) deg += q == p;
    EXPECT_EQ(deg, 1u);
  }
  const auto one = two_edges(false, false);
  const auto d1 = duplicate_base(one, one.set_of({0, 1}), one.all());
  EXPECT_TRUE(is_msa(d1.y, d1.z, d1.y.all()));
}

TEST(MsaBound, ControlFailsAndRandomPasses) {
  VerificationReport bad("m", 0);
  const auto c = msa_bound_control();
  check_msa_bound(c.s, c.only_p, c.only_q, bad, "c", {});
  EXPECT_TRUE(bad.has_fail());

  VerificationReport good("m", 0);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto am = random_free_amalgam(kGraph, i);
    check_msa_bound(am.s, am.only_p, am.only_q, good, std::to_string(i), {});
  }
  EXPECT_FALSE(good.has_fail());
}

TEST(Extendability, IdentitySwapAndMismatch) {
  const auto s = two_edges(true, false);
  PartialMap id;
  id.pairs = {{0, 0}, {1, 1}};
  EXPECT_FALSE(check_potential_extendability(s, id).has_fail());
  PartialMap swap;
  swap.pairs = {{0, 1}, {1, 0}};
  EXPECT_FALSE(check_potential_extendability(s, swap).has_fail());

  // {0, 1} has two common neighbours, {3, 4} only one
  const auto t = make_structure(kGraph, 7, {{0, 2}, {1, 2}, {0, 5}, {1, 5}, {3, 6}, {4, 6}});
  PartialMap m;
  m.pairs = {{0, 3}, {1, 4}};
  const auto r = check_potential_extendability(t, m);
  ASSERT_TRUE(r.has_fail());
  for (const auto& c : r.cases())
    if (c.status == Status::Fail) EXPECT_EQ(c.witness->claim, "mult-equal");

  PartialMap broken;
  broken.pairs = {{0, 2}, {2, 3}};  // an edge onto a non-edge
  EXPECT_THROW(check_potential_extendability(t, broken), InputError);
}
