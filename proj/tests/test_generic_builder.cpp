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

#include "predimlab/generic_builder.hpp"

using namespace predimlab;

namespace {
const Signature kGraph = Signature::uniform(2, 1, 2);

ClassSpec c0() { return ClassSpec{kGraph, ClassTag::C0, std::nullopt, std::nullopt}; }
}  // namespace

TEST(EnumerateClass, Counts) {
  EXPECT_EQ(enumerate_class(c0(), 0).size(), 1u);
  EXPECT_EQ(enumerate_class(c0(), 2).size(), 4u);
  EXPECT_EQ(enumerate_class(c0(), 3).size(), 8u);
  ClassSpec cf{kGraph, ClassTag::CF, ControlFunction::harmonic(2), std::nullopt};
  const auto with_f = enumerate_class(cf, 3);
  EXPECT_EQ(with_f.size(), 7u);
  for (const auto& s : with_f) EXPECT_FALSE(s.order() == 3 && s.instances().size() == 3) << "triangle kept";
}

TEST(Embeddings, SingleVertexAndEdges) {
  const auto path = make_structure(kGraph, 4, {{0, 1}, {1, 2}, {2, 3}});
  const auto point = make_structure(kGraph, 1, {});
  EXPECT_EQ(find_sese_embeddings(path, point, EmbedMode::LE_D).size(), 4u);
  const auto edge = make_structure(kGraph, 2, {{0, 1}});
  // ordered embeddings: each edge both ways
  EXPECT_EQ(find_sese_embeddings(path, edge, EmbedMode::LE).size(), 6u);
  const auto big = make_structure(kGraph, 5, {});
  EXPECT_TRUE(find_sese_embeddings(path, big, EmbedMode::LE).empty());
}

TEST(Tasks, OrderedAndKeyed) {
  const auto tasks = enumerate_tasks(c0(), 3);
  ASSERT_FALSE(tasks.empty());
  for (std::size_t i = 1; i < tasks.size(); ++i) {
    EXPECT_LE(tasks[i - 1].base_size, tasks[i].base_size);
    EXPECT_NE(tasks[i - 1].key, tasks[i].key);
  }
  EXPECT_EQ(tasks.front().base_size, 0u);
  EXPECT_EQ(tasks.front().ext.order(), 1u);
}

TEST(Build, BudgetOneGivesAPoint) {
  BuildConfig cfg;
  cfg.budget = 1;
  const auto r = build_generic(cfg);
  EXPECT_EQ(r.structure.order(), 1u);
  EXPECT_EQ(r.log.entries.size(), 1u);
}

TEST(Build, DeterministicAndReplayable) {
  BuildConfig cfg;
  cfg.budget = 50;
  const auto a = build_generic(cfg);
  const auto b = build_generic(cfg);
  EXPECT_EQ(a.log.text(), b.log.text());
  EXPECT_TRUE(in_C0(a.structure).member);
  const auto parsed = BuildLog::parse(a.log.text());
  EXPECT_EQ(parsed.text(), a.log.text());
  EXPECT_EQ(to_text(replay_build(cfg, parsed)), to_text(a.structure));

  auto tampered = parsed;
  tampered.digest = std::string(64, '0');
  EXPECT_THROW(replay_build(cfg, tampered), InputError);
  BuildConfig other = cfg;
  other.budget = 51;
  EXPECT_THROW(replay_build(other, parsed), InputError);
}

TEST(Build, ChainIsStrong) {
  BuildConfig cfg;
  cfg.budget = 30;
  std::optional<FiniteStructure> prev;
  build_generic(cfg, [&](const FiniteStructure& s) {
    if (prev) {
      EXPECT_TRUE(is_self_sufficient(s, s.set_of(prev->ids_of(prev->all())), s.all(), SearchMethod::Flow).holds);
      EXPECT_EQ(to_text(s.induced(s.set_of(prev->ids_of(prev->all())))), to_text(*prev));
    }
    prev = s;
  });
  EXPECT_TRUE(prev.has_value());
}

TEST(Audit, SmallBudgetRealisesSmallBases) {
  BuildConfig cfg;
  cfg.budget = 50;
  const auto r = build_generic(cfg);
  const auto a = audit_extension_property(r.structure, r.tasks, 10, EmbedMode::LE, 1);
  EXPECT_FALSE(a.has_fail());
}

TEST(Audit, EmptyStructure) {
  const auto tasks = enumerate_tasks(c0(), 2);
  const auto empty = StructureBuilder(kGraph).build();
  // non-empty bases: nothing to check
  std::vector<ExtensionTask> based;
  for (const auto& t : tasks)
    if (t.base_size > 0) based.push_back(t);
  EXPECT_FALSE(audit_extension_property(empty, based, 10, EmbedMode::LE).has_fail());
  // (empty, point) over the empty structure is unrealised
  const auto r = audit_extension_property(empty, {tasks.front()}, 10, EmbedMode::LE);
  EXPECT_TRUE(r.has_fail());
}

TEST(Build, CfAndKn) {
  BuildConfig cf;
  cf.cls = ClassSpec{kGraph, ClassTag::CF, ControlFunction::harmonic(2), std::nullopt};
  cf.budget = 25;
  const auto r = build_generic(cf);
  EXPECT_TRUE(in_Cf(r.structure, *cf.cls.f).member);

  BuildConfig kn;
  kn.cls = ClassSpec{Signature::polygon(3), ClassTag::KN, std::nullopt, 3};
  kn.budget = 25;
  const auto k = build_generic(kn);
  EXPECT_TRUE(in_Kn(k.structure, 3).member);
}

TEST(ClassSpecTest, Validation) {
  ClassSpec bad{kGraph, ClassTag::CF, std::nullopt, std::nullopt};
  EXPECT_THROW(bad.validate(), InputError);
  EXPECT_THROW(parse_class_tag("c1"), InputError);
}
