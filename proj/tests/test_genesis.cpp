// Copyright 2026 The Quadforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle/oracles.hpp"
#include "quadforge/canon.hpp"
#include "quadforge/genesis.hpp"

namespace qf = quadforge;

namespace {

const std::vector<qf::GenerationLevel>& levels_up_to_9() {
  static const auto levels = qf::generate_levels(9);
  return levels;
}

std::set<qf::CanonicalCode> keys(const qf::MapClasses& classes) {
  std::set<qf::CanonicalCode> out;
  for (const auto& [code, map] : classes) out.insert(code);
  return out;
}

TEST(Generation, SmallLevelSizes) {
  const auto& levels = levels_up_to_9();
  ASSERT_EQ(levels.size(), 7u);
  EXPECT_EQ(levels[0].size(), 1u);
  EXPECT_EQ(levels[1].size(), 3u);
  EXPECT_EQ(levels[2].size(), 7u);
  EXPECT_EQ(qf::generate_all(5).size(), 7u);
}

TEST(Generation, StoredMapsAreValidCanonicalForms) {
  for (const auto& level : levels_up_to_9()) {
    for (const auto& [code, map] : level.classes) {
      ASSERT_TRUE(qf::validate(map).ok());
      EXPECT_EQ(map.vertex_count(), level.n);
      EXPECT_EQ(qf::canonical_code(map), code);
      EXPECT_EQ(qf::canonical_form(map), map);
    }
  }
}

TEST(Generation, WitnessesReplay) {
  const auto& levels = levels_up_to_9();
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const auto& level = levels[i];
    ASSERT_EQ(level.parent_links.size(), level.classes.size());
    for (const auto& [code, witness] : level.parent_links) {
      const auto parent = levels[i - 1].classes.find(witness.parent);
      ASSERT_NE(parent, levels[i - 1].classes.end());
      EXPECT_EQ(qf::canonical_code(qf::split(parent->second, witness.walk)), code);
      EXPECT_LE(qf::degree_of_split(parent->second, witness.walk), 3);
    }
  }
}

TEST(Generation, WorkerCountDoesNotChangeLevels) {
  const auto single = qf::generate_levels(8, 1);
  for (int workers : {2, 3, 8}) {
    const auto multi = qf::generate_levels(8, workers);
    ASSERT_EQ(multi.size(), single.size());
    for (std::size_t i = 0; i < single.size(); ++i) {
      EXPECT_EQ(multi[i].classes, single[i].classes);
      EXPECT_EQ(multi[i].parent_links, single[i].parent_links);
    }
  }
}

TEST(Generation, OneAndTwoSplitsReachEverythingBelowEight) {
  const auto closure = qf::closure({qf::build_p2()}, 1, 2, 7);
  std::set<qf::CanonicalCode> all;
  for (const auto& level : levels_up_to_9()) {
    if (level.n <= 7) all.merge(keys(level.classes));
  }
  EXPECT_EQ(keys(closure), all);
}

TEST(Generation, OneAndTwoSplitsMissTheTetrahedronRadialAtEight) {
  const auto closure = qf::closure({qf::build_p2()}, 1, 2, 8);
  std::set<qf::CanonicalCode> missing = keys(levels_up_to_9()[5].classes);
  for (const auto& code : keys(closure)) missing.erase(code);
  ASSERT_EQ(missing.size(), 1u);
  EXPECT_EQ(*missing.begin(), qf::canonical_code(qf::radial(qf::tetrahedron_skeleton()).map));
}

TEST(Irreducibles, UpToNine) {
  const auto& levels = levels_up_to_9();
  const std::vector<std::size_t> expected = {1, 0, 0, 0, 0, 1, 0};
  for (std::size_t i = 0; i < levels.size(); ++i) {
    EXPECT_EQ(qf::irreducibles(levels[i]).size(), expected[i]) << "n=" << levels[i].n;
  }
  const auto eight = qf::irreducibles(levels[5]);
  ASSERT_EQ(eight.size(), 1u);
  EXPECT_TRUE(qf::oracle::isomorphic(eight.begin()->second,
                                     qf::radial(qf::tetrahedron_skeleton()).map));
}

TEST(Closure, ThreeSplitsOfWheelsAreTheSimpleThreeConnectedFamily) {
  const auto closure =
      qf::closure({qf::pseudo_double_wheel(3), qf::pseudo_double_wheel(4)}, 3, 3, 9);
  std::set<qf::CanonicalCode> filtered;
  for (const auto& level : levels_up_to_9()) {
    for (const auto& [code, map] : level.classes) {
      if (qf::is_simple(map) && qf::is_3_connected(map) && !qf::has_separating_4cycle(map)) {
        filtered.insert(code);
      }
    }
  }
  EXPECT_EQ(keys(closure), filtered);
}

TEST(Closure, ColouredChildrenKeepForcedColouring) {
  const auto seed = qf::radial(qf::tetrahedron_skeleton());
  for (const auto& [code, m] : qf::closure(std::vector<qf::ColouredMap>{seed}, 1, 3, 9)) {
    EXPECT_TRUE(m.colouring.is_proper_for(m.map));
    EXPECT_EQ(qf::canonical_code(m), code);
    const int total = m.colouring.stable_count() + m.colouring.unstable_count();
    EXPECT_EQ(total, m.map.vertex_count());
    EXPECT_GE(m.colouring.stable_count(), 4);
    EXPECT_GE(m.colouring.unstable_count(), 4);
  }
}

TEST(Ancestor, NamedCases) {
  const auto p2 = qf::canonical_code(qf::build_p2());
  const auto c4 = qf::ancestor(qf::build_c4());
  EXPECT_EQ(qf::canonical_code(c4.map), p2);
  EXPECT_EQ(c4.witness.size(), 1u);
  for (const auto& level : levels_up_to_9()) {
    if (level.n >= 8) break;
    for (const auto& [code, map] : level.classes) {
      EXPECT_EQ(qf::canonical_code(qf::ancestor(map).map), p2);
    }
  }
}

TEST(Ancestor, IrreducibleSeedsAreRecovered) {
  std::mt19937_64 rng(11);
  const auto wheel = qf::pseudo_double_wheel(3);
  const auto wheel_code = qf::canonical_code(wheel);
  for (int trial = 0; trial < 20; ++trial) {
    qf::EmbeddedMap current = wheel;
    for (int step = 0; step < 3; ++step) {
      const auto walks = qf::enumerate_splits(current, 1, 2);
      std::uniform_int_distribution<std::size_t> pick(0, walks.size() - 1);
      current = qf::split(current, walks[pick(rng)]);
    }
    const auto result = qf::ancestor(current, rng);
    EXPECT_EQ(qf::canonical_code(result.map), wheel_code);
    EXPECT_EQ(result.witness.size(), 3u);
  }
}

TEST(Ancestor, FibersPartitionLevelNine) {
  const auto& levels = levels_up_to_9();
  const auto& nine = levels.back();
  ASSERT_EQ(nine.n, 9);
  std::map<qf::CanonicalCode, std::set<qf::CanonicalCode>> fibers;
  for (const auto& [code, map] : nine.classes) {
    fibers[qf::canonical_code(qf::ancestor(map).map)].insert(code);
  }
  std::size_t total = 0;
  for (const auto& [root, members] : fibers) total += members.size();
  EXPECT_EQ(total, nine.size());
  // Each fiber is what the monotone splittings grow from its ancestor.
  for (const auto& [root, members] : fibers) {
    qf::EmbeddedMap root_map;
    for (const auto& level : levels) {
      if (auto it = level.classes.find(root); it != level.classes.end()) root_map = it->second;
    }
    ASSERT_GT(root_map.dart_count(), 0);
    std::set<qf::CanonicalCode> grown;
    for (const auto& [code, map] : qf::closure({root_map}, 1, 2, 9)) {
      if (map.vertex_count() == 9) grown.insert(code);
    }
    EXPECT_EQ(grown, members);
  }
  EXPECT_EQ(fibers.size(), 2u);
}

TEST(Ancestor, IndependentOfContractionOrder) {
  std::mt19937_64 rng(99);
  std::vector<const qf::EmbeddedMap*> pool;
  for (const auto& level : levels_up_to_9()) {
    for (const auto& [code, map] : level.classes) pool.push_back(&map);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const auto& map = *pool[pick(rng)];
    const auto expected = qf::canonical_code(qf::ancestor(map).map);
    for (int order = 0; order < 10; ++order) {
      ASSERT_EQ(qf::canonical_code(qf::ancestor(qf::oracle::random_relabel(map, rng), rng).map),
                expected);
    }
  }
}

TEST(Ancestor, ColouredReducesToP1) {
  const auto c4 = qf::build_c4();
  const auto result = qf::ancestor(qf::ColouredMap{c4, qf::Colouring::bipartition(c4)});
  EXPECT_TRUE(std::holds_alternative<qf::QuasiDualP1>(result.ancestor));
  const auto p1 = qf::ancestor(qf::QuasiDualP1{});
  EXPECT_TRUE(std::holds_alternative<qf::QuasiDualP1>(p1.ancestor));
  EXPECT_TRUE(p1.witness.empty());
}

}  // namespace
