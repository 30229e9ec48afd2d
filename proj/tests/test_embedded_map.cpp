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

#include <algorithm>
#include <numeric>

#include "oracle/oracles.hpp"
#include "quadforge/canon.hpp"
#include "quadforge/embedded_map.hpp"
#include "quadforge/genesis.hpp"
#include "quadforge/surgery.hpp"

namespace qf = quadforge;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(EmbeddedMap, RejectsNonPermutations) {
  EXPECT_THROW(qf::EmbeddedMap({0, 0}), std::invalid_argument);
  EXPECT_THROW(qf::EmbeddedMap({0, 1, 2}), std::invalid_argument);
}

TEST(EmbeddedMap, PathOfLengthTwo) {
  const auto p2 = qf::build_p2();
  EXPECT_TRUE(qf::validate(p2).ok());
  EXPECT_EQ(p2.vertex_count(), 3);
  EXPECT_EQ(p2.edge_count(), 2);
  EXPECT_EQ(p2.face_count(), 1);
  ASSERT_EQ(p2.faces().size(), 1u);
  EXPECT_EQ(p2.faces()[0].size(), 4u);
  EXPECT_EQ(qf::degrees(p2), (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(qf::min_degree(p2), 1);
}

TEST(EmbeddedMap, SingleEdgeIsNotAQuadrangulation) {
  const qf::EmbeddedMap edge({0, 1});
  const auto report = qf::validate(edge);
  EXPECT_FALSE(report.ok());
  EXPECT_TRUE(report.has(qf::Violation::kFaceNotQuadrilateral));
  EXPECT_TRUE(qf::validate(edge, qf::Requirement::kEmbedding).ok());
}

TEST(EmbeddedMap, ValidationReportsEachViolation) {
  // A loop: both darts at one vertex.
  EXPECT_TRUE(qf::validate(qf::EmbeddedMap({1, 0})).has(qf::Violation::kLoop));
  // Two disjoint edges.
  EXPECT_TRUE(qf::validate(qf::EmbeddedMap({0, 1, 2, 3})).has(qf::Violation::kDisconnected));
  // Two edges between two vertices with a torus-like twist is impossible at
  // this size; a genus-1 map: one vertex pair with crossing rotations.
  const qf::EmbeddedMap twisted({2, 3, 4, 5, 0, 1});
  EXPECT_FALSE(qf::validate(twisted).ok());
  EXPECT_TRUE(qf::validate(qf::EmbeddedMap{}).has(qf::Violation::kEmpty));
}

TEST(EmbeddedMap, SmallestQuadrangulations) {
  const auto c4 = qf::build_c4();
  EXPECT_TRUE(qf::validate(c4).ok());
  EXPECT_EQ(c4.vertex_count(), 4);
  EXPECT_EQ(c4.edge_count(), 4);
  EXPECT_EQ(c4.face_count(), 2);

  const auto q3 = qf::build_q3();
  const auto q4 = qf::build_q4();
  EXPECT_TRUE(qf::validate(q3).ok());
  EXPECT_TRUE(qf::validate(q4).ok());
  EXPECT_EQ(qf::degrees(q3), (std::vector<int>{1, 1, 3, 3}));
  EXPECT_EQ(qf::degrees(q4), (std::vector<int>{1, 1, 2, 4}));
  EXPECT_FALSE(qf::is_simple(q3));
  EXPECT_FALSE(qf::is_simple(q4));
  EXPECT_FALSE(qf::oracle::isomorphic(q3, q4));
}

TEST(EmbeddedMap, NamedSmallMapsAreTheOneSplitsOfP2) {
  const auto p2 = qf::build_p2();
  const int centre = 1;  // the degree-2 vertex
  std::vector<qf::EmbeddedMap> centre_splits, leaf_splits;
  for (const auto& walk : qf::enumerate_splits(p2, 1, 1)) {
    (walk.vertex == centre ? centre_splits : leaf_splits).push_back(qf::split(p2, walk));
  }
  ASSERT_FALSE(centre_splits.empty());
  ASSERT_FALSE(leaf_splits.empty());
  for (const auto& m : centre_splits) EXPECT_TRUE(qf::oracle::isomorphic(m, qf::build_q3()));
  for (const auto& m : leaf_splits) EXPECT_TRUE(qf::oracle::isomorphic(m, qf::build_q4()));
}

TEST(EmbeddedMap, DegreeSumAndEulerOnGeneratedMaps) {
  for (const auto& level : qf::generate_levels(8)) {
    for (const auto& [code, map] : level.classes) {
      const auto d = qf::degrees(map);
      const int n = map.vertex_count();
      EXPECT_EQ(std::accumulate(d.begin(), d.end(), 0), 4 * n - 8);
      EXPECT_EQ(map.edge_count(), 2 * n - 4);
      EXPECT_EQ(map.face_count(), n - 2);
      EXPECT_EQ(static_cast<int>(map.faces().size()), map.face_count());
    }
  }
}

TEST(EmbeddedMap, RotationStartsAtSmallestDart) {
  const auto map = qf::pseudo_double_wheel(4);
  int previous = -1;
  for (int v = 0; v < map.vertex_count(); ++v) {
    const auto rot = map.rotation(v);
    EXPECT_EQ(rot[0], *std::min_element(rot.begin(), rot.end()));
    EXPECT_GT(rot[0], previous);
    previous = rot[0];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      EXPECT_EQ(map.sigma(rot[i]), rot[(i + 1) % rot.size()]);
      EXPECT_EQ(map.vertex_of(rot[i]), v);
      EXPECT_EQ(map.rotation_index(rot[i]), static_cast<int>(i));
    }
  }
}

TEST(EmbeddedMap, NeighbourListsRoundTrip) {
  const auto cube = qf::cube_skeleton();
  const auto rebuilt = qf::from_neighbour_lists(qf::neighbour_lists(cube));
  EXPECT_TRUE(qf::oracle::isomorphic(cube, rebuilt));
}

TEST(Colouring, BipartitionOfQuadrangulations) {
  const auto c4 = qf::build_c4();
  const auto colouring = qf::Colouring::bipartition(c4);
  EXPECT_TRUE(colouring.is_proper_for(c4));
  EXPECT_EQ(colouring.stable_count(), 2);
  EXPECT_EQ(colouring.unstable_count(), 2);
  EXPECT_EQ(colouring[0], qf::Colour::kStable);
  EXPECT_EQ(colouring.swapped()[0], qf::Colour::kUnstable);
  EXPECT_THROW(qf::Colouring::bipartition(qf::tetrahedron_skeleton()), std::invalid_argument);
}

TEST(Radial, TetrahedronCounts) {
  const auto tetra = qf::tetrahedron_skeleton();
  const auto r = qf::radial(tetra);
  EXPECT_TRUE(qf::validate(r.map).ok());
  EXPECT_EQ(r.map.vertex_count(), 8);
  EXPECT_EQ(r.map.edge_count(), 12);
  EXPECT_EQ(r.map.face_count(), 6);
  EXPECT_EQ(qf::min_degree(r.map), 3);
  EXPECT_EQ(r.colouring.stable_count(), 4);
  EXPECT_EQ(r.colouring.unstable_count(), 4);
  EXPECT_TRUE(r.colouring.is_proper_for(r.map));
}

TEST(Radial, ColourClassSizesAreFacesAndVertices) {
  for (const auto& g : {qf::cube_skeleton(), qf::octahedron_skeleton(), qf::prism_skeleton(5),
                        qf::pyramid_skeleton(6), qf::build_p2(), qf::build_q3()}) {
    ASSERT_TRUE(qf::validate(g, qf::Requirement::kEmbedding).ok());
    const auto r = qf::radial(g);
    EXPECT_TRUE(qf::validate(r.map).ok());
    EXPECT_EQ(r.map.vertex_count(), g.vertex_count() + g.face_count());
    EXPECT_EQ(r.map.edge_count(), 2 * g.edge_count());
    EXPECT_EQ(r.colouring.stable_count(), g.face_count());
    EXPECT_EQ(r.colouring.unstable_count(), g.vertex_count());
  }
}

TEST(Radial, EdgeMultiplicityCountsBoundaryAppearances) {
  // P2's single face visits the centre twice and each leaf once.
  const auto r = qf::radial(qf::build_p2());
  std::vector<int> d = sorted(qf::degrees(r.map));
  EXPECT_EQ(d, (std::vector<int>{1, 1, 2, 4}));
}

TEST(Radial, RejectsInvalidInput) {
  EXPECT_THROW(qf::radial(qf::EmbeddedMap({0, 1, 2, 3})), std::invalid_argument);
  EXPECT_THROW(qf::radial(qf::EmbeddedMap({2, 3, 4, 5, 0, 1})), std::invalid_argument);
}

TEST(Radial, PyramidIsPseudoDoubleWheel) {
  for (int k = 3; k <= 7; ++k) {
    EXPECT_TRUE(qf::oracle::isomorphic(qf::radial(qf::pyramid_skeleton(k)).map,
                                       qf::pseudo_double_wheel(k)))
        << "k=" << k;
  }
}

TEST(PseudoDoubleWheel, Structure) {
  EXPECT_THROW(qf::pseudo_double_wheel(2), std::invalid_argument);
  for (int k = 3; k <= 8; ++k) {
    const auto w = qf::pseudo_double_wheel(k);
    EXPECT_TRUE(qf::validate(w).ok());
    EXPECT_EQ(w.vertex_count(), 2 * k + 2);
    std::vector<int> expected(2 * k, 3);
    expected.push_back(k);
    expected.push_back(k);
    EXPECT_EQ(qf::degrees(w), sorted(expected));
    EXPECT_TRUE(qf::is_simple(w));
    EXPECT_TRUE(qf::is_3_connected(w));
    EXPECT_FALSE(qf::has_separating_4cycle(w));
  }
}

TEST(Predicates, SmallCases) {
  EXPECT_FALSE(qf::is_simple(qf::build_q3()));
  EXPECT_TRUE(qf::is_simple(qf::build_c4()));
  EXPECT_FALSE(qf::is_3_connected(qf::build_c4()));
  EXPECT_TRUE(qf::is_3_connected(qf::radial(qf::cube_skeleton()).map));
  EXPECT_TRUE(qf::is_3_connected(qf::cube_skeleton()));
  EXPECT_TRUE(qf::is_3_connected(qf::tetrahedron_skeleton()));
}

TEST(Predicates, SeparatingFourCycle) {
  // Splitting a face of the cube radial with a 2-split leaves the new vertex
  // inside a 4-cycle that still has vertices outside.
  const auto base = qf::radial(qf::cube_skeleton()).map;
  bool found = false;
  for (const auto& walk : qf::enumerate_splits(base, 2, 2)) {
    if (qf::walk_length(base, walk) != 2) continue;
    EXPECT_TRUE(qf::has_separating_4cycle(qf::split(base, walk)));
    found = true;
    break;
  }
  EXPECT_TRUE(found);
  EXPECT_FALSE(qf::has_separating_4cycle(qf::build_c4()));
  EXPECT_FALSE(qf::has_separating_4cycle(qf::radial(qf::tetrahedron_skeleton()).map));
}

TEST(Relabel, MirrorAndRelabelStayValid) {
  std::mt19937_64 rng(7);
  const auto map = qf::pseudo_double_wheel(5);
  const auto m = qf::mirror(map);
  EXPECT_TRUE(qf::validate(m).ok());
  EXPECT_TRUE(qf::oracle::isomorphic(map, m));
  const auto r = qf::oracle::random_relabel(map, rng);
  EXPECT_TRUE(qf::validate(r).ok());
  EXPECT_TRUE(qf::oracle::isomorphic(map, r));
}

}  // namespace
