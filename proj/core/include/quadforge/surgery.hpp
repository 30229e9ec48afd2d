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

#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quadforge/embedded_map.hpp"

namespace quadforge {

/// A vertex splitting n1 e1 v em nm, named by the darts of e1 and em at v.
///
/// The new vertex w takes the clockwise wedge from `first` to `last`
/// (inclusive) and v' keeps the rest plus copies of both boundary edges.
/// `first == last` is the parallel case m = 1.
struct SplitWalk {
  int vertex = 0;
  int first = 0;
  int last = 0;

  friend auto operator<=>(const SplitWalk&, const SplitWalk&) = default;
};

/// The degree m of the walk: 1 + clockwise distance from `first` to `last`.
int walk_length(const EmbeddedMap& map, const SplitWalk& walk);

/// D = min(m, d(v) - m + 2).
int degree_of_split(const EmbeddedMap& map, const SplitWalk& walk);

/// Applies the splitting. Input darts keep their ids; the four new darts are
/// numbered 2m..2m+3. Throws std::invalid_argument if the walk darts are not
/// at `walk.vertex`.
EmbeddedMap split(const EmbeddedMap& map, const SplitWalk& walk);

/// Coloured splitting: the new vertex gets the forced bipartition colour.
ColouredMap split(const ColouredMap& coloured, const SplitWalk& walk);

/// Every walk (both orientations) whose splitting degree lies in [lo, hi].
std::vector<SplitWalk> enumerate_splits(const EmbeddedMap& map, int lo, int hi);

enum class Axis { kFirstThird, kSecondFourth };

/// A quadrilateral face, named by one of its darts f0 (corners are the tails
/// of f0, phi(f0), phi^2(f0), phi^3(f0)), and the opposite corner pair to
/// identify.
struct ContractionSite {
  int face_dart = 0;
  Axis axis = Axis::kFirstThird;

  friend auto operator<=>(const ContractionSite&, const ContractionSite&) = default;
};

class InvalidContraction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Contraction {
  EmbeddedMap map;
  /// Splitting of `map` that reproduces the input of the contraction.
  SplitWalk inverse;
  /// Input dart -> dart of `map`, or -1 for removed darts.
  std::vector<int> dart_image;
};

/// min of the two axis corner degrees; the degree of the inverse splitting.
int contraction_degree(const EmbeddedMap& map, const ContractionSite& site);

/// Contracts the face along its axis. Returns nullopt when the axis corners
/// coincide or the result is not a valid quadrangulation.
std::optional<Contraction> try_contract(const EmbeddedMap& map,
                                        const ContractionSite& site);

/// Throws InvalidContraction where try_contract returns nullopt.
EmbeddedMap contract(const EmbeddedMap& map, const ContractionSite& site);

/// The contraction of a coloured map, colours carried over.
std::optional<ColouredMap> try_contract(const ColouredMap& coloured,
                                        const ContractionSite& site);

/// One site per (face, axis), each face named by its smallest dart.
std::vector<ContractionSite> contraction_sites(const EmbeddedMap& map);

bool is_k_contractible(const EmbeddedMap& map, int k);

/// Neither 1- nor 2-contractible.
bool is_irreducible(const EmbeddedMap& map);

}  // namespace quadforge
