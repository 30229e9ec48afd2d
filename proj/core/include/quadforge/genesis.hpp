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

#include <map>
#include <random>
#include <variant>
#include <vector>

#include "quadforge/canon.hpp"
#include "quadforge/embedded_map.hpp"
#include "quadforge/surgery.hpp"

namespace quadforge {

/// Which parent and walk produced a class first, ordered by (parent code, walk).
struct Witness {
  CanonicalCode parent;
  SplitWalk walk;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

using MapClasses = std::map<CanonicalCode, EmbeddedMap>;
using ColouredClasses = std::map<CanonicalCode, ColouredMap>;

/// All isomorphism classes with `n` vertices. Stored maps are canonical forms.
struct GenerationLevel {
  int n = 0;
  MapClasses classes;
  std::map<CanonicalCode, Witness> parent_links;

  std::size_t size() const { return classes.size(); }
};

/// Distinct children of every class in `parents` under S_{lo,hi}.
/// The result does not depend on `workers`.
GenerationLevel expand(const GenerationLevel& parents, int lo, int hi, int workers = 1);

/// Levels 3..max_n, starting from {P2} and expanding with S_{1,3}.
std::vector<GenerationLevel> generate_levels(int max_n, int workers = 1);

/// The last of generate_levels(n).
GenerationLevel generate_all(int n, int workers = 1);

/// Every class reachable from `seeds` by S_{lo,hi} splittings with at most
/// `max_n` vertices, seeds included.
MapClasses closure(const std::vector<EmbeddedMap>& seeds, int lo, int hi, int max_n,
                   int workers = 1);

/// Coloured closure: each child takes the forced colouring.
ColouredClasses closure(const std::vector<ColouredMap>& seeds, int lo, int hi, int max_n,
                        int workers = 1);

/// Classes of `level` that admit neither a 1- nor a 2-contraction.
MapClasses irreducibles(const GenerationLevel& level);
MapClasses irreducibles(int n, int workers = 1);

struct AncestorResult {
  EmbeddedMap map;
  /// Sites applied in order, each relative to the map at that step.
  std::vector<ContractionSite> witness;
};

/// Contracts with the first valid site of degree <= 2 until none is left.
AncestorResult ancestor(const EmbeddedMap& map);

/// The same fixed-point iteration with sites tried in random order.
AncestorResult ancestor(const EmbeddedMap& map, std::mt19937_64& rng);

struct ColouredAncestorResult {
  /// P2 in {1,2} or {2,1} reduces further to P1.
  std::variant<ColouredMap, QuasiDualP1> ancestor;
  std::vector<ContractionSite> witness;
};

ColouredAncestorResult ancestor(const ColouredMap& coloured);
ColouredAncestorResult ancestor(const QuasiDualP1&);

}  // namespace quadforge
