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
#include <string>
#include <string_view>
#include <vector>

#include "quadforge/embedded_map.hpp"

namespace quadforge {

/// Isomorphism invariant of an unsensed, unrooted (optionally coloured) map.
///
/// Built from a breadth-first traversal rooted at a dart and oriented by
/// sigma or its inverse; the code is the lexicographic minimum over every
/// root and both orientations. Layout:
///
///   dart_count, then per vertex in discovery order:
///     degree, [colour bit], then for each dart in rotation order starting
///     from the dart the vertex was entered by:
///       discovery index of the neighbour,
///       position of the reverse dart in the neighbour's rotation.
///
/// The reverse-dart positions make the code complete for multigraphs, where
/// neighbour indices alone do not say which parallel darts pair up.
struct CanonicalCode {
  bool colour_aware = false;
  std::vector<int> values;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

  /// Space-separated decimal integers.
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument on malformed input.
  static CanonicalCode parse(std::string_view text, bool colour_aware);
};

CanonicalCode canonical_code(const EmbeddedMap& map);
CanonicalCode canonical_code(const EmbeddedMap& map, const Colouring& colouring);
inline CanonicalCode canonical_code(const ColouredMap& m) {
  return canonical_code(m.map, m.colouring);
}

/// The map relabelled along its minimising traversal: isomorphic maps have
/// identical canonical forms, dart for dart.
EmbeddedMap canonical_form(const EmbeddedMap& map);
ColouredMap canonical_form(const ColouredMap& coloured);

bool are_isomorphic(const EmbeddedMap& a, const EmbeddedMap& b);
bool are_isomorphic(const ColouredMap& a, const ColouredMap& b, bool colour_aware = true);

/// Swapping stable and unstable gives an isomorphic coloured map.
bool is_self_dual_class(const EmbeddedMap& map, const Colouring& colouring);

}  // namespace quadforge
