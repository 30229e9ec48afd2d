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

// Brute-force reference implementations used only by the tests. The
// isomorphism search does not touch the canonical code; the face-extension
// enumeration uses codes only to compare result sets.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "quadforge/canon.hpp"
#include "quadforge/embedded_map.hpp"
#include "quadforge/surgery.hpp"

namespace quadforge::oracle {

// Extends f(start) = image along sigma and alpha, requiring
// f . sigma_a = sigma_b^s . f with s = +1 or -1. Empty on conflict.
inline std::optional<std::vector<int>> propagate(const EmbeddedMap& a, const EmbeddedMap& b,
                                                 int start, int image, bool reversed) {
  const int darts = a.dart_count();
  std::vector<int> f(darts, -1);
  std::vector<char> used(darts, 0);
  std::vector<int> stack{start};
  f[start] = image;
  used[image] = 1;
  auto assign = [&](int d, int target) {
    if (f[d] == -1) {
      if (used[target]) return false;
      f[d] = target;
      used[target] = 1;
      stack.push_back(d);
      return true;
    }
    return f[d] == target;
  };
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    const int fd = f[d];
    const int next = reversed ? b.sigma_inverse(fd) : b.sigma(fd);
    if (!assign(a.sigma(d), next)) return std::nullopt;
    if (!assign(d ^ 1, fd ^ 1)) return std::nullopt;
  }
  return f;
}

/// Searches every dart bijection commuting with alpha and with sigma or its
/// inverse. On connected maps such a bijection is fixed by one dart image.
inline bool isomorphic(const EmbeddedMap& a, const EmbeddedMap& b,
                       const Colouring* ca = nullptr, const Colouring* cb = nullptr) {
  if (a.dart_count() != b.dart_count() || a.vertex_count() != b.vertex_count()) return false;
  if (a.dart_count() == 0) return true;
  for (int image = 0; image < b.dart_count(); ++image) {
    for (bool reversed : {false, true}) {
      const auto f = propagate(a, b, 0, image, reversed);
      if (!f) continue;
      bool colours_match = true;
      if (ca && cb) {
        for (int d = 0; d < a.dart_count() && colours_match; ++d) {
          colours_match = (*ca)[a.vertex_of(d)] == (*cb)[b.vertex_of((*f)[d])];
        }
      }
      if (colours_match) return true;
    }
  }
  return false;
}

/// All valid quadrangulations obtained from `map` by adding one vertex w and
/// `edges` new edges drawn inside the face containing `face_dart`. Every
/// new dart is placed at w or in one of the face's corner angles, in every
/// order, and the result is kept when validate() accepts it.
inline std::set<CanonicalCode> face_extensions(const EmbeddedMap& map, int face_dart, int edges) {
  const int old_darts = map.dart_count();
  const auto walk = map.face_walk(face_dart);
  // Corner slot c sits after dart p_c in sigma order, where sigma(p_c) = walk[c].
  std::vector<int> corner_after;
  for (int d : walk) corner_after.push_back(map.sigma_inverse(d));
  const int corners = static_cast<int>(corner_after.size());
  const int fresh = 2 * edges;
  const int w_slot = corners;

  std::set<CanonicalCode> out;
  std::vector<int> slot(fresh, 0);
  // Odometer over slot assignments in {0..corners}.
  for (;;) {
    const bool w_used = std::count(slot.begin(), slot.end(), w_slot) > 0;
    if (w_used) {
      std::vector<std::vector<int>> at(corners + 1);
      for (int i = 0; i < fresh; ++i) at[slot[i]].push_back(old_darts + i);
      for (auto& group : at) std::sort(group.begin(), group.end());
      // Enumerate all orders at every slot; w's order fixes its first dart.
      std::vector<std::vector<int>> order = at;
      std::function<void(int)> rec = [&](int s) {
        if (s == corners + 1) {
          std::vector<int> sigma(old_darts + fresh);
          for (int d = 0; d < old_darts; ++d) sigma[d] = map.sigma(d);
          for (int c = 0; c < corners; ++c) {
            if (order[c].empty()) continue;
            const int p = corner_after[c];
            const int q = sigma[p];
            int prev = p;
            for (int d : order[c]) {
              sigma[prev] = d;
              prev = d;
            }
            sigma[prev] = q;
          }
          const auto& w = order[w_slot];
          for (std::size_t i = 0; i < w.size(); ++i) sigma[w[i]] = w[(i + 1) % w.size()];
          EmbeddedMap candidate(std::move(sigma));
          if (candidate.vertex_count() == map.vertex_count() + 1 && validate(candidate).ok()) {
            out.insert(canonical_code(candidate));
          }
          return;
        }
        auto& group = order[s];
        const auto first = s == w_slot && !group.empty() ? group.begin() + 1 : group.begin();
        std::sort(first, group.end());
        do {
          rec(s + 1);
        } while (std::next_permutation(first, group.end()));
      };
      rec(0);
    }
    int i = 0;
    while (i < fresh && ++slot[i] > corners) slot[i++] = 0;
    if (i == fresh) break;
  }
  return out;
}

/// Corner angles (p, sigma p) of `map` whose face contains sigma(p), keyed by p.
inline std::set<int> face_corners(const EmbeddedMap& map, int face_dart) {
  std::set<int> out;
  for (int d : map.face_walk(face_dart)) out.insert(map.sigma_inverse(d));
  return out;
}

/// True when the edge of `dart` has a side on the face of `face_dart`.
inline bool walk_dart_borders(const EmbeddedMap& map, int dart, int face_dart) {
  for (int d : map.face_walk(face_dart)) {
    if (d == dart || d == EmbeddedMap::alpha(dart)) return true;
  }
  return false;
}

/// Codes of the splittings with walk length <= 2 whose new darts all land
/// in corners of the given face. Old darts keep their ids, so the affected
/// corners are read off sigma directly.
inline std::set<CanonicalCode> monotone_splits_in_face(const EmbeddedMap& map, int face_dart) {
  const auto corners = face_corners(map, face_dart);
  std::set<CanonicalCode> out;
  for (const SplitWalk& walk : enumerate_splits(map, 1, 2)) {
    if (walk_length(map, walk) > 2) continue;
    const EmbeddedMap child = split(map, walk);
    if (walk_length(map, walk) == 1) {
      // The digon around the new leaf is the same map on either side of e1.
      if (walk_dart_borders(map, walk.first, face_dart)) out.insert(canonical_code(child));
      continue;
    }
    bool inside = true;
    for (int d = 0; d < map.dart_count() && inside; ++d) {
      if (child.sigma(d) != map.sigma(d) && !corners.count(d)) inside = false;
    }
    if (inside) out.insert(canonical_code(child));
  }
  return out;
}

/// True when removing every dart >= map.dart_count() from `child` leaves
/// exactly `map`: old darts keep their rotation order.
inline bool contains_as_submap(const EmbeddedMap& child, const EmbeddedMap& map) {
  const int old_darts = map.dart_count();
  if (child.dart_count() < old_darts) return false;
  for (int d = 0; d < old_darts; ++d) {
    int next = child.sigma(d);
    while (next >= old_darts) next = child.sigma(next);
    if (next != map.sigma(d)) return false;
  }
  return true;
}

/// Random relabelling: edges permuted, each edge's two darts possibly swapped.
inline EmbeddedMap random_relabel(const EmbeddedMap& map, std::mt19937_64& rng) {
  std::vector<int> perm(map.edge_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> sigma(map.dart_count());
  std::vector<int> image(map.dart_count());
  std::bernoulli_distribution flip(0.5);
  for (int e = 0; e < map.edge_count(); ++e) {
    const int swap = flip(rng) ? 1 : 0;
    image[2 * e] = 2 * perm[e] + swap;
    image[2 * e + 1] = 2 * perm[e] + (1 - swap);
  }
  for (int d = 0; d < map.dart_count(); ++d) sigma[image[d]] = image[map.sigma(d)];
  return EmbeddedMap(std::move(sigma));
}

}  // namespace quadforge::oracle
