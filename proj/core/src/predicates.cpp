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

#include <algorithm>

#include "quadforge/embedded_map.hpp"

namespace quadforge {

bool is_simple(const EmbeddedMap& map) {
  std::vector<int> seen(map.vertex_count(), -1);
  for (int v = 0; v < map.vertex_count(); ++v) {
    for (int d : map.rotation(v)) {
      const int u = map.head(d);
      if (u == v || seen[u] == v) return false;
      seen[u] = v;
    }
  }
  return true;
}

bool is_3_connected(const EmbeddedMap& map) {
  const int n = map.vertex_count();
  if (n < 4) return false;
  std::vector<bool> removed(n, false);
  if (!is_connected_without(map, removed)) return false;
  for (int a = 0; a < n; ++a) {
    removed[a] = true;
    if (!is_connected_without(map, removed)) return false;
    for (int b = a + 1; b < n; ++b) {
      removed[b] = true;
      const bool ok = is_connected_without(map, removed);
      removed[b] = false;
      if (!ok) return false;
    }
    removed[a] = false;
  }
  return true;
}

namespace {

// Does the clockwise wedge strictly between `from` and `to` (both darts at
// the same vertex) contain a dart leading off the cycle?
bool wedge_leaves_cycle(const EmbeddedMap& map, int from, int to,
                        const std::vector<bool>& on_cycle) {
  for (int x = map.sigma(from); x != to; x = map.sigma(x)) {
    if (!on_cycle[map.head(x)]) return true;
  }
  return false;
}

bool cycle_separates(const EmbeddedMap& map, const int (&darts)[4],
                     std::vector<bool>& on_cycle) {
  for (int d : darts) on_cycle[map.vertex_of(d)] = true;
  bool right = false;
  bool left = false;
  for (int i = 0; i < 4; ++i) {
    const int out = darts[i];
    const int in = EmbeddedMap::alpha(darts[(i + 3) % 4]);
    right = right || wedge_leaves_cycle(map, out, in, on_cycle);
    left = left || wedge_leaves_cycle(map, in, out, on_cycle);
  }
  for (int d : darts) on_cycle[map.vertex_of(d)] = false;
  return right && left;
}

}  // namespace

bool has_separating_4cycle(const EmbeddedMap& map) {
  std::vector<bool> on_cycle(map.vertex_count(), false);
  for (int d0 = 0; d0 < map.dart_count(); ++d0) {
    const int x0 = map.vertex_of(d0);
    const int x1 = map.head(d0);
    for (int d1 : map.rotation(x1)) {
      const int x2 = map.head(d1);
      if (x2 == x0 || x2 == x1) continue;
      for (int d2 : map.rotation(x2)) {
        const int x3 = map.head(d2);
        if (x3 == x0 || x3 == x1 || x3 == x2) continue;
        for (int d3 : map.rotation(x3)) {
          if (map.head(d3) != x0) continue;
          const int cycle[4] = {d0, d1, d2, d3};
          if (cycle_separates(map, cycle, on_cycle)) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace quadforge
