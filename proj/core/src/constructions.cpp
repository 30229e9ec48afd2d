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

#include <stdexcept>

#include "quadforge/embedded_map.hpp"

namespace quadforge {

EmbeddedMap build_p2() {
  // a -0/1- b -2/3- c
  return EmbeddedMap({0, 2, 1, 3});
}

EmbeddedMap build_c4() { return from_neighbour_lists({{1, 3}, {2, 0}, {3, 1}, {0, 2}}); }

EmbeddedMap build_q3() {
  // P2 split at the centre along the edge to a: leaf w (dart 4), parallel
  // edge 6/7 next to edge 0/1.
  return EmbeddedMap({7, 6, 1, 3, 4, 0, 2, 5});
}

EmbeddedMap build_q4() {
  // P2 split at the leaf a: v' keeps dart 0 and gains 6, b gains 5 and 7.
  return EmbeddedMap({6, 2, 7, 3, 4, 1, 0, 5});
}

EmbeddedMap pseudo_double_wheel(int k) {
  if (k < 3) throw std::invalid_argument("pseudo-double wheel needs k >= 3");
  const int cycle = 2 * k;
  const int inner = cycle;
  const int outer = cycle + 1;
  std::vector<std::vector<int>> nb(cycle + 2);
  for (int i = 0; i < cycle; ++i) {
    const int next = (i + 1) % cycle;
    const int prev = (i + cycle - 1) % cycle;
    if (i % 2 == 1) {
      nb[i] = {next, prev, inner};
    } else {
      nb[i] = {next, outer, prev};
    }
  }
  for (int i = cycle - 1; i >= 1; i -= 2) nb[inner].push_back(i);
  for (int i = 0; i < cycle; i += 2) nb[outer].push_back(i);
  return from_neighbour_lists(nb);
}

EmbeddedMap pyramid_skeleton(int base) {
  if (base < 3) throw std::invalid_argument("pyramid base needs at least 3 sides");
  const int apex = base;
  std::vector<std::vector<int>> nb(base + 1);
  for (int i = 0; i < base; ++i) {
    nb[i] = {(i + 1) % base, (i + base - 1) % base, apex};
  }
  for (int i = base - 1; i >= 0; --i) nb[apex].push_back(i);
  return from_neighbour_lists(nb);
}

EmbeddedMap prism_skeleton(int base) {
  if (base < 3) throw std::invalid_argument("prism base needs at least 3 sides");
  std::vector<std::vector<int>> nb(2 * base);
  for (int i = 0; i < base; ++i) {
    const int next = (i + 1) % base;
    const int prev = (i + base - 1) % base;
    nb[i] = {next, prev, base + i};
    nb[base + i] = {base + next, i, base + prev};
  }
  return from_neighbour_lists(nb);
}

EmbeddedMap tetrahedron_skeleton() { return pyramid_skeleton(3); }

EmbeddedMap cube_skeleton() { return prism_skeleton(4); }

EmbeddedMap octahedron_skeleton() {
  const int top = 4;
  const int bottom = 5;
  std::vector<std::vector<int>> nb(6);
  for (int i = 0; i < 4; ++i) {
    nb[i] = {(i + 1) % 4, bottom, (i + 3) % 4, top};
  }
  nb[top] = {3, 2, 1, 0};
  nb[bottom] = {0, 1, 2, 3};
  return from_neighbour_lists(nb);
}

ColouredMap radial(const EmbeddedMap& g) {
  const ValidationReport report = validate(g, Requirement::kEmbedding);
  if (!report.ok()) {
    throw std::invalid_argument("radial graph input rejected: " + report.to_string());
  }
  // One radial edge per corner (dart p of g): dart 2p sits at the image of
  // p's vertex, dart 2p+1 at the image of the face holding the corner
  // between p and sigma(p).
  const int corners = g.dart_count();
  std::vector<int> sigma(2 * corners);
  for (int p = 0; p < corners; ++p) {
    sigma[2 * p] = 2 * g.sigma(p);
    sigma[2 * p + 1] = 2 * g.sigma_inverse(EmbeddedMap::alpha(p)) + 1;
  }
  EmbeddedMap map(std::move(sigma));
  std::vector<Colour> colours(map.vertex_count());
  for (int v = 0; v < map.vertex_count(); ++v) {
    colours[v] = map.first_dart(v) % 2 == 0 ? Colour::kUnstable : Colour::kStable;
  }
  return {std::move(map), Colouring(std::move(colours))};
}

}  // namespace quadforge
