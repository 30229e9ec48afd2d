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

#include "quadforge/surgery.hpp"

#include <algorithm>
#include <array>

namespace quadforge {

namespace {

// In-place edits of a rotation permutation.
void insert_after(std::vector<int>& sigma, int anchor, int dart) {
  sigma[dart] = sigma[anchor];
  sigma[anchor] = dart;
}

int predecessor(const std::vector<int>& sigma, int dart) {
  int x = dart;
  while (sigma[x] != dart) x = sigma[x];
  return x;
}

void insert_before(std::vector<int>& sigma, int anchor, int dart) {
  insert_after(sigma, predecessor(sigma, anchor), dart);
}

void unlink(std::vector<int>& sigma, int dart) {
  const int p = predecessor(sigma, dart);
  sigma[p] = sigma[dart];
  sigma[dart] = dart;
}

}  // namespace

int walk_length(const EmbeddedMap& map, const SplitWalk& walk) {
  const int d = map.degree(walk.vertex);
  const int steps = map.rotation_index(walk.last) - map.rotation_index(walk.first);
  return 1 + (steps + d) % d;
}

int degree_of_split(const EmbeddedMap& map, const SplitWalk& walk) {
  const int m = walk_length(map, walk);
  return std::min(m, map.degree(walk.vertex) - m + 2);
}

EmbeddedMap split(const EmbeddedMap& map, const SplitWalk& walk) {
  const int darts = map.dart_count();
  if (walk.vertex < 0 || walk.vertex >= map.vertex_count() || walk.first < 0 ||
      walk.first >= darts || walk.last < 0 || walk.last >= darts ||
      map.vertex_of(walk.first) != walk.vertex ||
      map.vertex_of(walk.last) != walk.vertex) {
    throw std::invalid_argument("split walk darts are not at the split vertex");
  }
  const int m = walk_length(map, walk);
  std::vector<int> sigma = map.sigma_permutation();
  sigma.resize(darts + 4);
  const int w_first = darts;       // e'1 at w
  const int n1_copy = darts + 1;   // e'1 at n1
  const int third = darts + 2;     // e'm at w, or e''1 at v' when m = 1
  const int fourth = darts + 3;    // e'm at nm, or e''1 at n1 when m = 1
  const int into_first = EmbeddedMap::alpha(walk.first);

  if (m == 1) {
    sigma[w_first] = w_first;
    insert_after(sigma, walk.first, third);
    insert_before(sigma, into_first, n1_copy);
    insert_before(sigma, n1_copy, fourth);
  } else {
    // w: e'1, <darts strictly inside the wedge>, e'm
    const int inner_begin = map.sigma(walk.first);
    sigma[walk.first] = walk.last;
    if (inner_begin == walk.last) {
      sigma[w_first] = third;
    } else {
      sigma[w_first] = inner_begin;
      sigma[map.sigma_inverse(walk.last)] = third;
    }
    sigma[third] = w_first;
    insert_after(sigma, EmbeddedMap::alpha(walk.last), fourth);
    insert_before(sigma, into_first, n1_copy);
  }
  return EmbeddedMap(std::move(sigma));
}

ColouredMap split(const ColouredMap& coloured, const SplitWalk& walk) {
  EmbeddedMap child = split(coloured.map, walk);
  // Dart 0 survives every splitting with its vertex colour intact, unless it
  // moved to w, which has the colour of the split vertex anyway.
  const int anchor = child.vertex_of(0);
  Colouring colouring =
      Colouring::bipartition(child, anchor, coloured.colouring[coloured.map.vertex_of(0)]);
  return {std::move(child), std::move(colouring)};
}

std::vector<SplitWalk> enumerate_splits(const EmbeddedMap& map, int lo, int hi) {
  std::vector<SplitWalk> out;
  for (int v = 0; v < map.vertex_count(); ++v) {
    const auto rot = map.rotation(v);
    const int d = static_cast<int>(rot.size());
    for (int i = 0; i < d; ++i) {
      for (int m = 1; m <= d; ++m) {
        const int D = std::min(m, d - m + 2);
        if (D < lo || D > hi) continue;
        out.push_back({v, rot[i], rot[(i + m - 1) % d]});
      }
    }
  }
  return out;
}

namespace {

// Face darts reordered so that the axis corners are the tails of f[1], f[3].
std::array<int, 4> oriented_face(const EmbeddedMap& map, const ContractionSite& site) {
  std::array<int, 4> f{};
  f[0] = site.face_dart;
  for (int i = 1; i < 4; ++i) f[i] = map.phi(f[i - 1]);
  if (site.axis == Axis::kFirstThird) {
    f = {f[3], f[0], f[1], f[2]};
  }
  return f;
}

bool is_quadrilateral(const EmbeddedMap& map, int dart) {
  int x = dart;
  for (int i = 0; i < 4; ++i) x = map.phi(x);
  return x == dart && map.phi(dart) != dart && map.phi(map.phi(dart)) != dart;
}

}  // namespace

int contraction_degree(const EmbeddedMap& map, const ContractionSite& site) {
  const auto f = oriented_face(map, site);
  return std::min(map.degree(map.vertex_of(f[1])), map.degree(map.vertex_of(f[3])));
}

std::optional<Contraction> try_contract(const EmbeddedMap& map,
                                        const ContractionSite& site) {
  if (site.face_dart < 0 || site.face_dart >= map.dart_count() ||
      !is_quadrilateral(map, site.face_dart)) {
    return std::nullopt;
  }
  auto f = oriented_face(map, site);
  const int p = map.vertex_of(f[1]);
  const int q = map.vertex_of(f[3]);
  if (p == q) return std::nullopt;
  if (map.degree(p) == 1 && map.degree(q) == 1) return std::nullopt;
  if (map.degree(p) == 1) f = {f[2], f[3], f[0], f[1]};
  const int removed_vertex = map.vertex_of(f[3]);

  std::vector<int> sigma = map.sigma_permutation();
  std::vector<bool> removed_edge(map.edge_count(), false);
  SplitWalk inverse{};

  if (map.degree(removed_vertex) >= 2) {
    // Move the wedge of Q strictly between f3 and alpha(f2) to P, between
    // alpha(f0) and f1, then drop the edges of f2 and f3.
    const int f0_back = EmbeddedMap::alpha(f[0]);
    const int f2_back = EmbeddedMap::alpha(f[2]);
    const int f3_back = EmbeddedMap::alpha(f[3]);
    std::vector<int> wedge;
    for (int x = map.sigma(f[3]); x != f2_back; x = map.sigma(x)) wedge.push_back(x);
    if (!wedge.empty()) {
      sigma[f0_back] = wedge.front();
      sigma[wedge.back()] = f[1];
    }
    unlink(sigma, f3_back);
    unlink(sigma, f[2]);
    removed_edge[f[2] >> 1] = true;
    removed_edge[f[3] >> 1] = true;
    inverse.first = f0_back;
    inverse.last = f[1];
  } else {
    // Q is a leaf inside a digon at P: drop the leaf edge and the parallel
    // copy f1.
    unlink(sigma, f[1]);
    unlink(sigma, EmbeddedMap::alpha(f[1]));
    unlink(sigma, f[2]);
    removed_edge[f[1] >> 1] = true;
    removed_edge[f[2] >> 1] = true;
    inverse.first = EmbeddedMap::alpha(f[0]);
    inverse.last = inverse.first;
  }

  std::vector<int> edge_image(map.edge_count(), -1);
  int next = 0;
  for (int e = 0; e < map.edge_count(); ++e) {
    if (!removed_edge[e]) edge_image[e] = next++;
  }
  std::vector<int> dart_image(map.dart_count(), -1);
  for (int d = 0; d < map.dart_count(); ++d) {
    if (edge_image[d >> 1] != -1) dart_image[d] = 2 * edge_image[d >> 1] + (d & 1);
  }
  std::vector<int> compact(2 * next);
  for (int d = 0; d < map.dart_count(); ++d) {
    if (dart_image[d] != -1) compact[dart_image[d]] = dart_image[sigma[d]];
  }
  EmbeddedMap result(std::move(compact));
  if (result.vertex_count() != map.vertex_count() - 1 || !validate(result).ok()) {
    return std::nullopt;
  }
  inverse.first = dart_image[inverse.first];
  inverse.last = dart_image[inverse.last];
  inverse.vertex = result.vertex_of(inverse.first);
  return Contraction{std::move(result), inverse, std::move(dart_image)};
}

EmbeddedMap contract(const EmbeddedMap& map, const ContractionSite& site) {
  auto result = try_contract(map, site);
  if (!result) throw InvalidContraction("invalid contraction");
  return std::move(result->map);
}

std::optional<ColouredMap> try_contract(const ColouredMap& coloured,
                                        const ContractionSite& site) {
  auto result = try_contract(coloured.map, site);
  if (!result) return std::nullopt;
  std::vector<Colour> colours(result->map.vertex_count());
  for (int d = 0; d < coloured.map.dart_count(); ++d) {
    const int image = result->dart_image[d];
    if (image != -1) {
      colours[result->map.vertex_of(image)] = coloured.colouring[coloured.map.vertex_of(d)];
    }
  }
  return ColouredMap{std::move(result->map), Colouring(std::move(colours))};
}

std::vector<ContractionSite> contraction_sites(const EmbeddedMap& map) {
  std::vector<ContractionSite> sites;
  for (const auto& face : map.faces()) {
    sites.push_back({face.front(), Axis::kFirstThird});
    sites.push_back({face.front(), Axis::kSecondFourth});
  }
  return sites;
}

bool is_k_contractible(const EmbeddedMap& map, int k) {
  for (const auto& site : contraction_sites(map)) {
    if (contraction_degree(map, site) == k && try_contract(map, site)) return true;
  }
  return false;
}

bool is_irreducible(const EmbeddedMap& map) {
  return !is_k_contractible(map, 1) && !is_k_contractible(map, 2);
}

}  // namespace quadforge
