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

#include "quadforge/embedded_map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quadforge {

EmbeddedMap::EmbeddedMap(std::vector<int> sigma) : sigma_(std::move(sigma)) {
  const int darts = dart_count();
  if (darts % 2 != 0) {
    throw std::invalid_argument("dart count must be even");
  }
  sigma_inv_.assign(darts, -1);
  for (int d = 0; d < darts; ++d) {
    const int s = sigma_[d];
    if (s < 0 || s >= darts || sigma_inv_[s] != -1) {
      throw std::invalid_argument("sigma is not a permutation of the darts");
    }
    sigma_inv_[s] = d;
  }

  vertex_of_.assign(darts, -1);
  rotation_index_.assign(darts, 0);
  rotation_.reserve(darts);
  vertex_start_.assign(1, 0);
  for (int d = 0; d < darts; ++d) {
    if (vertex_of_[d] != -1) continue;
    const int v = static_cast<int>(vertex_start_.size()) - 1;
    int x = d;
    int i = 0;
    do {
      vertex_of_[x] = v;
      rotation_index_[x] = i++;
      rotation_.push_back(x);
      x = sigma_[x];
    } while (x != d);
    vertex_start_.push_back(static_cast<int>(rotation_.size()));
  }

  face_of_.assign(darts, -1);
  for (int d = 0; d < darts; ++d) {
    if (face_of_[d] != -1) continue;
    int x = d;
    do {
      face_of_[x] = face_count_;
      x = phi(x);
    } while (x != d);
    ++face_count_;
  }
}

std::vector<std::vector<int>> EmbeddedMap::faces() const {
  std::vector<std::vector<int>> out(face_count_);
  for (int d = 0; d < dart_count(); ++d) {
    if (out[face_of_[d]].empty()) out[face_of_[d]] = face_walk(d);
  }
  return out;
}

std::vector<int> EmbeddedMap::face_walk(int dart) const {
  std::vector<int> walk;
  int x = dart;
  do {
    walk.push_back(x);
    x = phi(x);
  } while (x != dart);
  return walk;
}

Colouring Colouring::bipartition(const EmbeddedMap& map, int anchor_vertex,
                                 Colour anchor_colour) {
  const int n = map.vertex_count();
  std::vector<int> colour(n, -1);
  std::vector<int> stack;
  if (n == 0) return Colouring{};
  colour[anchor_vertex] = static_cast<int>(anchor_colour);
  stack.push_back(anchor_vertex);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int d : map.rotation(v)) {
      const int u = map.head(d);
      if (colour[u] == -1) {
        colour[u] = 1 - colour[v];
        stack.push_back(u);
      } else if (colour[u] == colour[v]) {
        throw std::invalid_argument("map is not bipartite");
      }
    }
  }
  std::vector<Colour> out(n);
  for (int v = 0; v < n; ++v) {
    if (colour[v] == -1) throw std::invalid_argument("map is not connected");
    out[v] = static_cast<Colour>(colour[v]);
  }
  return Colouring(std::move(out));
}

int Colouring::stable_count() const {
  return static_cast<int>(std::count(colours_.begin(), colours_.end(), Colour::kStable));
}

Colouring Colouring::swapped() const {
  std::vector<Colour> out(colours_.size());
  std::transform(colours_.begin(), colours_.end(), out.begin(), opposite);
  return Colouring(std::move(out));
}

bool Colouring::is_proper_for(const EmbeddedMap& map) const {
  if (size() != map.vertex_count()) return false;
  if (stable_count() == 0 || unstable_count() == 0) return false;
  for (int d = 0; d < map.dart_count(); ++d) {
    if (colours_[map.vertex_of(d)] == colours_[map.head(d)]) return false;
  }
  return true;
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::kEmpty:
      return "empty map";
    case Violation::kDisconnected:
      return "not connected";
    case Violation::kLoop:
      return "contains a loop";
    case Violation::kNotSpherical:
      return "Euler characteristic is not 2";
    case Violation::kFaceNotQuadrilateral:
      return "face walk of length other than 4";
  }
  return "unknown violation";
}

bool ValidationReport::has(Violation v) const {
  return std::find(violations.begin(), violations.end(), v) != violations.end();
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << quadforge::to_string(violations[i]);
  }
  return out.str();
}

bool is_connected_without(const EmbeddedMap& map, const std::vector<bool>& removed) {
  const int n = map.vertex_count();
  int start = -1;
  int remaining = 0;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++remaining;
      if (start == -1) start = v;
    }
  }
  if (remaining == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int d : map.rotation(v)) {
      const int u = map.head(d);
      if (!removed[u] && !seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == remaining;
}

ValidationReport validate(const EmbeddedMap& map, Requirement requirement) {
  ValidationReport report;
  if (map.dart_count() == 0) {
    report.violations.push_back(Violation::kEmpty);
    return report;
  }
  if (!is_connected_without(map, std::vector<bool>(map.vertex_count(), false))) {
    report.violations.push_back(Violation::kDisconnected);
  }
  for (int d = 0; d < map.dart_count(); d += 2) {
    if (map.vertex_of(d) == map.vertex_of(d + 1)) {
      report.violations.push_back(Violation::kLoop);
      break;
    }
  }
  if (map.vertex_count() - map.edge_count() + map.face_count() != 2) {
    report.violations.push_back(Violation::kNotSpherical);
  }
  if (requirement == Requirement::kQuadrangulation) {
    std::vector<int> length(map.face_count(), 0);
    for (int d = 0; d < map.dart_count(); ++d) ++length[map.face_of(d)];
    if (std::any_of(length.begin(), length.end(), [](int l) { return l != 4; })) {
      report.violations.push_back(Violation::kFaceNotQuadrilateral);
    }
  }
  return report;
}

EmbeddedMap from_neighbour_lists(const std::vector<std::vector<int>>& neighbours) {
  const int n = static_cast<int>(neighbours.size());
  // dart id of the half-edge u -> v, keyed by (u, position in u's list)
  std::vector<std::vector<int>> dart_at(n);
  int next_edge = 0;
  for (int u = 0; u < n; ++u) dart_at[u].assign(neighbours[u].size(), -1);
  for (int u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < neighbours[u].size(); ++i) {
      const int v = neighbours[u][i];
      if (v < 0 || v >= n || v == u) {
        throw std::invalid_argument("neighbour list entry out of range or a loop");
      }
      if (std::count(neighbours[u].begin(), neighbours[u].end(), v) != 1) {
        throw std::invalid_argument("neighbour lists must describe a simple graph");
      }
      if (dart_at[u][i] != -1) continue;
      const auto it = std::find(neighbours[v].begin(), neighbours[v].end(), u);
      if (it == neighbours[v].end()) {
        throw std::invalid_argument("neighbour lists are not symmetric");
      }
      const auto j = static_cast<std::size_t>(it - neighbours[v].begin());
      dart_at[u][i] = 2 * next_edge;
      dart_at[v][j] = 2 * next_edge + 1;
      ++next_edge;
    }
  }
  std::vector<int> sigma(2 * next_edge);
  for (int u = 0; u < n; ++u) {
    const auto& darts = dart_at[u];
    for (std::size_t i = 0; i < darts.size(); ++i) {
      sigma[darts[i]] = darts[(i + 1) % darts.size()];
    }
  }
  return EmbeddedMap(std::move(sigma));
}

std::vector<std::vector<int>> neighbour_lists(const EmbeddedMap& map) {
  std::vector<std::vector<int>> out(map.vertex_count());
  for (int v = 0; v < map.vertex_count(); ++v) {
    for (int d : map.rotation(v)) out[v].push_back(map.head(d));
  }
  return out;
}

std::vector<int> degrees(const EmbeddedMap& map) {
  std::vector<int> out(map.vertex_count());
  for (int v = 0; v < map.vertex_count(); ++v) out[v] = map.degree(v);
  std::sort(out.begin(), out.end());
  return out;
}

int min_degree(const EmbeddedMap& map) {
  int best = map.vertex_count() == 0 ? 0 : map.degree(0);
  for (int v = 1; v < map.vertex_count(); ++v) best = std::min(best, map.degree(v));
  return best;
}

EmbeddedMap mirror(const EmbeddedMap& map) {
  std::vector<int> sigma(map.dart_count());
  for (int d = 0; d < map.dart_count(); ++d) sigma[d] = map.sigma_inverse(d);
  return EmbeddedMap(std::move(sigma));
}

EmbeddedMap relabel(const EmbeddedMap& map, std::span<const int> edge_permutation,
                    const std::vector<bool>& flip) {
  const int darts = map.dart_count();
  std::vector<int> image(darts);
  for (int d = 0; d < darts; ++d) {
    const int e = d >> 1;
    image[d] = 2 * edge_permutation[e] + ((d & 1) ^ (flip[e] ? 1 : 0));
  }
  std::vector<int> sigma(darts);
  for (int d = 0; d < darts; ++d) sigma[image[d]] = image[map.sigma(d)];
  return EmbeddedMap(std::move(sigma));
}

}  // namespace quadforge
