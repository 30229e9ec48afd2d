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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace quadforge {

/// A connected loopless multigraph embedded on the sphere, stored as a
/// rotation system over darts.
///
/// Darts are numbered 0..2m-1 and the two darts of an edge are `d` and
/// `d ^ 1`. `sigma(d)` is the next dart clockwise around the vertex of `d`.
/// Faces are the orbits of `phi = sigma . alpha`, i.e. `phi(d) = sigma(d ^ 1)`.
///
/// Vertex ids are assigned in increasing order of each vertex's smallest
/// dart, so two maps with the same `sigma` always agree on vertex numbering.
/// The object is immutable once built; structural validity (connected,
/// loopless, spherical, quadrangulated) is checked by `validate`, not by the
/// constructor, so invalid maps can be represented and reported on.
class EmbeddedMap {
 public:
  EmbeddedMap() = default;

  /// Throws std::invalid_argument unless `sigma` is a permutation of an
  /// even number of darts.
  explicit EmbeddedMap(std::vector<int> sigma);

  static constexpr int alpha(int dart) { return dart ^ 1; }

  int dart_count() const { return static_cast<int>(sigma_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int vertex_count() const { return static_cast<int>(vertex_start_.size()) - 1; }
  int face_count() const { return face_count_; }

  int sigma(int dart) const { return sigma_[dart]; }
  int sigma_inverse(int dart) const { return sigma_inv_[dart]; }
  int phi(int dart) const { return sigma_[dart ^ 1]; }

  int vertex_of(int dart) const { return vertex_of_[dart]; }
  int head(int dart) const { return vertex_of_[dart ^ 1]; }
  int face_of(int dart) const { return face_of_[dart]; }

  /// Index of `dart` inside the clockwise rotation of its vertex, counted
  /// from the vertex's smallest dart.
  int rotation_index(int dart) const { return rotation_index_[dart]; }

  int degree(int vertex) const {
    return vertex_start_[vertex + 1] - vertex_start_[vertex];
  }

  /// Clockwise darts around `vertex`, starting at its smallest dart.
  std::span<const int> rotation(int vertex) const {
    return {rotation_.data() + vertex_start_[vertex],
            static_cast<std::size_t>(degree(vertex))};
  }

  int first_dart(int vertex) const { return rotation_[vertex_start_[vertex]]; }

  /// Face boundary walks as phi-orbits, each starting at its smallest dart,
  /// ordered by that dart.
  std::vector<std::vector<int>> faces() const;

  /// Darts of the face containing `dart`, starting at `dart`.
  std::vector<int> face_walk(int dart) const;

  const std::vector<int>& sigma_permutation() const { return sigma_; }

  friend bool operator==(const EmbeddedMap& a, const EmbeddedMap& b) {
    return a.sigma_ == b.sigma_;
  }

 private:
  std::vector<int> sigma_;
  std::vector<int> sigma_inv_;
  std::vector<int> vertex_of_;
  std::vector<int> face_of_;
  std::vector<int> rotation_index_;
  std::vector<int> rotation_;
  std::vector<int> vertex_start_{0};
  int face_count_ = 0;
};

enum class Colour : std::uint8_t { kStable = 0, kUnstable = 1 };

constexpr Colour opposite(Colour c) {
  return c == Colour::kStable ? Colour::kUnstable : Colour::kStable;
}

constexpr char colour_char(Colour c) { return c == Colour::kStable ? 'S' : 'U'; }

/// Vertex 2-colouring into stable and unstable equilibria.
class Colouring {
 public:
  Colouring() = default;
  explicit Colouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

  /// The proper 2-colouring of a connected bipartite map in which
  /// `anchor_vertex` receives `anchor_colour`. Throws std::invalid_argument
  /// if the map is not bipartite.
  static Colouring bipartition(const EmbeddedMap& map, int anchor_vertex = 0,
                               Colour anchor_colour = Colour::kStable);

  Colour operator[](int vertex) const { return colours_[vertex]; }
  int size() const { return static_cast<int>(colours_.size()); }
  int stable_count() const;
  int unstable_count() const { return size() - stable_count(); }
  Colouring swapped() const;

  /// Adjacent vertices differ and both classes are non-empty.
  bool is_proper_for(const EmbeddedMap& map) const;

  const std::vector<Colour>& colours() const { return colours_; }
  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  std::vector<Colour> colours_;
};

/// A quasi-dual: a quadrangulation with a proper stable/unstable colouring.
struct ColouredMap {
  EmbeddedMap map;
  Colouring colouring;

  friend bool operator==(const ColouredMap&, const ColouredMap&) = default;
};

/// The single-edge path joining one stable and one unstable vertex. It is
/// not a quadrangulation and never appears as an EmbeddedMap.
struct QuasiDualP1 {
  friend auto operator<=>(const QuasiDualP1&, const QuasiDualP1&) = default;
};

enum class Violation {
  kEmpty,
  kDisconnected,
  kLoop,
  kNotSpherical,
  kFaceNotQuadrilateral,
};

std::string to_string(Violation v);

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Violation v) const;
  std::string to_string() const;
};

enum class Requirement { kEmbedding, kQuadrangulation };

/// Checks connectivity, looplessness, Euler characteristic 2 and (for
/// kQuadrangulation) that every face walk has length exactly 4.
ValidationReport validate(const EmbeddedMap& map,
                          Requirement requirement = Requirement::kQuadrangulation);

/// Builds a map from clockwise neighbour lists of a simple graph. Throws
/// std::invalid_argument when the lists are asymmetric or repeat a neighbour.
EmbeddedMap from_neighbour_lists(const std::vector<std::vector<int>>& neighbours);

/// Clockwise neighbour vertex ids of each vertex, starting at its smallest dart.
std::vector<std::vector<int>> neighbour_lists(const EmbeddedMap& map);

/// Sorted vertex degrees.
std::vector<int> degrees(const EmbeddedMap& map);
int min_degree(const EmbeddedMap& map);

/// The same map with every rotation reversed.
EmbeddedMap mirror(const EmbeddedMap& map);

/// Renames edge `e` to `edge_permutation[e]`; when `flip[e]` is set the two
/// darts of the edge are exchanged as well.
EmbeddedMap relabel(const EmbeddedMap& map, std::span<const int> edge_permutation,
                    const std::vector<bool>& flip);

// Named constructions.
EmbeddedMap build_p2();
EmbeddedMap build_c4();
/// 1-splitting of P2 at its centre (degrees 3,3,1,1).
EmbeddedMap build_q3();
/// 1-splitting of P2 at a leaf (degrees 4,2,1,1).
EmbeddedMap build_q4();

/// 2k-cycle with an inner hub on the odd and an outer hub on the even cycle
/// vertices. Throws std::invalid_argument for k < 3.
EmbeddedMap pseudo_double_wheel(int k);

// Polyhedral skeletons used as radial-graph inputs.
EmbeddedMap pyramid_skeleton(int base);
EmbeddedMap prism_skeleton(int base);
EmbeddedMap tetrahedron_skeleton();
EmbeddedMap cube_skeleton();
EmbeddedMap octahedron_skeleton();

/// Vertex-face incidence map of `g` with vertex images coloured unstable
/// and face images coloured stable. Throws std::invalid_argument when `g`
/// is disconnected, has a loop, or is not spherical.
ColouredMap radial(const EmbeddedMap& g);

bool is_simple(const EmbeddedMap& map);
bool is_connected_without(const EmbeddedMap& map, const std::vector<bool>& removed);
bool is_3_connected(const EmbeddedMap& map);
bool has_separating_4cycle(const EmbeddedMap& map);

}  // namespace quadforge
