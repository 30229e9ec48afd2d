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

#include "quadforge/canon.hpp"

#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace quadforge {

std::string CanonicalCode::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(values[i]);
  }
  return out;
}

CanonicalCode CanonicalCode::parse(std::string_view text, bool colour_aware) {
  CanonicalCode code;
  code.colour_aware = colour_aware;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || value < 0) {
      throw std::invalid_argument("malformed canonical code");
    }
    code.values.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return code;
}

namespace {

class Canonicaliser {
 public:
  Canonicaliser(const EmbeddedMap& map, const Colouring* colouring)
      : map_(map), colouring_(colouring) {
    const int n = map.vertex_count();
    index_.resize(n);
    entry_.resize(n);
    order_.reserve(n);
  }

  void run() {
    const int n = map_.vertex_count();
    int best_key = std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) best_key = std::min(best_key, key(v));
    for (int v = 0; v < n; ++v) {
      if (key(v) != best_key) continue;
      for (int root : map_.rotation(v)) {
        for (bool reversed : {false, true}) attempt(root, reversed);
      }
    }
  }

  CanonicalCode code() const { return {colouring_ != nullptr, best_}; }
  int best_root() const { return best_root_; }
  bool best_reversed() const { return best_reversed_; }

 private:
  int key(int v) const {
    return 2 * map_.degree(v) + (colouring_ ? static_cast<int>((*colouring_)[v]) : 0);
  }

  int advance(int dart, bool reversed) const {
    return reversed ? map_.sigma_inverse(dart) : map_.sigma(dart);
  }

  // Appends to the candidate while it still ties the best; returns false as
  // soon as it becomes lexicographically larger.
  bool emit(int value) {
    if (state_ == 0) {
      const int reference = best_[buffer_.size()];
      if (value > reference) return false;
      if (value < reference) state_ = -1;
    }
    buffer_.push_back(value);
    return true;
  }

  void attempt(int root, bool reversed) {
    buffer_.clear();
    state_ = best_.empty() ? -1 : 0;
    std::fill(index_.begin(), index_.end(), -1);
    order_.clear();
    const int r = map_.vertex_of(root);
    index_[r] = 0;
    entry_[r] = root;
    order_.push_back(r);
    if (!emit(map_.dart_count())) return;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const int v = order_[head];
      const int deg = map_.degree(v);
      if (!emit(deg)) return;
      if (colouring_ && !emit(static_cast<int>((*colouring_)[v]))) return;
      int x = entry_[v];
      for (int k = 0; k < deg; ++k) {
        const int back = EmbeddedMap::alpha(x);
        const int y = map_.vertex_of(back);
        if (index_[y] == -1) {
          index_[y] = static_cast<int>(order_.size());
          entry_[y] = back;
          order_.push_back(y);
        }
        const int dy = map_.degree(y);
        int rel = map_.rotation_index(back) - map_.rotation_index(entry_[y]);
        if (reversed) rel = -rel;
        rel = ((rel % dy) + dy) % dy;
        if (!emit(index_[y]) || !emit(rel)) return;
        x = advance(x, reversed);
      }
    }
    if (state_ == -1) {
      best_.swap(buffer_);
      best_root_ = root;
      best_reversed_ = reversed;
    }
  }

  const EmbeddedMap& map_;
  const Colouring* colouring_;
  std::vector<int> index_;
  std::vector<int> entry_;
  std::vector<int> order_;
  std::vector<int> buffer_;
  std::vector<int> best_;
  int state_ = 0;
  int best_root_ = -1;
  bool best_reversed_ = false;
};

struct Relabelling {
  EmbeddedMap map;
  std::vector<int> vertex_source;  // new vertex -> old vertex
};

Relabelling relabel_along(const EmbeddedMap& map, int root, bool reversed) {
  const int n = map.vertex_count();
  const int darts = map.dart_count();
  std::vector<int> index(n, -1);
  std::vector<int> entry(n, -1);
  std::vector<int> order;
  std::vector<int> sequence;
  sequence.reserve(darts);
  order.push_back(map.vertex_of(root));
  index[order[0]] = 0;
  entry[order[0]] = root;
  auto next = [&](int d) { return reversed ? map.sigma_inverse(d) : map.sigma(d); };
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int v = order[head];
    int x = entry[v];
    for (int k = 0; k < map.degree(v); ++k) {
      sequence.push_back(x);
      const int back = EmbeddedMap::alpha(x);
      const int y = map.vertex_of(back);
      if (index[y] == -1) {
        index[y] = static_cast<int>(order.size());
        entry[y] = back;
        order.push_back(y);
      }
      x = next(x);
    }
  }
  std::vector<int> image(darts, -1);
  int edges = 0;
  for (int d : sequence) {
    if (image[d] != -1) continue;
    image[d] = 2 * edges;
    image[EmbeddedMap::alpha(d)] = 2 * edges + 1;
    ++edges;
  }
  std::vector<int> sigma(darts);
  for (int d = 0; d < darts; ++d) sigma[image[d]] = image[next(d)];
  EmbeddedMap out(std::move(sigma));
  std::vector<int> source(out.vertex_count());
  for (int d = 0; d < darts; ++d) source[out.vertex_of(image[d])] = map.vertex_of(d);
  return {std::move(out), std::move(source)};
}

}  // namespace

CanonicalCode canonical_code(const EmbeddedMap& map) {
  Canonicaliser c(map, nullptr);
  c.run();
  return c.code();
}

CanonicalCode canonical_code(const EmbeddedMap& map, const Colouring& colouring) {
  Canonicaliser c(map, &colouring);
  c.run();
  return c.code();
}

EmbeddedMap canonical_form(const EmbeddedMap& map) {
  if (map.dart_count() == 0) return map;
  Canonicaliser c(map, nullptr);
  c.run();
  return relabel_along(map, c.best_root(), c.best_reversed()).map;
}

ColouredMap canonical_form(const ColouredMap& coloured) {
  if (coloured.map.dart_count() == 0) return coloured;
  Canonicaliser c(coloured.map, &coloured.colouring);
  c.run();
  auto relabelled = relabel_along(coloured.map, c.best_root(), c.best_reversed());
  std::vector<Colour> colours(relabelled.vertex_source.size());
  for (std::size_t v = 0; v < colours.size(); ++v) {
    colours[v] = coloured.colouring[relabelled.vertex_source[v]];
  }
  return {std::move(relabelled.map), Colouring(std::move(colours))};
}

bool are_isomorphic(const EmbeddedMap& a, const EmbeddedMap& b) {
  return canonical_code(a) == canonical_code(b);
}

bool are_isomorphic(const ColouredMap& a, const ColouredMap& b, bool colour_aware) {
  if (!colour_aware) return are_isomorphic(a.map, b.map);
  return canonical_code(a) == canonical_code(b);
}

bool is_self_dual_class(const EmbeddedMap& map, const Colouring& colouring) {
  return canonical_code(map, colouring) == canonical_code(map, colouring.swapped());
}

}  // namespace quadforge
