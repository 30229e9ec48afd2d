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

#include "quadforge/genesis.hpp"

#include <algorithm>
#include <tuple>

#include "quadforge/parallel.hpp"

namespace quadforge {

namespace {

const EmbeddedMap& underlying(const EmbeddedMap& m) { return m; }
const EmbeddedMap& underlying(const ColouredMap& m) { return m.map; }

template <class Item>
struct Found {
  Item item;
  int parent = 0;  // index into the code-sorted parent list
  SplitWalk walk;

  bool witnessed_before(int other_parent, const SplitWalk& other_walk) const {
    return std::tie(parent, walk) < std::tie(other_parent, other_walk);
  }
};

template <class Item>
using Expansion = std::map<CanonicalCode, Found<Item>>;

// Parents must be sorted by code so that parent indices order like codes.
template <class Item>
Expansion<Item> expand_items(const std::vector<std::pair<const CanonicalCode*, const Item*>>& parents,
                             int lo, int hi, int workers) {
  workers = std::max(1, workers);
  std::vector<Expansion<Item>> local(workers);
  parallel_for(static_cast<int>(parents.size()), workers, [&](int w, int i) {
    const Item& parent = *parents[i].second;
    for (const SplitWalk& walk : enumerate_splits(underlying(parent), lo, hi)) {
      Item child = split(parent, walk);
      CanonicalCode code = canonical_code(child);
      auto it = local[w].find(code);
      if (it == local[w].end()) {
        local[w].emplace(std::move(code), Found<Item>{std::move(child), i, walk});
      } else if (!it->second.witnessed_before(i, walk)) {
        it->second = Found<Item>{std::move(child), i, walk};
      }
    }
  });
  Expansion<Item>& merged = local[0];
  for (int w = 1; w < workers; ++w) {
    for (auto& [code, found] : local[w]) {
      auto it = merged.find(code);
      if (it == merged.end()) {
        merged.emplace(code, std::move(found));
      } else if (!it->second.witnessed_before(found.parent, found.walk)) {
        it->second = std::move(found);
      }
    }
  }
  std::vector<Found<Item>*> entries;
  entries.reserve(merged.size());
  for (auto& [code, found] : merged) entries.push_back(&found);
  parallel_for(static_cast<int>(entries.size()), workers, [&](int, int i) {
    entries[i]->item = canonical_form(entries[i]->item);
  });
  return std::move(merged);
}

template <class Item>
std::vector<std::pair<const CanonicalCode*, const Item*>> as_parents(
    const std::map<CanonicalCode, Item>& classes) {
  std::vector<std::pair<const CanonicalCode*, const Item*>> out;
  out.reserve(classes.size());
  for (const auto& [code, item] : classes) out.emplace_back(&code, &item);
  return out;
}

template <class Item>
std::map<CanonicalCode, Item> closure_items(const std::vector<Item>& seeds, int lo, int hi,
                                            int max_n, int workers) {
  std::map<int, std::map<CanonicalCode, Item>> by_size;
  for (const Item& seed : seeds) {
    const int n = underlying(seed).vertex_count();
    if (n > max_n) continue;
    by_size[n].emplace(canonical_code(seed), canonical_form(seed));
  }
  std::map<CanonicalCode, Item> out;
  if (by_size.empty()) return out;
  for (int n = by_size.begin()->first; n <= max_n; ++n) {
    auto& level = by_size[n];
    if (n < max_n && !level.empty()) {
      auto children = expand_items(as_parents(level), lo, hi, workers);
      auto& next = by_size[n + 1];
      for (auto& [code, found] : children) next.emplace(code, std::move(found.item));
    }
    out.merge(level);
  }
  return out;
}

}  // namespace

GenerationLevel expand(const GenerationLevel& parents, int lo, int hi, int workers) {
  auto list = as_parents(parents.classes);
  auto children = expand_items(list, lo, hi, workers);
  GenerationLevel level;
  level.n = parents.n + 1;
  for (auto& [code, found] : children) {
    level.parent_links.emplace(code, Witness{*list[found.parent].first, found.walk});
    level.classes.emplace(code, std::move(found.item));
  }
  return level;
}

std::vector<GenerationLevel> generate_levels(int max_n, int workers) {
  std::vector<GenerationLevel> levels;
  if (max_n < 3) return levels;
  GenerationLevel base;
  base.n = 3;
  const EmbeddedMap p2 = build_p2();
  base.classes.emplace(canonical_code(p2), canonical_form(p2));
  levels.push_back(std::move(base));
  while (levels.back().n < max_n) levels.push_back(expand(levels.back(), 1, 3, workers));
  return levels;
}

GenerationLevel generate_all(int n, int workers) {
  auto levels = generate_levels(n, workers);
  if (levels.empty()) return GenerationLevel{n, {}, {}};
  return std::move(levels.back());
}

MapClasses closure(const std::vector<EmbeddedMap>& seeds, int lo, int hi, int max_n,
                   int workers) {
  return closure_items(seeds, lo, hi, max_n, workers);
}

ColouredClasses closure(const std::vector<ColouredMap>& seeds, int lo, int hi, int max_n,
                        int workers) {
  return closure_items(seeds, lo, hi, max_n, workers);
}

MapClasses irreducibles(const GenerationLevel& level) {
  MapClasses out;
  for (const auto& [code, map] : level.classes) {
    if (is_irreducible(map)) out.emplace(code, map);
  }
  return out;
}

MapClasses irreducibles(int n, int workers) { return irreducibles(generate_all(n, workers)); }

namespace {

template <class Item, class Order>
std::pair<Item, std::vector<ContractionSite>> reduce(Item current, Order&& order) {
  std::vector<ContractionSite> witness;
  for (;;) {
    auto sites = contraction_sites(underlying(current));
    order(sites);
    bool progressed = false;
    for (const auto& site : sites) {
      if (contraction_degree(underlying(current), site) > 2) continue;
      auto next = try_contract(current, site);
      if (!next) continue;
      if constexpr (std::is_same_v<Item, EmbeddedMap>) {
        current = std::move(next->map);
      } else {
        current = std::move(*next);
      }
      witness.push_back(site);
      progressed = true;
      break;
    }
    if (!progressed) return {std::move(current), std::move(witness)};
  }
}

}  // namespace

AncestorResult ancestor(const EmbeddedMap& map) {
  auto [result, witness] = reduce(map, [](std::vector<ContractionSite>&) {});
  return {std::move(result), std::move(witness)};
}

AncestorResult ancestor(const EmbeddedMap& map, std::mt19937_64& rng) {
  auto [result, witness] =
      reduce(map, [&rng](std::vector<ContractionSite>& s) { std::shuffle(s.begin(), s.end(), rng); });
  return {std::move(result), std::move(witness)};
}

ColouredAncestorResult ancestor(const ColouredMap& coloured) {
  auto [result, witness] = reduce(coloured, [](std::vector<ContractionSite>&) {});
  if (result.map.vertex_count() == 3) return {QuasiDualP1{}, std::move(witness)};
  return {std::move(result), std::move(witness)};
}

ColouredAncestorResult ancestor(const QuasiDualP1&) { return {QuasiDualP1{}, {}}; }

}  // namespace quadforge
