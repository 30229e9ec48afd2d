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
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "quadforge/canon.hpp"
#include "quadforge/embedded_map.hpp"
#include "quadforge/genesis.hpp"

namespace quadforge {

/// The pair {s, u}; the saddle count h follows from s + u - h = 2.
struct PrimaryClass {
  int stable = 1;
  int unstable = 1;

  int saddles() const { return stable + unstable - 2; }
  int total() const { return stable + unstable; }
  friend auto operator<=>(const PrimaryClass&, const PrimaryClass&) = default;
};

PrimaryClass primary_of(const Colouring& colouring);

/// An isomorphism class of quasi-duals (colour-preserving).
struct SecondaryClass {
  CanonicalCode code;
  PrimaryClass primary;
  std::variant<ColouredMap, QuasiDualP1> representative;

  bool is_p1() const { return std::holds_alternative<QuasiDualP1>(representative); }
  const ColouredMap& quasi_dual() const { return std::get<ColouredMap>(representative); }
};

/// Code reserved for P1; no quadrangulation has a code this short.
CanonicalCode p1_code();
SecondaryClass p1_class();
SecondaryClass make_class(const ColouredMap& coloured);

/// P1 is irreducible, P2 in {1,2}/{2,1} is not, otherwise min degree 3.
bool is_irreducible_class(const SecondaryClass& cls);

/// One or two classes per map of `level` (two unless self-dual), sorted by code.
std::vector<SecondaryClass> secondary_classes(const GenerationLevel& level);
/// n = 2 gives {P1}.
std::vector<SecondaryClass> secondary_classes(int n, int workers = 1);

/// The two C0 results from P1: P2 in {1,2} and in {2,1}.
std::vector<SecondaryClass> auxiliary_splitting_c0();

/// Coloured S_{lo,hi} splittings of a class, deduplicated and sorted by code.
/// On P1 this is C0 when lo <= 1, and nothing otherwise.
std::vector<SecondaryClass> coloured_splits(const SecondaryClass& cls, int lo, int hi);

/// Coloured classes for n = 2..max_n generated from P1 by C0 and coloured
/// S_{1,3}, without going through uncoloured deduplication. Indexed by n.
std::map<int, std::vector<SecondaryClass>> generate_coloured_levels(int max_n, int workers = 1);

enum class Restriction { kS11, kS22 };

/// The five classes of the singleton primary classes {1,1},{2,1},{3,1},{1,2},{1,3}.
std::vector<SecondaryClass> singleton_seed_classes();

/// Primary classes with s + u <= max_total reached from `seeds` by coloured
/// splittings of the given restriction (C0 counts as a 1-splitting).
std::set<PrimaryClass> primary_coverage(const std::vector<SecondaryClass>& seeds,
                                        Restriction restriction, int max_total,
                                        int workers = 1);

/// S11 from {P1}, S22 from singleton_seed_classes().
std::set<PrimaryClass> primary_coverage(Restriction restriction, int max_total,
                                        int workers = 1);

/// Secondary classes split by (1-contractible, 2-contractible).
struct ContractibilityRow {
  long both = 0;          // 1- and 2-contractible
  long two_irreducible = 0;  // only 1-contractible
  long one_irreducible = 0;  // only 2-contractible
  long irreducible = 0;
  long total() const { return both + two_irreducible + one_irreducible + irreducible; }
  friend bool operator==(const ContractibilityRow&, const ContractibilityRow&) = default;
};

struct CensusReport {
  int max_n = 0;
  std::map<int, long> q;
  std::map<PrimaryClass, long> e;
  std::map<int, long> e_sd;
  std::map<int, ContractibilityRow> contractibility;

  long sum_e(int n) const;
  /// 2 q(n) - e_SD(n) == sum_s e(s, n - s).
  bool identity_holds(int n) const;
};

/// q from uncoloured generation, e and e_SD from coloured generation,
/// Contractibility partition for n >= 4.
CensusReport census(int max_n, int workers = 1);

std::string format_census_tables(const CensusReport& report);
std::string format_census_csv(const CensusReport& report);

/// Coloured radial graph of a polyhedral skeleton (faces stable, vertices
/// unstable). Throws std::invalid_argument unless the skeleton is a simple
/// 3-connected spherical map.
SecondaryClass minimal_polyhedron_quasidual(const EmbeddedMap& skeleton);

}  // namespace quadforge
