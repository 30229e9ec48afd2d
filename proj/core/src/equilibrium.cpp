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

#include "quadforge/equilibrium.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "quadforge/parallel.hpp"
#include "quadforge/surgery.hpp"

namespace quadforge {

PrimaryClass primary_of(const Colouring& colouring) {
  return {colouring.stable_count(), colouring.unstable_count()};
}

CanonicalCode p1_code() { return CanonicalCode{true, {2}}; }

SecondaryClass p1_class() { return {p1_code(), {1, 1}, QuasiDualP1{}}; }

SecondaryClass make_class(const ColouredMap& coloured) {
  ColouredMap form = canonical_form(coloured);
  CanonicalCode code = canonical_code(form);
  const PrimaryClass primary = primary_of(form.colouring);
  return {std::move(code), primary, std::move(form)};
}

bool is_irreducible_class(const SecondaryClass& cls) {
  if (cls.is_p1()) return true;
  const EmbeddedMap& map = cls.quasi_dual().map;
  if (map.vertex_count() <= 3) return false;
  return is_irreducible(map);
}

namespace {

std::vector<SecondaryClass> sorted_unique(std::vector<SecondaryClass> classes) {
  std::sort(classes.begin(), classes.end(),
            [](const SecondaryClass& a, const SecondaryClass& b) { return a.code < b.code; });
  classes.erase(std::unique(classes.begin(), classes.end(),
                            [](const SecondaryClass& a, const SecondaryClass& b) {
                              return a.code == b.code;
                            }),
                classes.end());
  return classes;
}

ColouredMap coloured_p2(Colour centre) {
  EmbeddedMap p2 = build_p2();
  const int centre_vertex = p2.vertex_of(1);
  return {p2, Colouring::bipartition(p2, centre_vertex, centre)};
}

}  // namespace

std::vector<SecondaryClass> secondary_classes(const GenerationLevel& level) {
  std::vector<SecondaryClass> out;
  for (const auto& [code, map] : level.classes) {
    const Colouring colouring = Colouring::bipartition(map);
    out.push_back(make_class({map, colouring}));
    if (!is_self_dual_class(map, colouring)) {
      out.push_back(make_class({map, colouring.swapped()}));
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<SecondaryClass> secondary_classes(int n, int workers) {
  if (n == 2) return {p1_class()};
  if (n < 2) return {};
  return secondary_classes(generate_all(n, workers));
}

std::vector<SecondaryClass> auxiliary_splitting_c0() {
  return sorted_unique({make_class(coloured_p2(Colour::kStable)),
                        make_class(coloured_p2(Colour::kUnstable))});
}

std::vector<SecondaryClass> coloured_splits(const SecondaryClass& cls, int lo, int hi) {
  if (cls.is_p1()) {
    if (lo <= 1 && hi >= 1) return auxiliary_splitting_c0();
    return {};
  }
  const ColouredMap& parent = cls.quasi_dual();
  std::vector<SecondaryClass> out;
  for (const SplitWalk& walk : enumerate_splits(parent.map, lo, hi)) {
    out.push_back(make_class(split(parent, walk)));
  }
  return sorted_unique(std::move(out));
}

std::map<int, std::vector<SecondaryClass>> generate_coloured_levels(int max_n, int workers) {
  std::map<int, std::vector<SecondaryClass>> levels;
  if (max_n < 2) return levels;
  levels[2] = {p1_class()};
  if (max_n < 3) return levels;
  std::vector<ColouredMap> seeds;
  for (const auto& cls : auxiliary_splitting_c0()) seeds.push_back(cls.quasi_dual());
  for (auto& [code, coloured] : closure(seeds, 1, 3, max_n, workers)) {
    const PrimaryClass primary = primary_of(coloured.colouring);
    levels[coloured.map.vertex_count()].push_back({code, primary, std::move(coloured)});
  }
  return levels;
}

std::vector<SecondaryClass> singleton_seed_classes() {
  std::vector<SecondaryClass> out{p1_class()};
  for (const auto& cls : auxiliary_splitting_c0()) out.push_back(cls);
  for (const auto& cls : secondary_classes(4)) {
    if (cls.primary == PrimaryClass{3, 1} || cls.primary == PrimaryClass{1, 3}) {
      out.push_back(cls);
    }
  }
  return out;
}

std::set<PrimaryClass> primary_coverage(const std::vector<SecondaryClass>& seeds,
                                        Restriction restriction, int max_total, int workers) {
  const int degree = restriction == Restriction::kS11 ? 1 : 2;
  std::set<PrimaryClass> reached;
  std::vector<ColouredMap> coloured_seeds;
  for (const auto& seed : seeds) {
    if (seed.primary.total() <= max_total) reached.insert(seed.primary);
    if (!seed.is_p1()) {
      coloured_seeds.push_back(seed.quasi_dual());
    } else if (restriction == Restriction::kS11) {
      for (const auto& child : auxiliary_splitting_c0()) coloured_seeds.push_back(child.quasi_dual());
    }
  }
  for (const auto& [code, coloured] : closure(coloured_seeds, degree, degree, max_total, workers)) {
    reached.insert(primary_of(coloured.colouring));
  }
  return reached;
}

std::set<PrimaryClass> primary_coverage(Restriction restriction, int max_total, int workers) {
  if (restriction == Restriction::kS11) {
    return primary_coverage({p1_class()}, restriction, max_total, workers);
  }
  return primary_coverage(singleton_seed_classes(), restriction, max_total, workers);
}

long CensusReport::sum_e(int n) const {
  long total = 0;
  for (const auto& [primary, count] : e) {
    if (primary.total() == n) total += count;
  }
  return total;
}

bool CensusReport::identity_holds(int n) const {
  const auto qi = q.find(n);
  if (qi == q.end()) return false;
  const auto si = e_sd.find(n);
  const long sd = si == e_sd.end() ? 0 : si->second;
  return 2 * qi->second - sd == sum_e(n);
}

CensusReport census(int max_n, int workers) {
  CensusReport report;
  report.max_n = max_n;
  for (const auto& level : generate_levels(max_n, workers)) {
    report.q[level.n] = static_cast<long>(level.size());
  }
  for (const auto& [n, classes] : generate_coloured_levels(max_n, workers)) {
    // Per class: bit 0 self-dual, bit 1 1-contractible, bit 2 2-contractible.
    std::vector<int> flags(classes.size(), 0);
    parallel_for(static_cast<int>(classes.size()), workers, [&](int, int i) {
      const SecondaryClass& cls = classes[i];
      if (cls.is_p1()) return;
      const ColouredMap& qd = cls.quasi_dual();
      int f = 0;
      if (cls.primary.stable == cls.primary.unstable &&
          is_self_dual_class(qd.map, qd.colouring)) {
        f |= 1;
      }
      if (n >= 4) {
        if (is_k_contractible(qd.map, 1)) f |= 2;
        if (is_k_contractible(qd.map, 2)) f |= 4;
      }
      flags[i] = f;
    });
    long self_dual = 0;
    ContractibilityRow row;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      ++report.e[classes[i].primary];
      const int f = flags[i];
      if (f & 1) ++self_dual;
      if (n < 4) continue;
      const bool one = f & 2;
      const bool two = f & 4;
      if (one && two) {
        ++row.both;
      } else if (one) {
        ++row.two_irreducible;
      } else if (two) {
        ++row.one_irreducible;
      } else {
        ++row.irreducible;
      }
    }
    if (n >= 3) report.e_sd[n] = self_dual;
    if (n >= 4) report.contractibility[n] = row;
  }
  return report;
}

std::string format_census_tables(const CensusReport& report) {
  std::ostringstream out;
  const int N = report.max_n;
  auto e_of = [&](int s, int u) -> long {
    const auto it = report.e.find({s, u});
    return it == report.e.end() ? 0 : it->second;
  };
  out << "Secondary classes e(s,u), s + u <= " << N << "\n";
  out << std::setw(8) << "";
  for (int s = 1; s < N; ++s) out << std::setw(9) << ("s=" + std::to_string(s));
  out << "\n";
  for (int u = 1; u < N; ++u) {
    out << std::setw(8) << ("u=" + std::to_string(u));
    for (int s = 1; s + u <= N; ++s) out << std::setw(9) << e_of(s, u);
    out << "\n";
  }
  out << "\nQuadrangulations and secondary classes\n";
  out << std::setw(8) << "" << std::setw(10) << "q(n)" << std::setw(10) << "e_SD(n)"
      << std::setw(10) << "sum e" << std::setw(8) << "check" << "\n";
  for (const auto& [n, q] : report.q) {
    const auto sd = report.e_sd.find(n);
    const std::string sd_text =
        n % 2 == 1 ? "-" : std::to_string(sd == report.e_sd.end() ? 0 : sd->second);
    out << std::setw(8) << ("n=" + std::to_string(n)) << std::setw(10) << q << std::setw(10)
        << sd_text << std::setw(10) << report.sum_e(n) << std::setw(8)
        << (report.identity_holds(n) ? "ok" : "FAIL") << "\n";
  }
  out << "\nContractibility of secondary classes\n";
  out << std::setw(8) << "" << std::setw(14) << "1-2-contr." << std::setw(14) << "2-irred."
      << std::setw(14) << "1-irred." << std::setw(14) << "irreducible" << "\n";
  for (const auto& [n, row] : report.contractibility) {
    out << std::setw(8) << ("n=" + std::to_string(n)) << std::setw(14) << row.both
        << std::setw(14) << row.two_irreducible << std::setw(14) << row.one_irreducible
        << std::setw(14) << row.irreducible << "\n";
  }
  return out.str();
}

std::string format_census_csv(const CensusReport& report) {
  std::ostringstream out;
  out << "n,s,u,count\n";
  for (const auto& [primary, count] : report.e) {
    out << primary.total() << ',' << primary.stable << ',' << primary.unstable << ','
        << count << '\n';
  }
  out << "\nn,q,e_sd,sum_e\n";
  for (const auto& [n, q] : report.q) {
    const auto sd = report.e_sd.find(n);
    out << n << ',' << q << ',' << (sd == report.e_sd.end() ? 0 : sd->second) << ','
        << report.sum_e(n) << '\n';
  }
  out << "\nn,c11,c2irr,c1irr,irr\n";
  for (const auto& [n, row] : report.contractibility) {
    out << n << ',' << row.both << ',' << row.two_irreducible << ',' << row.one_irreducible
        << ',' << row.irreducible << '\n';
  }
  return out.str();
}

SecondaryClass minimal_polyhedron_quasidual(const EmbeddedMap& skeleton) {
  if (!validate(skeleton, Requirement::kEmbedding).ok() || !is_simple(skeleton) ||
      !is_3_connected(skeleton)) {
    throw std::invalid_argument("skeleton is not a simple 3-connected spherical map");
  }
  SecondaryClass cls = make_class(radial(skeleton));
  if (!is_irreducible(cls.quasi_dual().map)) {
    throw std::logic_error("radial graph of a polyhedral skeleton is reducible");
  }
  return cls;
}

}  // namespace quadforge
