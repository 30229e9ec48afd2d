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

// quadforge: command line front end for the quadforge library.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "quadforge/canon.hpp"
#include "quadforge/embedded_map.hpp"
#include "quadforge/equilibrium.hpp"
#include "quadforge/formats.hpp"
#include "quadforge/genesis.hpp"
#include "quadforge/parallel.hpp"
#include "quadforge/surgery.hpp"
#include "reference_counts.hpp"

namespace qf = quadforge;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kMq, kDot, kPlanarCode, kCsv };

const std::map<std::string, Format> kFormatNames = {
    {"mq", Format::kMq}, {"dot", Format::kDot}, {"planar_code", Format::kPlanarCode},
    {"csv", Format::kCsv}};

// Output file or stdout; binary so planar_code bytes pass through unchanged.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw UsageError("bad " + what + " '" + text + "'");
}

std::pair<int, int> parse_pair(const std::string& text, const std::string& what) {
  const auto parts = split_list(text, ',');
  if (parts.size() != 2) throw UsageError(what + " must look like i,j");
  return {parse_int(parts[0], what), parse_int(parts[1], what)};
}

qf::EmbeddedMap skeleton_by_name(const std::string& name) {
  const auto parts = split_list(name, ':');
  if (parts.empty()) throw UsageError("empty skeleton name");
  const std::string& kind = parts[0];
  if (parts.size() == 1) {
    if (kind == "tetrahedron") return qf::tetrahedron_skeleton();
    if (kind == "cube") return qf::cube_skeleton();
    if (kind == "octahedron") return qf::octahedron_skeleton();
  } else if (parts.size() == 2) {
    const int k = parse_int(parts[1], "skeleton size");
    if (kind == "pyramid") return qf::pyramid_skeleton(k);
    if (kind == "prism") return qf::prism_skeleton(k);
  }
  throw UsageError("unknown skeleton '" + name + "'");
}

bool looks_like_name(const std::string& source) {
  static const std::vector<std::string> prefixes = {"p2", "c4", "q3", "q4", "pdw:", "radial:"};
  return std::any_of(prefixes.begin(), prefixes.end(), [&](const std::string& p) {
    return p.back() == ':' ? source.rfind(p, 0) == 0 : source == p;
  });
}

// A named construction or an MQ file.
std::vector<qf::MqRecord> resolve_source(const std::string& source) {
  if (!looks_like_name(source)) return qf::read_mq_file(source);
  if (source == "p2") return {{qf::build_p2(), std::nullopt}};
  if (source == "c4") return {{qf::build_c4(), std::nullopt}};
  if (source == "q3") return {{qf::build_q3(), std::nullopt}};
  if (source == "q4") return {{qf::build_q4(), std::nullopt}};
  if (source.rfind("pdw:", 0) == 0) {
    return {{qf::pseudo_double_wheel(parse_int(source.substr(4), "wheel size")), std::nullopt}};
  }
  qf::ColouredMap coloured = qf::radial(skeleton_by_name(source.substr(7)));
  return {{std::move(coloured.map), std::move(coloured.colouring)}};
}

std::vector<qf::MqRecord> resolve_sources(const std::string& list) {
  std::vector<qf::MqRecord> out;
  for (const auto& source : split_list(list, ',')) {
    for (auto& record : resolve_source(source)) out.push_back(std::move(record));
  }
  return out;
}

qf::MqRecord single_record(const std::string& source) {
  auto records = resolve_source(source);
  if (records.size() != 1) throw UsageError(source + ": expected exactly one map");
  return std::move(records.front());
}

void write_records(std::ostream& out, const std::vector<qf::MqRecord>& records, Format format) {
  switch (format) {
    case Format::kMq:
      for (const auto& r : records) qf::write_mq(out, r.map, r.colouring ? &*r.colouring : nullptr);
      return;
    case Format::kDot:
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        qf::write_dot(out, r.map, r.colouring ? &*r.colouring : nullptr,
                      "q" + std::to_string(i));
      }
      return;
    case Format::kPlanarCode:
      // Validate every record before emitting any byte.
      for (const auto& r : records) {
        if (!qf::is_simple(r.map)) throw qf::FormatError("planar_code requires simple maps");
      }
      qf::write_planar_code_header(out);
      for (const auto& r : records) qf::write_planar_code(out, r.map);
      return;
    case Format::kCsv:
      out << "index,n,m,min_degree,simple,code\n";
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        const qf::CanonicalCode code =
            r.colouring ? qf::canonical_code(r.map, *r.colouring) : qf::canonical_code(r.map);
        out << i << ',' << r.map.vertex_count() << ',' << r.map.edge_count() << ','
            << qf::min_degree(r.map) << ',' << (qf::is_simple(r.map) ? 1 : 0) << ','
            << code.to_string() << '\n';
      }
      return;
  }
}

std::string axis_name(qf::Axis axis) { return axis == qf::Axis::kFirstThird ? "13" : "24"; }

void add_format_option(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case)
                      .description("{mq,dot,planar_code,csv}"));
}

// ---------------------------------------------------------------------------

struct GenOptions {
  int n = 0;
  std::string restrict_text;
  std::string seeds;
  bool all_sizes = false;
  bool simple_only = false;
  Format format = Format::kMq;
  std::string output;
  std::string witness_path;
};

int run_gen(const GenOptions& opt, int workers) {
  int lo = 1;
  int hi = 3;
  if (!opt.restrict_text.empty()) std::tie(lo, hi) = parse_pair(opt.restrict_text, "--restrict");
  if (lo < 1 || lo > hi) throw UsageError("--restrict needs 1 <= i <= j");

  std::vector<qf::MqRecord> records;
  auto keep = [&](int size) { return opt.all_sizes ? size <= opt.n : size == opt.n; };

  if (opt.seeds.empty() && lo == 1 && hi == 3) {
    const auto levels = qf::generate_levels(opt.n, workers);
    for (const auto& level : levels) {
      if (!keep(level.n)) continue;
      for (const auto& [code, map] : level.classes) records.push_back({map, std::nullopt});
    }
    if (!opt.witness_path.empty()) {
      Sink sink(opt.witness_path);
      for (const auto& level : levels) {
        if (keep(level.n)) qf::write_witnesses(sink.stream(), level);
      }
    }
  } else {
    if (!opt.witness_path.empty()) {
      throw UsageError("--witness is only available for the default generation");
    }
    auto seeds = opt.seeds.empty() ? std::vector<qf::MqRecord>{{qf::build_p2(), std::nullopt}}
                                   : resolve_sources(opt.seeds);
    const bool coloured = std::all_of(seeds.begin(), seeds.end(),
                                      [](const qf::MqRecord& r) { return r.colouring.has_value(); });
    if (coloured) {
      std::vector<qf::ColouredMap> maps;
      for (auto& r : seeds) maps.push_back({std::move(r.map), std::move(*r.colouring)});
      for (auto& [code, m] : qf::closure(maps, lo, hi, opt.n, workers)) {
        if (keep(m.map.vertex_count())) records.push_back({m.map, m.colouring});
      }
    } else {
      std::vector<qf::EmbeddedMap> maps;
      for (auto& r : seeds) maps.push_back(std::move(r.map));
      for (auto& [code, m] : qf::closure(maps, lo, hi, opt.n, workers)) {
        if (keep(m.vertex_count())) records.push_back({m, std::nullopt});
      }
    }
  }
  if (opt.simple_only) {
    std::erase_if(records, [](const qf::MqRecord& r) { return !qf::is_simple(r.map); });
  }
  Sink sink(opt.output);
  write_records(sink.stream(), records, opt.format);
  return 0;
}

int run_census(int max_n, bool csv, const std::string& output, int workers) {
  const qf::CensusReport report = qf::census(max_n, workers);
  Sink sink(output);
  sink.stream() << (csv ? qf::format_census_csv(report) : qf::format_census_tables(report));
  return 0;
}

int run_ancestor(const std::string& input, Format format) {
  std::vector<qf::MqRecord> results;
  std::ostringstream witness;
  for (const auto& record : resolve_source(input)) {
    std::vector<qf::ContractionSite> steps;
    if (record.colouring) {
      auto result = qf::ancestor(qf::ColouredMap{record.map, *record.colouring});
      steps = result.witness;
      if (std::holds_alternative<qf::QuasiDualP1>(result.ancestor)) {
        std::cout << "P1\n";
      } else {
        auto& m = std::get<qf::ColouredMap>(result.ancestor);
        results.push_back({m.map, m.colouring});
      }
    } else {
      auto result = qf::ancestor(record.map);
      steps = result.witness;
      results.push_back({std::move(result.map), std::nullopt});
    }
    write_records(std::cout, results, format);
    results.clear();
    std::cout << "witness " << steps.size() << '\n';
    for (const auto& site : steps) {
      std::cout << "contract " << site.face_dart << ' ' << axis_name(site.axis) << '\n';
    }
  }
  return 0;
}

int run_split(const std::string& input, int vertex, int first, int last, Format format) {
  auto record = single_record(input);
  const qf::SplitWalk walk{vertex, first, last};
  if (record.colouring) {
    auto out = qf::split(qf::ColouredMap{record.map, *record.colouring}, walk);
    write_records(std::cout, {{out.map, out.colouring}}, format);
  } else {
    write_records(std::cout, {{qf::split(record.map, walk), std::nullopt}}, format);
  }
  return 0;
}

int run_contract(const std::string& input, int face, const std::string& axis, Format format) {
  auto record = single_record(input);
  if (axis != "13" && axis != "24") throw UsageError("--axis must be 13 or 24");
  const qf::ContractionSite site{face, axis == "13" ? qf::Axis::kFirstThird : qf::Axis::kSecondFourth};
  if (face < 0 || face >= record.map.dart_count()) throw UsageError("--face is not a dart");
  if (record.colouring) {
    auto out = qf::try_contract(qf::ColouredMap{record.map, *record.colouring}, site);
    if (!out) throw qf::InvalidContraction("invalid contraction");
    write_records(std::cout, {{out->map, out->colouring}}, format);
  } else {
    write_records(std::cout, {{qf::contract(record.map, site), std::nullopt}}, format);
  }
  return 0;
}

int run_radial(const std::string& input, Format format) {
  qf::EmbeddedMap skeleton = [&] {
    try {
      return skeleton_by_name(input);
    } catch (const UsageError&) {
      auto records = qf::read_mq_file(input, qf::Requirement::kEmbedding);
      if (records.size() != 1) throw UsageError(input + ": expected exactly one map");
      return std::move(records.front().map);
    }
  }();
  qf::ColouredMap out = qf::radial(skeleton);
  write_records(std::cout, {{out.map, out.colouring}}, format);
  return 0;
}

int run_classes(int n, Format format, int workers) {
  const auto classes = qf::secondary_classes(n, workers);
  if (format == Format::kCsv) {
    std::cout << "s,u,self_dual,code\n";
    for (const auto& cls : classes) {
      const bool sd = !cls.is_p1() &&
                      qf::is_self_dual_class(cls.quasi_dual().map, cls.quasi_dual().colouring);
      std::cout << cls.primary.stable << ',' << cls.primary.unstable << ',' << (sd ? 1 : 0) << ','
                << cls.code.to_string() << '\n';
    }
    return 0;
  }
  std::vector<qf::MqRecord> records;
  for (const auto& cls : classes) {
    if (cls.is_p1()) {
      std::cout << "P1\n";
      continue;
    }
    records.push_back({cls.quasi_dual().map, cls.quasi_dual().colouring});
  }
  write_records(std::cout, records, format);
  return 0;
}

int run_coverage(const std::string& restriction, int max_total, const std::string& without,
                 int workers) {
  const qf::Restriction r = restriction == "s11" ? qf::Restriction::kS11 : qf::Restriction::kS22;
  std::set<qf::PrimaryClass> reached;
  if (without.empty()) {
    reached = qf::primary_coverage(r, max_total, workers);
  } else {
    std::vector<qf::PrimaryClass> dropped;
    for (const auto& pair : split_list(without, ';')) {
      const auto [s, u] = parse_pair(pair, "--without");
      dropped.push_back({s, u});
    }
    std::vector<qf::SecondaryClass> seeds =
        r == qf::Restriction::kS11 ? std::vector<qf::SecondaryClass>{qf::p1_class()}
                                   : qf::singleton_seed_classes();
    std::erase_if(seeds, [&](const qf::SecondaryClass& c) {
      return std::find(dropped.begin(), dropped.end(), c.primary) != dropped.end();
    });
    reached = qf::primary_coverage(seeds, r, max_total, workers);
  }
  int missing = 0;
  for (int total = 2; total <= max_total; ++total) {
    for (int s = 1; s < total; ++s) {
      const bool hit = reached.count({s, total - s}) > 0;
      if (!hit) ++missing;
      std::cout << '{' << s << ',' << total - s << "} " << (hit ? "reached" : "missing") << '\n';
    }
  }
  std::cout << (missing == 0 ? "complete" : "incomplete: " + std::to_string(missing) + " missing")
            << '\n';
  return missing == 0 ? 0 : 1;
}

int run_verify(int max_n, int workers) {
  namespace ref = qf::reference;
  int failures = 0;
  auto report_line = [&](bool ok, const std::string& name, const std::string& detail = "") {
    if (!ok) ++failures;
    std::cout << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << '\n';
  };
  auto got_expected = [](long got, long expected) {
    return "got " + std::to_string(got) + ", expected " + std::to_string(expected);
  };

  const qf::CensusReport report = qf::census(max_n, workers);
  for (const auto& [n, q] : report.q) {
    if (const auto it = ref::kQuadrangulations.find(n); it != ref::kQuadrangulations.end()) {
      report_line(q == it->second, "q(" + std::to_string(n) + ")", got_expected(q, it->second));
    }
    report_line(report.identity_holds(n), "identity n=" + std::to_string(n));
    const auto sd = report.e_sd.find(n);
    const long got_sd = sd == report.e_sd.end() ? 0 : sd->second;
    const auto ref_sd = ref::kSelfDual.find(n);
    const long want_sd = ref_sd == ref::kSelfDual.end() ? 0 : ref_sd->second;
    if (n <= 10) {
      report_line(got_sd == want_sd, "e_sd(" + std::to_string(n) + ")",
                  got_expected(got_sd, want_sd));
    }
  }
  for (int total = 2; total <= std::min(max_n, 10); ++total) {
    bool ok = true;
    std::string detail;
    for (int s = 1; s < total; ++s) {
      const auto it = report.e.find({s, total - s});
      const long got = it == report.e.end() ? 0 : it->second;
      const long want = ref::secondary(s, total - s);
      if (got != want) {
        ok = false;
        detail += " e(" + std::to_string(s) + "," + std::to_string(total - s) + ") " +
                  got_expected(got, want) + ";";
      }
    }
    report_line(ok, "e(s,u) s+u=" + std::to_string(total), detail);
  }
  for (const auto& [n, row] : report.contractibility) {
    report_line(row.total() == report.sum_e(n), "contractibility row sum n=" + std::to_string(n));
    const auto it = ref::kContractibility.find(n);
    if (it == ref::kContractibility.end()) continue;
    const std::array<long, 4> got = {row.both, row.two_irreducible, row.one_irreducible,
                                     row.irreducible};
    std::ostringstream detail;
    detail << "got (" << got[0] << ',' << got[1] << ',' << got[2] << ',' << got[3]
           << "), reference (" << it->second[0] << ',' << it->second[1] << ','
           << it->second[2] << ',' << it->second[3] << ')';
    report_line(got == it->second, "contractibility n=" + std::to_string(n), detail.str());
  }
  for (const auto& level : qf::generate_levels(max_n, workers)) {
    bool ok = true;
    for (const auto& [code, map] : level.classes) {
      if (qf::min_degree(map) != 3) continue;
      const auto d = qf::degrees(map);
      if (std::count(d.begin(), d.end(), 3) < 8) ok = false;
    }
    report_line(ok, "degree-3 count n=" + std::to_string(level.n));
  }
  std::cout << (failures == 0 ? "verify: all checks passed"
                              : "verify: " + std::to_string(failures) + " check(s) failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}

int run_convert(const std::string& input, const std::string& from, Format format,
                const std::string& output) {
  std::vector<qf::MqRecord> records;
  if (from == "planar_code") {
    std::ifstream in(input, std::ios::binary);
    if (!in) throw UsageError("cannot open " + input);
    for (auto& map : qf::read_planar_code(in)) records.push_back({std::move(map), std::nullopt});
  } else {
    records = qf::read_mq_file(input);
  }
  Sink sink(output);
  write_records(sink.stream(), records, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadforge: spherical multiquadrangulations and equilibrium classes"};
  app.require_subcommand(1);
  int workers = 1;
  app.add_option("-w,--workers", workers, "Worker threads (QUADFORGE_WORKERS overrides)")
      ->check(CLI::PositiveNumber);

  int status = 0;
  auto effective_workers = [&] { return qf::worker_count_from_env(workers); };

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate all classes with n vertices");
  gen_cmd->add_option("-n", gen.n, "Vertex count")->required()->check(CLI::Range(3, 12));
  gen_cmd->add_option("--restrict", gen.restrict_text, "Splitting degrees i,j (default 1,3)");
  gen_cmd->add_option("--seeds", gen.seeds, "Comma separated seeds: p2,c4,q3,q4,pdw:K,radial:NAME or MQ files");
  gen_cmd->add_flag("--all", gen.all_sizes, "Emit every size up to n");
  gen_cmd->add_flag("--simple", gen.simple_only, "Emit only maps without parallel edges");
  add_format_option(gen_cmd, gen.format);
  gen_cmd->add_option("-o,--output", gen.output, "Output file");
  gen_cmd->add_option("--witness", gen.witness_path, "Write parent witnesses to this file");
  gen_cmd->callback([&] { status = run_gen(gen, effective_workers()); });

  int census_n = 0;
  bool census_csv = false;
  std::string census_out;
  auto* census_cmd = app.add_subcommand("census", "Counts q(n), e(s,u), e_SD(n) and contractibility");
  census_cmd->add_option("-N", census_n, "Largest n")->required()->check(CLI::Range(3, 12));
  census_cmd->add_flag("--csv", census_csv, "Machine readable output");
  census_cmd->add_option("-o,--output", census_out, "Output file");
  census_cmd->callback(
      [&] { status = run_census(census_n, census_csv, census_out, effective_workers()); });

  std::string input;
  Format format = Format::kMq;

  auto* ancestor_cmd = app.add_subcommand("ancestor", "Irreducible ancestor and contraction witness");
  ancestor_cmd->add_option("input", input, "Map source")->required();
  add_format_option(ancestor_cmd, format);
  ancestor_cmd->callback([&] { status = run_ancestor(input, format); });

  int vertex = 0, first = 0, last = 0;
  auto* split_cmd = app.add_subcommand("split", "Split a vertex along a walk");
  split_cmd->add_option("input", input, "Map source")->required();
  split_cmd->add_option("--vertex", vertex, "Vertex to split")->required();
  split_cmd->add_option("--first", first, "Dart of the first walk edge")->required();
  split_cmd->add_option("--last", last, "Dart of the last walk edge")->required();
  add_format_option(split_cmd, format);
  split_cmd->callback([&] { status = run_split(input, vertex, first, last, format); });

  int face = 0;
  std::string axis = "13";
  auto* contract_cmd = app.add_subcommand("contract", "Contract a face along an axis");
  contract_cmd->add_option("input", input, "Map source")->required();
  contract_cmd->add_option("--face", face, "A dart of the face")->required();
  contract_cmd->add_option("--axis", axis, "13 or 24");
  add_format_option(contract_cmd, format);
  contract_cmd->callback([&] { status = run_contract(input, face, axis, format); });

  auto* radial_cmd = app.add_subcommand("radial", "Coloured radial graph of an embedded map");
  radial_cmd->add_option("input", input, "MQ file or tetrahedron|cube|octahedron|pyramid:K|prism:K")
      ->required();
  add_format_option(radial_cmd, format);
  radial_cmd->callback([&] { status = run_radial(input, format); });

  int k = 0;
  auto* pdw_cmd = app.add_subcommand("pdw", "Pseudo-double wheel with 2k+2 vertices");
  pdw_cmd->add_option("-k", k)->required()->check(CLI::Range(3, 120));
  add_format_option(pdw_cmd, format);
  pdw_cmd->callback(
      [&] { write_records(std::cout, {{qf::pseudo_double_wheel(k), std::nullopt}}, format); });

  int classes_n = 0;
  auto* classes_cmd = app.add_subcommand("classes", "Secondary classes with n vertices");
  classes_cmd->add_option("-n", classes_n)->required()->check(CLI::Range(2, 12));
  add_format_option(classes_cmd, format);
  classes_cmd->callback([&] { status = run_classes(classes_n, format, effective_workers()); });

  std::string restriction = "s11";
  int max_total = 9;
  std::string without;
  auto* coverage_cmd = app.add_subcommand("coverage", "Primary classes reached by S11 or S22");
  coverage_cmd->add_option("--restrict", restriction, "Coloured splitting family")
      ->transform(CLI::IsMember({"s11", "s22"}, CLI::ignore_case));
  coverage_cmd->add_option("--max", max_total, "Largest s+u")->check(CLI::Range(2, 12));
  coverage_cmd->add_option("--without", without, "Seeds to drop, e.g. \"3,1;1,3\"");
  coverage_cmd->callback(
      [&] { status = run_coverage(restriction, max_total, without, effective_workers()); });

  int verify_n = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities and reference counts");
  verify_cmd->add_option("-N", verify_n, "Largest n")->required()->check(CLI::Range(3, 12));
  verify_cmd->callback([&] { status = run_verify(verify_n, effective_workers()); });

  std::string from = "mq";
  std::string convert_out;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between map formats");
  convert_cmd->add_option("input", input, "Input file")->required();
  convert_cmd->add_option("--from", from, "Input format (default mq)")
      ->transform(CLI::IsMember({"mq", "planar_code"}));
  add_format_option(convert_cmd, format);
  convert_cmd->add_option("-o,--output", convert_out, "Output file");
  convert_cmd->callback([&] { status = run_convert(input, from, format, convert_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "quadforge: " << e.what() << '\n';
    return 2;
  }
  return status;
}
