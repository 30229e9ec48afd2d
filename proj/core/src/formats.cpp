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

#include "quadforge/formats.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace quadforge {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

void write_mq(std::ostream& out, const EmbeddedMap& map, const Colouring* colouring) {
  out << "MQ1 " << map.vertex_count() << ' ' << map.edge_count();
  if (colouring) out << " C";
  out << '\n';
  for (int v = 0; v < map.vertex_count(); ++v) {
    bool first = true;
    if (colouring) {
      out << colour_char((*colouring)[v]);
      first = false;
    }
    for (int d : map.rotation(v)) {
      if (!first) out << ' ';
      out << d;
      first = false;
    }
    out << '\n';
  }
}

std::string to_mq(const EmbeddedMap& map, const Colouring* colouring) {
  std::ostringstream out;
  write_mq(out, map, colouring);
  return out.str();
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

int to_int(const std::string& token, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!is_blank(line)) return true;
    }
    return false;
  }

  bool next_raw(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  int number() const { return number_; }

 private:
  std::istream& in_;
  int number_ = 0;
};

MqRecord read_record(LineReader& reader, const std::string& header_line,
                     Requirement requirement) {
  const int header_no = reader.number();
  const auto header = tokens(header_line);
  if (header.size() < 3 || header.size() > 4 || header[0] != "MQ1") {
    throw ParseError(header_no, "expected header 'MQ1 <n> <m> [C]'");
  }
  const int n = to_int(header[1], header_no);
  const int m = to_int(header[2], header_no);
  const bool coloured = header.size() == 4;
  if (coloured && header[3] != "C") {
    throw ParseError(header_no, "unexpected header token '" + header[3] + "'");
  }
  if (n < 1 || m < 1) throw ParseError(header_no, "vertex and edge counts must be positive");

  const int darts = 2 * m;
  std::vector<int> sigma(darts, -1);
  std::vector<Colour> colours;
  int previous_smallest = -1;
  for (int v = 0; v < n; ++v) {
    std::string line;
    if (!reader.next_raw(line)) {
      throw ParseError(reader.number() + 1, "missing vertex line " + std::to_string(v));
    }
    const int line_no = reader.number();
    auto tok = tokens(line);
    std::size_t start = 0;
    if (coloured) {
      if (tok.empty() || (tok[0] != "S" && tok[0] != "U")) {
        throw ParseError(line_no, "expected colour 'S' or 'U'");
      }
      colours.push_back(tok[0] == "S" ? Colour::kStable : Colour::kUnstable);
      start = 1;
    }
    if (tok.size() <= start) throw ParseError(line_no, "vertex without darts");
    std::vector<int> rot;
    for (std::size_t i = start; i < tok.size(); ++i) {
      const int d = to_int(tok[i], line_no);
      if (d < 0 || d >= darts) throw ParseError(line_no, "dart " + tok[i] + " out of range");
      if (sigma[d] != -1) throw ParseError(line_no, "dart " + tok[i] + " listed twice");
      rot.push_back(d);
      sigma[d] = -2;
    }
    for (std::size_t i = 1; i < rot.size(); ++i) {
      if (rot[i] < rot[0]) {
        throw ParseError(line_no, "rotation must start at the smallest dart of the vertex");
      }
    }
    if (rot[0] <= previous_smallest) {
      throw ParseError(line_no, "vertices must be listed by increasing smallest dart");
    }
    previous_smallest = rot[0];
    for (std::size_t i = 0; i < rot.size(); ++i) sigma[rot[i]] = rot[(i + 1) % rot.size()];
  }
  for (int d = 0; d < darts; ++d) {
    if (sigma[d] < 0) throw ParseError(reader.number(), "dart " + std::to_string(d) + " missing");
  }
  EmbeddedMap map(std::move(sigma));
  const ValidationReport report = validate(map, requirement);
  if (!report.ok()) throw ParseError(header_no, "invalid map: " + report.to_string());
  MqRecord record{std::move(map), std::nullopt};
  if (coloured) {
    Colouring colouring(std::move(colours));
    if (!colouring.is_proper_for(record.map)) {
      throw ParseError(header_no, "colouring is not a proper 2-colouring");
    }
    record.colouring = std::move(colouring);
  }
  return record;
}

}  // namespace

std::vector<MqRecord> read_mq(std::istream& in, Requirement requirement) {
  LineReader reader(in);
  std::vector<MqRecord> out;
  std::string line;
  while (reader.next(line)) out.push_back(read_record(reader, line, requirement));
  return out;
}

std::vector<MqRecord> read_mq_file(const std::string& path, Requirement requirement) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_mq(in, requirement);
}

MqRecord parse_mq(const std::string& text, Requirement requirement) {
  std::istringstream in(text);
  auto records = read_mq(in, requirement);
  if (records.size() != 1) throw ParseError(0, "expected exactly one MQ record");
  return std::move(records.front());
}

void write_planar_code_header(std::ostream& out) { out << ">>planar_code<<"; }

void write_planar_code(std::ostream& out, const EmbeddedMap& map) {
  if (!is_simple(map)) throw FormatError("planar_code requires simple maps");
  if (map.vertex_count() > 255) throw FormatError("planar_code supports at most 255 vertices");
  out.put(static_cast<char>(map.vertex_count()));
  for (int v = 0; v < map.vertex_count(); ++v) {
    for (int d : map.rotation(v)) out.put(static_cast<char>(map.head(d) + 1));
    out.put('\0');
  }
}

std::vector<EmbeddedMap> read_planar_code(std::istream& in) {
  const std::string header = ">>planar_code<<";
  std::string seen(header.size(), '\0');
  if (!in.read(seen.data(), static_cast<std::streamsize>(seen.size())) || seen != header) {
    throw ParseError(0, "missing >>planar_code<< header");
  }
  std::vector<EmbeddedMap> out;
  for (;;) {
    const int n = in.get();
    if (n == std::char_traits<char>::eof()) break;
    std::vector<std::vector<int>> nb(n);
    for (int v = 0; v < n; ++v) {
      for (;;) {
        const int c = in.get();
        if (c == std::char_traits<char>::eof()) throw ParseError(0, "truncated planar_code");
        if (c == 0) break;
        if (c > n) throw ParseError(0, "neighbour index out of range");
        nb[v].push_back(c - 1);
      }
    }
    try {
      out.push_back(from_neighbour_lists(nb));
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, e.what());
    }
  }
  return out;
}

void write_dot(std::ostream& out, const EmbeddedMap& map, const Colouring* colouring,
               const std::string& name) {
  out << "graph " << name << " {\n";
  for (int v = 0; v < map.vertex_count(); ++v) {
    out << "  v" << v;
    if (colouring) {
      const bool stable = (*colouring)[v] == Colour::kStable;
      out << " [equilibrium=" << (stable ? "stable" : "unstable")
          << ", color=" << (stable ? "red" : "blue") << "]";
    }
    out << ";  // rotation:";
    for (int d : map.rotation(v)) out << " v" << map.head(d) << "(" << d << ")";
    out << "\n";
  }
  for (int d = 0; d < map.dart_count(); d += 2) {
    out << "  v" << map.vertex_of(d) << " -- v" << map.vertex_of(d + 1) << " [darts=\"" << d
        << "," << d + 1 << "\"];\n";
  }
  out << "}\n";
}

void write_witnesses(std::ostream& out, const GenerationLevel& level) {
  for (const auto& [code, witness] : level.parent_links) {
    out << code.to_string() << " | " << witness.parent.to_string() << " | "
        << witness.walk.vertex << ' ' << witness.walk.first << ' ' << witness.walk.last << '\n';
  }
}

}  // namespace quadforge
