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

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadforge/embedded_map.hpp"
#include "quadforge/genesis.hpp"

namespace quadforge {

/// Malformed input; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Output the chosen format cannot represent (e.g. planar_code of a multigraph).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MqRecord {
  EmbeddedMap map;
  std::optional<Colouring> colouring;
};

// Native MQ text format:
//
//   MQ1 <n> <m>[ C]
//   [S|U ]<darts of vertex 0 clockwise from its smallest dart>
//   ...
//
// Vertices appear in increasing order of their smallest dart, darts are
// 0..2m-1 with d and d^1 forming an edge, and every dart appears once.

void write_mq(std::ostream& out, const EmbeddedMap& map,
              const Colouring* colouring = nullptr);
std::string to_mq(const EmbeddedMap& map, const Colouring* colouring = nullptr);

/// Reads every record in the stream. Throws ParseError on any violated
/// invariant; `requirement` selects whether faces must be quadrilaterals.
std::vector<MqRecord> read_mq(std::istream& in,
                              Requirement requirement = Requirement::kQuadrangulation);
std::vector<MqRecord> read_mq_file(const std::string& path,
                                   Requirement requirement = Requirement::kQuadrangulation);
MqRecord parse_mq(const std::string& text,
                  Requirement requirement = Requirement::kQuadrangulation);

// planar_code: ">>planar_code<<" header, then per map one byte vertex count
// followed by each vertex's clockwise 1-based neighbour list ending in 0.

void write_planar_code_header(std::ostream& out);
/// Throws FormatError for maps with parallel edges.
void write_planar_code(std::ostream& out, const EmbeddedMap& map);
std::vector<EmbeddedMap> read_planar_code(std::istream& in);

/// Undirected DOT graph with colour attributes and one rotation comment per vertex.
void write_dot(std::ostream& out, const EmbeddedMap& map,
               const Colouring* colouring = nullptr, const std::string& name = "quadrangulation");

/// One line per class: `<child code> | <parent code> | <vertex> <first> <last>`.
void write_witnesses(std::ostream& out, const GenerationLevel& level);

}  // namespace quadforge
