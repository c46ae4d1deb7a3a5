// Copyright 2026 The tropgal Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TROPGAL_IO_HPP_
#define TROPGAL_IO_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropgal/group_action.hpp"
#include "tropgal/torus_sep.hpp"

namespace tropgal {

/// Malformed input; carries the file name and 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, int line, const std::string& message)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + message),
        file_(std::move(file)),
        line_(line) {}
  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

// Curve files: "curve <name>", then "vertex <name>" lines, then
// "edge <name> <v> <w> <length>" lines. Lengths are ExtRat text; "inf" is
// allowed on leaf edges only and the point at infinity is the second
// endpoint. Loops are subdivided at load time ("<e>.mid", "<e>.a"/"<e>.b").
// '#' starts a comment.
ModelPtr parse_curve(std::istream& in, const std::string& filename);
ModelPtr load_curve_file(const std::string& path);
std::string emit_curve(const Model& m);

struct NamedGenerator {
  std::string name;
  ModelAutomorphism map;
};
struct ActionFile {
  std::string curve_name;
  std::vector<NamedGenerator> generators;
};
// Action files: "action over <curve>", then "gen <name>" blocks of
// "v <a> -> <b>" and "e <a> -> <b> <+|->" lines. Unmentioned vertices and
// edges are fixed.
ActionFile parse_action(std::istream& in, const std::string& filename, const ModelPtr& model);
ActionFile load_action_file(const std::string& path, const ModelPtr& model);
std::string emit_action(const ActionFile& action);

// Function files: "fn over <curve>", optional "neginf", "cut <new-vertex>
// <edge> <offset>" lines declaring the refinement, then "value <vertex>
// <ExtRat>" and "slope <edge> <int>" lines; subdivided edges are named
// "<edge>:<i>" in offset order. Continuity is validated exactly.
PLFunction parse_fn(std::istream& in, const std::string& filename, const ModelPtr& model);
PLFunction load_fn_file(const std::string& path, const ModelPtr& model);
std::string emit_fn(const PLFunction& f);

// Morphism files: "morphism <source-curve> <target-curve>", then
// "vmap <v> <v'>" and "emap <e> <e'> <+|-> <deg>" lines. The target curve is
// loaded from the sibling file "<target-curve>.curve".
HarmonicMorphism parse_morphism(std::istream& in, const std::string& filename,
                                const ModelPtr& source, const ModelPtr& target);
HarmonicMorphism load_morphism_file(const std::string& path, const ModelPtr& source);
std::string emit_morphism(const HarmonicMorphism& phi);

/// Subgraph specs for the CLI: "all", or a comma list of vertex names,
/// "edge@offset" points and "edge@lo..hi" intervals.
Subgraph parse_subgraph_spec(const ModelPtr& m, const std::string& spec);

// Torus points: one point per line, comma-separated rationals.
std::vector<TorusPoint> parse_points(std::istream& in, const std::string& filename);
std::vector<TorusPoint> load_points_file(const std::string& path);
// Coordinate permutations: one per line, n space-separated 1-based images.
std::vector<std::vector<int>> parse_perms(std::istream& in, const std::string& filename,
                                          std::size_t n);
std::vector<std::vector<int>> load_perms_file(const std::string& path, std::size_t n);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace tropgal

#endif  // TROPGAL_IO_HPP_
