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

#include "tropgal/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace tropgal {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

ExtRat parse_extrat_at(const std::string& file, int line, const std::string& tok) {
  try {
    return ExtRat::parse(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(file, line, e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

// ---------------------------------------------------------------------------
// Curves

ModelPtr parse_curve(std::istream& in, const std::string& filename) {
  const auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "curve") {
    throw ParseError(filename, lines.empty() ? 1 : lines[0].number, "expected 'curve <name>' header");
  }
  if (lines[0].tokens.size() != 2) {
    throw ParseError(filename, lines[0].number, "expected 'curve <name>'");
  }
  std::string name = lines[0].tokens[1];
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::map<std::string, int> vertex_lines;
  std::map<std::string, int> degree;
  struct PendingInf {
    std::string edge;
    std::string leaf;
    int line;
  };
  std::vector<PendingInf> inf_edges;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    const auto& t = ln.tokens;
    if (t[0] == "vertex") {
      if (t.size() != 2) throw ParseError(filename, ln.number, "expected 'vertex <name>'");
      if (vertex_lines.count(t[1])) {
        throw ParseError(filename, ln.number, "duplicate vertex '" + t[1] + "'");
      }
      vertex_lines[t[1]] = ln.number;
      vertices.push_back(t[1]);
    } else if (t[0] == "edge") {
      if (t.size() != 5) {
        throw ParseError(filename, ln.number, "expected 'edge <name> <v> <w> <length>'");
      }
      if (!vertex_lines.count(t[2]) || !vertex_lines.count(t[3])) {
        throw ParseError(filename, ln.number, "edge references an undeclared vertex");
      }
      const ExtRat len = parse_extrat_at(filename, ln.number, t[4]);
      if (len.is_neg_inf() || (len.is_finite() && len.value() <= 0)) {
        throw ParseError(filename, ln.number, "edge length must be positive or 'inf'");
      }
      if (t[2] == t[3]) {
        // loopless models only: subdivide the loop in half at load time
        if (!len.is_finite()) {
          throw ParseError(filename, ln.number, "a loop cannot have infinite length");
        }
        const std::string mid = t[1] + ".mid";
        if (vertex_lines.count(mid)) {
          throw ParseError(filename, ln.number, "vertex '" + mid + "' collides with loop subdivision");
        }
        vertex_lines[mid] = ln.number;
        vertices.push_back(mid);
        const ExtRat half(len.value() / 2);
        edges.push_back({t[1] + ".a", t[2], mid, half});
        edges.push_back({t[1] + ".b", mid, t[3], half});
        degree[t[2]] += 2;
        degree[mid] += 2;
        continue;
      }
      edges.push_back({t[1], t[2], t[3], len});
      degree[t[2]] += 1;
      degree[t[3]] += 1;
      if (len.is_pos_inf()) inf_edges.push_back({t[1], t[3], ln.number});
    } else {
      throw ParseError(filename, ln.number, "unknown directive '" + t[0] + "'");
    }
  }
  for (const auto& pe : inf_edges) {
    if (degree[pe.leaf] != 1) {
      throw ParseError(filename, pe.line,
                       "the point at infinity of edge '" + pe.edge +
                           "' must be its second endpoint, a leaf");
    }
  }
  try {
    return Model::make(std::move(name), std::move(vertices), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(filename, lines[0].number, e.what());
  }
}

ModelPtr load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_curve(in, path);
}

std::string emit_curve(const Model& m) {
  std::ostringstream out;
  out << "curve " << m.name() << "\n";
  for (int v = 0; v < m.vertex_count(); ++v) out << "vertex " << m.vertex_name(v) << "\n";
  for (const auto& e : m.edges()) {
    out << "edge " << e.name << " " << m.vertex_name(e.v) << " " << m.vertex_name(e.w) << " "
        << e.length.str() << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Actions

ActionFile parse_action(std::istream& in, const std::string& filename, const ModelPtr& model) {
  const auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "action" || lines[0].tokens.size() != 3 ||
      lines[0].tokens[1] != "over") {
    throw ParseError(filename, lines.empty() ? 1 : lines[0].number,
                     "expected 'action over <curve>' header");
  }
  ActionFile out;
  out.curve_name = lines[0].tokens[2];
  if (out.curve_name != model->name()) {
    throw ParseError(filename, lines[0].number,
                     "action is over '" + out.curve_name + "' but the curve is '" +
                         model->name() + "'");
  }

  struct GenDraft {
    std::string name;
    int line;
    std::vector<int> vmap;
    std::vector<ModelAutomorphism::EdgeTarget> emap;
    std::vector<bool> vset, eset;
  };
  std::vector<GenDraft> drafts;
  auto flush = [&](GenDraft& d) {
    try {
      out.generators.push_back({d.name, ModelAutomorphism(model, d.vmap, d.emap)});
    } catch (const std::invalid_argument& e) {
      throw ParseError(filename, d.line, std::string("generator '") + d.name + "': " + e.what());
    }
  };

  GenDraft* cur = nullptr;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    const auto& t = ln.tokens;
    if (t[0] == "gen") {
      if (t.size() != 2) throw ParseError(filename, ln.number, "expected 'gen <name>'");
      drafts.push_back({t[1], ln.number, {}, {}, {}, {}});
      cur = &drafts.back();
      cur->vmap.resize(model->vertex_count());
      cur->emap.resize(model->edge_count());
      cur->vset.assign(model->vertex_count(), false);
      cur->eset.assign(model->edge_count(), false);
      for (int v = 0; v < model->vertex_count(); ++v) cur->vmap[v] = v;
      for (int e = 0; e < model->edge_count(); ++e) cur->emap[e] = {e, false};
    } else if (t[0] == "v" || t[0] == "e") {
      if (!cur) throw ParseError(filename, ln.number, "mapping line before any 'gen'");
      const bool is_vertex = t[0] == "v";
      if ((is_vertex && t.size() != 4) || (!is_vertex && t.size() != 5) || t[2] != "->") {
        throw ParseError(filename, ln.number,
                         is_vertex ? "expected 'v <a> -> <b>'" : "expected 'e <a> -> <b> <+|->'");
      }
      if (is_vertex) {
        const int a = model->vertex_index(t[1]);
        const int b = model->vertex_index(t[3]);
        if (a < 0 || b < 0) throw ParseError(filename, ln.number, "unknown vertex");
        if (cur->vset[a]) throw ParseError(filename, ln.number, "vertex '" + t[1] + "' mapped twice");
        cur->vset[a] = true;
        cur->vmap[a] = b;
      } else {
        const int a = model->edge_index(t[1]);
        const int b = model->edge_index(t[3]);
        if (a < 0 || b < 0) throw ParseError(filename, ln.number, "unknown edge");
        if (t[4] != "+" && t[4] != "-") {
          throw ParseError(filename, ln.number, "orientation must be '+' or '-'");
        }
        if (cur->eset[a]) throw ParseError(filename, ln.number, "edge '" + t[1] + "' mapped twice");
        cur->eset[a] = true;
        cur->emap[a] = {b, t[4] == "-"};
      }
    } else {
      throw ParseError(filename, ln.number, "unknown directive '" + t[0] + "'");
    }
  }
  for (auto& d : drafts) flush(d);
  return out;
}

ActionFile load_action_file(const std::string& path, const ModelPtr& model) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_action(in, path, model);
}

std::string emit_action(const ActionFile& action) {
  std::ostringstream out;
  if (action.generators.empty()) {
    out << "action over " << action.curve_name << "\n";
    return out.str();
  }
  const Model& m = *action.generators.front().map.model();
  out << "action over " << action.curve_name << "\n";
  for (const auto& g : action.generators) {
    out << "gen " << g.name << "\n";
    for (int v = 0; v < m.vertex_count(); ++v) {
      if (g.map.map_vertex(v) != v) {
        out << "v " << m.vertex_name(v) << " -> " << m.vertex_name(g.map.map_vertex(v)) << "\n";
      }
    }
    for (int e = 0; e < m.edge_count(); ++e) {
      const auto& et = g.map.map_edge(e);
      if (et.edge != e || et.reversed) {
        out << "e " << m.edge(e).name << " -> " << m.edge(et.edge).name << " "
            << (et.reversed ? "-" : "+") << "\n";
      }
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Functions

PLFunction parse_fn(std::istream& in, const std::string& filename, const ModelPtr& model) {
  const auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "fn" || lines[0].tokens.size() != 3 ||
      lines[0].tokens[1] != "over") {
    throw ParseError(filename, lines.empty() ? 1 : lines[0].number,
                     "expected 'fn over <curve>' header");
  }
  if (lines[0].tokens[2] != model->name()) {
    throw ParseError(filename, lines[0].number,
                     "function is over '" + lines[0].tokens[2] + "' but the curve is '" +
                         model->name() + "'");
  }
  if (lines.size() == 2 && lines[1].tokens.size() == 1 && lines[1].tokens[0] == "neginf") {
    return PLFunction::neg_inf(model);
  }

  struct Cut {
    std::string vertex;
    Rational offset;
    int line;
  };
  std::map<int, std::vector<Cut>> cuts;  // per reference edge
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    const auto& t = ln.tokens;
    if (t[0] == "cut") {
      if (t.size() != 4) throw ParseError(filename, ln.number, "expected 'cut <vertex> <edge> <offset>'");
      const int e = model->edge_index(t[2]);
      if (e < 0) throw ParseError(filename, ln.number, "unknown edge '" + t[2] + "'");
      const ExtRat off = parse_extrat_at(filename, ln.number, t[3]);
      if (!off.is_finite() || off.value() <= 0 ||
          (model->edge(e).length.is_finite() && off >= model->edge(e).length)) {
        throw ParseError(filename, ln.number, "cut offset must be interior to the edge");
      }
      cuts[e].push_back({t[1], off.value(), ln.number});
    } else if (t[0] == "value" || t[0] == "slope") {
      // handled in the second pass, once the cut map is complete
    } else if (t[0] == "neginf") {
      throw ParseError(filename, ln.number, "'neginf' must be the only body line");
    } else {
      throw ParseError(filename, ln.number, "unknown directive '" + t[0] + "'");
    }
  }

  // resolve names: reference vertices plus cut vertices; sub-edges "<e>:<i>"
  std::map<std::string, std::pair<int, Rational>> cut_by_name;  // name -> (edge, offset)
  std::map<std::string, std::pair<int, int>> sub_edge;          // "<e>:<i>" -> (edge, piece idx)
  for (auto& [e, list] : cuts) {
    std::sort(list.begin(), list.end(), [](const Cut& a, const Cut& b) { return a.offset < b.offset; });
    for (std::size_t i = 0; i + 1 < list.size(); ++i) {
      if (list[i].offset == list[i + 1].offset) {
        throw ParseError(filename, list[i + 1].line, "duplicate cut offset");
      }
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (model->vertex_index(list[i].vertex) >= 0 || cut_by_name.count(list[i].vertex)) {
        throw ParseError(filename, list[i].line, "cut vertex '" + list[i].vertex + "' already names a vertex");
      }
      cut_by_name[list[i].vertex] = {e, list[i].offset};
    }
    for (std::size_t i = 0; i <= list.size(); ++i) {
      sub_edge[model->edge(e).name + ":" + std::to_string(i)] = {e, static_cast<int>(i)};
    }
  }

  std::vector<std::optional<ExtRat>> vertex_values(model->vertex_count());
  std::map<std::string, ExtRat> cut_values;
  std::map<int, std::vector<std::optional<long long>>> slopes;  // per edge, per piece
  for (int e = 0; e < model->edge_count(); ++e) {
    slopes[e].assign(cuts.count(e) ? cuts[e].size() + 1 : 1, std::nullopt);
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    const auto& t = ln.tokens;
    if (t[0] == "value") {
      if (t.size() != 3) throw ParseError(filename, ln.number, "expected 'value <vertex> <ExtRat>'");
      const ExtRat val = parse_extrat_at(filename, ln.number, t[2]);
      const int v = model->vertex_index(t[1]);
      if (v >= 0) {
        if (vertex_values[v]) throw ParseError(filename, ln.number, "duplicate value for '" + t[1] + "'");
        vertex_values[v] = val;
      } else if (cut_by_name.count(t[1])) {
        if (cut_values.count(t[1])) throw ParseError(filename, ln.number, "duplicate value for '" + t[1] + "'");
        cut_values[t[1]] = val;
      } else {
        throw ParseError(filename, ln.number, "unknown vertex '" + t[1] + "'");
      }
    } else if (t[0] == "slope") {
      if (t.size() != 3) throw ParseError(filename, ln.number, "expected 'slope <edge> <int>'");
      long long s = 0;
      try {
        s = std::stoll(t[2]);
      } catch (...) {
        throw ParseError(filename, ln.number, "slope must be an integer");
      }
      int e = model->edge_index(t[1]);
      int piece = 0;
      if (e >= 0 && cuts.count(e)) {
        throw ParseError(filename, ln.number, "edge '" + t[1] + "' is subdivided; use '" + t[1] + ":<i>'");
      }
      if (e < 0) {
        auto it = sub_edge.find(t[1]);
        if (it == sub_edge.end()) throw ParseError(filename, ln.number, "unknown edge '" + t[1] + "'");
        e = it->second.first;
        piece = it->second.second;
      }
      if (slopes[e][piece]) throw ParseError(filename, ln.number, "duplicate slope for '" + t[1] + "'");
      slopes[e][piece] = s;
    }
  }

  for (int v = 0; v < model->vertex_count(); ++v) {
    if (!vertex_values[v]) {
      throw ParseError(filename, lines[0].number,
                       "missing value for vertex '" + model->vertex_name(v) + "'");
    }
  }
  for (const auto& [name, loc] : cut_by_name) {
    if (!cut_values.count(name)) {
      throw ParseError(filename, lines[0].number, "missing value for cut vertex '" + name + "'");
    }
    (void)loc;
  }
  std::vector<ExtRat> values(model->vertex_count());
  for (int v = 0; v < model->vertex_count(); ++v) values[v] = *vertex_values[v];

  std::vector<std::vector<Piece>> pieces(model->edge_count());
  for (int e = 0; e < model->edge_count(); ++e) {
    Rational start(0);
    const auto& slist = slopes[e];
    for (std::size_t i = 0; i < slist.size(); ++i) {
      if (!slist[i]) {
        const std::string nm = slist.size() == 1 ? model->edge(e).name
                                                 : model->edge(e).name + ":" + std::to_string(i);
        throw ParseError(filename, lines[0].number, "missing slope for edge '" + nm + "'");
      }
      pieces[e].push_back({start, *slist[i]});
      if (cuts.count(e) && i < cuts[e].size()) start = cuts[e][i].offset;
    }
  }
  PLFunction f = [&] {
    try {
      return PLFunction::from_data(model, values, std::move(pieces));
    } catch (const std::invalid_argument& e) {
      throw ParseError(filename, lines[0].number, e.what());
    }
  }();
  for (const auto& [name, val] : cut_values) {
    const auto& [e, off] = cut_by_name[name];
    if (evaluate(f, Point::on_edge(e, ExtRat(off))) != val) {
      throw ParseError(filename, lines[0].number,
                       "value at cut vertex '" + name + "' breaks continuity");
    }
  }
  return f;
}

PLFunction load_fn_file(const std::string& path, const ModelPtr& model) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_fn(in, path, model);
}

std::string emit_fn(const PLFunction& f) {
  std::ostringstream out;
  const Model& m = *f.curve();
  out << "fn over " << m.name() << "\n";
  if (f.is_neg_inf()) {
    out << "neginf\n";
    return out.str();
  }
  for (int e = 0; e < m.edge_count(); ++e) {
    const auto& list = f.edge_pieces(e);
    for (std::size_t i = 1; i < list.size(); ++i) {
      out << "cut " << m.edge(e).name << "@" << to_string(list[i].start) << " " << m.edge(e).name
          << " " << to_string(list[i].start) << "\n";
    }
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    out << "value " << m.vertex_name(v) << " " << f.value_at_vertex(v).str() << "\n";
  }
  for (int e = 0; e < m.edge_count(); ++e) {
    const auto& list = f.edge_pieces(e);
    for (std::size_t i = 1; i < list.size(); ++i) {
      out << "value " << m.edge(e).name << "@" << to_string(list[i].start) << " "
          << evaluate(f, Point::on_edge(e, ExtRat(list[i].start))).str() << "\n";
    }
  }
  for (int e = 0; e < m.edge_count(); ++e) {
    const auto& list = f.edge_pieces(e);
    if (list.size() == 1) {
      out << "slope " << m.edge(e).name << " " << list[0].slope << "\n";
    } else {
      for (std::size_t i = 0; i < list.size(); ++i) {
        out << "slope " << m.edge(e).name << ":" << i << " " << list[i].slope << "\n";
      }
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Morphisms

HarmonicMorphism parse_morphism(std::istream& in, const std::string& filename,
                                const ModelPtr& source, const ModelPtr& target) {
  const auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "morphism" || lines[0].tokens.size() != 3) {
    throw ParseError(filename, lines.empty() ? 1 : lines[0].number,
                     "expected 'morphism <source-curve> <target-curve>' header");
  }
  if (lines[0].tokens[1] != source->name()) {
    throw ParseError(filename, lines[0].number,
                     "morphism source is '" + lines[0].tokens[1] + "' but the curve is '" +
                         source->name() + "'");
  }
  std::vector<int> vmap(source->vertex_count(), -1);
  std::vector<EdgeImage> emap(source->edge_count());
  std::vector<bool> eset(source->edge_count(), false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    const auto& t = ln.tokens;
    if (t[0] == "vmap") {
      if (t.size() != 3) throw ParseError(filename, ln.number, "expected 'vmap <v> <v2>'");
      const int a = source->vertex_index(t[1]);
      const int b = target->vertex_index(t[2]);
      if (a < 0) throw ParseError(filename, ln.number, "unknown source vertex '" + t[1] + "'");
      if (b < 0) throw ParseError(filename, ln.number, "unknown target vertex '" + t[2] + "'");
      if (vmap[a] >= 0) throw ParseError(filename, ln.number, "vertex '" + t[1] + "' mapped twice");
      vmap[a] = b;
    } else if (t[0] == "emap") {
      if (t.size() != 5 || (t[3] != "+" && t[3] != "-")) {
        throw ParseError(filename, ln.number, "expected 'emap <e> <e2> <+|-> <deg>'");
      }
      const int a = source->edge_index(t[1]);
      const int b = target->edge_index(t[2]);
      if (a < 0) throw ParseError(filename, ln.number, "unknown source edge '" + t[1] + "'");
      if (b < 0) throw ParseError(filename, ln.number, "unknown target edge '" + t[2] + "'");
      long long deg = 0;
      try {
        deg = std::stoll(t[4]);
      } catch (...) {
        throw ParseError(filename, ln.number, "degree must be an integer");
      }
      if (deg < 1) throw ParseError(filename, ln.number, "degree must be positive");
      if (eset[a]) throw ParseError(filename, ln.number, "edge '" + t[1] + "' mapped twice");
      eset[a] = true;
      emap[a] = {b, t[3] == "-", deg};
    } else {
      throw ParseError(filename, ln.number, "unknown directive '" + t[0] + "'");
    }
  }
  for (int v = 0; v < source->vertex_count(); ++v) {
    if (vmap[v] < 0) {
      throw ParseError(filename, lines[0].number,
                       "missing vmap for vertex '" + source->vertex_name(v) + "'");
    }
  }
  for (int e = 0; e < source->edge_count(); ++e) {
    if (!eset[e]) {
      throw ParseError(filename, lines[0].number,
                       "missing emap for edge '" + source->edge(e).name + "'");
    }
  }
  return HarmonicMorphism(source, target, std::move(vmap), std::move(emap));
}

HarmonicMorphism load_morphism_file(const std::string& path, const ModelPtr& source) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  // peek the header for the target curve name, then load "<target>.curve"
  // from the morphism file's directory
  std::istringstream probe(read_text_file(path));
  const auto lines = tokenize(probe);
  if (lines.empty() || lines[0].tokens.size() != 3) {
    throw ParseError(path, 1, "expected 'morphism <source-curve> <target-curve>' header");
  }
  const std::string target_name = lines[0].tokens[2];
  std::string dir;
  const auto slash = path.find_last_of('/');
  if (slash != std::string::npos) dir = path.substr(0, slash + 1);
  const std::string target_path = dir + target_name + ".curve";
  ModelPtr target = load_curve_file(target_path);
  return parse_morphism(in, path, source, target);
}

std::string emit_morphism(const HarmonicMorphism& phi) {
  std::ostringstream out;
  const Model& s = *phi.source();
  const Model& t = *phi.target();
  out << "morphism " << s.name() << " " << t.name() << "\n";
  for (int v = 0; v < s.vertex_count(); ++v) {
    out << "vmap " << s.vertex_name(v) << " " << t.vertex_name(phi.map_vertex(v)) << "\n";
  }
  for (int e = 0; e < s.edge_count(); ++e) {
    const auto& img = phi.map_edge(e);
    out << "emap " << s.edge(e).name << " " << t.edge(img.edge).name << " "
        << (img.reversed ? "-" : "+") << " " << img.degree << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Subgraph specs

Subgraph parse_subgraph_spec(const ModelPtr& m, const std::string& spec) {
  if (spec == "all") return Subgraph::whole(m);
  Subgraph s(m);
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const auto comma = spec.find(',', pos);
    const std::string item =
        spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw std::invalid_argument("subgraph spec: empty item");
    const auto at = item.find('@');
    if (at == std::string::npos) {
      const int v = m->vertex_index(item);
      if (v < 0) throw std::invalid_argument("subgraph spec: unknown vertex '" + item + "'");
      s.add_vertex(v);
    } else {
      const int e = m->edge_index(item.substr(0, at));
      if (e < 0) {
        throw std::invalid_argument("subgraph spec: unknown edge '" + item.substr(0, at) + "'");
      }
      const std::string range = item.substr(at + 1);
      const auto dots = range.find("..");
      if (dots == std::string::npos) {
        s.add_interval(e, ExtRat::parse(range), ExtRat::parse(range));
      } else {
        s.add_interval(e, ExtRat::parse(range.substr(0, dots)),
                       ExtRat::parse(range.substr(dots + 2)));
      }
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Torus files

std::vector<TorusPoint> parse_points(std::istream& in, const std::string& filename) {
  std::vector<TorusPoint> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string compact;
    for (char c : raw) {
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    }
    if (compact.empty()) continue;
    TorusPoint p;
    std::size_t pos = 0;
    while (pos <= compact.size()) {
      const auto comma = compact.find(',', pos);
      const std::string tok =
          compact.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        p.coords.push_back(parse_rational(tok));
      } catch (const std::invalid_argument& e) {
        throw ParseError(filename, number, e.what());
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (!out.empty() && out[0].coords.size() != p.coords.size()) {
      throw ParseError(filename, number, "inconsistent dimension");
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<TorusPoint> load_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_points(in, path);
}

std::vector<std::vector<int>> parse_perms(std::istream& in, const std::string& filename,
                                          std::size_t n) {
  std::vector<std::vector<int>> out;
  const auto lines = tokenize(in);
  for (const auto& ln : lines) {
    if (ln.tokens.size() != n) {
      throw ParseError(filename, ln.number,
                       "expected " + std::to_string(n) + " coordinate images");
    }
    std::vector<int> p(n);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      int img = 0;
      try {
        img = std::stoi(ln.tokens[i]);
      } catch (...) {
        throw ParseError(filename, ln.number, "image must be an integer");
      }
      if (img < 1 || img > static_cast<int>(n) || hit[img - 1]) {
        throw ParseError(filename, ln.number, "not a permutation of 1.." + std::to_string(n));
      }
      hit[img - 1] = true;
      p[i] = img - 1;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<int>> load_perms_file(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_perms(in, path, n);
}

}  // namespace tropgal
