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

#ifndef TROPGAL_METRIC_GRAPH_HPP_
#define TROPGAL_METRIC_GRAPH_HPP_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropgal/rational.hpp"

namespace tropgal {

/// An edge of a loopless model. Edges of infinite length always store the
/// finite endpoint as `v` and the point at infinity as `w`; interior offsets
/// are measured from `v`.
struct Edge {
  std::string name;
  int v = -1;
  int w = -1;
  ExtRat length;

  bool infinite() const { return length.is_pos_inf(); }
};

struct EdgeSpec {
  std::string name;
  std::string v;
  std::string w;
  ExtRat length;
};

/// A loopless model of a tropical curve: a finite connected multigraph with
/// positive (possibly infinite) edge lengths. Infinite lengths are allowed on
/// leaf edges only; the leaf end of such an edge is its point at infinity.
/// Immutable after construction; shared via shared_ptr.
class Model {
 public:
  /// Validates and builds. Throws std::invalid_argument with a description
  /// of the first violated constraint.
  static std::shared_ptr<const Model> make(std::string name,
                                           std::vector<std::string> vertices,
                                           std::vector<EdgeSpec> edges);

  const std::string& name() const { return name_; }
  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// -1 when absent.
  int vertex_index(const std::string& name) const;
  int edge_index(const std::string& name) const;

  bool vertex_at_infinity(int v) const { return at_infinity_[v]; }
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  int degree(int v) const { return static_cast<int>(incident_[v].size()); }
  bool is_singleton() const { return edges_.empty(); }

  /// Smallest finite edge length; nullopt when every edge is infinite or the
  /// model is a singleton.
  std::optional<Rational> min_finite_edge_length() const;

 private:
  Model() = default;

  std::string name_;
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<bool> at_infinity_;
  std::vector<std::vector<int>> incident_;
  std::map<std::string, int> vertex_by_name_;
  std::map<std::string, int> edge_by_name_;
};

using ModelPtr = std::shared_ptr<const Model>;

/// A point of the metric realization: a vertex, or an interior point of an
/// edge at a given offset from the edge's `v` endpoint.
struct Point {
  int vertex = -1;
  int edge = -1;
  ExtRat offset;

  static Point at_vertex(int v) {
    Point p;
    p.vertex = v;
    return p;
  }
  static Point on_edge(int e, ExtRat off) {
    Point p;
    p.edge = e;
    p.offset = std::move(off);
    return p;
  }
  bool is_vertex() const { return vertex >= 0; }
};

/// Normalizes boundary offsets (0, the full length, and inf on an infinite
/// edge) to the vertex form. Throws on out-of-range offsets.
Point canonical(const Model& m, Point p);

bool point_eq(const Model& m, const Point& a, const Point& b);
bool at_infinity(const Model& m, const Point& p);
std::string point_str(const Model& m, const Point& p);

/// Number of local branches at p: 2 for interior points, the vertex degree
/// for model vertices.
int valence(const Model& m, const Point& p);

/// Closed subinterval of an edge, in offsets from the edge's `v` endpoint.
/// Degenerate (lo == hi) intervals are single points. hi == +inf includes the
/// point at infinity of an infinite edge.
struct Interval {
  ExtRat lo;
  ExtRat hi;
};

/// A compact subgraph: finitely many closed edge intervals plus vertices,
/// kept normalized (overlapping or touching intervals merged, vertices
/// covered by interval endpoints recorded).
class Subgraph {
 public:
  explicit Subgraph(ModelPtr m) : model_(std::move(m)) {}

  static Subgraph whole(ModelPtr m);
  static Subgraph of_points(ModelPtr m, const std::vector<Point>& pts);

  void add_vertex(int v);
  void add_interval(int e, const ExtRat& lo, const ExtRat& hi);
  void add_point(const Point& p);

  const ModelPtr& model() const { return model_; }
  bool empty() const { return vertices_.empty() && intervals_.empty(); }
  bool contains(const Point& p) const;

  /// Per-edge normalized interval lists (sorted, disjoint, non-touching).
  const std::map<int, std::vector<Interval>>& intervals() const { return intervals_; }
  /// All covered model vertices, including interval endpoints.
  const std::set<int>& vertices() const { return vertices_; }

  /// Interval endpoints interior to their edges (refinement cut sites).
  std::vector<Point> boundary_interior_points() const;

 private:
  ModelPtr model_;
  std::set<int> vertices_;
  std::map<int, std::vector<Interval>> intervals_;
};

/// Point transport between a model and one of its refinements.
class Relocation {
 public:
  struct SubEdge {
    int to_edge = -1;
    ExtRat lo;  // offset range within the parent edge, ascending;
    ExtRat hi;  // the sub-edge's v end sits at lo, its w end at hi
  };

  ModelPtr from;
  ModelPtr to;
  std::vector<int> vertex_map;                 // from-vertex -> to-vertex
  std::vector<std::vector<SubEdge>> pieces;    // per from-edge, ordered by lo

  Point map_point(const Point& p) const;
  Point unmap_point(const Point& p) const;

  int parent_edge(int to_edge) const { return to_parent_[to_edge]; }
  const ExtRat& parent_lo(int to_edge) const { return to_lo_[to_edge]; }

  static Relocation identity(ModelPtr m);
  void build_inverse();  // fills to_parent_ / to_lo_ after pieces are set

 private:
  std::vector<int> to_parent_;
  std::vector<ExtRat> to_lo_;
};

struct RefineResult {
  ModelPtr model;
  Relocation reloc;
};

/// Promotes the given interior points to vertices. Cuts at existing vertices
/// are ignored; cuts at points at infinity are an error. New vertices are
/// named "<edge>@<offset>", sub-edges "<edge>:<i>".
RefineResult refine(const ModelPtr& m, const std::vector<Point>& cuts);

struct CommonRefinement {
  ModelPtr model;
  Relocation from1;  // m1 -> model
  Relocation from2;  // m2 -> model
};

/// Coarsest model refining two refinements of one reference model. The pair
/// of relocations (reference -> m1, reference -> m2) is the correspondence
/// witnessing that both present the same curve; it must be length-compatible
/// (same reference), which is validated.
CommonRefinement common_refinement(const Relocation& ref_to_m1, const Relocation& ref_to_m2);

/// Shortest-path distance in the metric realization. +inf between a point at
/// infinity and anything else (including a distinct point at infinity).
ExtRat distance(const Model& m, const Point& p, const Point& q);

namespace detail {
/// Multi-source Dijkstra over the vertex skeleton; infinite edges are never
/// traversed. nullopt = unreachable through finite edges.
std::vector<std::optional<Rational>> shortest_from_sources(const Model& m,
                                                           const std::vector<int>& sources);
}  // namespace detail

}  // namespace tropgal

#endif  // TROPGAL_METRIC_GRAPH_HPP_
