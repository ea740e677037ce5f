#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tropsym/rational.hpp"

namespace tropsym {

struct VertexSpec {
  std::string id;
  int weight = 0;
};

struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
  Rational length;
};

struct Vertex {
  std::string id;
  int weight = 0;
};

/// Oriented edge; positions along it are measured from `tail`.
struct Edge {
  std::string id;
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational length;

  bool is_loop() const { return tail == head; }
};

/// A point of the metric graph: either a vertex or a rational position in
/// the open interval (0, length) of an edge.
class PointOnModel {
 public:
  static PointOnModel at_vertex(std::size_t vertex);
  /// Unchecked; use Model::point_on_edge to normalize endpoints.
  static PointOnModel on_edge(std::size_t edge, Rational position);

  bool is_vertex() const { return is_vertex_; }
  std::size_t vertex() const;
  std::size_t edge() const;
  const Rational& position() const;

  friend bool operator==(const PointOnModel& a, const PointOnModel& b);
  friend bool operator<(const PointOnModel& a, const PointOnModel& b);

 private:
  bool is_vertex_ = true;
  std::size_t index_ = 0;
  Rational position_;
};

class Model;
using ModelPtr = std::shared_ptr<const Model>;

/// Placement of an edge of a derived model inside an edge of its root model.
struct RootPlacement {
  std::size_t root_edge = 0;
  Rational offset;
};

/// A finite connected multigraph with positive rational edge lengths and
/// nonnegative vertex weights. Models produced by refine/make_loop_free
/// remember how they sit inside the model they were derived from (the
/// root), so divisors on different refinements of one curve can be compared.
class Model {
 public:
  /// Validates and builds a model. Throws DomainError on nonpositive
  /// lengths, dangling endpoints, duplicate ids, negative weights or a
  /// disconnected graph.
  static Model create(const std::vector<VertexSpec>& vertices,
                      const std::vector<EdgeSpec>& edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  /// Throws DomainError for unknown ids.
  std::size_t vertex_index(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;

  /// Edges incident to v; a loop edge appears once.
  const std::vector<std::size_t>& incident_edges(std::size_t v) const {
    return incidence_.at(v);
  }
  /// Number of edge ends at v (a loop counts twice).
  int valence(std::size_t v) const;
  Rational total_length() const;
  bool has_loops() const;
  int total_weight() const;

  PointOnModel vertex_point(std::string_view id) const;
  /// Point at `position` along edge e; 0 and the edge length normalize to
  /// the tail and head vertices. Throws DomainError outside [0, length].
  PointOnModel point_on_edge(std::size_t e, const Rational& position) const;
  /// Throws DomainError if p does not denote a point of this model.
  void check_point(const PointOnModel& p) const;
  std::string describe(const PointOnModel& p) const;

  bool is_root() const { return root_ == nullptr; }
  /// The model this one was derived from (itself when it is a root).
  const Model& root() const { return root_ ? *root_ : *this; }
  PointOnModel to_root(const PointOnModel& p) const;
  PointOnModel from_root(const PointOnModel& p) const;
  RootPlacement edge_placement(std::size_t e) const;

  /// Structural equality: ids, weights, endpoints and lengths. Provenance
  /// is not compared.
  friend bool operator==(const Model& a, const Model& b);

 private:
  friend Model derive_model(const Model& parent, std::vector<Vertex> vertices,
                            std::vector<Edge> edges,
                            std::vector<PointOnModel> vertex_in_parent,
                            std::vector<RootPlacement> edge_in_parent);

  Model() = default;
  void index();

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::unordered_map<std::string, std::size_t> vertex_by_id_;
  std::unordered_map<std::string, std::size_t> edge_by_id_;

  ModelPtr root_;
  std::vector<PointOnModel> vertex_in_root_;
  std::vector<RootPlacement> edge_in_root_;
};

inline ModelPtr share(Model m) {
  return std::make_shared<const Model>(std::move(m));
}

/// True iff both models are presentations of the same root curve.
bool same_curve(const Model& a, const Model& b);

Model new_model(const std::vector<VertexSpec>& vertices,
                const std::vector<EdgeSpec>& edges);

struct SemistabilityViolation {
  enum class Kind { LoopEdge, LeafVertex };
  Kind kind;
  std::string id;

  friend bool operator==(const SemistabilityViolation&,
                         const SemistabilityViolation&) = default;
};

/// Loop edges and one-valent weight-zero vertices, in model order.
std::vector<SemistabilityViolation> validate_strictly_semistable(
    const Model& m);

/// Replaces each loop edge by two edges of half length through a new
/// weight-zero midpoint vertex. Non-loop edges are untouched.
Model make_loop_free(const Model& m);

/// First Betti number plus total vertex weight.
int genus(const Model& m);

struct Refinement {
  Model model;
  /// vertex_of_point[i] is the vertex of `model` at points[i].
  std::vector<std::size_t> vertex_of_point;
};

/// Subdivides m at the given points. Throws DomainError on duplicate points.
Refinement refine(const Model& m, const std::vector<PointOnModel>& points);

}  // namespace tropsym
