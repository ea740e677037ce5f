#include "tropsym/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tropsym/errors.hpp"

namespace tropsym {

PointOnModel PointOnModel::at_vertex(std::size_t vertex) {
  PointOnModel p;
  p.is_vertex_ = true;
  p.index_ = vertex;
  return p;
}

PointOnModel PointOnModel::on_edge(std::size_t edge, Rational position) {
  PointOnModel p;
  p.is_vertex_ = false;
  p.index_ = edge;
  p.position_ = std::move(position);
  return p;
}

std::size_t PointOnModel::vertex() const {
  if (!is_vertex_) throw std::logic_error("point is not a vertex");
  return index_;
}

std::size_t PointOnModel::edge() const {
  if (is_vertex_) throw std::logic_error("point is not on an edge");
  return index_;
}

const Rational& PointOnModel::position() const {
  if (is_vertex_) throw std::logic_error("point is not on an edge");
  return position_;
}

bool operator==(const PointOnModel& a, const PointOnModel& b) {
  if (a.is_vertex_ != b.is_vertex_ || a.index_ != b.index_) return false;
  return a.is_vertex_ || a.position_ == b.position_;
}

bool operator<(const PointOnModel& a, const PointOnModel& b) {
  // Vertices sort before edge points.
  if (a.is_vertex_ != b.is_vertex_) return a.is_vertex_;
  if (a.index_ != b.index_) return a.index_ < b.index_;
  if (a.is_vertex_) return false;
  return a.position_ < b.position_;
}

Model Model::create(const std::vector<VertexSpec>& vertices,
                    const std::vector<EdgeSpec>& edges) {
  Model m;
  if (vertices.empty()) throw DomainError("model has no vertices");
  for (const auto& v : vertices) {
    if (v.weight < 0) {
      throw DomainError("vertex '" + v.id + "' has negative weight");
    }
    if (m.vertex_by_id_.count(v.id)) {
      throw DomainError("duplicate vertex id '" + v.id + "'");
    }
    m.vertex_by_id_.emplace(v.id, m.vertices_.size());
    m.vertices_.push_back(Vertex{v.id, v.weight});
  }
  for (const auto& e : edges) {
    if (m.edge_by_id_.count(e.id)) {
      throw DomainError("duplicate edge id '" + e.id + "'");
    }
    auto tail = m.vertex_by_id_.find(e.tail);
    auto head = m.vertex_by_id_.find(e.head);
    if (tail == m.vertex_by_id_.end()) {
      throw DomainError("edge '" + e.id + "' has dangling tail '" + e.tail +
                        "'");
    }
    if (head == m.vertex_by_id_.end()) {
      throw DomainError("edge '" + e.id + "' has dangling head '" + e.head +
                        "'");
    }
    if (e.length.sign() <= 0) {
      throw DomainError("edge '" + e.id + "' has nonpositive length " +
                        e.length.str());
    }
    m.edge_by_id_.emplace(e.id, m.edges_.size());
    m.edges_.push_back(Edge{e.id, tail->second, head->second, e.length});
  }
  m.index();

  std::vector<bool> seen(m.vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : m.incidence_[v]) {
      const Edge& edge = m.edges_[e];
      for (std::size_t w : {edge.tail, edge.head}) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) {
      throw DomainError("model is disconnected: vertex '" +
                        m.vertices_[v].id + "' is unreachable");
    }
  }
  return m;
}

void Model::index() {
  incidence_.assign(vertices_.size(), {});
  vertex_by_id_.clear();
  edge_by_id_.clear();
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    vertex_by_id_.emplace(vertices_[v].id, v);
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    edge_by_id_.emplace(edges_[e].id, e);
    incidence_[edges_[e].tail].push_back(e);
    if (!edges_[e].is_loop()) incidence_[edges_[e].head].push_back(e);
  }
}

std::optional<std::size_t> Model::find_vertex(std::string_view id) const {
  auto it = vertex_by_id_.find(std::string(id));
  if (it == vertex_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Model::find_edge(std::string_view id) const {
  auto it = edge_by_id_.find(std::string(id));
  if (it == edge_by_id_.end()) return std::nullopt;
  return it->second;
}

std::size_t Model::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw DomainError("unknown vertex '" + std::string(id) + "'");
}

std::size_t Model::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw DomainError("unknown edge '" + std::string(id) + "'");
}

int Model::valence(std::size_t v) const {
  int val = 0;
  for (std::size_t e : incidence_.at(v)) val += edges_[e].is_loop() ? 2 : 1;
  return val;
}

Rational Model::total_length() const {
  Rational total;
  for (const auto& e : edges_) total += e.length;
  return total;
}

bool Model::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.is_loop(); });
}

int Model::total_weight() const {
  int total = 0;
  for (const auto& v : vertices_) total += v.weight;
  return total;
}

PointOnModel Model::vertex_point(std::string_view id) const {
  return PointOnModel::at_vertex(vertex_index(id));
}

PointOnModel Model::point_on_edge(std::size_t e, const Rational& position) const {
  if (e >= edges_.size()) throw DomainError("edge index out of range");
  const Edge& edge = edges_[e];
  if (position.sign() < 0 || position > edge.length) {
    throw DomainError("position " + position.str() + " outside edge '" +
                      edge.id + "' of length " + edge.length.str());
  }
  if (position.is_zero()) return PointOnModel::at_vertex(edge.tail);
  if (position == edge.length) return PointOnModel::at_vertex(edge.head);
  return PointOnModel::on_edge(e, position);
}

void Model::check_point(const PointOnModel& p) const {
  if (p.is_vertex()) {
    if (p.vertex() >= vertices_.size()) {
      throw DomainError("vertex index out of range");
    }
    return;
  }
  if (p.edge() >= edges_.size()) throw DomainError("edge index out of range");
  const Edge& edge = edges_[p.edge()];
  if (p.position().sign() <= 0 || p.position() >= edge.length) {
    throw DomainError("position " + p.position().str() +
                      " not strictly inside edge '" + edge.id + "'");
  }
}

std::string Model::describe(const PointOnModel& p) const {
  if (p.is_vertex()) return vertices_.at(p.vertex()).id;
  return edges_.at(p.edge()).id + "@" + p.position().str();
}

PointOnModel Model::to_root(const PointOnModel& p) const {
  if (is_root()) return p;
  if (p.is_vertex()) return vertex_in_root_.at(p.vertex());
  const RootPlacement& place = edge_in_root_.at(p.edge());
  return PointOnModel::on_edge(place.root_edge, place.offset + p.position());
}

PointOnModel Model::from_root(const PointOnModel& p) const {
  if (is_root()) return p;
  for (std::size_t v = 0; v < vertex_in_root_.size(); ++v) {
    if (vertex_in_root_[v] == p) return PointOnModel::at_vertex(v);
  }
  if (!p.is_vertex()) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const RootPlacement& place = edge_in_root_[e];
      if (place.root_edge != p.edge()) continue;
      Rational local = p.position() - place.offset;
      if (local.sign() > 0 && local < edges_[e].length) {
        return PointOnModel::on_edge(e, std::move(local));
      }
    }
  }
  throw DomainError("point is not on this model");
}

RootPlacement Model::edge_placement(std::size_t e) const {
  if (is_root()) return RootPlacement{e, Rational(0)};
  return edge_in_root_.at(e);
}

bool operator==(const Model& a, const Model& b) {
  if (a.vertices_.size() != b.vertices_.size() ||
      a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (std::size_t v = 0; v < a.vertices_.size(); ++v) {
    if (a.vertices_[v].id != b.vertices_[v].id ||
        a.vertices_[v].weight != b.vertices_[v].weight) {
      return false;
    }
  }
  for (std::size_t e = 0; e < a.edges_.size(); ++e) {
    const Edge& x = a.edges_[e];
    const Edge& y = b.edges_[e];
    if (x.id != y.id || x.tail != y.tail || x.head != y.head ||
        x.length != y.length) {
      return false;
    }
  }
  return true;
}

bool same_curve(const Model& a, const Model& b) {
  return &a.root() == &b.root() || a.root() == b.root();
}

Model derive_model(const Model& parent, std::vector<Vertex> vertices,
                   std::vector<Edge> edges,
                   std::vector<PointOnModel> vertex_in_parent,
                   std::vector<RootPlacement> edge_in_parent) {
  Model m;
  m.vertices_ = std::move(vertices);
  m.edges_ = std::move(edges);
  m.index();
  m.root_ = parent.is_root() ? share(parent) : parent.root_;
  for (const auto& p : vertex_in_parent) {
    m.vertex_in_root_.push_back(parent.to_root(p));
  }
  for (const auto& place : edge_in_parent) {
    RootPlacement up = parent.edge_placement(place.root_edge);
    m.edge_in_root_.push_back(
        RootPlacement{up.root_edge, up.offset + place.offset});
  }
  return m;
}

Model new_model(const std::vector<VertexSpec>& vertices,
                const std::vector<EdgeSpec>& edges) {
  return Model::create(vertices, edges);
}

std::vector<SemistabilityViolation> validate_strictly_semistable(
    const Model& m) {
  std::vector<SemistabilityViolation> out;
  for (const auto& e : m.edges()) {
    if (e.is_loop()) {
      out.push_back({SemistabilityViolation::Kind::LoopEdge, e.id});
    }
  }
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    if (m.valence(v) == 1 && m.vertex(v).weight == 0) {
      out.push_back({SemistabilityViolation::Kind::LeafVertex, m.vertex(v).id});
    }
  }
  return out;
}

Model make_loop_free(const Model& m) {
  if (!m.has_loops()) return m;
  std::vector<Vertex> vertices = m.vertices();
  std::vector<PointOnModel> vertex_in_parent;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    vertex_in_parent.push_back(PointOnModel::at_vertex(v));
  }
  std::vector<Edge> edges;
  std::vector<RootPlacement> edge_in_parent;
  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    const Edge& edge = m.edge(e);
    if (!edge.is_loop()) {
      edges.push_back(edge);
      edge_in_parent.push_back({e, Rational(0)});
      continue;
    }
    const Rational half = edge.length / Rational(2);
    const std::size_t mid = vertices.size();
    vertices.push_back(Vertex{edge.id + ".mid", 0});
    vertex_in_parent.push_back(PointOnModel::on_edge(e, half));
    edges.push_back(Edge{edge.id + ".a", edge.tail, mid, half});
    edge_in_parent.push_back({e, Rational(0)});
    edges.push_back(Edge{edge.id + ".b", mid, edge.head, half});
    edge_in_parent.push_back({e, half});
  }
  return derive_model(m, std::move(vertices), std::move(edges),
                      std::move(vertex_in_parent), std::move(edge_in_parent));
}

int genus(const Model& m) {
  return static_cast<int>(m.edge_count()) -
         static_cast<int>(m.vertex_count()) + 1 + m.total_weight();
}

Refinement refine(const Model& m, const std::vector<PointOnModel>& points) {
  std::map<std::size_t, std::vector<Rational>> cuts;
  std::vector<PointOnModel> normalized;
  for (const auto& p : points) {
    PointOnModel q = p.is_vertex() ? p : m.point_on_edge(p.edge(), p.position());
    m.check_point(q);
    if (std::find(normalized.begin(), normalized.end(), q) != normalized.end()) {
      throw DomainError("duplicate refinement point " + m.describe(q));
    }
    normalized.push_back(q);
    if (!q.is_vertex()) cuts[q.edge()].push_back(q.position());
  }
  if (cuts.empty()) {
    Refinement out{m, {}};
    for (const auto& q : normalized) out.vertex_of_point.push_back(q.vertex());
    return out;
  }

  std::vector<Vertex> vertices = m.vertices();
  std::vector<PointOnModel> vertex_in_parent;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    vertex_in_parent.push_back(PointOnModel::at_vertex(v));
  }
  std::map<PointOnModel, std::size_t> new_vertex;
  std::vector<Edge> edges;
  std::vector<RootPlacement> edge_in_parent;
  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    const Edge& edge = m.edge(e);
    auto it = cuts.find(e);
    if (it == cuts.end()) {
      edges.push_back(edge);
      edge_in_parent.push_back({e, Rational(0)});
      continue;
    }
    std::vector<Rational> positions = it->second;
    std::sort(positions.begin(), positions.end());
    std::size_t prev = edge.tail;
    Rational prev_pos(0);
    for (std::size_t i = 0; i <= positions.size(); ++i) {
      std::size_t next;
      Rational next_pos;
      if (i < positions.size()) {
        next_pos = positions[i];
        next = vertices.size();
        vertices.push_back(Vertex{edge.id + "@" + next_pos.str(), 0});
        vertex_in_parent.push_back(PointOnModel::on_edge(e, next_pos));
        new_vertex.emplace(PointOnModel::on_edge(e, next_pos), next);
      } else {
        next_pos = edge.length;
        next = edge.head;
      }
      edges.push_back(Edge{edge.id + "#" + std::to_string(i), prev, next,
                           next_pos - prev_pos});
      edge_in_parent.push_back({e, prev_pos});
      prev = next;
      prev_pos = next_pos;
    }
  }
  Refinement out{derive_model(m, std::move(vertices), std::move(edges),
                              std::move(vertex_in_parent),
                              std::move(edge_in_parent)),
                 {}};
  for (const auto& q : normalized) {
    out.vertex_of_point.push_back(q.is_vertex() ? q.vertex()
                                                : new_vertex.at(q));
  }
  return out;
}

}  // namespace tropsym
