#include "tropsym/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "tropsym/errors.hpp"

namespace tropsym::io {

namespace {

const json& field(const json& j, const char* name, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) {
    throw SchemaError(path, std::string("missing field '") + name + "'");
  }
  return *it;
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

std::int64_t integer_at(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<std::int64_t>();
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

}  // namespace

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) {
    throw SchemaError(path, "expected a rational \"num/den\" string");
  }
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

json model_to_json(const Model& m) {
  json vertices = json::array();
  for (const auto& v : m.vertices()) {
    vertices.push_back({{"id", v.id}, {"weight", v.weight}});
  }
  json edges = json::array();
  for (const auto& e : m.edges()) {
    edges.push_back({{"id", e.id},
                     {"tail", m.vertex(e.tail).id},
                     {"head", m.vertex(e.head).id},
                     {"length", rational_to_json(e.length)}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

Model model_from_json(const json& j) {
  std::vector<VertexSpec> vertices;
  const json& vs = array_at(field(j, "vertices", ""), "/vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string path = "/vertices/" + std::to_string(i);
    VertexSpec v;
    v.id = string_at(field(vs[i], "id", path), path + "/id");
    if (vs[i].contains("weight")) {
      v.weight = static_cast<int>(integer_at(vs[i]["weight"], path + "/weight"));
    }
    vertices.push_back(std::move(v));
  }
  std::vector<EdgeSpec> edges;
  const json& es = array_at(field(j, "edges", ""), "/edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string path = "/edges/" + std::to_string(i);
    EdgeSpec e;
    e.id = string_at(field(es[i], "id", path), path + "/id");
    e.tail = string_at(field(es[i], "tail", path), path + "/tail");
    e.head = string_at(field(es[i], "head", path), path + "/head");
    e.length = rational_from_json(field(es[i], "length", path), path + "/length");
    edges.push_back(std::move(e));
  }
  return Model::create(vertices, edges);
}

json point_to_json(const Model& m, const PointOnModel& p) {
  if (p.is_vertex()) return {{"vertex", m.vertex(p.vertex()).id}};
  return {{"edge", m.edge(p.edge()).id},
          {"pos", rational_to_json(p.position())}};
}

PointOnModel point_from_json(const json& j, const Model& m,
                             const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  if (j.contains("vertex")) {
    const std::string id = string_at(j["vertex"], path + "/vertex");
    auto v = m.find_vertex(id);
    if (!v) throw SchemaError(path + "/vertex", "unknown vertex '" + id + "'");
    return PointOnModel::at_vertex(*v);
  }
  if (j.contains("edge")) {
    const std::string id = string_at(j["edge"], path + "/edge");
    auto e = m.find_edge(id);
    if (!e) throw SchemaError(path + "/edge", "unknown edge '" + id + "'");
    const Rational pos = rational_from_json(field(j, "pos", path), path + "/pos");
    if (pos.sign() < 0 || pos > m.edge(*e).length) {
      throw SchemaError(path + "/pos", "position outside edge '" + id + "'");
    }
    return m.point_on_edge(*e, pos);
  }
  throw SchemaError(path, "point needs a 'vertex' or an 'edge' field");
}

json divisor_to_json(const Divisor& d) {
  json terms = json::array();
  for (const auto& [p, c] : d.terms()) {
    terms.push_back({{"at", point_to_json(d.model(), p)}, {"coeff", c}});
  }
  return {{"terms", terms}};
}

Divisor divisor_from_json(const json& j, const ModelPtr& host) {
  Divisor d(host);
  const json& terms = array_at(field(j, "terms", ""), "/terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "/terms/" + std::to_string(i);
    const PointOnModel p =
        point_from_json(field(terms[i], "at", path), *host, path + "/at");
    d.add(p, integer_at(field(terms[i], "coeff", path), path + "/coeff"));
  }
  return d;
}

json class_to_json(const DivisorClass& c) {
  return {{"base", point_to_json(*c.host(), c.base())},
          {"degree", c.degree()},
          {"representative", divisor_to_json(c.representative())}};
}

json chain_spec_to_json(const ChainOfLoopsSpec& spec) {
  auto list = [](const std::vector<Rational>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(rational_to_json(x));
    return out;
  };
  return {{"l", list(spec.l)}, {"m", list(spec.m)}, {"bridges", list(spec.bridges)}};
}

ChainOfLoopsSpec chain_spec_from_json(const json& j) {
  auto list = [&](const char* name, bool required) {
    std::vector<Rational> out;
    if (!required && (!j.is_object() || !j.contains(name))) return out;
    const std::string path = std::string("/") + name;
    const json& xs = array_at(field(j, name, ""), path);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out.push_back(rational_from_json(xs[i], path + "/" + std::to_string(i)));
    }
    return out;
  };
  ChainOfLoopsSpec spec{list("l", true), list("m", true), list("bridges", false)};
  spec.validate();
  return spec;
}

json complex_to_json(const SymPowComplex& c) {
  const Model& g = *c.host();
  json cells = json::array();
  for (const auto& cell : c.cells()) {
    json weights = json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      weights[g.vertex(v).id] = cell.cell.vertex_weights()[v];
    }
    json sequences = json::object();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      sequences[g.edge(e).id] = cell.cell.edge_sequences()[e];
    }
    json shape = json::array();
    const Polysimplex cell_shape = cell.cell.shape();
    for (const auto& f : cell_shape.factors()) {
      shape.push_back({{"k", f.k}, {"a", rational_to_json(f.a)}});
    }
    json faces = json::array();
    for (const auto& face : cell.faces) {
      faces.push_back({{"cell", c.cell(face.cell).id},
                       {"zeroed", json::array({face.zeroed})}});
    }
    cells.push_back({{"id", cell.id},
                     {"dim", cell.cell.dimension()},
                     {"vertex_weights", weights},
                     {"edge_sequences", sequences},
                     {"shape", shape},
                     {"faces", faces}});
  }
  return {{"d", c.degree()}, {"f_vector", f_vector(c)}, {"cells", cells}};
}

SymPowComplex complex_from_json(const json& j, const ModelPtr& host) {
  const Model& g = *host;
  const int d = static_cast<int>(integer_at(field(j, "d", ""), "/d"));
  const json& cells = array_at(field(j, "cells", ""), "/cells");

  std::vector<ComplexCell> out;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string path = "/cells/" + std::to_string(i);
    const std::string id = string_at(field(cells[i], "id", path), path + "/id");
    if (!index.emplace(id, i).second) {
      throw SchemaError(path + "/id", "duplicate cell id '" + id + "'");
    }
    std::vector<int> weights(g.vertex_count(), 0);
    const json& wj = field(cells[i], "vertex_weights", path);
    if (!wj.is_object()) throw SchemaError(path + "/vertex_weights", "expected an object");
    for (const auto& [vid, w] : wj.items()) {
      auto v = g.find_vertex(vid);
      if (!v) throw SchemaError(path + "/vertex_weights/" + vid, "unknown vertex");
      weights[*v] = static_cast<int>(integer_at(w, path + "/vertex_weights/" + vid));
    }
    std::vector<std::vector<int>> sequences(g.edge_count());
    const json& sj = field(cells[i], "edge_sequences", path);
    if (!sj.is_object()) throw SchemaError(path + "/edge_sequences", "expected an object");
    for (const auto& [eid, seq] : sj.items()) {
      const std::string spath = path + "/edge_sequences/" + eid;
      auto e = g.find_edge(eid);
      if (!e) throw SchemaError(spath, "unknown edge");
      array_at(seq, spath);
      for (std::size_t k = 0; k < seq.size(); ++k) {
        sequences[*e].push_back(static_cast<int>(
            integer_at(seq[k], spath + "/" + std::to_string(k))));
      }
    }
    StableCell cell(host, std::move(weights), std::move(sequences));
    if (cells[i].contains("dim") &&
        integer_at(cells[i]["dim"], path + "/dim") != cell.dimension()) {
      throw SchemaError(path + "/dim", "does not match the edge sequences");
    }
    out.push_back(ComplexCell{id, std::move(cell), {}});
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string path = "/cells/" + std::to_string(i) + "/faces";
    if (!cells[i].contains("faces")) continue;
    const json& faces = array_at(cells[i]["faces"], path);
    for (std::size_t k = 0; k < faces.size(); ++k) {
      const std::string fpath = path + "/" + std::to_string(k);
      const std::string target =
          string_at(field(faces[k], "cell", fpath), fpath + "/cell");
      auto it = index.find(target);
      if (it == index.end()) {
        throw SchemaError(fpath + "/cell", "unknown cell '" + target + "'");
      }
      const json& zeroed = array_at(field(faces[k], "zeroed", fpath), fpath + "/zeroed");
      if (zeroed.size() != 1) {
        throw SchemaError(fpath + "/zeroed",
                          "face maps zero exactly one coordinate");
      }
      const std::int64_t z = integer_at(zeroed[0], fpath + "/zeroed/0");
      if (z < 0) throw SchemaError(fpath + "/zeroed/0", "negative index");
      out[i].faces.push_back(FaceMap{it->second, static_cast<std::size_t>(z)});
    }
  }
  return SymPowComplex(host, d, std::move(out));
}

std::string complex_to_dot(const SymPowComplex& c) {
  const Model& g = *c.host();
  std::ostringstream os;
  os << "digraph Xi {\n  rankdir=BT;\n";
  for (const auto& cell : c.cells()) {
    std::string label;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const int w = cell.cell.vertex_weights()[v];
      if (w == 0) continue;
      if (!label.empty()) label += " + ";
      label += (w == 1 ? "" : std::to_string(w)) + g.vertex(v).id;
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& seq = cell.cell.edge_sequences()[e];
      if (seq.empty()) continue;
      if (!label.empty()) label += " + ";
      label += g.edge(e).id + "(";
      for (std::size_t k = 0; k < seq.size(); ++k) {
        label += (k ? "," : "") + std::to_string(seq[k]);
      }
      label += ")";
    }
    if (label.empty()) label = "0";
    os << "  " << cell.id << " [label=\"" << label << "\"];\n";
  }
  for (const auto& cell : c.cells()) {
    std::set<std::size_t> below;
    for (const auto& face : cell.faces) below.insert(face.cell);
    for (std::size_t f : below) {
      os << "  " << c.cell(f).id << " -> " << cell.id << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("", "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace tropsym::io
