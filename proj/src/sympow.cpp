#include "tropsym/sympow.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "tropsym/errors.hpp"

namespace tropsym {

// ---------------------------------------------------------------------------
// Polysimplex

Polysimplex::Polysimplex(std::vector<PolysimplexFactor> factors)
    : factors_(std::move(factors)) {
  std::size_t offset = 0;
  for (const auto& f : factors_) {
    if (f.k < 0) throw DomainError("polysimplex factor with negative k");
    if (f.a.sign() <= 0) {
      throw DomainError("polysimplex factor with nonpositive color");
    }
    offsets_.push_back(offset);
    offset += static_cast<std::size_t>(f.k) + 1;
  }
}

int Polysimplex::dimension() const {
  int dim = 0;
  for (const auto& f : factors_) dim += f.k;
  return dim;
}

std::size_t Polysimplex::coordinate_count() const {
  return factors_.empty() ? 0
                          : offsets_.back() + factors_.back().k + 1;
}

std::size_t Polysimplex::factor_of(std::size_t coordinate) const {
  if (coordinate >= coordinate_count()) {
    throw DomainError("coordinate index out of range");
  }
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), coordinate);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

bool Polysimplex::contains(const std::vector<Rational>& coordinates) const {
  if (coordinates.size() != coordinate_count()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Rational sum;
    for (int j = 0; j <= factors_[i].k; ++j) {
      const Rational& x = coordinates[offsets_[i] + j];
      if (x.sign() < 0) return false;
      sum += x;
    }
    if (sum != factors_[i].a) return false;
  }
  return true;
}

bool Polysimplex::in_relative_interior(
    const std::vector<Rational>& coordinates) const {
  return contains(coordinates) &&
         std::all_of(coordinates.begin(), coordinates.end(),
                     [](const Rational& x) { return x.sign() > 0; });
}

// ---------------------------------------------------------------------------
// StableCell

StableCell::StableCell(ModelPtr host, std::vector<int> vertex_weights,
                       std::vector<std::vector<int>> edge_sequences)
    : host_(std::move(host)),
      vertex_weights_(std::move(vertex_weights)),
      edge_sequences_(std::move(edge_sequences)) {
  if (vertex_weights_.size() != host_->vertex_count()) {
    throw DomainError("stable cell needs one weight per vertex");
  }
  if (edge_sequences_.size() != host_->edge_count()) {
    throw DomainError("stable cell needs one sequence per edge");
  }
  for (int w : vertex_weights_) {
    if (w < 0) throw DomainError("stable cell has a negative vertex weight");
  }
  for (const auto& seq : edge_sequences_) {
    for (int w : seq) {
      if (w <= 0) {
        throw DomainError(
            "stable cell has an exceptional point of nonpositive weight");
      }
    }
  }
}

int StableCell::degree() const {
  int d = std::accumulate(vertex_weights_.begin(), vertex_weights_.end(), 0);
  for (const auto& seq : edge_sequences_) {
    d = std::accumulate(seq.begin(), seq.end(), d);
  }
  return d;
}

int StableCell::dimension() const {
  int dim = 0;
  for (const auto& seq : edge_sequences_) dim += static_cast<int>(seq.size());
  return dim;
}

Polysimplex StableCell::shape() const {
  std::vector<PolysimplexFactor> factors;
  for (std::size_t e = 0; e < edge_sequences_.size(); ++e) {
    factors.push_back({static_cast<int>(edge_sequences_[e].size()),
                       host_->edge(e).length});
  }
  return Polysimplex(std::move(factors));
}

std::string StableCell::key() const {
  std::string out;
  for (int w : vertex_weights_) out += std::to_string(w) + ",";
  for (const auto& seq : edge_sequences_) {
    out += "|";
    for (int w : seq) out += std::to_string(w) + ",";
  }
  return out;
}

bool operator==(const StableCell& a, const StableCell& b) {
  return a.vertex_weights_ == b.vertex_weights_ &&
         a.edge_sequences_ == b.edge_sequences_ &&
         (a.host_.get() == b.host_.get() || *a.host_ == *b.host_);
}

StableCell contract(const StableCell& cell,
                    const std::vector<std::size_t>& zeroed) {
  const Polysimplex shape = cell.shape();
  std::vector<char> is_zero(shape.coordinate_count(), 0);
  for (std::size_t z : zeroed) {
    if (z >= is_zero.size()) throw DomainError("coordinate index out of range");
    is_zero[z] = 1;
  }
  const Model& g = *cell.host();
  std::vector<int> weights = cell.vertex_weights();
  std::vector<std::vector<int>> sequences(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& seq = cell.edge_sequences()[e];
    const std::size_t base = shape.offset(e);
    int pending = 0;
    bool seen_segment = false;
    for (std::size_t j = 0; j <= seq.size(); ++j) {
      // Exceptional point j (1-based) sits between segments j-1 and j.
      if (j > 0) pending += seq[j - 1];
      if (is_zero[base + j]) continue;
      if (!seen_segment) {
        weights[g.edge(e).tail] += pending;
        seen_segment = true;
      } else {
        sequences[e].push_back(pending);
      }
      pending = 0;
    }
    if (!seen_segment) {
      throw DomainError("cannot zero every segment of edge '" + g.edge(e).id +
                        "'");
    }
    weights[g.edge(e).head] += pending;
  }
  return StableCell(cell.host(), std::move(weights), std::move(sequences));
}

namespace {

struct EndpointSplit {
  int tail = 0;
  int head = 0;
};

// Ways to collapse `fine` onto `coarse` along one edge, as the amounts that
// end up on the tail and head vertices.
std::vector<EndpointSplit> collapses(const std::vector<int>& coarse,
                                     const std::vector<int>& fine) {
  std::vector<int> prefix{0};
  for (int w : fine) prefix.push_back(prefix.back() + w);
  std::vector<EndpointSplit> out;
  for (std::size_t start = 0; start < prefix.size(); ++start) {
    std::size_t at = start;
    bool ok = true;
    for (int block : coarse) {
      const int target = prefix[at] + block;
      auto it = std::find(prefix.begin() + at + 1, prefix.end(), target);
      if (it == prefix.end()) {
        ok = false;
        break;
      }
      at = static_cast<std::size_t>(it - prefix.begin());
    }
    if (ok) out.push_back({prefix[start], prefix.back() - prefix[at]});
  }
  return out;
}

}  // namespace

bool poset_leq(const StableCell& c1, const StableCell& c2) {
  if (!(c1.host().get() == c2.host().get() || *c1.host() == *c2.host())) {
    throw DomainError("stable cells over different models");
  }
  if (c1.degree() != c2.degree()) return false;
  const Model& g = *c1.host();
  std::vector<int> delta(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    delta[v] = c1.vertex_weights()[v] - c2.vertex_weights()[v];
    if (delta[v] < 0) return false;
  }
  std::vector<std::vector<EndpointSplit>> options;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    options.push_back(
        collapses(c1.edge_sequences()[e], c2.edge_sequences()[e]));
    if (options.back().empty()) return false;
  }
  std::function<bool(std::size_t)> search = [&](std::size_t e) -> bool {
    if (e == g.edge_count()) {
      return std::all_of(delta.begin(), delta.end(),
                         [](int x) { return x == 0; });
    }
    const Edge& edge = g.edge(e);
    for (const auto& split : options[e]) {
      delta[edge.tail] -= split.tail;
      delta[edge.head] -= split.head;
      const bool fits = delta[edge.tail] >= 0 && delta[edge.head] >= 0;
      if (fits && search(e + 1)) return true;
      delta[edge.tail] += split.tail;
      delta[edge.head] += split.head;
    }
    return false;
  };
  return search(0);
}

// ---------------------------------------------------------------------------
// SymPowComplex

SymPowComplex::SymPowComplex(ModelPtr host, int degree,
                             std::vector<ComplexCell> cells)
    : host_(std::move(host)), degree_(degree), cells_(std::move(cells)) {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    by_key_.emplace(cells_[i].cell.key(), i);
    if (!by_id_.emplace(cells_[i].id, i).second) {
      throw DomainError("duplicate cell id '" + cells_[i].id + "'");
    }
  }
}

std::optional<std::size_t> SymPowComplex::find(const StableCell& c) const {
  auto it = by_key_.find(c.key());
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

std::size_t SymPowComplex::index_of(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) throw DomainError("unknown cell id '" + id + "'");
  return it->second;
}

namespace {

void compositions(int total, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (int part = 1; part <= total; ++part) {
    current.push_back(part);
    compositions(total - part, current, out);
    current.pop_back();
  }
}

}  // namespace

SymPowComplex enumerate_cells(const ModelPtr& g, int d) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  if (g->has_loops()) {
    throw DomainError(
        "symmetric powers need a loop-free model; apply make_loop_free");
  }
  // compositions_of[s] = all sequences of positive integers summing to s.
  std::vector<std::vector<std::vector<int>>> compositions_of(d + 1);
  for (int s = 0; s <= d; ++s) {
    std::vector<int> current;
    compositions(s, current, compositions_of[s]);
  }

  const std::size_t n_edges = g->edge_count();
  const std::size_t n_vertices = g->vertex_count();
  std::vector<StableCell> found;
  std::vector<std::vector<int>> sequences(n_edges);
  std::vector<int> weights(n_vertices, 0);

  std::function<void(std::size_t, int)> place_vertices = [&](std::size_t v,
                                                             int left) {
    if (v + 1 == n_vertices) {
      weights[v] = left;
      found.emplace_back(g, weights, sequences);
      return;
    }
    for (int w = 0; w <= left; ++w) {
      weights[v] = w;
      place_vertices(v + 1, left - w);
    }
  };
  std::function<void(std::size_t, int)> place_edges = [&](std::size_t e,
                                                          int left) {
    if (e == n_edges) {
      place_vertices(0, left);
      return;
    }
    for (int s = 0; s <= left; ++s) {
      for (const auto& seq : compositions_of[s]) {
        sequences[e] = seq;
        place_edges(e + 1, left - s);
      }
    }
    sequences[e].clear();
  };
  place_edges(0, d);

  std::sort(found.begin(), found.end(),
            [](const StableCell& a, const StableCell& b) {
              if (a.dimension() != b.dimension()) {
                return a.dimension() < b.dimension();
              }
              if (a.vertex_weights() != b.vertex_weights()) {
                return a.vertex_weights() > b.vertex_weights();
              }
              return a.edge_sequences() < b.edge_sequences();
            });

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < found.size(); ++i) index.emplace(found[i].key(), i);

  std::vector<ComplexCell> cells;
  cells.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    ComplexCell cell{"c" + std::to_string(i), found[i], {}};
    const std::size_t coords = found[i].shape().coordinate_count();
    const Polysimplex shape = found[i].shape();
    for (std::size_t z = 0; z < coords; ++z) {
      if (shape.factors()[shape.factor_of(z)].k == 0) continue;
      cell.faces.push_back(FaceMap{index.at(contract(found[i], {z}).key()), z});
    }
    cells.push_back(std::move(cell));
  }
  return SymPowComplex(g, d, std::move(cells));
}

std::vector<std::size_t> f_vector(const SymPowComplex& c) {
  std::vector<std::size_t> f;
  for (const auto& cell : c.cells()) {
    const auto dim = static_cast<std::size_t>(cell.cell.dimension());
    if (f.size() <= dim) f.resize(dim + 1, 0);
    ++f[dim];
  }
  return f;
}

long euler_characteristic(const SymPowComplex& c) {
  long chi = 0;
  const auto f = f_vector(c);
  for (std::size_t i = 0; i < f.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(f[i]);
  }
  return chi;
}

std::vector<FaceDescriptor> faces_of(const SymPowComplex& c, std::size_t cell) {
  if (cell >= c.size()) throw DomainError("cell index out of range");
  const ComplexCell& parent = c.cell(cell);
  const Polysimplex shape = parent.cell.shape();
  std::vector<FaceDescriptor> out;
  for (const auto& face : parent.faces) {
    FaceDescriptor desc;
    desc.face = face.cell;
    desc.zeroed = face.zeroed;
    desc.edge = shape.factor_of(face.zeroed);
    desc.segment = face.zeroed - shape.offset(desc.edge);
    const auto k = static_cast<std::size_t>(shape.factors()[desc.edge].k);
    desc.merge = desc.segment == 0   ? MergeKind::IntoTail
                 : desc.segment == k ? MergeKind::IntoHead
                                     : MergeKind::Adjacent;
    out.push_back(desc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Realization

CellPoint cell_of_divisor(const SymPowComplex& c, const Divisor& divisor) {
  const Divisor d = divisor.transported(c.host());
  if (!d.is_effective()) throw DomainError("divisor is not effective");
  if (d.degree() != c.degree()) {
    throw DomainError("divisor has degree " + std::to_string(d.degree()) +
                      ", complex has degree " + std::to_string(c.degree()));
  }
  const Model& g = *c.host();
  std::vector<int> weights(g.vertex_count(), 0);
  std::vector<std::vector<int>> sequences(g.edge_count());
  std::vector<std::vector<Rational>> positions(g.edge_count());
  // Terms are ordered by (edge, position), so each edge's points arrive
  // sorted from tail to head.
  for (const auto& [p, coeff] : d.terms()) {
    if (p.is_vertex()) {
      weights[p.vertex()] = static_cast<int>(coeff);
    } else {
      sequences[p.edge()].push_back(static_cast<int>(coeff));
      positions[p.edge()].push_back(p.position());
    }
  }
  StableCell cell(c.host(), std::move(weights), std::move(sequences));
  auto index = c.find(cell);
  if (!index) throw DomainError("complex has no cell " + cell.key());

  CellPoint out{*index, {}};
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    Rational prev(0);
    for (const auto& pos : positions[e]) {
      out.coordinates.push_back(pos - prev);
      prev = pos;
    }
    out.coordinates.push_back(g.edge(e).length - prev);
  }
  return out;
}

Divisor realize(const SymPowComplex& c, const CellPoint& p) {
  if (p.cell >= c.size()) throw DomainError("cell index out of range");
  const StableCell& cell = c.cell(p.cell).cell;
  const Polysimplex shape = cell.shape();
  if (p.coordinates.size() != shape.coordinate_count()) {
    throw DomainError("wrong number of coordinates for cell " +
                      c.cell(p.cell).id);
  }
  for (const auto& x : p.coordinates) {
    if (x.sign() < 0) throw DomainError("negative coordinate");
  }
  if (!shape.contains(p.coordinates)) {
    throw DomainError("coordinates do not sum to the edge lengths");
  }
  const Model& g = *c.host();
  Divisor d(c.host());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    d.add(PointOnModel::at_vertex(v), cell.vertex_weights()[v]);
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& seq = cell.edge_sequences()[e];
    Rational pos(0);
    for (std::size_t j = 0; j < seq.size(); ++j) {
      pos += p.coordinates[shape.offset(e) + j];
      d.add(g.point_on_edge(e, pos), seq[j]);
    }
  }
  return d;
}

CellPoint normalize(const SymPowComplex& c, const CellPoint& p) {
  return cell_of_divisor(c, realize(c, p));
}

// ---------------------------------------------------------------------------
// Validation

namespace {

// Every face of a polysimplex, as the sorted set of zeroed coordinates:
// each factor keeps a nonempty subset of its coordinates.
std::vector<std::vector<std::size_t>> all_proper_faces(const Polysimplex& s) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t f = 0; f < s.factors().size(); ++f) {
    const int k = s.factors()[f].k;
    if (k == 0) continue;
    const std::size_t width = static_cast<std::size_t>(k) + 1;
    std::vector<std::vector<std::size_t>> next;
    for (const auto& partial : out) {
      // mask = coordinates zeroed in this factor; all-ones is forbidden.
      for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << width); ++mask) {
        auto z = partial;
        for (std::size_t j = 0; j < width; ++j) {
          if (mask & (std::size_t{1} << j)) z.push_back(s.offset(f) + j);
        }
        next.push_back(std::move(z));
      }
    }
    out = std::move(next);
  }
  for (auto& z : out) std::sort(z.begin(), z.end());
  std::erase_if(out, [](const auto& z) { return z.empty(); });
  return out;
}

}  // namespace

std::vector<ComplexViolation> validate_complex(const SymPowComplex& c) {
  std::vector<ComplexViolation> out;
  auto report = [&](const ComplexCell& cell, std::string message) {
    out.push_back({cell.id, std::move(message)});
  };

  std::set<std::string> keys;
  for (const auto& cell : c.cells()) {
    if (!keys.insert(cell.cell.key()).second) {
      report(cell, "duplicate stable pair");
    }
    if (cell.cell.degree() != c.degree()) report(cell, "wrong degree");
  }

  for (const auto& cell : c.cells()) {
    const Polysimplex shape = cell.cell.shape();
    const std::size_t coords = shape.coordinate_count();
    std::vector<int> hits(coords, 0);
    bool faces_sound = true;
    for (const auto& face : cell.faces) {
      if (face.cell >= c.size() || face.zeroed >= coords) {
        report(cell, "face map out of range");
        faces_sound = false;
        continue;
      }
      const std::size_t factor = shape.factor_of(face.zeroed);
      if (shape.factors()[factor].k == 0) {
        report(cell, "face map zeroes the coordinate of a point factor");
        faces_sound = false;
        continue;
      }
      ++hits[face.zeroed];
      const ComplexCell& target = c.cell(face.cell);
      if (target.cell.dimension() + 1 != cell.cell.dimension()) {
        report(cell, "face " + target.id + " is not of codimension one");
        faces_sound = false;
      }
      if (!(target.cell == contract(cell.cell, {face.zeroed}))) {
        report(cell, "face " + target.id + " does not match zeroing coordinate " +
                         std::to_string(face.zeroed));
        faces_sound = false;
      }
      // Colors: the zeroed factor keeps its length, the others are unchanged.
      const Polysimplex sub = target.cell.shape();
      bool colors_ok = sub.factors().size() == shape.factors().size();
      for (std::size_t f = 0; colors_ok && f < shape.factors().size(); ++f) {
        const int expect_k = shape.factors()[f].k - (f == factor ? 1 : 0);
        colors_ok = sub.factors()[f].a == shape.factors()[f].a &&
                    sub.factors()[f].k == expect_k;
      }
      if (!colors_ok) {
        report(cell, "face map to " + target.id + " does not preserve colors");
        faces_sound = false;
      }
    }
    for (std::size_t z = 0; z < coords; ++z) {
      if (shape.factors()[shape.factor_of(z)].k == 0) continue;
      if (hits[z] != 1) {
        report(cell, "codimension-one face zeroing coordinate " +
                         std::to_string(z) + " is the image of " +
                         std::to_string(hits[z]) + " face morphisms");
      }
    }
    if (!faces_sound) continue;

    // Higher codimension: compose face maps and require every face to be
    // reached, from a single source cell that matches direct zeroing.
    std::map<std::vector<std::size_t>, std::set<std::size_t>> sources;
    std::set<std::pair<std::vector<std::size_t>, std::size_t>> seen;
    const auto self = static_cast<std::size_t>(&cell - c.cells().data());
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> frontier{
        {{}, self}};
    while (!frontier.empty()) {
      auto [zeroed, at] = frontier.back();
      frontier.pop_back();
      std::vector<std::size_t> alive;
      for (std::size_t i = 0; i < coords; ++i) {
        if (!std::binary_search(zeroed.begin(), zeroed.end(), i)) {
          alive.push_back(i);
        }
      }
      for (const auto& face : c.cell(at).faces) {
        if (face.zeroed >= alive.size() || face.cell >= c.size()) continue;
        auto next = zeroed;
        next.insert(std::upper_bound(next.begin(), next.end(),
                                     alive[face.zeroed]),
                    alive[face.zeroed]);
        if (seen.emplace(next, face.cell).second) {
          sources[next].insert(face.cell);
          frontier.emplace_back(std::move(next), face.cell);
        }
      }
    }
    for (const auto& z : all_proper_faces(shape)) {
      if (z.size() < 2) continue;  // codimension one was checked above
      auto it = sources.find(z);
      if (it == sources.end()) {
        report(cell, "a codimension-" + std::to_string(z.size()) +
                         " face is not the image of any face morphism");
        continue;
      }
      if (it->second.size() != 1) {
        report(cell, "a codimension-" + std::to_string(z.size()) +
                         " face is the image of " +
                         std::to_string(it->second.size()) +
                         " distinct face morphisms");
        continue;
      }
      const ComplexCell& source = c.cell(*it->second.begin());
      if (!(source.cell == contract(cell.cell, z))) {
        report(cell, "composite face map to " + source.id +
                         " does not match coordinate zeroing");
      }
    }
  }
  return out;
}

}  // namespace tropsym
