#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropsym/divisor.hpp"
#include "tropsym/model.hpp"
#include "tropsym/rational.hpp"

namespace tropsym {

struct PolysimplexFactor {
  int k = 0;
  Rational a;

  friend bool operator==(const PolysimplexFactor&,
                         const PolysimplexFactor&) = default;
};

/// Product of simplices Δ(k, a) = {x in Q^{k+1}, x >= 0, sum x = a}.
/// Coordinates are the concatenation of the factors' (k+1)-tuples.
class Polysimplex {
 public:
  Polysimplex() = default;
  explicit Polysimplex(std::vector<PolysimplexFactor> factors);

  const std::vector<PolysimplexFactor>& factors() const { return factors_; }
  int dimension() const;
  std::size_t coordinate_count() const;
  /// Factor owning a flat coordinate index.
  std::size_t factor_of(std::size_t coordinate) const;
  std::size_t offset(std::size_t factor) const { return offsets_.at(factor); }
  bool contains(const std::vector<Rational>& coordinates) const;
  bool in_relative_interior(const std::vector<Rational>& coordinates) const;

  friend bool operator==(const Polysimplex& a, const Polysimplex& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<PolysimplexFactor> factors_;
  std::vector<std::size_t> offsets_;
};

/// Stable pair over G: vertex weights plus, for each edge, the positive
/// weights of the exceptional points on it in tail-to-head order.
class StableCell {
 public:
  /// Throws DomainError on size mismatches, negative vertex weights or
  /// nonpositive interior weights.
  StableCell(ModelPtr host, std::vector<int> vertex_weights,
             std::vector<std::vector<int>> edge_sequences);

  const ModelPtr& host() const { return host_; }
  const std::vector<int>& vertex_weights() const { return vertex_weights_; }
  const std::vector<std::vector<int>>& edge_sequences() const {
    return edge_sequences_;
  }
  int degree() const;
  int dimension() const;
  /// One factor Δ(k_e, |e|) per edge of G, in edge order (k_e may be 0).
  Polysimplex shape() const;
  /// Canonical identity of the cell within its host.
  std::string key() const;

  friend bool operator==(const StableCell& a, const StableCell& b);

 private:
  ModelPtr host_;
  std::vector<int> vertex_weights_;
  std::vector<std::vector<int>> edge_sequences_;
};

/// The face obtained by setting the listed flat coordinates to zero:
/// exceptional points collapse onto neighbours or onto edge endpoints.
/// Throws DomainError if an edge would lose all its coordinates.
StableCell contract(const StableCell& cell,
                    const std::vector<std::size_t>& zeroed);

/// True iff c1 is obtained from c2 by collapsing consecutive exceptional
/// points along edges (possibly onto endpoint vertices).
bool poset_leq(const StableCell& c1, const StableCell& c2);

/// Codimension-one face morphism into a cell.
struct FaceMap {
  std::size_t cell = 0;     // index of the face cell
  std::size_t zeroed = 0;   // flat coordinate of the parent set to zero

  friend bool operator==(const FaceMap&, const FaceMap&) = default;
};

struct ComplexCell {
  std::string id;
  StableCell cell;
  std::vector<FaceMap> faces;
};

/// The colored polysimplicial complex Δ(G, d).
class SymPowComplex {
 public:
  SymPowComplex(ModelPtr host, int degree, std::vector<ComplexCell> cells);

  const ModelPtr& host() const { return host_; }
  int degree() const { return degree_; }
  const std::vector<ComplexCell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  const ComplexCell& cell(std::size_t i) const { return cells_.at(i); }
  std::optional<std::size_t> find(const StableCell& c) const;
  /// Throws DomainError for unknown ids.
  std::size_t index_of(const std::string& id) const;

 private:
  ModelPtr host_;
  int degree_;
  std::vector<ComplexCell> cells_;
  std::unordered_map<std::string, std::size_t> by_key_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

/// All stable pairs of degree d over a loop-free model, ordered by
/// dimension, with their codimension-one faces. Throws DomainError when G
/// has loop edges or d < 0.
SymPowComplex enumerate_cells(const ModelPtr& g, int d);

std::vector<std::size_t> f_vector(const SymPowComplex& c);
long euler_characteristic(const SymPowComplex& c);

enum class MergeKind { IntoTail, Adjacent, IntoHead };

struct FaceDescriptor {
  std::size_t face = 0;     // index of the face cell
  std::size_t zeroed = 0;   // flat coordinate index set to zero
  std::size_t edge = 0;     // edge of G carrying that coordinate
  std::size_t segment = 0;  // segment number along that edge
  MergeKind merge = MergeKind::Adjacent;
};

/// Throws DomainError for an out-of-range cell index.
std::vector<FaceDescriptor> faces_of(const SymPowComplex& c, std::size_t cell);

/// A point of the realization: a cell and its segment-length coordinates.
struct CellPoint {
  std::size_t cell = 0;
  std::vector<Rational> coordinates;

  friend bool operator==(const CellPoint&, const CellPoint&) = default;
};

/// Carrier cell and coordinates of an effective degree-d divisor.
CellPoint cell_of_divisor(const SymPowComplex& c, const Divisor& d);
/// The divisor at a cell point; zero coordinates collapse points.
Divisor realize(const SymPowComplex& c, const CellPoint& p);
/// Moves a boundary point to the cell carrying it in its relative interior.
CellPoint normalize(const SymPowComplex& c, const CellPoint& p);

struct ComplexViolation {
  std::string cell;
  std::string message;
};

/// Checks grading, that every face of every cell is the image of exactly
/// one face morphism, that face maps agree with coordinate zeroing, and
/// that face maps preserve colors (edge lengths).
std::vector<ComplexViolation> validate_complex(const SymPowComplex& c);

}  // namespace tropsym
