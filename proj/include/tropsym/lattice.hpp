#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tropsym/divisor.hpp"
#include "tropsym/model.hpp"

namespace tropsym {

/// Unit subdivision of a root model after scaling all lengths by `scale`:
/// every point at a position that is a multiple of 1/scale becomes a
/// vertex of a finite multigraph. Chip configurations are indexed by these
/// lattice vertices; the model's own vertices come first, in model order.
class Lattice {
 public:
  struct Neighbor {
    int vertex;
    int multiplicity;
  };

  Lattice(const Model& root, std::int64_t scale);

  /// Smallest scale making every root edge length and every given root
  /// position integral, multiplied by `refinement`.
  static std::int64_t scale_for(const Model& root,
                                const std::vector<PointOnModel>& root_points,
                                std::int64_t refinement = 1);

  std::int64_t scale() const { return scale_; }
  int size() const { return static_cast<int>(points_.size()); }
  std::span<const Neighbor> neighbors(int v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }

  /// Lattice vertex at a root point. Throws DomainError off the lattice.
  int index_of(const PointOnModel& root_point) const;
  /// Root point of a lattice vertex.
  const PointOnModel& point_at(int v) const { return points_.at(v); }

  /// Chip vector of d (moved to the root curve first).
  std::vector<std::int64_t> chips_of(const Divisor& d) const;
  /// Divisor on `host` (a model of the lattice's curve) from a chip vector.
  Divisor divisor_of(const std::vector<std::int64_t>& chips,
                     const ModelPtr& host) const;

  /// Computes q-reduced normal forms relative to a fixed base vertex. Owns
  /// scratch space, so use one reducer per thread.
  class Reducer {
   public:
    Reducer(const Lattice& lattice, int base);
    int base() const { return base_; }
    /// Replaces chips by the unique base-reduced configuration linearly
    /// equivalent to it.
    void reduce(std::vector<std::int64_t>& chips);

   private:
    void make_nonnegative_off_base(std::vector<std::int64_t>& chips);
    bool burn_and_fire(std::vector<std::int64_t>& chips);

    const Lattice& lattice_;
    int base_;
    std::vector<int> order_;          // BFS order from base
    std::vector<int> layer_start_;    // offsets of each distance layer
    std::vector<int> distance_;
    std::vector<int> down_degree_;    // edges into the previous layer
    std::vector<char> burnt_;
    std::vector<std::int64_t> burning_edges_;
    std::vector<int> queue_;
  };

 private:
  std::int64_t scale_;
  std::vector<PointOnModel> points_;
  std::vector<int> edge_base_;  // first interior lattice vertex of each edge
  std::vector<std::int64_t> edge_units_;
  std::vector<int> offsets_;
  std::vector<Neighbor> adjacency_;
};

}  // namespace tropsym
