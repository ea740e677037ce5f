#pragma once

#include <vector>

#include "tropsym/chipfiring.hpp"
#include "tropsym/divisor.hpp"
#include "tropsym/rational.hpp"

namespace tropsym {

/// (D_1, ..., D_n) -> m_1 D_1 + ... + m_n D_n with deg D_i = d_i.
struct DiagonalSpec {
  std::vector<int> multiplicities;
  std::vector<int> degrees;
  int target_degree = 0;

  /// Throws DomainError unless sizes agree, entries are positive and
  /// sum m_i d_i equals target_degree.
  void validate() const;
};

Divisor diagonal(const DiagonalSpec& spec, const std::vector<Divisor>& parts);

/// Class of an effective divisor in Pic_d, held by its reduced form at
/// `base`.
DivisorClass abel_jacobi(const Divisor& d, const PointOnModel& base);

struct DeJonquieresQuery {
  DivisorClass target;
  /// Multiplicities a_1, ..., a_k; one grid point per entry.
  std::vector<int> shape;
  /// Grid step; must divide every edge length of the host.
  Rational resolution;
};

/// Vertices plus every point at a multiple of `resolution` along each edge.
/// Throws DomainError if the resolution does not divide an edge length.
std::vector<PointOnModel> grid_points(const Model& m,
                                      const Rational& resolution);

/// Every divisor a_1 p_1 + ... + a_k p_k with distinct grid points p_i in
/// the target class, sorted canonically. Complete only over grid points.
std::vector<Divisor> dejonquieres_search(const DeJonquieresQuery& query);

}  // namespace tropsym
