#pragma once

#include <cstdint>
#include <vector>

#include "tropsym/divisor.hpp"
#include "tropsym/lattice.hpp"

namespace tropsym::detail {

struct LatticeSetup {
  ModelPtr root;
  Lattice lattice;
};

/// Lattice on the root of `host` fine enough for every divisor and point
/// given, with the scale multiplied by `refinement`.
LatticeSetup make_lattice(const std::vector<const Divisor*>& divisors,
                          const std::vector<PointOnModel>& host_points,
                          const ModelPtr& host, std::int64_t refinement);

PointOnModel normalize_point(const Model& m, const PointOnModel& p);

}  // namespace tropsym::detail
