#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tropsym/chain_of_loops.hpp"
#include "tropsym/model.hpp"

// Bundled example curves. The JSON files under fixtures/ encode the same
// models.
namespace tropsym::fixtures {

/// Two vertices a, b joined by one edge e of length 1.
ModelPtr interval();
/// Two vertices a, b joined by parallel edges e, f of length 1.
ModelPtr circle();
/// Two loops of length 2 at x and y joined by a bridge of length 1, as
/// drawn (with loop edges).
ModelPtr dumbbell_with_loops();
/// The loop-free model of the dumbbell: every edge has length 1.
ModelPtr dumbbell();

ChainOfLoopsSpec chain_g2_spec();
ChainOfLoopsSpec chain_g3_spec();
ModelPtr chain_g2();
ModelPtr chain_g3();

struct Named {
  std::string name;
  ModelPtr model;
};

/// interval, circle, dumbbell, chain_g2, chain_g3.
std::vector<Named> all();
/// Throws DomainError for unknown names.
ModelPtr by_name(std::string_view name);

}  // namespace tropsym::fixtures
