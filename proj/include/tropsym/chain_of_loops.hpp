#pragma once

#include <vector>

#include "tropsym/model.hpp"
#include "tropsym/rational.hpp"

namespace tropsym {

/// Chain of g loops; loop i is a pair of parallel edges of lengths l[i] and
/// m[i]. `bridges`, when non-empty, holds g-1 lengths; a zero entry glues
/// consecutive loops at a shared vertex.
struct ChainOfLoopsSpec {
  std::vector<Rational> l;
  std::vector<Rational> m;
  std::vector<Rational> bridges;

  int genus() const { return static_cast<int>(l.size()); }
  /// Throws DomainError when `l` and `m` are malformed.
  void validate() const;
};

/// Vertices v0, v1, ... left to right; edges l1, m1, b1, l2, ... (1-based).
/// Both loop edges of loop i run from its left vertex to its right vertex.
Model chain_of_loops(const ChainOfLoopsSpec& spec);

/// True iff no l[i]/m[i] equals p/q for positive integers with p+q <= 2g-2.
bool is_generic_chain(const ChainOfLoopsSpec& spec);

}  // namespace tropsym
