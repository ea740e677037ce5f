#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropsym/divisor.hpp"
#include "tropsym/model.hpp"
#include "tropsym/rational.hpp"

namespace tropsym {

/// Restriction of a piecewise linear function to one oriented edge:
/// `slopes[i]` is the slope on the i-th segment cut out by the sorted
/// interior `breakpoints`.
struct EdgeProfile {
  std::vector<Rational> breakpoints;
  std::vector<std::int64_t> slopes;
};

/// Continuous piecewise linear function with integer slopes.
class PLFunction {
 public:
  /// Throws DomainError unless breakpoints are strictly increasing inside
  /// each edge, there is one more slope than breakpoints, and the slopes
  /// integrate to the head-minus-tail difference of vertex values.
  static PLFunction create(ModelPtr host, std::vector<Rational> vertex_values,
                           std::vector<EdgeProfile> profiles);
  /// The zero-slope function with value c everywhere.
  static PLFunction constant(ModelPtr host, const Rational& c);

  const ModelPtr& host() const { return host_; }
  const std::vector<Rational>& vertex_values() const { return values_; }
  const std::vector<EdgeProfile>& profiles() const { return profiles_; }
  Rational value_at(const PointOnModel& p) const;

 private:
  PLFunction() = default;
  ModelPtr host_;
  std::vector<Rational> values_;
  std::vector<EdgeProfile> profiles_;
};

/// Sum over points of the outgoing slopes of f.
Divisor div_of(const PLFunction& f);

/// Base point used when none is given: the vertex with the smallest id.
PointOnModel default_base(const Model& m);

/// The unique q-reduced divisor linearly equivalent to d, on d's host.
Divisor q_reduced(const Divisor& d, const PointOnModel& q);

/// Throws DomainError if the divisors live on different curves.
bool linearly_equivalent(const Divisor& a, const Divisor& b);

/// An effective divisor equivalent to d, if one exists.
std::optional<Divisor> has_effective_rep(const Divisor& d);

struct RankOptions {
  /// Multiplies the lattice scale; E is quantified over lattice points.
  std::int64_t refinement = 1;
};

/// Baker–Norine rank, -1 when |d| is empty.
int rank(const Divisor& d, const RankOptions& options = {});

/// r(D) - r(K - D) - (deg D - g + 1).
int rr_defect(const Divisor& d, const RankOptions& options = {});

/// Element of Pic(Γ) held by its reduced representative at a base point.
class DivisorClass {
 public:
  DivisorClass(const Divisor& d, const PointOnModel& base);

  const ModelPtr& host() const { return representative_.host(); }
  const PointOnModel& base() const { return base_; }
  const Divisor& representative() const { return representative_; }
  std::int64_t degree() const { return representative_.degree(); }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b);

 private:
  PointOnModel base_;
  Divisor representative_;
};

}  // namespace tropsym
