#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropsym/model.hpp"

namespace tropsym {

/// Finite integer combination of points of a model. Zero coefficients are
/// never stored and edge endpoints are always held in vertex form.
class Divisor {
 public:
  using Terms = std::map<PointOnModel, std::int64_t>;

  explicit Divisor(ModelPtr host);
  static Divisor from_terms(
      ModelPtr host,
      const std::vector<std::pair<PointOnModel, std::int64_t>>& terms);
  static Divisor point(ModelPtr host, const PointOnModel& p,
                       std::int64_t coeff = 1);

  const ModelPtr& host() const { return host_; }
  const Model& model() const { return *host_; }
  const Terms& terms() const { return terms_; }

  std::int64_t coefficient(const PointOnModel& p) const;
  std::int64_t degree() const;
  bool is_effective() const;
  bool is_zero() const { return terms_.empty(); }
  /// True iff every point of the support is a vertex of the host model.
  bool supported_on_vertices() const;

  /// Adds coeff at p (normalizing edge endpoints to vertices).
  void add(const PointOnModel& p, std::int64_t coeff);

  /// The same divisor expressed on another model of the same curve.
  Divisor transported(const ModelPtr& target) const;

  Divisor operator-() const;
  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(std::int64_t k, const Divisor& d);

  /// Equal as divisors on the same curve (hosts may differ by refinement).
  friend bool operator==(const Divisor& a, const Divisor& b);

  /// Canonical text, e.g. "2*v1 + -1*e3@1/2"; total order on divisors of
  /// one host.
  std::string str() const;

 private:
  ModelPtr host_;
  Terms terms_;
};

/// K = sum over vertices of (valence + 2 * weight - 2) * v.
Divisor canonical_divisor(const ModelPtr& m);

}  // namespace tropsym
