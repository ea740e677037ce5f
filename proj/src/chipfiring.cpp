#include "tropsym/chipfiring.hpp"

#include <algorithm>

#include "chipfiring_internal.hpp"
#include "tropsym/errors.hpp"

namespace tropsym {

PLFunction PLFunction::create(ModelPtr host, std::vector<Rational> vertex_values,
                              std::vector<EdgeProfile> profiles) {
  const Model& m = *host;
  if (vertex_values.size() != m.vertex_count()) {
    throw DomainError("PL function needs one value per vertex");
  }
  if (profiles.size() != m.edge_count()) {
    throw DomainError("PL function needs one profile per edge");
  }
  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    const Edge& edge = m.edge(e);
    const EdgeProfile& prof = profiles[e];
    if (prof.slopes.size() != prof.breakpoints.size() + 1) {
      throw DomainError("edge '" + edge.id +
                        "': need one more slope than breakpoints");
    }
    Rational prev(0);
    Rational rise(0);
    for (std::size_t i = 0; i <= prof.breakpoints.size(); ++i) {
      const Rational next =
          i < prof.breakpoints.size() ? prof.breakpoints[i] : edge.length;
      if (next <= prev) {
        throw DomainError("edge '" + edge.id +
                          "': breakpoints must increase strictly inside the "
                          "edge");
      }
      rise += Rational(prof.slopes[i]) * (next - prev);
      prev = next;
    }
    if (vertex_values[edge.tail] + rise != vertex_values[edge.head]) {
      throw DomainError("edge '" + edge.id +
                        "': slopes do not match the endpoint values");
    }
  }
  PLFunction f;
  f.host_ = std::move(host);
  f.values_ = std::move(vertex_values);
  f.profiles_ = std::move(profiles);
  return f;
}

PLFunction PLFunction::constant(ModelPtr host, const Rational& c) {
  const std::size_t vertices = host->vertex_count();
  const std::size_t edges = host->edge_count();
  return create(std::move(host), std::vector<Rational>(vertices, c),
                std::vector<EdgeProfile>(edges, EdgeProfile{{}, {0}}));
}

Rational PLFunction::value_at(const PointOnModel& p) const {
  if (p.is_vertex()) return values_.at(p.vertex());
  const Edge& edge = host_->edge(p.edge());
  const EdgeProfile& prof = profiles_[p.edge()];
  Rational value = values_[edge.tail];
  Rational prev(0);
  for (std::size_t i = 0; i <= prof.breakpoints.size(); ++i) {
    const Rational next =
        i < prof.breakpoints.size() ? prof.breakpoints[i] : edge.length;
    if (p.position() <= next) {
      return value + Rational(prof.slopes[i]) * (p.position() - prev);
    }
    value += Rational(prof.slopes[i]) * (next - prev);
    prev = next;
  }
  return value;
}

Divisor div_of(const PLFunction& f) {
  const Model& m = *f.host();
  Divisor d(f.host());
  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    const Edge& edge = m.edge(e);
    const EdgeProfile& prof = f.profiles()[e];
    d.add(PointOnModel::at_vertex(edge.tail), prof.slopes.front());
    d.add(PointOnModel::at_vertex(edge.head), -prof.slopes.back());
    for (std::size_t i = 0; i < prof.breakpoints.size(); ++i) {
      d.add(PointOnModel::on_edge(e, prof.breakpoints[i]),
            prof.slopes[i + 1] - prof.slopes[i]);
    }
  }
  return d;
}

PointOnModel default_base(const Model& m) {
  std::size_t best = 0;
  for (std::size_t v = 1; v < m.vertex_count(); ++v) {
    if (m.vertex(v).id < m.vertex(best).id) best = v;
  }
  return PointOnModel::at_vertex(best);
}

namespace detail {

LatticeSetup make_lattice(const std::vector<const Divisor*>& divisors,
                          const std::vector<PointOnModel>& host_points,
                          const ModelPtr& host, std::int64_t refinement) {
  ModelPtr root = host->is_root() ? host : share(host->root());
  std::vector<PointOnModel> root_points;
  for (const Divisor* d : divisors) {
    if (!same_curve(d->model(), *host)) {
      throw DomainError("divisors live on different curves");
    }
    for (const auto& [p, c] : d->terms()) {
      root_points.push_back(d->model().to_root(p));
    }
  }
  for (const auto& p : host_points) root_points.push_back(host->to_root(p));
  const std::int64_t scale =
      Lattice::scale_for(*root, root_points, refinement);
  return LatticeSetup{root, Lattice(*root, scale)};
}

PointOnModel normalize_point(const Model& m, const PointOnModel& p) {
  PointOnModel q = p.is_vertex() ? p : m.point_on_edge(p.edge(), p.position());
  m.check_point(q);
  return q;
}

}  // namespace detail

Divisor q_reduced(const Divisor& d, const PointOnModel& q) {
  const PointOnModel base = detail::normalize_point(d.model(), q);
  auto setup = detail::make_lattice({&d}, {base}, d.host(), 1);
  Lattice::Reducer reducer(setup.lattice,
                           setup.lattice.index_of(d.model().to_root(base)));
  auto chips = setup.lattice.chips_of(d);
  reducer.reduce(chips);
  return setup.lattice.divisor_of(chips, d.host());
}

bool linearly_equivalent(const Divisor& a, const Divisor& b) {
  if (!same_curve(a.model(), b.model())) {
    throw DomainError("divisors live on different curves");
  }
  if (a.degree() != b.degree()) return false;
  const PointOnModel base = default_base(a.model());
  auto setup = detail::make_lattice({&a, &b}, {base}, a.host(), 1);
  Lattice::Reducer reducer(setup.lattice,
                           setup.lattice.index_of(a.model().to_root(base)));
  auto x = setup.lattice.chips_of(a);
  auto y = setup.lattice.chips_of(b);
  reducer.reduce(x);
  reducer.reduce(y);
  return x == y;
}

std::optional<Divisor> has_effective_rep(const Divisor& d) {
  if (d.degree() < 0) return std::nullopt;
  if (d.is_effective()) return d;
  const PointOnModel base = default_base(d.model());
  Divisor reduced = q_reduced(d, base);
  if (reduced.coefficient(base) < 0) return std::nullopt;
  return reduced;
}

DivisorClass::DivisorClass(const Divisor& d, const PointOnModel& base)
    : base_(detail::normalize_point(d.model(), base)),
      representative_(q_reduced(d, base_)) {}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  if (!same_curve(a.representative_.model(), b.representative_.model())) {
    return false;
  }
  if (a.representative_.model().to_root(a.base_) !=
      b.representative_.model().to_root(b.base_)) {
    return false;
  }
  return a.representative_ == b.representative_;
}

}  // namespace tropsym
