#include "tropsym/lattice.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "tropsym/errors.hpp"

namespace tropsym {

namespace {

constexpr std::int64_t kMaxLatticeVertices = 4'000'000;

std::int64_t to_scale(const mpz_class& z) {
  if (z > mpz_class(static_cast<long>(kMaxLatticeVertices))) {
    throw DomainError("lattice resolution too fine (scale " + z.get_str() +
                      ")");
  }
  return z.get_si();
}

}  // namespace

Lattice::Lattice(const Model& root, std::int64_t scale) : scale_(scale) {
  if (!root.is_root()) throw std::invalid_argument("lattice needs a root model");
  if (scale <= 0) throw std::invalid_argument("lattice scale must be positive");
  if (root.total_weight() != 0) {
    throw DomainError(
        "chip-firing is implemented for weight-zero models only");
  }
  for (std::size_t v = 0; v < root.vertex_count(); ++v) {
    points_.push_back(PointOnModel::at_vertex(v));
  }
  const Rational s(scale);
  std::map<std::pair<int, int>, int> multiplicity;
  auto link = [&](int a, int b) {
    if (a == b) return;  // self-loops do not affect chip-firing
    ++multiplicity[{a, b}];
    ++multiplicity[{b, a}];
  };
  for (std::size_t e = 0; e < root.edge_count(); ++e) {
    const Edge& edge = root.edge(e);
    const Rational units = edge.length * s;
    if (!units.is_integer()) {
      throw DomainError("edge '" + edge.id + "' is not a multiple of 1/" +
                        std::to_string(scale));
    }
    const std::int64_t n = units.to_int64();
    if (static_cast<std::int64_t>(points_.size()) + n > kMaxLatticeVertices) {
      throw DomainError("lattice too large");
    }
    edge_units_.push_back(n);
    edge_base_.push_back(static_cast<int>(points_.size()));
    int prev = static_cast<int>(edge.tail);
    for (std::int64_t i = 1; i < n; ++i) {
      const int v = static_cast<int>(points_.size());
      points_.push_back(PointOnModel::on_edge(e, Rational(i) / s));
      link(prev, v);
      prev = v;
    }
    link(prev, static_cast<int>(edge.head));
  }
  offsets_.assign(points_.size() + 1, 0);
  for (const auto& [key, m] : multiplicity) ++offsets_[key.first + 1];
  for (std::size_t v = 0; v < points_.size(); ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(multiplicity.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [key, m] : multiplicity) {
    adjacency_[fill[key.first]++] = Neighbor{key.second, m};
  }
}

std::int64_t Lattice::scale_for(const Model& root,
                                const std::vector<PointOnModel>& root_points,
                                std::int64_t refinement) {
  mpz_class scale = 1;
  for (const auto& e : root.edges()) scale = lcm(scale, e.length.denominator());
  for (const auto& p : root_points) {
    if (!p.is_vertex()) scale = lcm(scale, p.position().denominator());
  }
  scale *= refinement;
  return to_scale(scale);
}

int Lattice::index_of(const PointOnModel& root_point) const {
  if (root_point.is_vertex()) return static_cast<int>(root_point.vertex());
  const Rational units = root_point.position() * Rational(scale_);
  if (!units.is_integer()) {
    throw DomainError("point is not on the lattice of resolution 1/" +
                      std::to_string(scale_));
  }
  const std::int64_t i = units.to_int64();
  const std::size_t e = root_point.edge();
  if (i <= 0 || i >= edge_units_.at(e)) {
    throw DomainError("edge position outside the open edge");
  }
  return edge_base_[e] + static_cast<int>(i - 1);
}

std::vector<std::int64_t> Lattice::chips_of(const Divisor& d) const {
  std::vector<std::int64_t> chips(points_.size(), 0);
  const Model& host = d.model();
  for (const auto& [p, c] : d.terms()) chips[index_of(host.to_root(p))] += c;
  return chips;
}

Divisor Lattice::divisor_of(const std::vector<std::int64_t>& chips,
                            const ModelPtr& host) const {
  Divisor d(host);
  for (std::size_t v = 0; v < chips.size(); ++v) {
    if (chips[v] != 0) d.add(host->from_root(points_[v]), chips[v]);
  }
  return d;
}

Lattice::Reducer::Reducer(const Lattice& lattice, int base)
    : lattice_(lattice), base_(base) {
  const int n = lattice.size();
  if (base < 0 || base >= n) throw std::out_of_range("base vertex");
  distance_.assign(n, -1);
  distance_[base] = 0;
  order_.push_back(base);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const int u = order_[i];
    for (const auto& nb : lattice.neighbors(u)) {
      if (distance_[nb.vertex] < 0) {
        distance_[nb.vertex] = distance_[u] + 1;
        order_.push_back(nb.vertex);
      }
    }
  }
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i == 0 || distance_[order_[i]] != distance_[order_[i - 1]]) {
      layer_start_.push_back(static_cast<int>(i));
    }
  }
  layer_start_.push_back(static_cast<int>(order_.size()));
  down_degree_.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    for (const auto& nb : lattice.neighbors(v)) {
      if (distance_[nb.vertex] + 1 == distance_[v]) {
        down_degree_[v] += nb.multiplicity;
      }
    }
  }
  burnt_.assign(n, 0);
  burning_edges_.assign(n, 0);
  queue_.reserve(n);
}

void Lattice::Reducer::make_nonnegative_off_base(
    std::vector<std::int64_t>& chips) {
  // Firing the ball of radius j only moves chips from layer j to layer j+1,
  // so fixing layers from the outside in never undoes earlier work.
  const int layers = static_cast<int>(layer_start_.size()) - 1;
  for (int j = layers - 2; j >= 0; --j) {
    std::int64_t times = 0;
    for (int i = layer_start_[j + 1]; i < layer_start_[j + 2]; ++i) {
      const int v = order_[i];
      if (chips[v] < 0) {
        const std::int64_t need =
            (-chips[v] + down_degree_[v] - 1) / down_degree_[v];
        times = std::max(times, need);
      }
    }
    if (times == 0) continue;
    for (int i = layer_start_[j + 1]; i < layer_start_[j + 2]; ++i) {
      const int v = order_[i];
      for (const auto& nb : lattice_.neighbors(v)) {
        if (distance_[nb.vertex] == j) {
          chips[v] += times * nb.multiplicity;
          chips[nb.vertex] -= times * nb.multiplicity;
        }
      }
    }
  }
}

bool Lattice::Reducer::burn_and_fire(std::vector<std::int64_t>& chips) {
  const int n = lattice_.size();
  std::fill(burnt_.begin(), burnt_.end(), 0);
  std::fill(burning_edges_.begin(), burning_edges_.end(), 0);
  queue_.clear();
  burnt_[base_] = 1;
  queue_.push_back(base_);
  for (std::size_t i = 0; i < queue_.size(); ++i) {
    const int u = queue_[i];
    for (const auto& nb : lattice_.neighbors(u)) {
      const int w = nb.vertex;
      if (burnt_[w]) continue;
      burning_edges_[w] += nb.multiplicity;
      if (burning_edges_[w] > chips[w]) {
        burnt_[w] = 1;
        queue_.push_back(w);
      }
    }
  }
  if (static_cast<int>(queue_.size()) == n) return false;

  // Every unburnt vertex can afford one firing of the unburnt set; fire it
  // as many times as all of them can afford at once.
  std::int64_t times = std::numeric_limits<std::int64_t>::max();
  for (int v = 0; v < n; ++v) {
    if (!burnt_[v] && burning_edges_[v] > 0) {
      times = std::min(times, chips[v] / burning_edges_[v]);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (burnt_[v] || burning_edges_[v] == 0) continue;
    chips[v] -= times * burning_edges_[v];
    for (const auto& nb : lattice_.neighbors(v)) {
      if (burnt_[nb.vertex]) chips[nb.vertex] += times * nb.multiplicity;
    }
  }
  return true;
}

void Lattice::Reducer::reduce(std::vector<std::int64_t>& chips) {
  make_nonnegative_off_base(chips);
  while (burn_and_fire(chips)) {
  }
}

}  // namespace tropsym
