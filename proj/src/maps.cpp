#include "tropsym/maps.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>

#include "chipfiring_internal.hpp"
#include "tropsym/errors.hpp"
#include "tropsym/lattice.hpp"
#include "tropsym/parallel.hpp"

namespace tropsym {

void DiagonalSpec::validate() const {
  if (multiplicities.empty() || multiplicities.size() != degrees.size()) {
    throw DomainError("diagonal needs matching, nonempty multiplicities and "
                      "degrees");
  }
  int total = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] <= 0 || degrees[i] <= 0) {
      throw DomainError("diagonal multiplicities and degrees must be positive");
    }
    total += multiplicities[i] * degrees[i];
  }
  if (total != target_degree) {
    throw DomainError("sum of m_i * d_i is " + std::to_string(total) +
                      ", expected " + std::to_string(target_degree));
  }
}

Divisor diagonal(const DiagonalSpec& spec, const std::vector<Divisor>& parts) {
  spec.validate();
  if (parts.size() != spec.degrees.size()) {
    throw DomainError("diagonal expects " +
                      std::to_string(spec.degrees.size()) + " divisors");
  }
  Divisor out(parts.front().host());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].is_effective()) {
      throw DomainError("diagonal input " + std::to_string(i) +
                        " is not effective");
    }
    if (parts[i].degree() != spec.degrees[i]) {
      throw DomainError("diagonal input " + std::to_string(i) + " has degree " +
                        std::to_string(parts[i].degree()) + ", expected " +
                        std::to_string(spec.degrees[i]));
    }
    out += spec.multiplicities[i] * parts[i];
  }
  return out;
}

DivisorClass abel_jacobi(const Divisor& d, const PointOnModel& base) {
  if (!d.is_effective()) {
    throw DomainError("Abel-Jacobi map is defined on effective divisors");
  }
  return DivisorClass(d, base);
}

std::vector<PointOnModel> grid_points(const Model& m,
                                      const Rational& resolution) {
  if (resolution.sign() <= 0) throw DomainError("resolution must be positive");
  std::vector<PointOnModel> out;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    out.push_back(PointOnModel::at_vertex(v));
  }
  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    const Rational steps = m.edge(e).length / resolution;
    if (!steps.is_integer()) {
      throw DomainError("resolution " + resolution.str() +
                        " does not divide the length of edge '" +
                        m.edge(e).id + "'");
    }
    const std::int64_t n = steps.to_int64();
    for (std::int64_t i = 1; i < n; ++i) {
      out.push_back(PointOnModel::on_edge(e, Rational(i) * resolution));
    }
  }
  return out;
}

namespace {

bool canonical_less(const Divisor& a, const Divisor& b) {
  return std::lexicographical_compare(a.terms().begin(), a.terms().end(),
                                      b.terms().begin(), b.terms().end());
}

}  // namespace

std::vector<Divisor> dejonquieres_search(const DeJonquieresQuery& query) {
  const Divisor& target = query.target.representative();
  const ModelPtr& host = target.host();
  std::vector<int> shape = query.shape;
  if (shape.empty()) throw DomainError("shape must have at least one part");
  std::int64_t shape_degree = 0;
  for (int a : shape) {
    if (a <= 0) throw DomainError("shape parts must be positive");
    shape_degree += a;
  }
  if (shape_degree != target.degree()) {
    throw DomainError("shape has degree " + std::to_string(shape_degree) +
                      " but the class has degree " +
                      std::to_string(target.degree()));
  }
  std::sort(shape.rbegin(), shape.rend());

  const std::vector<PointOnModel> grid = grid_points(*host, query.resolution);
  const PointOnModel base = default_base(*host);
  std::vector<PointOnModel> marks = grid;
  marks.push_back(base);
  auto setup = detail::make_lattice({&target}, marks, host, 1);
  const Lattice& lattice = setup.lattice;
  const int base_index = lattice.index_of(host->to_root(base));
  std::vector<int> grid_index;
  for (const auto& p : grid) grid_index.push_back(lattice.index_of(host->to_root(p)));

  std::vector<std::int64_t> goal = lattice.chips_of(target);
  Lattice::Reducer(lattice, base_index).reduce(goal);

  const std::size_t n = grid.size();
  const std::size_t parts = shape.size();
  std::vector<Divisor> found;
  std::mutex found_mutex;
  std::vector<std::unique_ptr<Lattice::Reducer>> reducers(
      std::min(thread_count(), std::max<std::size_t>(n, 1)));

  parallel_for(n, [&](std::size_t first, std::size_t worker) {
    auto& reducer = reducers[worker];
    if (!reducer) reducer = std::make_unique<Lattice::Reducer>(lattice, base_index);
    std::vector<std::size_t> chosen{first};
    std::vector<std::int64_t> chips(lattice.size(), 0);
    std::vector<Divisor> local;
    std::function<void()> extend = [&] {
      const std::size_t slot = chosen.size();
      if (slot == parts) {
        std::fill(chips.begin(), chips.end(), 0);
        for (std::size_t i = 0; i < parts; ++i) {
          chips[grid_index[chosen[i]]] += shape[i];
        }
        reducer->reduce(chips);
        if (chips == goal) {
          Divisor d(host);
          for (std::size_t i = 0; i < parts; ++i) d.add(grid[chosen[i]], shape[i]);
          local.push_back(std::move(d));
        }
        return;
      }
      // Equal multiplicities are unordered: pick their points increasingly.
      const std::size_t start =
          shape[slot] == shape[slot - 1] ? chosen.back() + 1 : 0;
      for (std::size_t p = start; p < n; ++p) {
        if (std::find(chosen.begin(), chosen.end(), p) != chosen.end()) continue;
        chosen.push_back(p);
        extend();
        chosen.pop_back();
      }
    };
    extend();
    if (!local.empty()) {
      std::lock_guard lock(found_mutex);
      for (auto& d : local) found.push_back(std::move(d));
    }
  });

  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

}  // namespace tropsym
