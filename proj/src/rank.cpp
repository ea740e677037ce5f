#include <cstdint>
#include <unordered_map>
#include <vector>

#include "chipfiring_internal.hpp"
#include "tropsym/chipfiring.hpp"
#include "tropsym/errors.hpp"

namespace tropsym {

namespace {

struct ChipsHash {
  std::size_t operator()(const std::vector<std::int64_t>& chips) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t c : chips) {
      h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

// Decides r(D) >= k by recursion on k: r(D) >= k iff r(D - p) >= k - 1 for
// every lattice point p. Classes are keyed by their reduced form, so each
// class is examined once per level.
class RankSolver {
 public:
  RankSolver(const Lattice& lattice, int base)
      : lattice_(lattice), reducer_(lattice, base), base_(base) {}

  int rank(std::vector<std::int64_t> chips, std::int64_t degree) {
    reducer_.reduce(chips);
    if (chips[base_] < 0) return -1;
    int k = 0;
    while (k < degree && at_least(chips, degree, k + 1)) ++k;
    return k;
  }

 private:
  // chips must be reduced and effective.
  bool at_least(const std::vector<std::int64_t>& chips, std::int64_t degree,
                int k) {
    if (k == 0) return true;
    if (degree < k) return false;
    if (memo_.size() <= static_cast<std::size_t>(k)) memo_.resize(k + 1);
    auto& level = memo_[k];
    if (auto it = level.find(chips); it != level.end()) return it->second;

    bool ok = true;
    std::vector<std::int64_t> next;
    for (int p = 0; p < lattice_.size() && ok; ++p) {
      next = chips;
      --next[p];
      reducer_.reduce(next);
      ok = next[base_] >= 0 && at_least(next, degree - 1, k - 1);
    }
    level.emplace(chips, ok);
    return ok;
  }

  const Lattice& lattice_;
  Lattice::Reducer reducer_;
  int base_;
  std::vector<std::unordered_map<std::vector<std::int64_t>, bool, ChipsHash>>
      memo_;
};

}  // namespace

int rank(const Divisor& d, const RankOptions& options) {
  if (options.refinement < 1) {
    throw DomainError("rank refinement factor must be positive");
  }
  const std::int64_t degree = d.degree();
  if (degree < 0) return -1;
  const PointOnModel base = default_base(d.model());
  auto setup = detail::make_lattice({&d}, {base}, d.host(), options.refinement);
  RankSolver solver(setup.lattice,
                    setup.lattice.index_of(d.model().to_root(base)));
  return solver.rank(setup.lattice.chips_of(d), degree);
}

int rr_defect(const Divisor& d, const RankOptions& options) {
  const Divisor k = canonical_divisor(d.host());
  const int g = genus(d.model());
  const int lhs = rank(d, options) - rank(k - d, options);
  return lhs - static_cast<int>(d.degree() - g + 1);
}

}  // namespace tropsym
