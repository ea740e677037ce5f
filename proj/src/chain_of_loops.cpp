#include "tropsym/chain_of_loops.hpp"

#include <string>

#include "tropsym/errors.hpp"

namespace tropsym {

void ChainOfLoopsSpec::validate() const {
  if (l.empty()) throw DomainError("chain of loops needs genus >= 1");
  if (l.size() != m.size()) {
    throw DomainError("l and m must have one entry per loop");
  }
  if (!bridges.empty() && bridges.size() + 1 != l.size()) {
    throw DomainError("bridges must have genus-1 entries");
  }
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i].sign() <= 0 || m[i].sign() <= 0) {
      throw DomainError("loop " + std::to_string(i + 1) +
                        " has a nonpositive length");
    }
  }
  for (const auto& b : bridges) {
    if (b.sign() < 0) throw DomainError("bridge length is negative");
  }
}

Model chain_of_loops(const ChainOfLoopsSpec& spec) {
  spec.validate();
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  auto fresh_vertex = [&] {
    vertices.push_back({"v" + std::to_string(vertices.size()), 0});
    return vertices.back().id;
  };

  std::string left = fresh_vertex();
  for (std::size_t i = 0; i < spec.l.size(); ++i) {
    const std::string n = std::to_string(i + 1);
    const std::string right = fresh_vertex();
    edges.push_back({"l" + n, left, right, spec.l[i]});
    edges.push_back({"m" + n, left, right, spec.m[i]});
    left = right;
    if (i + 1 < spec.l.size() && !spec.bridges.empty() &&
        spec.bridges[i].sign() > 0) {
      const std::string next = fresh_vertex();
      edges.push_back({"b" + n, left, next, spec.bridges[i]});
      left = next;
    }
  }
  return Model::create(vertices, edges);
}

bool is_generic_chain(const ChainOfLoopsSpec& spec) {
  spec.validate();
  const int bound = 2 * spec.genus() - 2;
  for (std::size_t i = 0; i < spec.l.size(); ++i) {
    const Rational ratio = spec.l[i] / spec.m[i];
    for (int p = 1; p < bound; ++p) {
      for (int q = 1; p + q <= bound; ++q) {
        if (ratio == Rational(p, q)) return false;
      }
    }
  }
  return true;
}

}  // namespace tropsym
