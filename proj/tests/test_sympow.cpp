#include <doctest.h>

#include <map>
#include <set>

#include "support.hpp"
#include "tropsym/errors.hpp"
#include "tropsym/fixtures.hpp"
#include "tropsym/sympow.hpp"

using namespace tropsym;
namespace fx = tropsym::fixtures;
namespace ts = testing_support;

namespace {

const char* const kLoopFree[] = {"interval", "circle", "dumbbell", "chain_g2", "chain_g3"};

std::size_t cell_index(const SymPowComplex& c, std::vector<int> weights,
                       std::vector<std::vector<int>> sequences) {
  auto i = c.find(StableCell(c.host(), std::move(weights), std::move(sequences)));
  REQUIRE(i.has_value());
  return *i;
}

}  // namespace

TEST_CASE("polysimplices") {
  const Polysimplex s({{2, Rational(1)}, {1, Rational(3, 2)}, {0, Rational(2)}});
  CHECK(s.dimension() == 3);
  CHECK(s.coordinate_count() == 6);
  CHECK(s.factor_of(0) == 0);
  CHECK(s.factor_of(3) == 1);
  CHECK(s.factor_of(5) == 2);
  const std::vector<Rational> x{Rational(1, 3), Rational(1, 3), Rational(1, 3),
                                Rational(1), Rational(1, 2), Rational(2)};
  CHECK(s.contains(x));
  CHECK(s.in_relative_interior(x));
  auto y = x;
  y[0] = Rational(0);
  y[1] = Rational(2, 3);
  CHECK(s.contains(y));
  CHECK_FALSE(s.in_relative_interior(y));
  y[1] = Rational(1);
  CHECK_FALSE(s.contains(y));
}

TEST_CASE("stable cells") {
  const auto m = fx::interval();
  const StableCell triangle(m, {0, 0}, {{1, 1}});
  CHECK(triangle.degree() == 2);
  CHECK(triangle.dimension() == 2);
  CHECK(triangle.shape() == Polysimplex({{2, Rational(1)}}));
  CHECK_THROWS_AS(StableCell(m, {0}, {{1}}), DomainError);
  CHECK_THROWS_AS(StableCell(m, {0, 0}, {{0}}), DomainError);
  CHECK_THROWS_AS(StableCell(m, {-1, 0}, {{}}), DomainError);
}

TEST_CASE("f-vector examples") {
  CHECK(f_vector(enumerate_cells(fx::dumbbell(), 2)) == std::vector<std::size_t>{10, 25, 15});
  CHECK(f_vector(enumerate_cells(fx::interval(), 2)) == std::vector<std::size_t>{3, 3, 1});
  CHECK(f_vector(enumerate_cells(fx::interval(), 1)) == std::vector<std::size_t>{2, 1});
  const auto circle2 = enumerate_cells(fx::circle(), 2);
  CHECK(f_vector(circle2) == std::vector<std::size_t>{3, 6, 3});
  CHECK(euler_characteristic(circle2) == 0);
  CHECK(euler_characteristic(enumerate_cells(fx::interval(), 2)) == 1);
  for (const char* name : kLoopFree) {
    const auto zero = enumerate_cells(fx::by_name(name), 0);
    CHECK(zero.size() == 1);
    CHECK(zero.cell(0).cell.dimension() == 0);
    CHECK(zero.cell(0).faces.empty());
  }
  CHECK_THROWS_AS(enumerate_cells(fx::dumbbell_with_loops(), 2), DomainError);
  CHECK_THROWS_AS(enumerate_cells(fx::interval(), -1), DomainError);
}

TEST_CASE("dumbbell maximal cells split into triangles and squares") {
  const auto c = enumerate_cells(fx::dumbbell(), 2);
  int triangles = 0, squares = 0;
  for (const auto& cell : c.cells()) {
    if (cell.cell.dimension() != 2) continue;
    int nontrivial = 0;
    const Polysimplex shape = cell.cell.shape();
    for (const auto& f : shape.factors()) nontrivial += f.k > 0;
    if (nontrivial == 1) ++triangles;
    if (nontrivial == 2) ++squares;
  }
  CHECK(triangles == 5);
  CHECK(squares == 10);
}

TEST_CASE("cell counts agree with the generating function") {
  for (const char* name : kLoopFree) {
    const auto m = fx::by_name(name);
    for (int d = 0; d <= 4; ++d) {
      CAPTURE(name);
      CAPTURE(d);
      const auto c = enumerate_cells(m, d);
      CHECK(f_vector(c) ==
            ts::generating_function_f_vector(m->vertex_count(), m->edge_count(), d));
      // Top dimension is d as soon as there is an edge.
      CHECK(f_vector(c).size() == static_cast<std::size_t>(d) + 1);
    }
  }
  // Random multigraphs.
  ts::Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(ts::uniform(rng, 1, 4));
    std::vector<VertexSpec> vs;
    for (int i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), 0});
    std::vector<EdgeSpec> es;
    for (int i = 1; i < n; ++i) {
      es.push_back({"t" + std::to_string(i), vs[ts::uniform(rng, 0, i - 1)].id, vs[i].id,
                    Rational(ts::uniform(rng, 1, 3))});
    }
    const int extra = n > 1 ? static_cast<int>(ts::uniform(rng, 0, 3)) : 0;
    for (int i = 0; i < extra; ++i) {
      const auto a = ts::uniform(rng, 0, n - 1);
      auto b = ts::uniform(rng, 0, n - 2);
      if (b >= a) ++b;
      es.push_back({"x" + std::to_string(i), vs[a].id, vs[b].id, Rational(1, 2)});
    }
    const auto m = share(new_model(vs, es));
    const int d = static_cast<int>(ts::uniform(rng, 0, 3));
    CHECK(f_vector(enumerate_cells(m, d)) ==
          ts::generating_function_f_vector(m->vertex_count(), m->edge_count(), d));
  }
}

TEST_CASE("faces_of") {
  const auto c = enumerate_cells(fx::interval(), 2);
  const auto triangle = cell_index(c, {0, 0}, {{1, 1}});
  const auto faces = faces_of(c, triangle);
  REQUIRE(faces.size() == 3);
  CHECK(faces[0].merge == MergeKind::IntoTail);
  CHECK(faces[1].merge == MergeKind::Adjacent);
  CHECK(faces[2].merge == MergeKind::IntoHead);
  CHECK(faces[0].face == cell_index(c, {1, 0}, {{1}}));
  CHECK(faces[1].face == cell_index(c, {0, 0}, {{2}}));
  CHECK(faces[2].face == cell_index(c, {0, 1}, {{1}}));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(faces[i].zeroed == i);
    CHECK(faces[i].edge == 0);
    CHECK(faces[i].segment == i);
  }

  const auto d = enumerate_cells(fx::dumbbell(), 2);
  const ModelPtr m = d.host();
  std::vector<std::vector<int>> seqs(m->edge_count());
  seqs[m->edge_index("a.a")] = {1};
  seqs[m->edge_index("c.b")] = {1};
  const auto square = cell_index(d, {0, 0, 0, 0}, seqs);
  CHECK(faces_of(d, square).size() == 4);
  CHECK(faces_of(d, 0).empty());
  CHECK_THROWS_AS(faces_of(d, d.size()), DomainError);
}

TEST_CASE("contract") {
  const auto m = fx::interval();
  const StableCell cell(m, {0, 0}, {{1, 2, 1}});
  CHECK(contract(cell, {0}) == StableCell(m, {1, 0}, {{2, 1}}));
  CHECK(contract(cell, {3}) == StableCell(m, {0, 1}, {{1, 2}}));
  CHECK(contract(cell, {1, 2}) == StableCell(m, {0, 0}, {{4}}));
  CHECK(contract(cell, {0, 3}) == StableCell(m, {1, 1}, {{2}}));
  CHECK(contract(cell, {0, 1, 2}) == StableCell(m, {4, 0}, {{}}));
  CHECK_THROWS_AS(contract(cell, {0, 1, 2, 3}), DomainError);
  CHECK_THROWS_AS(contract(cell, {4}), DomainError);
}

TEST_CASE("poset_leq examples") {
  const auto c = enumerate_cells(fx::dumbbell(), 2);
  for (const auto& cell : c.cells()) CHECK(poset_leq(cell.cell, cell.cell));
  const auto m = fx::interval();
  // Vertex-only cells lie below every cell with that multidegree.
  CHECK(poset_leq(StableCell(m, {1, 1}, {{}}), StableCell(m, {0, 0}, {{1, 1}})));
  CHECK(poset_leq(StableCell(m, {2, 0}, {{}}), StableCell(m, {0, 0}, {{1, 1}})));
  CHECK_FALSE(poset_leq(StableCell(m, {0, 0}, {{2}}), StableCell(m, {0, 1}, {{1}})));
  std::vector<const StableCell*> maximal;
  for (const auto& cell : c.cells()) {
    if (cell.cell.dimension() == 2) maximal.push_back(&cell.cell);
  }
  for (auto* a : maximal) {
    for (auto* b : maximal) {
      if (a != b) CHECK_FALSE(poset_leq(*a, *b));
    }
  }
}

TEST_CASE("poset_leq is the transitive closure of face relations") {
  for (const char* name : {"interval", "circle", "dumbbell"}) {
    const auto c = enumerate_cells(fx::by_name(name), 3);
    // below[i]: cells reachable from i through face maps, plus i.
    std::vector<std::set<std::size_t>> below(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {  // cells are sorted by dimension
      below[i].insert(i);
      for (const auto& f : c.cell(i).faces) {
        below[i].insert(below[f.cell].begin(), below[f.cell].end());
      }
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        CAPTURE(name);
        CHECK(poset_leq(c.cell(j).cell, c.cell(i).cell) == (below[i].count(j) == 1));
      }
    }
  }
}

TEST_CASE("cell_of_divisor examples") {
  const auto interval = fx::interval();
  const auto c = enumerate_cells(interval, 2);
  const Divisor at_vertices = Divisor::point(interval, PointOnModel::at_vertex(0)) +
                              Divisor::point(interval, PointOnModel::at_vertex(1));
  const CellPoint vp = cell_of_divisor(c, at_vertices);
  CHECK(c.cell(vp.cell).cell.dimension() == 0);
  CHECK(vp.coordinates == std::vector<Rational>{Rational(1)});

  const Divisor thirds =
      Divisor::point(interval, PointOnModel::on_edge(0, Rational(1, 3))) +
      Divisor::point(interval, PointOnModel::on_edge(0, Rational(2, 3)));
  const CellPoint tp = cell_of_divisor(c, thirds);
  CHECK(c.cell(tp.cell).cell == StableCell(interval, {0, 0}, {{1, 1}}));
  CHECK(tp.coordinates ==
        std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});

  const auto dumbbell = fx::dumbbell();
  const auto dc = enumerate_cells(dumbbell, 2);
  const Divisor two_loops =
      Divisor::point(dumbbell, dumbbell->point_on_edge(dumbbell->edge_index("a.b"), Rational(1, 2))) +
      Divisor::point(dumbbell, dumbbell->point_on_edge(dumbbell->edge_index("c.a"), Rational(1, 4)));
  const auto& sq = dc.cell(cell_of_divisor(dc, two_loops).cell).cell;
  CHECK(sq.dimension() == 2);
  int nontrivial = 0;
  const Polysimplex sq_shape = sq.shape();
  for (const auto& f : sq_shape.factors()) nontrivial += f.k > 0;
  CHECK(nontrivial == 2);

  CHECK_THROWS_AS(cell_of_divisor(c, -1 * at_vertices), DomainError);
  CHECK_THROWS_AS(cell_of_divisor(c, Divisor::point(interval, PointOnModel::at_vertex(0))),
                  DomainError);
}

TEST_CASE("realize") {
  const auto interval = fx::interval();
  const auto c = enumerate_cells(interval, 2);
  const auto triangle = cell_index(c, {0, 0}, {{1, 1}});
  const CellPoint boundary{triangle, {Rational(0), Rational(1, 2), Rational(1, 2)}};
  const Divisor d = realize(c, boundary);
  CHECK(d == Divisor::point(interval, PointOnModel::at_vertex(0)) +
                 Divisor::point(interval, PointOnModel::on_edge(0, Rational(1, 2))));
  // Same divisor as computed in the face cell it collapses to.
  const auto face = faces_of(c, triangle)[0].face;
  CHECK(realize(c, CellPoint{face, {Rational(1, 2), Rational(1, 2)}}) == d);
  CHECK(normalize(c, boundary) == CellPoint{face, {Rational(1, 2), Rational(1, 2)}});

  const auto zero_cell = cell_index(c, {2, 0}, {{}});
  CHECK(realize(c, CellPoint{zero_cell, {Rational(1)}}) ==
        Divisor::point(interval, PointOnModel::at_vertex(0), 2));

  CHECK_THROWS_AS(realize(c, CellPoint{triangle, {Rational(1), Rational(1), Rational(0)}}),
                  DomainError);
  CHECK_THROWS_AS(realize(c, CellPoint{triangle, {Rational(-1), Rational(1), Rational(1)}}),
                  DomainError);
  CHECK_THROWS_AS(realize(c, CellPoint{triangle, {Rational(1)}}), DomainError);
}

TEST_CASE("realize and cell_of_divisor are inverse") {
  ts::Rng rng(43);
  for (const char* name : kLoopFree) {
    const auto m = fx::by_name(name);
    for (int d = 1; d <= 3; ++d) {
      const auto c = enumerate_cells(m, d);
      for (int trial = 0; trial < 50; ++trial) {
        const Divisor div = ts::random_effective(m, rng, d, {1, 2, 3, 5});
        const CellPoint p = cell_of_divisor(c, div);
        CHECK(realize(c, p) == div);
        CHECK(c.cell(p.cell).cell.shape().in_relative_interior(p.coordinates));
        // Random points of random cells, normalized to their carrier.
        const std::size_t i = static_cast<std::size_t>(ts::uniform(rng, 0, c.size() - 1));
        const Polysimplex shape = c.cell(i).cell.shape();
        CellPoint q{i, {}};
        for (const auto& f : shape.factors()) {
          // Split a into k+1 nonnegative parts on a grid of 1/4 steps.
          const std::int64_t n = (f.a * Rational(4)).to_int64();
          std::vector<std::int64_t> cuts;
          for (int j = 0; j < f.k; ++j) cuts.push_back(ts::uniform(rng, 0, n));
          std::sort(cuts.begin(), cuts.end());
          std::int64_t prev = 0;
          for (auto x : cuts) {
            q.coordinates.push_back(Rational(x - prev, 4));
            prev = x;
          }
          q.coordinates.push_back(Rational(n - prev, 4));
        }
        const CellPoint nq = normalize(c, q);
        CHECK(realize(c, nq) == realize(c, q));
        CHECK(cell_of_divisor(c, realize(c, nq)) == nq);
      }
    }
  }
}

TEST_CASE("enumerated complexes are valid") {
  for (const char* name : kLoopFree) {
    for (int d = 0; d <= 3; ++d) {
      CAPTURE(name);
      CAPTURE(d);
      const auto violations = validate_complex(enumerate_cells(fx::by_name(name), d));
      CHECK(violations.empty());
    }
  }
}

TEST_CASE("fault injection") {
  const auto c = enumerate_cells(fx::dumbbell(), 2);
  auto cells = c.cells();

  SUBCASE("duplicated face relation") {
    auto& top = cells.back();
    top.faces.push_back(top.faces.front());
    const auto v = validate_complex(SymPowComplex(c.host(), 2, cells));
    CHECK(v.size() == 1);
  }
  SUBCASE("missing face relation") {
    cells.back().faces.pop_back();
    CHECK_FALSE(validate_complex(SymPowComplex(c.host(), 2, cells)).empty());
  }
  SUBCASE("face map to the wrong cell") {
    // Redirect an edge-to-vertex face map of a 1-cell to another 0-cell.
    for (auto& cell : cells) {
      if (cell.cell.dimension() != 1) continue;
      cell.faces.front().cell = cell.faces.back().cell;
      break;
    }
    CHECK_FALSE(validate_complex(SymPowComplex(c.host(), 2, cells)).empty());
  }
  SUBCASE("wrong degree") {
    std::vector<ComplexCell> mixed = cells;
    mixed.push_back({"extra", StableCell(c.host(), {3, 0, 0, 0}, std::vector<std::vector<int>>(5)), {}});
    CHECK(validate_complex(SymPowComplex(c.host(), 2, mixed)).size() == 1);
  }
}

TEST_CASE("face maps preserve colors") {
  // chain_g3 has edges of four different lengths.
  const auto c = enumerate_cells(fx::chain_g3(), 3);
  for (const auto& cell : c.cells()) {
    const Polysimplex shape = cell.cell.shape();
    for (const auto& face : cell.faces) {
      const Polysimplex sub = c.cell(face.cell).cell.shape();
      REQUIRE(sub.factors().size() == shape.factors().size());
      for (std::size_t f = 0; f < shape.factors().size(); ++f) {
        CHECK(sub.factors()[f].a == shape.factors()[f].a);
      }
    }
  }
}
