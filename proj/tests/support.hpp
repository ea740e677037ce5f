#pragma once

// Independent oracles and random generators shared by the test binaries.
// Nothing here calls the library's chip-firing or cell enumeration code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropsym/chain_of_loops.hpp"
#include "tropsym/chipfiring.hpp"
#include "tropsym/divisor.hpp"
#include "tropsym/model.hpp"
#include "tropsym/rational.hpp"

namespace testing_support {

using tropsym::Divisor;
using tropsym::Model;
using tropsym::ModelPtr;
using tropsym::PointOnModel;
using tropsym::Rational;
using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline std::int64_t to_i64(const mpz_class& z) { return z.get_si(); }

// ---------------------------------------------------------------- random

/// A point with denominator drawn from `dens` (relative to 1), uniformly
/// over vertices and edge interiors.
inline PointOnModel random_point(const Model& m, Rng& rng,
                                 const std::vector<std::int64_t>& dens = {1, 2, 3}) {
  const std::int64_t slots =
      static_cast<std::int64_t>(m.vertex_count() + m.edge_count());
  for (;;) {
    const std::int64_t pick = uniform(rng, 0, slots - 1);
    if (pick < static_cast<std::int64_t>(m.vertex_count())) {
      return PointOnModel::at_vertex(static_cast<std::size_t>(pick));
    }
    const std::size_t e = static_cast<std::size_t>(pick) - m.vertex_count();
    const Rational& len = m.edge(e).length;
    const std::int64_t den =
        dens[uniform(rng, 0, static_cast<std::int64_t>(dens.size()) - 1)] *
        to_i64(len.denominator());
    const std::int64_t steps = to_i64(len.numerator()) * den /
                               to_i64(len.denominator());
    if (steps < 2) continue;
    return PointOnModel::on_edge(e, Rational(uniform(rng, 1, steps - 1), den));
  }
}

inline Divisor random_effective(const ModelPtr& m, Rng& rng, int degree,
                                const std::vector<std::int64_t>& dens = {1, 2, 3}) {
  Divisor d(m);
  for (int i = 0; i < degree; ++i) d.add(random_point(*m, rng, dens), 1);
  return d;
}

/// Random divisor of the given degree: `degree + extra` positive chips and
/// `extra` negative ones.
inline Divisor random_divisor(const ModelPtr& m, Rng& rng, int degree, int extra,
                              const std::vector<std::int64_t>& dens = {1, 2, 3}) {
  Divisor d(m);
  for (int i = 0; i < degree + extra; ++i) d.add(random_point(*m, rng, dens), 1);
  for (int i = 0; i < extra; ++i) d.add(random_point(*m, rng, dens), -1);
  return d;
}

/// Random PL function whose breakpoints and vertex values lie on multiples
/// of `step`, which must divide every edge length.
inline tropsym::PLFunction random_pl_function(const ModelPtr& m, Rng& rng,
                                              const Rational& step, int max_slope = 3) {
  std::vector<std::int64_t> values;
  for (std::size_t v = 0; v < m->vertex_count(); ++v) {
    values.push_back(uniform(rng, -3, 3));
  }
  std::vector<Rational> vertex_values;
  for (auto x : values) vertex_values.push_back(Rational(x) * step);
  std::vector<tropsym::EdgeProfile> profiles;
  for (const auto& e : m->edges()) {
    const std::int64_t n = (e.length / step).to_int64();
    // Unit cells [i, i+1] (in steps); cut at a random subset of interior
    // grid points but always at n-1 so the final cell has length one step.
    std::vector<std::int64_t> cuts;
    for (std::int64_t i = 1; i + 1 < n; ++i) {
      if (uniform(rng, 0, 2) == 0) cuts.push_back(i);
    }
    if (n >= 2) cuts.push_back(n - 1);
    tropsym::EdgeProfile profile;
    std::int64_t prev = 0;
    std::int64_t rise = 0;  // in units of step
    for (auto c : cuts) {
      const std::int64_t s = uniform(rng, -max_slope, max_slope);
      profile.slopes.push_back(s);
      rise += s * (c - prev);
      profile.breakpoints.push_back(Rational(c) * step);
      prev = c;
    }
    const std::int64_t need = values[e.head] - values[e.tail];
    profile.slopes.push_back(need - rise);  // last cell has length one step
    profiles.push_back(std::move(profile));
  }
  return tropsym::PLFunction::create(m, std::move(vertex_values), std::move(profiles));
}

// ---------------------------------------------------------------- lattice oracle

/// Plain adjacency-matrix subdivision of a model at spacing 1/scale.
struct OracleGraph {
  ModelPtr host;
  std::int64_t scale = 1;
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::map<PointOnModel, int> index;

  int node(const PointOnModel& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw std::logic_error("point off the oracle lattice");
    return it->second;
  }
  int out_degree(int v) const {
    int s = 0;
    for (int w = 0; w < n; ++w) {
      if (w != v) s += adj[v][w];
    }
    return s;
  }
};

inline std::int64_t oracle_scale(const Model& m, const std::vector<Divisor>& ds) {
  mpz_class s = 1;
  for (const auto& e : m.edges()) s = tropsym::lcm(s, e.length.denominator());
  for (const auto& d : ds) {
    for (const auto& [p, c] : d.terms()) {
      if (!p.is_vertex()) s = tropsym::lcm(s, p.position().denominator());
    }
  }
  return to_i64(s);
}

inline OracleGraph oracle_graph(const ModelPtr& m, std::int64_t scale) {
  OracleGraph g;
  g.host = m;
  g.scale = scale;
  for (std::size_t v = 0; v < m->vertex_count(); ++v) {
    g.index[PointOnModel::at_vertex(v)] = g.n++;
  }
  std::vector<std::pair<int, int>> links;
  for (std::size_t e = 0; e < m->edge_count(); ++e) {
    const auto& edge = m->edge(e);
    const std::int64_t steps = (edge.length * Rational(scale)).to_int64();
    int prev = g.index[PointOnModel::at_vertex(edge.tail)];
    for (std::int64_t i = 1; i < steps; ++i) {
      const int id = g.n++;
      g.index[PointOnModel::on_edge(e, Rational(i, scale))] = id;
      links.push_back({prev, id});
      prev = id;
    }
    links.push_back({prev, static_cast<int>(g.index[PointOnModel::at_vertex(edge.head)])});
  }
  g.adj.assign(g.n, std::vector<int>(g.n, 0));
  for (auto [a, b] : links) {
    if (a == b) continue;
    ++g.adj[a][b];
    ++g.adj[b][a];
  }
  return g;
}

inline std::vector<std::int64_t> oracle_chips(const OracleGraph& g, const Divisor& d) {
  std::vector<std::int64_t> chips(g.n, 0);
  const Divisor here = d.transported(g.host);
  for (const auto& [p, c] : here.terms()) chips[g.node(p)] += c;
  return chips;
}

/// Every nonempty A avoiding q has a vertex with fewer chips than edges
/// leaving A; chips are nonnegative away from q.
inline bool oracle_is_reduced(const OracleGraph& g, const std::vector<std::int64_t>& chips,
                              int q) {
  std::vector<int> others;
  for (int v = 0; v < g.n; ++v) {
    if (v == q) continue;
    if (chips[v] < 0) return false;
    others.push_back(v);
  }
  if (others.size() > 22) throw std::logic_error("oracle graph too large");
  const std::uint64_t subsets = std::uint64_t{1} << others.size();
  std::vector<char> in(g.n, 0);
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    for (std::size_t i = 0; i < others.size(); ++i) in[others[i]] = (mask >> i) & 1;
    bool some_cannot_fire = false;
    for (std::size_t i = 0; i < others.size() && !some_cannot_fire; ++i) {
      if (!in[others[i]]) continue;
      const int v = others[i];
      int leaving = 0;
      for (int w = 0; w < g.n; ++w) {
        if (!in[w]) leaving += g.adj[v][w];
      }
      if (chips[v] < leaving) some_cannot_fire = true;
    }
    if (!some_cannot_fire) return false;
  }
  return true;
}

/// Inverse of the Laplacian with row and column q removed.
class LaplacianSolver {
 public:
  LaplacianSolver(const OracleGraph& g, int q) : q_(q) {
    for (int v = 0; v < g.n; ++v) {
      if (v != q) keep_.push_back(v);
    }
    const std::size_t k = keep_.size();
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(2 * k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const int v = keep_[i], w = keep_[j];
        a[i][j] = Rational(v == w ? g.out_degree(v) : -g.adj[v][w]);
      }
      a[i][k + i] = Rational(1);
    }
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t pivot = c;
      while (a[pivot][c].is_zero()) ++pivot;
      std::swap(a[pivot], a[c]);
      const Rational inv = Rational(1) / a[c][c];
      for (auto& x : a[c]) x *= inv;
      for (std::size_t r = 0; r < k; ++r) {
        if (r == c || a[r][c].is_zero()) continue;
        const Rational f = a[r][c];
        for (std::size_t j = 0; j < 2 * k; ++j) a[r][j] -= f * a[c][j];
      }
    }
    inverse_.assign(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) inverse_[i][j] = a[i][k + j];
    }
  }

  /// a ~ b iff a - b is an integral combination of Laplacian columns.
  bool equivalent(const std::vector<std::int64_t>& a,
                  const std::vector<std::int64_t>& b) const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) total += a[i] - b[i];
    if (total != 0) return false;
    for (std::size_t i = 0; i < keep_.size(); ++i) {
      Rational f(0);
      for (std::size_t j = 0; j < keep_.size(); ++j) {
        const std::int64_t delta = a[keep_[j]] - b[keep_[j]];
        if (delta != 0) f += inverse_[i][j] * Rational(delta);
      }
      if (!f.is_integer()) return false;
    }
    return true;
  }

 private:
  int q_;
  std::vector<int> keep_;
  std::vector<std::vector<Rational>> inverse_;
};

/// The reduced configuration found by enumerating every candidate with at
/// most `genus` chips away from q. Throws unless exactly one qualifies.
inline std::vector<std::int64_t> oracle_reduced(const OracleGraph& g,
                                                const LaplacianSolver& solver,
                                                const std::vector<std::int64_t>& chips,
                                                int q, int genus) {
  std::int64_t degree = 0;
  for (auto c : chips) degree += c;
  std::vector<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> cand(g.n, 0);
  std::function<void(int, int)> place = [&](int from, int left) {
    cand[q] = degree;
    for (int v = 0; v < g.n; ++v) {
      if (v != q) cand[q] -= cand[v];
    }
    if (solver.equivalent(cand, chips) && oracle_is_reduced(g, cand, q)) {
      found.push_back(cand);
    }
    if (left == 0) return;
    for (int v = from; v < g.n; ++v) {
      if (v == q) continue;
      ++cand[v];
      place(v, left - 1);
      --cand[v];
    }
  };
  place(0, genus);
  if (found.size() != 1) {
    throw std::logic_error("oracle found " + std::to_string(found.size()) +
                           " reduced candidates");
  }
  return found.front();
}

/// Rank by definition over the oracle lattice: the largest k such that
/// D - E keeps an effective representative for every effective E of
/// degree k supported on lattice points.
inline int oracle_rank(const OracleGraph& g, const std::vector<std::int64_t>& chips,
                       int genus) {
  const int q = 0;
  const LaplacianSolver solver(g, q);
  std::int64_t degree = 0;
  for (auto c : chips) degree += c;
  auto effective_class = [&](const std::vector<std::int64_t>& x) {
    std::int64_t deg = 0;
    for (auto c : x) deg += c;
    if (deg < 0) return false;
    return oracle_reduced(g, solver, x, q, genus)[q] >= 0;
  };
  if (!effective_class(chips)) return -1;
  int k = 0;
  for (;; ++k) {
    if (k + 1 > degree) return k;
    bool all = true;
    std::vector<std::int64_t> x = chips;
    std::function<void(int, int)> remove = [&](int from, int left) {
      if (!all) return;
      if (left == 0) {
        if (!effective_class(x)) all = false;
        return;
      }
      for (int v = from; v < g.n && all; ++v) {
        --x[v];
        remove(v, left - 1);
        ++x[v];
      }
    };
    remove(0, k + 1);
    if (!all) return k;
  }
}

// ---------------------------------------------------------------- other oracles

/// Cells of each dimension from the series
/// (1/(1-x))^|V| * prod_e sum_k y^k (x/(1-x))^k, read at x^d.
inline std::vector<std::size_t> generating_function_f_vector(std::size_t vertices,
                                                             std::size_t edges, int d) {
  auto binom = [](long n, long k) -> long {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  // poly[n][m]: coefficient of x^n y^m.
  std::vector<std::vector<long>> poly(d + 1, std::vector<long>(d + 1, 0));
  poly[0][0] = 1;
  auto multiply = [&](const std::vector<std::vector<long>>& f) {
    std::vector<std::vector<long>> out(d + 1, std::vector<long>(d + 1, 0));
    for (int a = 0; a <= d; ++a)
      for (int b = 0; b <= d; ++b)
        if (poly[a][b])
          for (int c = 0; a + c <= d; ++c)
            for (int e = 0; b + e <= d; ++e) out[a + c][b + e] += poly[a][b] * f[c][e];
    poly = out;
  };
  std::vector<std::vector<long>> vertex(d + 1, std::vector<long>(d + 1, 0));
  for (int n = 0; n <= d; ++n) vertex[n][0] = 1;
  std::vector<std::vector<long>> edge(d + 1, std::vector<long>(d + 1, 0));
  edge[0][0] = 1;
  for (int n = 1; n <= d; ++n)
    for (int k = 1; k <= n; ++k) edge[n][k] = binom(n - 1, k - 1);  // compositions
  for (std::size_t i = 0; i < vertices; ++i) multiply(vertex);
  for (std::size_t i = 0; i < edges; ++i) multiply(edge);
  std::vector<std::size_t> f;
  for (int m = 0; m <= d; ++m) {
    if (poly[d][m]) f.push_back(static_cast<std::size_t>(poly[d][m]));
  }
  return f;
}

/// Direct scan of p/q with p + q <= 2g - 2.
inline bool oracle_generic(const tropsym::ChainOfLoopsSpec& s) {
  const int bound = 2 * s.genus() - 2;
  for (std::size_t i = 0; i < s.l.size(); ++i) {
    for (int p = 1; p < bound; ++p) {
      for (int q = 1; p + q <= bound; ++q) {
        if (s.l[i] * Rational(q) == s.m[i] * Rational(p)) return false;
      }
    }
  }
  return true;
}

}  // namespace testing_support
