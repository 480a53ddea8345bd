#include <doctest.h>

#include <random>

#include "cyclic/edgecolor.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/generators.hpp"
#include "cyclic/reduction.hpp"
#include "oracles.hpp"

using namespace cyclic;

namespace {

Multigraph star(int k) {
  Multigraph m{k + 1, {}};
  for (int i = 1; i <= k; ++i) m.edges.push_back({0, i});
  return m;
}

Multigraph cycle(int n) {
  Multigraph m{n, {}};
  for (int i = 0; i < n; ++i) m.edges.push_back({i, (i + 1) % n});
  return m;
}

}  // namespace

TEST_CASE("fat triangles are Shannon tight") {
  for (int mu = 1; mu <= 3; ++mu) {
    const Multigraph m = oracle::fat_triangle(mu);
    CHECK(m.max_degree() == 2 * mu);
    CHECK(m.multiplicity() == mu);
    CHECK(default_budget(m) == 3 * mu);
    CHECK(chromatic_index(m) == 3 * mu);
    CHECK(oracle::chromatic_index(m) == 3 * mu);
  }
  const Multigraph m2 = oracle::fat_triangle(2);
  const EdgeColoring c = edge_color(m2, 6);
  CHECK(is_proper(m2, c));
  CHECK(c.colors_used == 6);
  CHECK_THROWS_AS(edge_color(m2, 5), infeasible_budget);
  CHECK_FALSE(try_edge_color(m2, 5).has_value());
}

TEST_CASE("small families") {
  CHECK(chromatic_index(Multigraph{2, {{0, 1}}}) == 1);
  CHECK(chromatic_index(cycle(6)) == 2);
  CHECK(chromatic_index(cycle(5)) == 3);
  for (int k = 1; k <= 6; ++k) CHECK(chromatic_index(star(k)) == k);
  const Multigraph empty{4, {}};
  CHECK(chromatic_index(empty) == 0);
  CHECK(edge_color(empty).colors_used == 0);
  CHECK(is_proper(empty, edge_color(empty)));
}

TEST_CASE("S of prism_subdiv(2) colors within six") {
  const PlaneGraph g = prism_subdiv(2);
  const auto s = subdivision_multigraph(g, reduce(g));
  CHECK(s.graph.max_degree() == 4);
  CHECK(s.graph.multiplicity() == 2);
  const EdgeColoring c = edge_color(s.graph);
  CHECK(is_proper(s.graph, c));
  CHECK(c.colors_used <= 6);
}

TEST_CASE("guard") {
  Multigraph big{2, {}};
  for (int i = 0; i < 41; ++i) big.edges.push_back({0, 1});
  CHECK_THROWS_AS(chromatic_index(big), guard_exceeded);
  CHECK(chromatic_index(big, 41) == 41);
}

TEST_CASE("is_proper detects clashes") {
  const Multigraph m = oracle::fat_triangle(1);
  CHECK(is_proper(m, EdgeColoring{{0, 1, 2}, 3}));
  CHECK_FALSE(is_proper(m, EdgeColoring{{0, 0, 1}, 2}));
  CHECK_FALSE(is_proper(m, EdgeColoring{{0, 1}, 2}));
}

TEST_CASE("exact chromatic index agrees with brute force on random multigraphs") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> nv(2, 5), ne(1, 9);
    Multigraph m{nv(rng), {}};
    const int edges = ne(rng);
    std::uniform_int_distribution<int> pick(0, m.vertex_count - 1);
    while (static_cast<int>(m.edges.size()) < edges) {
      const int a = pick(rng), b = pick(rng);
      if (a != b) m.edges.push_back({a, b});
    }
    CAPTURE(trial);
    const int exact = chromatic_index(m);
    CHECK(exact == oracle::chromatic_index(m));
    CHECK(exact >= m.max_degree());
    CHECK(exact <= default_budget(m));
    const EdgeColoring c = edge_color(m);
    CHECK(is_proper(m, c));
    CHECK(c.colors_used <= default_budget(m));
  }
}

TEST_CASE("determinism") {
  const Multigraph m = oracle::fat_triangle(3);
  CHECK(edge_color(m).color == edge_color(m).color);
}
