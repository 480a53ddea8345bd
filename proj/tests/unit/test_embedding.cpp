#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "cyclic/embedding.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/generators.hpp"
#include "cyclic/graph_io.hpp"
#include "oracles.hpp"

using namespace cyclic;

namespace {

// K5 with rotations in ascending neighbor order; no rotation of K5 is planar.
PlaneGraph k5() {
  std::vector<std::vector<Incidence>> rot(5);
  int e = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b, ++e) {
      rot[a].push_back({b, e});
      rot[b].push_back({a, e});
    }
  for (auto& r : rot) std::sort(r.begin(), r.end(), [](auto x, auto y) { return x.neighbor < y.neighbor; });
  return PlaneGraph(5, rot);
}

}  // namespace

TEST_CASE("dart numbering follows the rotation scan") {
  const PlaneGraph g = platonic("tetrahedron");
  CHECK(g.dart_count() == 12);
  for (int d = 0; d < g.dart_count(); ++d) {
    CHECK(PlaneGraph::twin(PlaneGraph::twin(d)) == d);
    CHECK(PlaneGraph::twin(d) != d);
    CHECK(g.origin(PlaneGraph::twin(d)) == g.head(d));
  }
  for (int e = 0; e < g.edge_count(); ++e) CHECK(g.origin(2 * e) < g.origin(2 * e + 1));
}

TEST_CASE("constructor rejects malformed rotations") {
  CHECK_THROWS_AS(PlaneGraph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(PlaneGraph(2, {{{1, 0}}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(PlaneGraph(2, {{{1, 0}}, {{0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(PlaneGraph(2, {{{5, 0}}, {{0, 0}}}), std::invalid_argument);
  CHECK_NOTHROW(PlaneGraph(1, {{}}));
}

TEST_CASE("validate") {
  SUBCASE("tetrahedron is valid with four faces") {
    const auto r = validate(platonic("tetrahedron"));
    CHECK(r.valid());
    CHECK(r.face_count == 4);
  }
  SUBCASE("K5 violates Euler") {
    const auto r = validate(k5());
    CHECK_FALSE(r.valid());
    const bool mentions_euler = std::any_of(r.violations.begin(), r.violations.end(),
                                            [](const std::string& s) { return s.find("Euler") != std::string::npos; });
    CHECK(mentions_euler);
  }
  SUBCASE("loop is reported") {
    const PlaneGraph loop(2, {{{0, 0}, {0, 0}, {1, 1}}, {{0, 1}}});
    const auto r = validate(loop);
    CHECK_FALSE(r.valid());
    CHECK(r.violations.front().find("loop") != std::string::npos);
  }
  SUBCASE("disconnected graph is reported") {
    const PlaneGraph two(2, {{}, {}});
    CHECK_FALSE(validate(two).valid());
  }
  SUBCASE("single vertex is accepted") { CHECK(validate(PlaneGraph(1, {{}})).valid()); }
}

TEST_CASE("face tracing") {
  const auto degrees = [](const PlaneGraph& g) {
    std::vector<int> d;
    for (const auto& f : trace_faces(g)) d.push_back(f.degree());
    std::sort(d.begin(), d.end());
    return d;
  };
  CHECK(degrees(platonic("tetrahedron")) == std::vector<int>{3, 3, 3, 3});
  CHECK(degrees(platonic("cube")) == std::vector<int>(6, 4));
  CHECK(degrees(theta(2, 2, 2)) == std::vector<int>{4, 4, 4});
  CHECK(degrees(platonic("dodecahedron")) == std::vector<int>(12, 5));
  CHECK(degrees(platonic("icosahedron")) == std::vector<int>(20, 3));
  CHECK(degrees(theta(1, 1, 1)) == std::vector<int>{2, 2, 2});
  CHECK_THROWS_AS(trace_faces(k5()), precondition_error);
}

TEST_CASE("non 2-connected face counts distinct vertices") {
  // Path 0-1-2: one face, walk length 4, three distinct vertices.
  const PlaneGraph path(3, {{{1, 0}}, {{0, 0}, {2, 1}}, {{1, 1}}});
  REQUIRE(validate(path).valid());
  REQUIRE(path.face_count() == 1);
  CHECK(path.faces()[0].length() == 4);
  CHECK(path.faces()[0].degree() == 3);
  CHECK_THROWS_AS(k_star(path), precondition_error);
}

TEST_CASE("degree parameters") {
  const PlaneGraph cube = platonic("cube");
  CHECK(delta_star(cube) == 4);
  CHECK(max_vertex_degree(cube) == 3);
  CHECK(min_vertex_degree(cube) == 3);
  CHECK(delta_star(prism_subdiv(1)) == 6);
  CHECK(delta_star(theta(2, 3, 4)) == 7);
}

TEST_CASE("k_star") {
  CHECK(k_star(platonic("cube")) == 2);
  CHECK(k_star(theta(2, 2, 2)) == 3);
  for (int t = 0; t <= 3; ++t) CHECK(k_star(prism_subdiv(t)) == t + 2);
}

TEST_CASE("t_of") {
  CHECK(t_of(platonic("cube")) == 0);
  CHECK(t_of(prism_subdiv(3)) == 3);
  CHECK(t_of(subdivide_edges(platonic("cube"), std::map<int, int>{{0, 2}})) == 2);
  CHECK_THROWS_AS(t_of(cycle_graph(5)), precondition_error);
}

TEST_CASE("cyclic adjacency") {
  CHECK(cyclic_adjacency(platonic("tetrahedron")).is_complete());
  const auto cube = cyclic_adjacency(platonic("cube"));
  CHECK_FALSE(cube.is_complete());
  const int antipode[8] = {6, 7, 4, 5, 2, 3, 0, 1};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if (a != b) CHECK(cube.adjacent(a, b) == (b != antipode[a]));
  for (int t = 0; t <= 3; ++t) {
    const auto h = cyclic_adjacency(prism_subdiv(t));
    CHECK(h.n == 3 * t + 6);
    CHECK(h.is_complete());
  }
}

TEST_CASE("connectivity predicates agree with brute force") {
  CHECK(is_three_connected_simple(platonic("cube")));
  CHECK(is_two_connected(theta(2, 2, 2)));
  CHECK_FALSE(is_three_connected_simple(theta(2, 2, 2)));
  CHECK(is_locally_connected(platonic("icosahedron")));
  CHECK_FALSE(is_locally_connected(platonic("cube")));
  CHECK(faces_ge4_pairwise_disjoint(platonic("octahedron")));
  CHECK_FALSE(faces_ge4_pairwise_disjoint(platonic("cube")));
  CHECK_FALSE(is_simple(theta(1, 1, 1)));
  CHECK_FALSE(is_three_connected_simple(theta(1, 1, 1)));

  for (const auto& [id, g] : corpus()) {
    CAPTURE(id);
    CHECK(is_two_connected(g) == oracle::k_connected(g, 2));
    if (is_simple(g)) CHECK(is_three_connected_simple(g) == oracle::k_connected(g, 3));
  }
}

TEST_CASE("remove_edge and edge_subgraph renumber densely") {
  const PlaneGraph cube = platonic("cube");
  const PlaneGraph minus = remove_edge(cube, 0);
  CHECK(minus.edge_count() == 11);
  CHECK(validate(minus).valid());
  CHECK(minus.face_count() == 5);

  std::vector<bool> keep(cube.edge_count(), false);
  for (int d : cube.faces()[0].walk) keep[PlaneGraph::edge_of(d)] = true;
  const Subgraph face = edge_subgraph(cube, keep);
  CHECK(face.graph.vertex_count() == 4);
  CHECK(face.graph.edge_count() == 4);
  CHECK(is_cycle(face.graph));
  CHECK(face.vertex_origin == cube.faces()[0].vertices);
}

TEST_CASE("rotation isomorphism") {
  const PlaneGraph cube = platonic("cube");
  CHECK(rotation_isomorphism(cube, cube).has_value());
  CHECK_FALSE(rotation_isomorphism(cube, platonic("octahedron")).has_value());
  CHECK_FALSE(rotation_isomorphism(thm6_prism(1, 2, 3), thm6_prism(1, 1, 4)).has_value());
  CHECK(rotation_isomorphism(thm6_prism(1, 2, 3), thm6_prism(2, 3, 1)).has_value());
}

TEST_CASE("graph file format") {
  const PlaneGraph tetra = platonic("tetrahedron");
  const std::string golden =
      "planegraph v1\n"
      "4 6\n"
      "0: (1,0) (3,2) (2,1)\n"
      "1: (0,0) (2,3) (3,4)\n"
      "2: (0,1) (3,5) (1,3)\n"
      "3: (0,2) (1,4) (2,5)\n";
  CHECK(format_graph(tetra) == golden);

  SUBCASE("round trip keeps rotations") {
    for (const auto& [id, g] : corpus()) {
      CAPTURE(id);
      const PlaneGraph back = parse_graph(format_graph(g));
      CHECK(back.incidences() == g.incidences());
    }
  }
  SUBCASE("comments and blank lines are ignored") {
    const std::string text = "# tetra\nplanegraph v1\n\n4 6  # counts\n" + golden.substr(golden.find("0:"));
    CHECK(parse_graph(text).incidences() == tetra.incidences());
  }
  SUBCASE("edge used once is named with its line") {
    const std::string bad =
        "planegraph v1\n"
        "3 3\n"
        "0: (1,0) (2,2)\n"
        "1: (0,0) (2,1)\n"
        "2: (1,1) (0,7)\n";
    try {
      parse_graph(bad);
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(std::string(e.what()).find("edge 7") != std::string::npos);
      CHECK(e.line() == 5);
    }
  }
  SUBCASE("edge listed once reports its count") {
    const std::string bad =
        "planegraph v1\n"
        "3 3\n"
        "0: (1,0) (2,2)\n"
        "1: (0,0) (2,1)\n"
        "2: (1,1)\n";
    try {
      parse_graph(bad);
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(std::string(e.what()).find("edge 2") != std::string::npos);
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("bad header") { CHECK_THROWS_AS(parse_graph("graph\n1 0\n0:\n"), parse_error); }
  SUBCASE("vertex out of order") {
    CHECK_THROWS_AS(parse_graph("planegraph v1\n2 1\n1: (0,0)\n0: (1,0)\n"), parse_error);
  }
}
