#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cyclic/embedding.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/generators.hpp"
#include "cyclic/reduction.hpp"
#include "cyclic/separation.hpp"
#include "oracles.hpp"

using namespace cyclic;

TEST_CASE("reduce prism_subdiv") {
  for (int t = 0; t <= 3; ++t) {
    CAPTURE(t);
    const PlaneGraph g = prism_subdiv(t);
    const ReductionResult r = reduce(g);
    CHECK(rotation_isomorphism(r.reduced, prism()).has_value());
    int subdivided = 0;
    for (int e = 0; e < r.reduced.edge_count(); ++e) {
      CHECK((r.interior_count(e) == 0 || r.interior_count(e) == t));
      subdivided += r.interior_count(e) == t;
    }
    if (t > 0) CHECK(subdivided == 3);
  }
}

TEST_CASE("reduce keeps the cube") {
  const PlaneGraph cube = platonic("cube");
  const ReductionResult r = reduce(cube);
  CHECK(r.reduced.incidences() == cube.incidences());
  for (int e = 0; e < cube.edge_count(); ++e) CHECK(r.interior_count(e) == 0);
}

TEST_CASE("reduce theta(2,2,2)") {
  const ReductionResult r = reduce(theta(2, 2, 2));
  CHECK(r.reduced.vertex_count() == 2);
  CHECK(r.reduced.edge_count() == 3);
  CHECK(r.reduced.face_count() == 3);
  CHECK(r.kept_vertices == std::vector<int>{0, 1});
}

TEST_CASE("reduce preconditions") {
  CHECK_THROWS_AS(reduce(cycle_graph(5)), precondition_error);
  const PlaneGraph path(3, {{{1, 0}}, {{0, 0}, {2, 1}}, {{1, 1}}});
  CHECK_THROWS_AS(reduce(path), precondition_error);
}

TEST_CASE("classify") {
  CHECK(classify(reduce(platonic("cube"))).tag == StructureTag::simple_3_connected);
  const StructureClass th = classify(reduce(theta(2, 3, 4)));
  CHECK(th.tag == StructureTag::two_face);
  CHECK(std::min(th.u, th.v) == 0);
  CHECK(std::max(th.u, th.v) == 1);

  const PlaneGraph dp = double_prism(false);
  const StructureClass cut = classify(reduce(dp));
  REQUIRE(cut.tag == StructureTag::two_cut);
  CHECK(cut.component.size() == 4);
  CHECK(static_cast<int>(cut.component.size()) == oracle::min_two_cut_component(reduce(dp).reduced));
  CHECK(cut.flanks.size() == 2);
  CHECK(to_string(StructureTag::two_cut) == "TWO_CUT");
}

TEST_CASE("subdivision multigraph") {
  SUBCASE("cube has an edgeless S") {
    const PlaneGraph cube = platonic("cube");
    const auto s = subdivision_multigraph(cube, reduce(cube));
    CHECK(s.graph.vertex_count == 6);
    CHECK(s.graph.edges.empty());
    CHECK(s.max_degree == 0);
  }
  SUBCASE("prism_subdiv(t)") {
    for (int t = 1; t <= 3; ++t) {
      const PlaneGraph g = prism_subdiv(t);
      const auto s = subdivision_multigraph(g, reduce(g));
      CHECK(s.graph.vertex_count == 5);
      CHECK(static_cast<int>(s.graph.edges.size()) == 3 * t);
      CHECK(s.max_degree == 2 * t);
      CHECK(s.multiplicity == t);
    }
  }
  SUBCASE("theta(2,2,2)") {
    const PlaneGraph g = theta(2, 2, 2);
    const auto s = subdivision_multigraph(g, reduce(g));
    CHECK(s.graph.vertex_count == 3);
    CHECK(s.graph.edges.size() == 3);
    CHECK(s.max_degree == 2);
  }
}

TEST_CASE("separating cycle on glued instances") {
  for (const auto& [id, g] : glued_corpus()) {
    CAPTURE(id);
    const SeparatingCycle c = find_separating_cycle(g);
    CHECK(c.length() <= delta_star(g));
    CHECK(c.length() >= 2);
    CHECK(c.sides.separating());
    CHECK(oracle::is_separating(g, c.darts));
    for (std::size_t i = 0; i < c.darts.size(); ++i) CHECK(g.origin(c.darts[i]) == c.vertices[i]);

    const SplitResult s = split_along_cycle(g, c);
    const PlaneGraph& h1 = s.inside.graph;
    const PlaneGraph& h2 = s.outside.graph;
    CHECK(validate(h1).valid());
    CHECK(validate(h2).valid());
    CHECK(is_two_connected(h1));
    CHECK(is_two_connected(h2));
    CHECK(h1.face_count() + h2.face_count() == g.face_count() + 2);
    CHECK(delta_star(h1) <= std::max(delta_star(g), c.length()));
    CHECK(delta_star(h2) <= std::max(delta_star(g), c.length()));
    CHECK(h1.edge_count() + h2.edge_count() == g.edge_count() + c.length());

    // Every face of g survives in one piece; each piece has the cycle as a face.
    std::vector<std::vector<int>> pieces;
    int cycle_faces = 0;
    std::vector<int> cyc = c.vertices;
    std::sort(cyc.begin(), cyc.end());
    for (const Subgraph* sub : {&s.inside, &s.outside})
      for (const auto& f : sub->graph.faces()) {
        std::vector<int> verts;
        for (int v : f.vertices) verts.push_back(sub->vertex_origin[v]);
        std::sort(verts.begin(), verts.end());
        if (verts == cyc && f.length() == c.length()) ++cycle_faces;
        pieces.push_back(verts);
      }
    CHECK(cycle_faces >= 2);
    for (const auto& f : g.faces()) CHECK(std::find(pieces.begin(), pieces.end(), f.vertices) != pieces.end());
  }
}

TEST_CASE("separating cycle preconditions") {
  CHECK_THROWS_AS(find_separating_cycle(platonic("cube")), precondition_error);
  CHECK_THROWS_AS(find_separating_cycle(theta(2, 2, 2)), precondition_error);
  const PlaneGraph path(3, {{{1, 0}}, {{0, 0}, {2, 1}}, {{1, 1}}});
  CHECK_THROWS_AS(find_separating_cycle(path), precondition_error);
}

TEST_CASE("split rejects a facial cycle") {
  const PlaneGraph cube = platonic("cube");
  SeparatingCycle c;
  c.darts = cube.faces()[0].walk;
  for (int d : c.darts) c.vertices.push_back(cube.origin(d));
  CHECK_FALSE(cycle_sides(cube, c.darts).separating());
  CHECK_THROWS_AS(split_along_cycle(cube, c), precondition_error);
}

TEST_CASE("cycle_sides on a cube belt") {
  // The 4-cycle 0-1-5-4 bounds a face; 0-1-2-6-5-4 does not and splits the cube.
  const PlaneGraph cube = platonic("cube");
  const auto dart = [&](int a, int b) {
    for (int d : cube.rotation(a))
      if (cube.head(d) == b) return d;
    return -1;
  };
  const std::vector<int> ring = {0, 1, 2, 6, 5, 4};
  std::vector<int> darts;
  for (std::size_t i = 0; i < ring.size(); ++i) darts.push_back(dart(ring[i], ring[(i + 1) % ring.size()]));
  const CycleSides sides = cycle_sides(cube, darts);
  CHECK(sides.separating());
  CHECK(sides.inside_vertices.size() + sides.outside_vertices.size() == 2);
  CHECK(oracle::is_separating(cube, darts));
  CHECK_THROWS_AS(cycle_sides(cube, {dart(0, 1), dart(2, 3)}), precondition_error);
}
