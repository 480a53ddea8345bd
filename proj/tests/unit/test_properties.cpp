#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cyclic/bounds.hpp"
#include "cyclic/embedding.hpp"
#include "cyclic/generators.hpp"
#include "cyclic/reduction.hpp"

using namespace cyclic;

// Structural invariants asserted on every corpus instance.
TEST_CASE("corpus invariants") {
  for (const auto& [id, g] : corpus()) {
    CAPTURE(id);
    const auto& faces = g.faces();

    CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2);

    std::vector<int> owner(g.dart_count(), 0);
    int walked = 0;
    for (const auto& f : faces) {
      walked += f.length();
      for (int d : f.walk) ++owner[d];
      CHECK(f.degree() <= f.length());
    }
    CHECK(walked == 2 * g.edge_count());
    CHECK(std::all_of(owner.begin(), owner.end(), [](int c) { return c == 1; }));

    const auto h = cyclic_adjacency(g);
    for (const auto& f : faces)
      for (int a : f.vertices)
        for (int b : f.vertices)
          if (a != b) CHECK(h.adjacent(a, b));

    if (!is_two_connected(g)) continue;
    for (const auto& f : faces) CHECK(f.degree() == f.length());
    if (is_cycle(g)) continue;

    const ReductionResult r = reduce(g);
    CHECK(r.reduced.face_count() == g.face_count());
    for (int v = 0; v < r.reduced.vertex_count(); ++v) CHECK(r.reduced.degree(v) >= 3);
    for (int e = 0; e < r.reduced.edge_count(); ++e) {
      const auto& path = r.edge_to_path[e];
      CHECK(g.degree(path.front()) >= 3);
      CHECK(g.degree(path.back()) >= 3);
      for (std::size_t i = 1; i + 1 < path.size(); ++i) CHECK(g.degree(path[i]) == 2);
    }
    std::vector<int> seen = r.face_map;
    std::sort(seen.begin(), seen.end());
    std::vector<int> expected(g.face_count());
    std::iota(expected.begin(), expected.end(), 0);
    CHECK(seen == expected);

    const PlaneGraph back = resubdivide(r);
    CHECK(rotation_isomorphism(back, g).has_value());

    const SubdivisionMultigraph s = subdivision_multigraph(g, r);
    const int v2 = static_cast<int>(vertices_of_degree(g, 2).size());
    CHECK(static_cast<int>(s.graph.edges.size()) == v2);
    const auto deg = s.graph.degrees();
    CHECK(std::accumulate(deg.begin(), deg.end(), 0) == 2 * v2);
    CHECK(s.max_degree == face_surplus(g, r));
    CHECK(s.graph.max_degree() == s.max_degree);

    if (is_three_connected_simple(r.reduced)) {
      CHECK(s.multiplicity == t_of(g));
      CHECK(k_star(g) == t_of(g) + 2);
      CHECK(is_subdivision_of_3_connected(g));
    }
  }
}
