#include <doctest.h>

#include "cyclic/bounds.hpp"
#include "cyclic/embedding.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/generators.hpp"
#include "cyclic/reduction.hpp"

using namespace cyclic;

namespace {

// n-gonal prism: top ring 0..n-1, bottom ring n..2n-1, rung i -- i+n.
PlaneGraph ring_prism(int n) {
  std::vector<std::vector<int>> faces;
  std::vector<int> top, bottom;
  for (int i = 0; i < n; ++i) {
    top.push_back(i);
    bottom.push_back(2 * n - 1 - i);
    faces.push_back({i, i + n, (i + 1) % n + n, (i + 1) % n});
  }
  faces.push_back(top);
  faces.push_back(bottom);
  return PlaneGraph::from_oriented_faces(2 * n, faces);
}

}  // namespace

TEST_CASE("bound_ccc") {
  CHECK(bound_ccc(platonic("cube")) == 6);
  CHECK(bound_ccc(prism_subdiv(2)) == 12);
  CHECK(bound_ccc(theta(2, 2, 2)) == 6);
}

TEST_CASE("bound_bbgh") {
  CHECK(bound_bbgh(prism_subdiv(1)) == 20);
  CHECK(bound_bbgh(platonic("dodecahedron")) == 19);
  CHECK_THROWS_AS(bound_bbgh(platonic("cube")), hypothesis_error);
}

TEST_CASE("plummer_toft_r") {
  CHECK(plummer_toft_r(platonic("icosahedron")) == 1);
  CHECK(plummer_toft_r(platonic("octahedron")) == 1);
  CHECK(plummer_toft_r(platonic("tetrahedron")) == 1);
  CHECK(plummer_toft_r(platonic("cube")) == 2);
  CHECK(plummer_toft_r(platonic("dodecahedron")) == 3);
  CHECK(plummer_toft_r(prism()) == 2);
  CHECK(plummer_toft_r(ring_prism(7)) == 4);
  CHECK(plummer_toft_r(ring_prism(10)) == 5);
  CHECK(plummer_toft_r(ring_prism(16)) == 2);
  CHECK(plummer_toft_r(ring_prism(60)) == 1);
  CHECK_THROWS_AS(plummer_toft_r(theta(2, 2, 2)), hypothesis_error);
}

TEST_CASE("bound_thm4") {
  CHECK(bound_thm4(prism_subdiv(1)) == 20);
  CHECK(bound_thm4(prism_subdiv(3)) == 27);
  CHECK(bound_thm4(platonic("dodecahedron")) == 19);
  CHECK_THROWS_AS(bound_thm4(platonic("cube")), hypothesis_error);
  CHECK_THROWS_AS(bound_thm4(double_prism()), hypothesis_error);
}

TEST_CASE("subdivision theorems") {
  SUBCASE("thm6") {
    const BoundValue tight = bound_thm6(thm6_prism(2, 2, 2));
    CHECK(tight.value == 12);
    CHECK(tight.note.find("exact") != std::string::npos);
    CHECK(bound_thm6(platonic("cube")).value == 4);
    CHECK(bound_thm6(prism_subdiv(1)).value == 9);
  }
  SUBCASE("thm7") {
    CHECK(bound_thm7(platonic("cube")).value == 4);
    const PlaneGraph quad = regular_subdivide(platonic("cube"), 1);
    CHECK(bound_thm7(quad).value == 3 * (delta_star(quad) - 4) / 2 + 4);
    CHECK(bound_thm7(quad).value <= bound_ccc(quad));
    const PlaneGraph tri = regular_subdivide(platonic("octahedron"), 1);
    CHECK(bound_thm7(tri).value <= 3 * (delta_star(tri) - 3) / 2 + 4);
  }
  SUBCASE("thm8") {
    for (int t = 1; t <= 3; ++t) CHECK(bound_thm8(prism_subdiv(t)).value == 3 * t + 6);
    CHECK(bound_thm8(platonic("cube")).value == 4);
    const PlaneGraph quad = regular_subdivide(platonic("cube"), 1);
    CHECK(bound_thm8(quad).value == (delta_star(quad) - 4) + 1 + 4);
  }
  SUBCASE("substitute for chi_c(R) above the guard") {
    const BoundValue v = bound_thm8(platonic("cube"), BoundOptions{4, kDefaultEdgeGuard});
    CHECK(v.value == 0 + 0 + 4 + 2);
    CHECK(v.note.find("D*(R)+r") != std::string::npos);
  }
  SUBCASE("hypotheses") {
    CHECK_THROWS_AS(bound_thm6(theta(2, 2, 2)), hypothesis_error);
    CHECK_THROWS_AS(bound_thm7(cycle_graph(5)), hypothesis_error);
    CHECK_THROWS_AS(bound_thm8(double_prism()), hypothesis_error);
  }
}

TEST_CASE("bound_cor9") {
  CHECK_THROWS_AS(bound_cor9(prism_subdiv(1)), hypothesis_error);
  CHECK(bound_cor9(regular_subdivide(platonic("cube"), 1)) == 11);
  CHECK(bound_cor9(platonic("cube")) == 4 + 0 + 2);
}

TEST_CASE("report entries and flags") {
  const BoundReport r = make_bound_report("prism-subdiv-2", prism_subdiv(2));
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == 12);
  CHECK(r.flag("Conjecture-5")->verdict == Verdict::holds);
  CHECK(*r.flag("Conjecture-5")->bound == *r.exact);
  CHECK(r.flag("CCC")->verdict == Verdict::holds);
  CHECK_FALSE(r.violation());
  CHECK(r.entry("cor9")->note.find("not regular") != std::string::npos);
  CHECK_FALSE(r.entry("cor9")->applicable());
  CHECK(*r.entry("ore-plummer")->value == 16);
  CHECK(*r.entry("borodin-sanders-zhao")->value == 14);
  CHECK(*r.entry("sanders-zhao")->value == 14);

  const BoundReport th = make_bound_report("theta", theta(2, 3, 4));
  CHECK(th.flag("CCC")->verdict == Verdict::holds);
  CHECK(th.flag("CCC-subdiv")->verdict == Verdict::not_applicable);
  CHECK_FALSE(th.entry("thm6")->applicable());
  CHECK(th.bbc_raw.has_value());
}

TEST_CASE("a forged exact value is flagged") {
  const PlaneGraph g = platonic("cube");
  const auto entries = evaluate_bounds(g);
  const auto flags = check_conjectures(g, 7, entries);
  bool violated = false;
  for (const auto& f : flags) violated |= f.verdict == Verdict::violated;
  CHECK(violated);
  BoundReport r;
  r.exact = 7;
  r.entries = entries;
  r.flags = flags;
  CHECK(r.violation());
}

TEST_CASE("corpus sandwich and applicability") {
  for (const auto& [id, g] : corpus()) {
    CAPTURE(id);
    const BoundReport r = make_bound_report(id, g);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact >= r.delta_star);
    for (const auto& e : r.entries) {
      CAPTURE(e.name);
      if (!e.applicable()) {
        CHECK_FALSE(e.note.empty());
        continue;
      }
      CHECK(*e.value >= r.delta_star);
      CHECK(*e.value >= *r.exact);
    }
    for (const auto& f : r.flags) CHECK(f.verdict != Verdict::unknown);
    CHECK_FALSE(r.violation());
  }
}

TEST_CASE("derived comparisons with floor(3D*/2)") {
  SUBCASE("large faces make thm4 at most floor(3D*/2)") {
    for (int n = 28; n <= 34; n += 2) {
      const PlaneGraph base = ring_prism(n);
      for (int k = 0; k <= 1; ++k) {
        std::map<int, int> plan;
        for (int e = 0; e < base.edge_count(); ++e) {
          const auto [a, b] = base.endpoints(e);
          if (b == a + n && a % 2 == 0) plan[e] = k;
        }
        const PlaneGraph g = subdivide_edges(base, plan);
        const int d = delta_star(g), t = t_of(g);
        CAPTURE(n);
        CAPTURE(k);
        REQUIRE(d >= std::max(6 * t + 16, 28));
        CHECK(bound_thm4(g) <= bound_ccc(g));
      }
    }
  }
  SUBCASE("thm8 at most floor(3D*/2) once D* is large against chi_c(R)") {
    int exercised = 0;
    for (const auto& [id, g] : corpus()) {
      if (!is_subdivision_of_3_connected(g)) continue;
      const ReductionResult red = reduce(g);
      const int chi_r = reduced_chromatic(red.reduced, kDefaultGuard).value;
      if (delta_star(g) < 2 * chi_r + 2 * t_of(g) - 6) continue;
      CAPTURE(id);
      ++exercised;
      CHECK(bound_thm8(g).value <= bound_ccc(g));
    }
    CHECK(exercised >= 5);
  }
  SUBCASE("regular subdivisions with t >= 1 are certified") {
    for (const auto& name : platonic_names())
      for (int k = 1; k <= 4; ++k) {
        const PlaneGraph g = regular_subdivide(platonic(name), k);
        CAPTURE(name);
        CAPTURE(k);
        const BoundReport r = make_bound_report(name, g, BoundOptions{1, kDefaultEdgeGuard});
        CHECK_FALSE(r.exact.has_value());
        CHECK(r.flag("CCC")->verdict == Verdict::holds_by_bound);
        CHECK_FALSE(r.flag("CCC")->certified_by.empty());
      }
  }
}

TEST_CASE("csv row") {
  const BoundReport r = make_bound_report("cube", platonic("cube"));
  CHECK(csv_header() == "graph_id,delta_star,t,k_star,exact,ccc,bbgh,thm4,thm6,thm7,thm8,cor9,flags");
  CHECK(csv_row(r) == "cube,4,0,2,4,6,NA,NA,4,4,4,6,CCC=HOLDS;CCC-subdiv=HOLDS;Conjecture-5=HOLDS;BBGH=N/A");
}
