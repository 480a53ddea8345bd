#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace cyclic {

// Loopless multigraph; parallel edges are listed separately.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const;
  int max_degree() const;
  // Size of the largest class of parallel edges (0 when edgeless).
  int multiplicity() const;
};

struct EdgeColoring {
  std::vector<int> color;  // edge index -> color id, 0-based
  int colors_used = 0;
};

constexpr int kDefaultEdgeGuard = 40;

// min(floor(3*Delta/2), Delta + mu): Shannon and Vizing-Gupta guarantee a
// proper coloring within this many colors.
int default_budget(const Multigraph& m);

bool is_proper(const Multigraph& m, const EdgeColoring& c);

// Exhaustive search for a proper coloring with at most `budget` colors.
// Edges are branched in decreasing order of endpoint-degree sum and colors
// are tried ascending, so the result is deterministic.
std::optional<EdgeColoring> try_edge_color(const Multigraph& m, int budget);

// As try_edge_color, throwing infeasible_budget when the search exhausts.
EdgeColoring edge_color(const Multigraph& m, int budget);
EdgeColoring edge_color(const Multigraph& m);

// Minimum-color proper edge coloring; throws guard_exceeded above `guard` edges.
EdgeColoring minimum_edge_coloring(const Multigraph& m, int guard = kDefaultEdgeGuard);
int chromatic_index(const Multigraph& m, int guard = kDefaultEdgeGuard);

}  // namespace cyclic
