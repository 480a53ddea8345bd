#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclic/plane_graph.hpp"

namespace cyclic {

// Two hubs (vertices 0 and 1) joined by paths of a, b and c edges; interior
// vertices follow path by path, each path listed from hub 0 to hub 1.
PlaneGraph theta(int a, int b, int c);

// Triangular prism: triangle 0,1,2 on top, 3,4,5 below, edges i -- i+3 join them.
PlaneGraph prism();

// Prism with its joining edges 0-3, 1-4, 2-5 replaced by paths with a, b and
// c interior vertices.
PlaneGraph thm6_prism(int a, int b, int c);
PlaneGraph prism_subdiv(int t);

// tetrahedron, cube, octahedron, dodecahedron or icosahedron.
PlaneGraph platonic(std::string_view name);
const std::vector<std::string>& platonic_names();

// Cycle on n >= 2 vertices (n = 2 gives a double edge).
PlaneGraph cycle_graph(int n);

// Replaces edge e by a path with plan[e] interior vertices. New vertices are
// appended edge by edge, each path ordered from origin(2e) to origin(2e+1);
// the path of edge e takes consecutive new edge ids in ascending e order.
PlaneGraph subdivide_edges(const PlaneGraph& g, std::span<const int> plan);
PlaneGraph subdivide_edges(const PlaneGraph& g, const std::map<int, int>& plan);
PlaneGraph regular_subdivide(const PlaneGraph& g, int k);

// Identifies u2 with u1 and v2 with v1, placing g2 inside a face of g1.
// The faces used are the lowest-indexed ones holding both vertices; g2's
// remaining vertices are numbered after g1's, and its edges after g1's.
PlaneGraph glue_at_two_cut(const PlaneGraph& g1, const PlaneGraph& g2, int u1, int v1, int u2, int v2);

// Two prisms glued at the ends of their joining edge 0-3, with the first
// prism's copy of that edge removed unless `keep_shared_edges`.
PlaneGraph double_prism(bool keep_shared_edges = false);

struct NamedGraph {
  std::string id;
  PlaneGraph graph;
};

// Fixed instance list covering every family; each has at most 40 vertices.
std::vector<NamedGraph> corpus();

// Glued instances exercising the separating-cycle decomposition.
std::vector<NamedGraph> glued_corpus();

}  // namespace cyclic
