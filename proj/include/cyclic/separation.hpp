#pragma once

#include <vector>

#include "cyclic/embedding.hpp"
#include "cyclic/plane_graph.hpp"

namespace cyclic {

// Sides of a simple cycle given as a closed directed dart walk. The
// "inside" is the side swept by rot_next from each outgoing cycle dart up to
// the reversed incoming one.
struct CycleSides {
  std::vector<int> inside_vertices;
  std::vector<int> inside_edges;
  std::vector<int> outside_vertices;
  std::vector<int> outside_edges;

  bool separating() const { return !inside_edges.empty() && !outside_edges.empty(); }
};

// Throws precondition_error when `darts` is not a simple closed walk.
CycleSides cycle_sides(const PlaneGraph& g, const std::vector<int>& darts);

struct SeparatingCycle {
  std::vector<int> vertices;  // cycle order, first vertex not repeated
  std::vector<int> darts;     // darts[i] runs from vertices[i] to vertices[i+1]
  CycleSides sides;

  int length() const { return static_cast<int>(darts.size()); }
};

// For a 2-connected g with at least four faces whose reduction is not simple
// 3-connected: a separating cycle of length at most delta_star(g), built from
// the 2-face or minimal 2-cut of the reduction. The shorter of the two lifted
// piece paths is closed by the outer path of the opposite flanking face.
SeparatingCycle find_separating_cycle(const PlaneGraph& g);

// H1 = C with its inside, H2 = C with its outside. Every face of g survives
// in exactly one piece; each piece gains one face bounded by C.
struct SplitResult {
  Subgraph inside;
  Subgraph outside;
};

SplitResult split_along_cycle(const PlaneGraph& g, const SeparatingCycle& c);

}  // namespace cyclic
