#pragma once

#include <vector>

#include "cyclic/embedding.hpp"

namespace cyclic {

// Hard ceiling on exact searches, independent of the user-facing guard.
constexpr int kMaxExactVertices = 512;

struct VertexColoringResult {
  int colors = 0;
  std::vector<int> color;
  long long nodes = 0;
};

// Largest-degree-first greedy; colors are 0-based.
std::vector<int> greedy_coloring(const CyclicAdjacencyGraph& h);

std::vector<int> maximum_clique(const CyclicAdjacencyGraph& h);

// Exact chromatic number by DSATUR branch and bound. The maximum clique is
// precolored; `lower_bound` may add a further known bound (e.g. a face size).
VertexColoringResult exact_vertex_coloring(const CyclicAdjacencyGraph& h, int lower_bound = 0);

}  // namespace cyclic
