#pragma once

#include <span>
#include <string>
#include <vector>

#include "cyclic/edgecolor.hpp"
#include "cyclic/plane_graph.hpp"

namespace cyclic {

enum class ColoringMethod { exact, constructive, decomposed, direct };

std::string to_string(ColoringMethod method);

// Vertex -> color id (0-based). In intermediate results -1 marks a vertex
// outside the colored piece.
struct CyclicColoring {
  std::vector<int> assignment;
  int colors_used = 0;
  ColoringMethod method = ColoringMethod::direct;
};

constexpr int kDefaultGuard = 40;

struct ColoringOptions {
  int guard = kDefaultGuard;            // max vertices for the exact oracle
  int edge_guard = kDefaultEdgeGuard;   // max edges for exact chromatic index
};

// True iff vertices sharing a face get distinct colors. A partial
// assignment is a caller error and throws precondition_error.
bool verify_cyclic(const PlaneGraph& g, const CyclicColoring& c);

int count_colors(std::span<const int> assignment);

struct ExactResult {
  int chi = 0;
  CyclicColoring coloring;
};

// Exact cyclic chromatic number via branch and bound on the cyclic
// adjacency graph; throws guard_exceeded above `guard` vertices.
ExactResult chi_c_exact(const PlaneGraph& g, int guard = kDefaultGuard);

struct ConstructiveResult {
  CyclicColoring coloring;
  int reduced_colors = 0;   // palette of the coloring of R
  bool reduced_exact = false;
  int link_colors = 0;      // palette of the edge coloring of S
  bool link_exact = false;
};

// Colors R (exactly when it fits the guard, else greedily), then the
// degree-2 vertices by an edge coloring of S on a disjoint palette placed
// after R's colors. Requires a simple 3-connected reduction.
ConstructiveResult color_constructive_detailed(const PlaneGraph& g, const ColoringOptions& opts = {});
CyclicColoring color_constructive(const PlaneGraph& g, const ColoringOptions& opts = {});

// c1 united with sigma(c2), where sigma maps c2's colors on `shared` onto
// c1's and the remaining colors of c2 ascending onto the smallest colors
// not used by c1 on `shared`. Both restrictions to `shared` must be
// injective; a vertex colored by both must be shared.
CyclicColoring merge_colorings(const CyclicColoring& c1, const CyclicColoring& c2,
                               std::span<const int> shared);

struct DecomposedResult {
  CyclicColoring coloring;
  int budget = 0;
  bool budget_exceeded = false;
  int splits = 0;
  int pieces = 0;
  bool pieces_within_guard = true;
};

// Recursive split along short separating cycles down to cycles, 3-face
// graphs and subdivisions of simple 3-connected graphs. Going over budget
// is reported in the result, never fatal.
DecomposedResult color_decomposed(const PlaneGraph& g, int palette_budget, const ColoringOptions& opts = {});

}  // namespace cyclic
