#pragma once

#include <string>
#include <vector>

#include "cyclic/edgecolor.hpp"
#include "cyclic/plane_graph.hpp"

namespace cyclic {

// R(G): every maximal path whose interior vertices have degree 2 becomes one
// edge. Rotations of R are inherited from G.
struct ReductionResult {
  PlaneGraph reduced;
  std::vector<int> kept_vertices;              // R vertex -> G vertex (degree >= 3)
  std::vector<int> reduced_vertex;             // G vertex -> R vertex, -1 for degree 2
  std::vector<std::vector<int>> edge_to_path;  // R edge -> G vertices, from origin(2e) to origin(2e+1)
  std::vector<std::vector<int>> dart_path;     // R dart -> G darts along its path
  std::vector<int> face_map;                   // G face -> R face
  std::vector<int> face_map_inverse;           // R face -> G face

  // Number of degree-2 vertices on the path of R edge e.
  int interior_count(int e) const { return static_cast<int>(edge_to_path[e].size()) - 2; }
};

// Requires g 2-connected and not a cycle.
ReductionResult reduce(const PlaneGraph& g);

// Subdivides `reduced` back along the recorded path lengths.
PlaneGraph resubdivide(const ReductionResult& r);

enum class StructureTag { simple_3_connected, two_face, two_cut };

std::string to_string(StructureTag tag);

// One of the two faces of R flanking the piece H: `inner` are the darts of
// the face walk lying in H (a u,v-path), `outer` the remaining darts.
struct FlankingFace {
  int face = -1;
  std::vector<int> inner;
  std::vector<int> outer;
};

struct StructureClass {
  StructureTag tag = StructureTag::simple_3_connected;
  int u = -1;
  int v = -1;
  int two_face = -1;                 // R face index for two_face
  std::vector<int> component;        // V(K), R vertex ids, for two_cut
  std::vector<int> piece_edges;      // R edges of H (the 2-face edges, or H_R(u,v))
  std::vector<FlankingFace> flanks;  // the two faces outside H, empty for simple_3_connected

  // P' and P'' as R vertex sequences.
  std::vector<int> boundary_path(const PlaneGraph& reduced, int side) const;
};

// First applicable of simple 3-connected, 2-face, 2-cut. For 2-cuts the
// component K of minimum size wins, ties by (u, v, smallest vertex of K);
// H_R(u,v) is re-checked to be 2-connected.
StructureClass classify(const ReductionResult& r);

// S(G): one vertex per face of G, one edge per degree-2 vertex joining the
// two faces it lies on.
struct SubdivisionMultigraph {
  Multigraph graph;
  std::vector<int> link_vertex;  // S edge -> G vertex of degree 2
  int max_degree = 0;
  int multiplicity = 0;
};

SubdivisionMultigraph subdivision_multigraph(const PlaneGraph& g, const ReductionResult& r);

// max over faces f of deg_G(f) - deg_R(f').
int face_surplus(const PlaneGraph& g, const ReductionResult& r);

// All paths have the same number k of interior vertices; returns k or -1.
int regular_subdivision_order(const ReductionResult& r);

}  // namespace cyclic
