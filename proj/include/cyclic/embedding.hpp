#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclic/plane_graph.hpp"

namespace cyclic {

struct ValidationReport {
  std::vector<std::string> violations;
  int face_count = 0;
  bool valid() const { return violations.empty(); }
};

// Checks twin involution, absence of loops, connectivity and Euler's formula.
ValidationReport validate(const PlaneGraph& g);

// Faces of a valid graph; throws precondition_error otherwise.
const std::vector<Face>& trace_faces(const PlaneGraph& g);

int delta_star(const PlaneGraph& g);
int max_vertex_degree(const PlaneGraph& g);
int min_vertex_degree(const PlaneGraph& g);

// Largest number of vertices shared by two distinct faces.
int k_star(const PlaneGraph& g);

// Vertex count of a longest path whose vertices all have degree 2.
// Throws precondition_error on a cycle, where the quantity is undefined.
int t_of(const PlaneGraph& g);

bool is_cycle(const PlaneGraph& g);
bool is_connected(const PlaneGraph& g);
bool is_simple(const PlaneGraph& g);
bool is_two_connected(const PlaneGraph& g);
// False for any multigraph; combine with is_simple() to tell the cases apart.
bool is_three_connected_simple(const PlaneGraph& g);
bool is_locally_connected(const PlaneGraph& g);
bool faces_ge4_pairwise_disjoint(const PlaneGraph& g);

std::vector<int> vertices_of_degree(const PlaneGraph& g, int degree);

// Symmetric relation on vertices: u ~ v iff u != v and some face holds both.
struct CyclicAdjacencyGraph {
  int n = 0;
  std::vector<std::vector<char>> adj;

  bool adjacent(int u, int v) const { return adj[u][v] != 0; }
  int degree(int v) const;
  bool is_complete() const;
};

CyclicAdjacencyGraph cyclic_adjacency(const PlaneGraph& g);

// Abstract graph from an edge list (duplicate pairs collapse, loops ignored).
CyclicAdjacencyGraph adjacency_from_edges(int n, std::span<const std::pair<int, int>> edges);

// Connectivity predicates on an abstract graph after deleting `removed`.
bool connected_without(const CyclicAdjacencyGraph& h, std::span<const int> removed);
bool is_biconnected(const CyclicAdjacencyGraph& h);

// Subgraph keeping a subset of edges, together with the maps back to the
// parent graph. Vertices and edges keep their relative id order.
struct Subgraph {
  PlaneGraph graph;
  std::vector<int> vertex_origin;  // subgraph vertex -> parent vertex
  std::vector<int> edge_origin;    // subgraph edge -> parent edge
};

// Keeps edges with keep[e] true and every vertex they touch; rotations are
// the parent rotations restricted to the kept darts.
Subgraph edge_subgraph(const PlaneGraph& g, const std::vector<bool>& keep);

PlaneGraph remove_edge(const PlaneGraph& g, int e);

// Orientation-preserving isomorphism of rotation systems, as a vertex map
// from `a` to `b`, if one exists.
std::optional<std::vector<int>> rotation_isomorphism(const PlaneGraph& a, const PlaneGraph& b);

}  // namespace cyclic
