#pragma once

#include <span>
#include <utility>
#include <vector>

namespace cyclic {

// One entry of a vertex rotation: the far endpoint and the edge id.
struct Incidence {
  int neighbor;
  int edge;
  friend bool operator==(const Incidence&, const Incidence&) = default;
};

// A traced face. `walk` lists darts in order; the successor of dart d is
// rot_next(twin(d)). `vertices` holds the distinct vertices, ascending, so
// degree() is the number of vertices incident with the face.
struct Face {
  std::vector<int> walk;
  std::vector<int> vertices;

  int degree() const { return static_cast<int>(vertices.size()); }
  int length() const { return static_cast<int>(walk.size()); }
  bool contains(int v) const;
};

/// Connected plane multigraph given by a rotation system.
///
/// Edge e owns darts 2e and 2e+1; dart 2e is the first occurrence of e when
/// the rotation lists are scanned by ascending vertex id, so dart numbering is
/// a function of the rotation lists alone. Rotations are read as clockwise.
/// Faces are traced once at construction; the object is immutable afterwards.
///
/// The constructor rejects malformed input (edge ids not dense, an edge id
/// not occurring exactly twice, inconsistent neighbor entries). Loops,
/// disconnection and non-spherical rotations are accepted here and reported
/// by validate().
class PlaneGraph {
 public:
  PlaneGraph(int vertex_count, std::vector<std::vector<Incidence>> rotation);

  // Builds a simple graph from consistently oriented face cycles: every
  // directed pair (x, y) must occur in exactly one face.
  static PlaneGraph from_oriented_faces(int vertex_count,
                                        const std::vector<std::vector<int>>& faces);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(origin_.size() / 2); }
  int dart_count() const { return static_cast<int>(origin_.size()); }

  static constexpr int twin(int d) { return d ^ 1; }
  static constexpr int edge_of(int d) { return d >> 1; }
  int origin(int d) const { return origin_[d]; }
  int head(int d) const { return origin_[twin(d)]; }
  std::pair<int, int> endpoints(int e) const { return {origin_[2 * e], origin_[2 * e + 1]}; }

  int rot_next(int d) const;
  int rot_prev(int d) const;
  int face_next(int d) const { return rot_next(twin(d)); }

  std::span<const int> rotation(int v) const { return rotation_[v]; }
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }

  const std::vector<Face>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int face_of(int d) const { return face_of_[d]; }

  // Rotation lists in the constructor's input form.
  std::vector<std::vector<Incidence>> incidences() const;

 private:
  void trace();

  int n_;
  std::vector<int> origin_;
  std::vector<int> position_;
  std::vector<std::vector<int>> rotation_;
  std::vector<Face> faces_;
  std::vector<int> face_of_;
};

}  // namespace cyclic
