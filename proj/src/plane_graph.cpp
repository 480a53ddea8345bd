#include "cyclic/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace cyclic {

bool Face::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

PlaneGraph::PlaneGraph(int vertex_count, std::vector<std::vector<Incidence>> rotation)
    : n_(vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("plane graph needs at least one vertex");
  if (static_cast<int>(rotation.size()) != vertex_count)
    throw std::invalid_argument("rotation list count differs from vertex count");

  int max_edge = -1;
  for (const auto& rot : rotation)
    for (const auto& inc : rot) {
      if (inc.neighbor < 0 || inc.neighbor >= vertex_count)
        throw std::invalid_argument("neighbor id " + std::to_string(inc.neighbor) + " out of range");
      if (inc.edge < 0) throw std::invalid_argument("negative edge id");
      max_edge = std::max(max_edge, inc.edge);
    }
  const int m = max_edge + 1;

  // (vertex, neighbor) of each occurrence, in scan order.
  std::vector<std::vector<std::pair<int, int>>> seen(m);
  for (int v = 0; v < vertex_count; ++v)
    for (const auto& inc : rotation[v]) seen[inc.edge].emplace_back(v, inc.neighbor);
  for (int e = 0; e < m; ++e) {
    if (seen[e].size() != 2)
      throw std::invalid_argument("edge " + std::to_string(e) + " occurs " +
                                  std::to_string(seen[e].size()) + " times, expected 2");
    const auto [v0, w0] = seen[e][0];
    const auto [v1, w1] = seen[e][1];
    if (w0 != v1 || w1 != v0)
      throw std::invalid_argument("edge " + std::to_string(e) + " has inconsistent endpoints");
  }

  origin_.assign(2 * m, -1);
  position_.assign(2 * m, -1);
  rotation_.assign(vertex_count, {});
  std::vector<int> next_dart(m, 0);
  for (int v = 0; v < vertex_count; ++v) {
    for (const auto& inc : rotation[v]) {
      const int d = 2 * inc.edge + next_dart[inc.edge]++;
      origin_[d] = v;
      position_[d] = static_cast<int>(rotation_[v].size());
      rotation_[v].push_back(d);
    }
  }
  trace();
}

int PlaneGraph::rot_next(int d) const {
  const auto& rot = rotation_[origin_[d]];
  const auto i = static_cast<std::size_t>(position_[d]) + 1;
  return i == rot.size() ? rot.front() : rot[i];
}

int PlaneGraph::rot_prev(int d) const {
  const auto& rot = rotation_[origin_[d]];
  const int i = position_[d];
  return i == 0 ? rot.back() : rot[i - 1];
}

void PlaneGraph::trace() {
  face_of_.assign(origin_.size(), -1);
  for (int start = 0; start < dart_count(); ++start) {
    if (face_of_[start] != -1) continue;
    Face f;
    const int id = static_cast<int>(faces_.size());
    int d = start;
    do {
      face_of_[d] = id;
      f.walk.push_back(d);
      f.vertices.push_back(origin_[d]);
      d = face_next(d);
    } while (d != start);
    std::sort(f.vertices.begin(), f.vertices.end());
    f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
    faces_.push_back(std::move(f));
  }
  // An edgeless graph (single vertex) still has its one face.
  if (faces_.empty()) {
    Face f;
    f.vertices.push_back(0);
    faces_.push_back(std::move(f));
  }
}

std::vector<std::vector<Incidence>> PlaneGraph::incidences() const {
  std::vector<std::vector<Incidence>> out(n_);
  for (int v = 0; v < n_; ++v)
    for (int d : rotation_[v]) out[v].push_back({head(d), edge_of(d)});
  return out;
}

PlaneGraph PlaneGraph::from_oriented_faces(int vertex_count,
                                           const std::vector<std::vector<int>>& faces) {
  std::map<std::pair<int, int>, int> edge_id;
  for (const auto& f : faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int x = f[i], y = f[(i + 1) % f.size()];
      edge_id.emplace(std::minmax(x, y), 0);
    }
  int next = 0;
  for (auto& [key, id] : edge_id) id = next++;

  // succ[y][x] = z when x, y, z are consecutive on a face: the dart y->z
  // follows y->x in the rotation at y.
  std::vector<std::map<int, int>> succ(vertex_count);
  for (const auto& f : faces) {
    const std::size_t k = f.size();
    if (k < 3) throw std::invalid_argument("oriented face needs at least three vertices");
    for (std::size_t i = 0; i < k; ++i) {
      const int x = f[i], y = f[(i + 1) % k], z = f[(i + 2) % k];
      if (!succ[y].emplace(x, z).second)
        throw std::invalid_argument("directed edge " + std::to_string(y) + "->" +
                                    std::to_string(x) + " used by two faces");
    }
  }

  std::vector<std::vector<Incidence>> rotation(vertex_count);
  for (int y = 0; y < vertex_count; ++y) {
    if (succ[y].empty()) continue;
    const int first = succ[y].begin()->first;
    int x = first;
    do {
      rotation[y].push_back({x, edge_id.at(std::minmax(x, y))});
      auto it = succ[y].find(x);
      if (it == succ[y].end())
        throw std::invalid_argument("faces around vertex " + std::to_string(y) + " do not close");
      x = it->second;
    } while (x != first && rotation[y].size() <= succ[y].size());
    if (rotation[y].size() != succ[y].size())
      throw std::invalid_argument("faces around vertex " + std::to_string(y) +
                                  " form more than one fan");
  }
  return PlaneGraph(vertex_count, std::move(rotation));
}

}  // namespace cyclic
