#include "cyclic/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclic/embedding.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/generators.hpp"

namespace cyclic {

namespace {

// The two faces of R that contain darts of `piece` and darts outside it,
// each cut into its piece segment and its remaining segment.
std::vector<FlankingFace> flanking_faces(const PlaneGraph& r, const std::vector<char>& in_piece) {
  std::vector<FlankingFace> out;
  for (int f = 0; f < r.face_count(); ++f) {
    const auto& walk = r.faces()[f].walk;
    const auto inside = [&](int d) { return in_piece[PlaneGraph::edge_of(d)] != 0; };
    const auto count = std::count_if(walk.begin(), walk.end(), inside);
    if (count == 0 || count == static_cast<long>(walk.size())) continue;
    const std::size_t k = walk.size();
    std::size_t start = 0;
    while (!(inside(walk[start]) && !inside(walk[(start + k - 1) % k]))) ++start;
    FlankingFace flank;
    flank.face = f;
    std::size_t i = 0;
    for (; i < k && inside(walk[(start + i) % k]); ++i) flank.inner.push_back(walk[(start + i) % k]);
    for (; i < k; ++i) {
      const int d = walk[(start + i) % k];
      if (inside(d)) throw std::logic_error("piece darts are not contiguous on a flanking face");
      flank.outer.push_back(d);
    }
    out.push_back(std::move(flank));
  }
  if (out.size() != 2) throw std::logic_error("expected exactly two faces flanking the piece");
  return out;
}

}  // namespace

ReductionResult reduce(const PlaneGraph& g) {
  if (is_cycle(g)) throw precondition_error("reduction is undefined for a cycle");
  if (!is_two_connected(g)) throw precondition_error("reduction needs a 2-connected graph");

  const int n = g.vertex_count();
  ReductionResult out{PlaneGraph(1, {{}}), {}, std::vector<int>(n, -1), {}, {}, {}, {}};
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 3) {
      out.reduced_vertex[v] = static_cast<int>(out.kept_vertices.size());
      out.kept_vertices.push_back(v);
    }

  // Walk each path from its first dart. Edge ids are ordered by the smallest
  // G edge on the path, so R equals G when nothing is suppressed.
  std::vector<std::vector<int>> paths;  // G darts from the discovering end
  {
    std::vector<char> walked(g.dart_count(), 0);
    for (int u : out.kept_vertices)
      for (int d : g.rotation(u)) {
        if (walked[d]) continue;
        std::vector<int> darts{d};
        while (g.degree(g.head(darts.back())) == 2) {
          const int back = PlaneGraph::twin(darts.back());
          darts.push_back(g.rot_next(back));
        }
        walked[d] = walked[PlaneGraph::twin(darts.back())] = 1;
        paths.push_back(std::move(darts));
      }
    auto key = [](const std::vector<int>& p) {
      int k = PlaneGraph::edge_of(p.front());
      for (int d : p) k = std::min(k, PlaneGraph::edge_of(d));
      return k;
    };
    std::sort(paths.begin(), paths.end(),
              [&](const auto& a, const auto& b) { return key(a) < key(b); });
  }
  std::vector<int> edge_of_dart(g.dart_count(), -1);
  for (int id = 0; id < static_cast<int>(paths.size()); ++id) {
    edge_of_dart[paths[id].front()] = id;
    edge_of_dart[PlaneGraph::twin(paths[id].back())] = id;
  }

  const int kept = static_cast<int>(out.kept_vertices.size());
  std::vector<std::vector<Incidence>> rotation(kept);
  for (int i = 0; i < kept; ++i)
    for (int d : g.rotation(out.kept_vertices[i])) {
      const auto& path = paths[edge_of_dart[d]];
      const int far = path.front() == d ? g.head(path.back()) : g.origin(path.front());
      rotation[i].push_back({out.reduced_vertex[far], edge_of_dart[d]});
    }
  out.reduced = PlaneGraph(kept, std::move(rotation));
  const PlaneGraph& r = out.reduced;

  // R's rotations are position-aligned with G's at every kept vertex.
  out.dart_path.assign(r.dart_count(), {});
  std::vector<int> reduced_dart_of(g.dart_count(), -1);
  for (int i = 0; i < kept; ++i) {
    const auto grot = g.rotation(out.kept_vertices[i]);
    const auto rrot = r.rotation(i);
    for (std::size_t j = 0; j < grot.size(); ++j) {
      const int gd = grot[j], rd = rrot[j];
      reduced_dart_of[gd] = rd;
      const auto& path = paths[edge_of_dart[gd]];
      if (path.front() == gd) {
        out.dart_path[rd] = path;
      } else {
        auto& rev = out.dart_path[rd];
        for (auto it = path.rbegin(); it != path.rend(); ++it) rev.push_back(PlaneGraph::twin(*it));
      }
    }
  }
  out.edge_to_path.resize(r.edge_count());
  for (int e = 0; e < r.edge_count(); ++e) {
    auto& seq = out.edge_to_path[e];
    for (int d : out.dart_path[2 * e]) seq.push_back(g.origin(d));
    seq.push_back(g.head(out.dart_path[2 * e].back()));
  }

  out.face_map.assign(g.face_count(), -1);
  out.face_map_inverse.assign(r.face_count(), -1);
  for (int f = 0; f < g.face_count(); ++f) {
    for (int d : g.faces()[f].walk)
      if (reduced_dart_of[d] != -1) {
        out.face_map[f] = r.face_of(reduced_dart_of[d]);
        break;
      }
    if (out.face_map[f] == -1 || out.face_map_inverse[out.face_map[f]] != -1)
      throw std::logic_error("face correspondence of the reduction is not a bijection");
    out.face_map_inverse[out.face_map[f]] = f;
  }
  if (g.face_count() != r.face_count())
    throw std::logic_error("reduction changed the number of faces");
  return out;
}

PlaneGraph resubdivide(const ReductionResult& r) {
  std::vector<int> plan(r.reduced.edge_count());
  for (int e = 0; e < r.reduced.edge_count(); ++e) plan[e] = r.interior_count(e);
  return subdivide_edges(r.reduced, plan);
}

std::string to_string(StructureTag tag) {
  switch (tag) {
    case StructureTag::simple_3_connected: return "SIMPLE_3_CONNECTED";
    case StructureTag::two_face: return "TWO_FACE";
    case StructureTag::two_cut: return "TWO_CUT";
  }
  return "?";
}

std::vector<int> StructureClass::boundary_path(const PlaneGraph& reduced, int side) const {
  const auto& darts = flanks.at(side).inner;
  std::vector<int> seq;
  for (int d : darts) seq.push_back(reduced.origin(d));
  seq.push_back(reduced.head(darts.back()));
  return seq;
}

StructureClass classify(const ReductionResult& res) {
  const PlaneGraph& r = res.reduced;
  StructureClass out;
  if (is_three_connected_simple(r)) return out;

  std::vector<char> in_piece(r.edge_count(), 0);
  for (int f = 0; f < r.face_count(); ++f) {
    const auto& face = r.faces()[f];
    if (face.degree() != 2) continue;
    out.tag = StructureTag::two_face;
    out.two_face = f;
    out.u = face.vertices[0];
    out.v = face.vertices[1];
    for (int d : face.walk) {
      out.piece_edges.push_back(PlaneGraph::edge_of(d));
      in_piece[PlaneGraph::edge_of(d)] = 1;
    }
    std::sort(out.piece_edges.begin(), out.piece_edges.end());
    out.flanks = flanking_faces(r, in_piece);
    return out;
  }

  // Minimal component over all 2-cuts.
  const int n = r.vertex_count();
  std::vector<std::vector<int>> nb(n);
  for (int e = 0; e < r.edge_count(); ++e) {
    const auto [a, b] = r.endpoints(e);
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  bool found = false;
  std::vector<int> label(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::fill(label.begin(), label.end(), -1);
      label[u] = label[v] = -2;
      std::vector<std::vector<int>> comps;
      for (int s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        const int id = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<int> stack{s};
        label[s] = id;
        while (!stack.empty()) {
          const int x = stack.back();
          stack.pop_back();
          comps[id].push_back(x);
          for (int y : nb[x])
            if (label[y] == -1) {
              label[y] = id;
              stack.push_back(y);
            }
        }
      }
      if (comps.size() < 2) continue;
      for (auto& comp : comps) {
        std::sort(comp.begin(), comp.end());
        if (!found || comp.size() < out.component.size()) {
          found = true;
          out.u = u;
          out.v = v;
          out.component = comp;
        }
      }
    }
  if (!found) throw std::logic_error("reduction is neither 3-connected nor has a 2-face or 2-cut");
  out.tag = StructureTag::two_cut;

  std::vector<char> in_k(n, 0);
  for (int x : out.component) in_k[x] = 1;
  std::vector<int> local(n, -1);
  int count = 0;
  for (int x = 0; x < n; ++x)
    if (in_k[x] || x == out.u || x == out.v) local[x] = count++;
  std::vector<std::pair<int, int>> h_edges;
  for (int e = 0; e < r.edge_count(); ++e) {
    const auto [a, b] = r.endpoints(e);
    if (in_k[a] || in_k[b]) {
      in_piece[e] = 1;
      out.piece_edges.push_back(e);
      h_edges.emplace_back(local[a], local[b]);
    }
  }
  if (!is_biconnected(adjacency_from_edges(count, h_edges)))
    throw std::logic_error("H_R(u,v) of the minimal 2-cut is not 2-connected");
  out.flanks = flanking_faces(r, in_piece);
  return out;
}

SubdivisionMultigraph subdivision_multigraph(const PlaneGraph& g, const ReductionResult& r) {
  (void)r;
  SubdivisionMultigraph s;
  s.graph.vertex_count = g.face_count();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) continue;
    const auto rot = g.rotation(v);
    const int fa = g.face_of(rot[0]), fb = g.face_of(rot[1]);
    if (fa == fb) throw precondition_error("degree-2 vertex lies on a single face");
    s.graph.edges.emplace_back(std::min(fa, fb), std::max(fa, fb));
    s.link_vertex.push_back(v);
  }
  s.max_degree = s.graph.max_degree();
  s.multiplicity = s.graph.multiplicity();
  return s;
}

int face_surplus(const PlaneGraph& g, const ReductionResult& r) {
  int best = 0;
  for (int f = 0; f < g.face_count(); ++f)
    best = std::max(best, g.faces()[f].degree() - r.reduced.faces()[r.face_map[f]].degree());
  return best;
}

int regular_subdivision_order(const ReductionResult& r) {
  int k = -1;
  for (int e = 0; e < r.reduced.edge_count(); ++e) {
    if (k == -1) k = r.interior_count(e);
    else if (k != r.interior_count(e)) return -1;
  }
  return k;
}

}  // namespace cyclic
