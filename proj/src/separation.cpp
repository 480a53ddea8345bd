#include "cyclic/separation.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclic/errors.hpp"
#include "cyclic/reduction.hpp"

namespace cyclic {

CycleSides cycle_sides(const PlaneGraph& g, const std::vector<int>& darts) {
  const std::size_t n = darts.size();
  if (n < 2) throw precondition_error("a cycle needs at least two edges");
  std::vector<char> on_vertex(g.vertex_count(), 0), on_edge(g.edge_count(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int d = darts[i];
    if (g.head(d) != g.origin(darts[(i + 1) % n]))
      throw precondition_error("cycle darts do not form a closed walk");
    if (on_vertex[g.origin(d)]++ || on_edge[PlaneGraph::edge_of(d)]++)
      throw precondition_error("cycle is not simple");
  }

  // 0 = unassigned, 1 = inside, 2 = outside
  std::vector<char> edge_side(g.edge_count(), 0), vertex_side(g.vertex_count(), 0);
  std::vector<int> stack;
  const auto mark_edge = [&](int d, char side) {
    const int e = PlaneGraph::edge_of(d);
    if (on_edge[e]) return;
    if (edge_side[e] != 0 && edge_side[e] != side)
      throw precondition_error("cycle does not separate the embedding consistently");
    edge_side[e] = side;
    const int w = g.head(d);
    if (on_vertex[w]) return;
    if (vertex_side[w] != 0 && vertex_side[w] != side)
      throw precondition_error("cycle does not separate the embedding consistently");
    if (vertex_side[w] == 0) {
      vertex_side[w] = side;
      stack.push_back(w);
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    const int out = darts[(i + 1) % n];
    const int back = PlaneGraph::twin(darts[i]);
    for (int d = g.rot_next(out); d != back; d = g.rot_next(d)) mark_edge(d, 1);
    for (int d = g.rot_next(back); d != out; d = g.rot_next(d)) mark_edge(d, 2);
  }
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int d : g.rotation(x)) mark_edge(d, vertex_side[x]);
  }

  CycleSides sides;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (vertex_side[v] == 1) sides.inside_vertices.push_back(v);
    if (vertex_side[v] == 2) sides.outside_vertices.push_back(v);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (edge_side[e] == 1) sides.inside_edges.push_back(e);
    if (edge_side[e] == 2) sides.outside_edges.push_back(e);
  }
  return sides;
}

namespace {

struct LiftedFlank {
  std::vector<int> inner;
  std::vector<int> outer;
  std::vector<int> interior_vertices;  // of `inner`, ascending
};

std::vector<int> lift(const ReductionResult& r, const std::vector<int>& reduced_darts) {
  std::vector<int> out;
  for (int d : reduced_darts) {
    const auto& path = r.dart_path[d];
    out.insert(out.end(), path.begin(), path.end());
  }
  return out;
}

}  // namespace

SeparatingCycle find_separating_cycle(const PlaneGraph& g) {
  if (!is_two_connected(g)) throw precondition_error("separating cycle search needs a 2-connected graph");
  if (g.face_count() < 4) throw precondition_error("separating cycle search needs at least four faces");
  const ReductionResult r = reduce(g);
  const StructureClass cls = classify(r);
  if (cls.tag == StructureTag::simple_3_connected)
    throw precondition_error(
        "reduction is simple 3-connected; the graph is a subdivision of a simple 3-connected graph");

  LiftedFlank flanks[2];
  for (int s = 0; s < 2; ++s) {
    flanks[s].inner = lift(r, cls.flanks[s].inner);
    flanks[s].outer = lift(r, cls.flanks[s].outer);
    for (std::size_t i = 1; i < flanks[s].inner.size(); ++i)
      flanks[s].interior_vertices.push_back(g.origin(flanks[s].inner[i]));
    std::sort(flanks[s].interior_vertices.begin(), flanks[s].interior_vertices.end());
  }
  // The shorter piece path; equal lengths fall back to the smaller interior vertex ids.
  const bool first_short =
      flanks[0].inner.size() != flanks[1].inner.size()
          ? flanks[0].inner.size() < flanks[1].inner.size()
          : flanks[0].interior_vertices <= flanks[1].interior_vertices;
  const LiftedFlank& short_side = flanks[first_short ? 0 : 1];
  const LiftedFlank& long_side = flanks[first_short ? 1 : 0];

  SeparatingCycle c;
  c.darts = short_side.inner;
  const int end = g.head(c.darts.back());
  if (g.origin(long_side.outer.front()) == end) {
    c.darts.insert(c.darts.end(), long_side.outer.begin(), long_side.outer.end());
  } else {
    for (auto it = long_side.outer.rbegin(); it != long_side.outer.rend(); ++it)
      c.darts.push_back(PlaneGraph::twin(*it));
  }
  for (int d : c.darts) c.vertices.push_back(g.origin(d));
  c.sides = cycle_sides(g, c.darts);
  if (!c.sides.separating()) throw std::logic_error("constructed cycle is not separating");
  if (c.length() > delta_star(g)) throw std::logic_error("constructed cycle exceeds the maximum face degree");
  return c;
}

SplitResult split_along_cycle(const PlaneGraph& g, const SeparatingCycle& c) {
  const CycleSides sides = cycle_sides(g, c.darts);
  if (!sides.separating()) throw precondition_error("cycle is not separating");
  std::vector<bool> keep_in(g.edge_count(), false), keep_out(g.edge_count(), false);
  for (int d : c.darts) keep_in[PlaneGraph::edge_of(d)] = keep_out[PlaneGraph::edge_of(d)] = true;
  for (int e : sides.inside_edges) keep_in[e] = true;
  for (int e : sides.outside_edges) keep_out[e] = true;
  return {edge_subgraph(g, keep_in), edge_subgraph(g, keep_out)};
}

}  // namespace cyclic
