#include "cyclic/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cyclic/embedding.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/reduction.hpp"
#include "cyclic/separation.hpp"
#include "cyclic/vertex_coloring.hpp"

namespace cyclic {

std::string to_string(ColoringMethod method) {
  switch (method) {
    case ColoringMethod::exact: return "exact";
    case ColoringMethod::constructive: return "constructive";
    case ColoringMethod::decomposed: return "decomposed";
    case ColoringMethod::direct: return "direct";
  }
  return "?";
}

int count_colors(std::span<const int> assignment) {
  std::vector<int> distinct;
  for (int c : assignment)
    if (c >= 0) distinct.push_back(c);
  std::sort(distinct.begin(), distinct.end());
  return static_cast<int>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
}

bool verify_cyclic(const PlaneGraph& g, const CyclicColoring& c) {
  if (static_cast<int>(c.assignment.size()) != g.vertex_count())
    throw precondition_error("coloring size differs from vertex count");
  for (int x : c.assignment)
    if (x < 0) throw precondition_error("coloring is partial");
  std::vector<int> colors;
  for (const auto& f : g.faces()) {
    colors.clear();
    for (int v : f.vertices) colors.push_back(c.assignment[v]);
    std::sort(colors.begin(), colors.end());
    if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) return false;
  }
  return true;
}

ExactResult chi_c_exact(const PlaneGraph& g, int guard) {
  if (g.vertex_count() > guard)
    throw guard_exceeded("graph has " + std::to_string(g.vertex_count()) +
                         " vertices, exact oracle guard is " + std::to_string(guard));
  const auto result = exact_vertex_coloring(cyclic_adjacency(g), delta_star(g));
  ExactResult out;
  out.chi = result.colors;
  out.coloring = {result.color, result.colors, ColoringMethod::exact};
  return out;
}

ConstructiveResult color_constructive_detailed(const PlaneGraph& g, const ColoringOptions& opts) {
  const ReductionResult r = reduce(g);
  if (!is_three_connected_simple(r.reduced))
    throw precondition_error("constructive coloring needs a simple 3-connected reduction");

  ConstructiveResult out;
  std::vector<int> phi;
  if (r.reduced.vertex_count() <= opts.guard) {
    const auto exact = chi_c_exact(r.reduced, opts.guard);
    phi = exact.coloring.assignment;
    out.reduced_exact = true;
  } else {
    phi = greedy_coloring(cyclic_adjacency(r.reduced));
  }
  out.reduced_colors = count_colors(phi);

  const SubdivisionMultigraph s = subdivision_multigraph(g, r);
  EdgeColoring psi;
  if (static_cast<int>(s.graph.edges.size()) <= opts.edge_guard) {
    psi = minimum_edge_coloring(s.graph, opts.edge_guard);
    out.link_exact = true;
  } else {
    psi = edge_color(s.graph);
  }
  out.link_colors = psi.colors_used;

  auto& c = out.coloring;
  c.method = ColoringMethod::constructive;
  c.assignment.assign(g.vertex_count(), -1);
  for (int i = 0; i < r.reduced.vertex_count(); ++i) c.assignment[r.kept_vertices[i]] = phi[i];
  for (std::size_t i = 0; i < s.link_vertex.size(); ++i)
    c.assignment[s.link_vertex[i]] = out.reduced_colors + psi.color[i];
  c.colors_used = count_colors(c.assignment);
  if (!verify_cyclic(g, c)) throw std::logic_error("constructive coloring failed verification");
  return out;
}

CyclicColoring color_constructive(const PlaneGraph& g, const ColoringOptions& opts) {
  return color_constructive_detailed(g, opts).coloring;
}

CyclicColoring merge_colorings(const CyclicColoring& c1, const CyclicColoring& c2,
                               std::span<const int> shared) {
  const auto& a = c1.assignment;
  const auto& b = c2.assignment;
  if (a.size() != b.size()) throw precondition_error("colorings cover different vertex ranges");

  std::map<int, int> sigma;
  std::vector<char> is_shared(a.size(), 0);
  std::vector<int> fixed;
  for (int v : shared) {
    if (a[v] < 0 || b[v] < 0) throw precondition_error("shared vertex missing from a coloring");
    is_shared[v] = 1;
    if (std::find(fixed.begin(), fixed.end(), a[v]) != fixed.end())
      throw precondition_error("first coloring is not injective on the shared vertices");
    if (!sigma.emplace(b[v], a[v]).second)
      throw precondition_error("second coloring is not injective on the shared vertices");
    fixed.push_back(a[v]);
  }
  std::sort(fixed.begin(), fixed.end());

  std::vector<int> rest;
  for (int x : b)
    if (x >= 0 && !sigma.count(x)) rest.push_back(x);
  std::sort(rest.begin(), rest.end());
  rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
  int candidate = 0;
  for (int x : rest) {
    while (std::binary_search(fixed.begin(), fixed.end(), candidate)) ++candidate;
    sigma[x] = candidate++;
  }

  CyclicColoring out;
  out.method = ColoringMethod::decomposed;
  out.assignment.assign(a.size(), -1);
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] >= 0 && b[v] >= 0 && !is_shared[v])
      throw precondition_error("vertex " + std::to_string(v) + " colored by both pieces but not shared");
    out.assignment[v] = a[v] >= 0 ? a[v] : b[v] >= 0 ? sigma.at(b[v]) : -1;
  }
  out.colors_used = count_colors(out.assignment);
  return out;
}

namespace {

CyclicColoring all_distinct(const PlaneGraph& g) {
  CyclicColoring c;
  c.assignment.resize(g.vertex_count());
  std::iota(c.assignment.begin(), c.assignment.end(), 0);
  c.colors_used = g.vertex_count();
  c.method = ColoringMethod::direct;
  return c;
}

CyclicColoring decompose(const PlaneGraph& g, const ColoringOptions& opts, DecomposedResult& stats) {
  if (!is_two_connected(g)) throw precondition_error("decomposition needs a 2-connected graph");
  if (is_cycle(g) || g.face_count() == 3) {
    ++stats.pieces;
    return all_distinct(g);
  }
  const ReductionResult r = reduce(g);
  if (is_three_connected_simple(r.reduced)) {
    ++stats.pieces;
    const bool fits = g.vertex_count() <= opts.guard;
    if (!fits) stats.pieces_within_guard = false;
    CyclicColoring c = color_constructive(g, opts);
    if (c.colors_used > stats.budget && fits) c = chi_c_exact(g, opts.guard).coloring;
    return c;
  }

  const SeparatingCycle cycle = find_separating_cycle(g);
  const SplitResult split = split_along_cycle(g, cycle);
  ++stats.splits;

  const auto lift = [&](const Subgraph& piece) {
    const CyclicColoring local = decompose(piece.graph, opts, stats);
    CyclicColoring lifted;
    lifted.assignment.assign(g.vertex_count(), -1);
    for (std::size_t i = 0; i < piece.vertex_origin.size(); ++i)
      lifted.assignment[piece.vertex_origin[i]] = local.assignment[i];
    lifted.colors_used = local.colors_used;
    return lifted;
  };
  CyclicColoring merged = merge_colorings(lift(split.inside), lift(split.outside), cycle.vertices);
  if (!verify_cyclic(g, merged)) throw std::logic_error("merged coloring failed verification");
  return merged;
}

}  // namespace

DecomposedResult color_decomposed(const PlaneGraph& g, int palette_budget, const ColoringOptions& opts) {
  DecomposedResult out;
  out.budget = palette_budget;
  out.coloring = decompose(g, opts, out);
  out.budget_exceeded = out.coloring.colors_used > palette_budget;
  if (!verify_cyclic(g, out.coloring)) throw std::logic_error("decomposed coloring failed verification");
  return out;
}

}  // namespace cyclic
