#include "cyclic/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

std::vector<std::vector<int>> simple_neighbors(const PlaneGraph& g) {
  std::vector<std::vector<int>> nb(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int d : g.rotation(v))
      if (g.head(d) != v) nb[v].push_back(g.head(d));
    std::sort(nb[v].begin(), nb[v].end());
    nb[v].erase(std::unique(nb[v].begin(), nb[v].end()), nb[v].end());
  }
  return nb;
}

// Number of components among vertices not flagged in `removed`.
int count_components(const std::vector<std::vector<int>>& nb, const std::vector<char>& removed) {
  const int n = static_cast<int>(nb.size());
  std::vector<char> seen(n, 0);
  int comps = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : nb[x])
        if (!removed[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
  }
  return comps;
}

std::vector<std::vector<int>> neighbor_lists(const CyclicAdjacencyGraph& h) {
  std::vector<std::vector<int>> nb(h.n);
  for (int u = 0; u < h.n; ++u)
    for (int v = 0; v < h.n; ++v)
      if (h.adj[u][v]) nb[u].push_back(v);
  return nb;
}

bool biconnected(const std::vector<std::vector<int>>& nb) {
  const int n = static_cast<int>(nb.size());
  if (n < 3) return false;
  std::vector<char> removed(n, 0);
  if (count_components(nb, removed) != 1) return false;
  for (int v = 0; v < n; ++v) {
    removed[v] = 1;
    const bool ok = count_components(nb, removed) == 1;
    removed[v] = 0;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate(const PlaneGraph& g) {
  ValidationReport report;
  report.face_count = g.face_count();
  for (int d = 0; d < g.dart_count(); ++d) {
    const int t = PlaneGraph::twin(d);
    if (t == d || PlaneGraph::twin(t) != d)
      report.violations.push_back("twin involution fails at dart " + std::to_string(d));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    if (a == b)
      report.violations.push_back("edge " + std::to_string(e) + " is a loop at vertex " +
                                  std::to_string(a));
  }
  if (!is_connected(g)) report.violations.push_back("graph is not connected");
  const int euler = g.vertex_count() - g.edge_count() + g.face_count();
  if (euler != 2)
    report.violations.push_back("Euler characteristic is " + std::to_string(euler) +
                                " (V=" + std::to_string(g.vertex_count()) +
                                ", E=" + std::to_string(g.edge_count()) +
                                ", F=" + std::to_string(g.face_count()) +
                                "), rotation system is not a sphere embedding");
  return report;
}

const std::vector<Face>& trace_faces(const PlaneGraph& g) {
  const auto report = validate(g);
  if (!report.valid()) throw precondition_error("invalid embedding: " + report.violations.front());
  return g.faces();
}

int delta_star(const PlaneGraph& g) {
  int best = 0;
  for (const auto& f : g.faces()) best = std::max(best, f.degree());
  return best;
}

int max_vertex_degree(const PlaneGraph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_vertex_degree(const PlaneGraph& g) {
  int best = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int k_star(const PlaneGraph& g) {
  const auto& faces = g.faces();
  if (faces.size() < 2) throw precondition_error("k* needs at least two faces");
  int best = 0;
  std::vector<int> common;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      common.clear();
      std::set_intersection(faces[i].vertices.begin(), faces[i].vertices.end(),
                            faces[j].vertices.begin(), faces[j].vertices.end(),
                            std::back_inserter(common));
      best = std::max(best, static_cast<int>(common.size()));
    }
  return best;
}

bool is_cycle(const PlaneGraph& g) {
  if (g.vertex_count() < 2 || !is_connected(g)) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

int t_of(const PlaneGraph& g) {
  if (is_cycle(g)) throw precondition_error("t(G) is undefined for a cycle");
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    if (g.degree(a) == 2 && g.degree(b) == 2) parent[find(a)] = find(b);
  }
  std::vector<int> size(n, 0);
  int best = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 2) best = std::max(best, ++size[find(v)]);
  return best;
}

bool is_connected(const PlaneGraph& g) {
  std::vector<char> removed(g.vertex_count(), 0);
  return count_components(simple_neighbors(g), removed) == 1;
}

bool is_simple(const PlaneGraph& g) {
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    if (a == b || !seen.insert(std::minmax(a, b)).second) return false;
  }
  return true;
}

bool is_two_connected(const PlaneGraph& g) {
  if (g.vertex_count() == 2) return is_connected(g) && g.edge_count() >= 2;
  return biconnected(simple_neighbors(g));
}

bool is_three_connected_simple(const PlaneGraph& g) {
  const int n = g.vertex_count();
  if (n < 4 || !is_simple(g)) return false;
  const auto nb = simple_neighbors(g);
  if (!biconnected(nb)) return false;
  std::vector<char> removed(n, 0);
  for (int u = 0; u < n; ++u) {
    removed[u] = 1;
    for (int v = u + 1; v < n; ++v) {
      removed[v] = 1;
      const bool ok = count_components(nb, removed) == 1;
      removed[v] = 0;
      if (!ok) return false;
    }
    removed[u] = 0;
  }
  return true;
}

bool is_locally_connected(const PlaneGraph& g) {
  const auto nb = simple_neighbors(g);
  const int n = g.vertex_count();
  std::vector<char> outside(n, 1);
  for (int v = 0; v < n; ++v) {
    for (int w : nb[v]) outside[w] = 0;
    const bool ok = nb[v].empty() || count_components(nb, outside) == 1;
    for (int w : nb[v]) outside[w] = 1;
    if (!ok) return false;
  }
  return true;
}

bool faces_ge4_pairwise_disjoint(const PlaneGraph& g) {
  std::vector<int> owner(g.vertex_count(), -1);
  const auto& faces = g.faces();
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
    if (faces[i].degree() < 4) continue;
    for (int v : faces[i].vertices) {
      if (owner[v] != -1) return false;
      owner[v] = i;
    }
  }
  return true;
}

std::vector<int> vertices_of_degree(const PlaneGraph& g, int degree) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == degree) out.push_back(v);
  return out;
}

int CyclicAdjacencyGraph::degree(int v) const {
  return static_cast<int>(std::count(adj[v].begin(), adj[v].end(), 1));
}

bool CyclicAdjacencyGraph::is_complete() const {
  for (int v = 0; v < n; ++v)
    if (degree(v) != n - 1) return false;
  return true;
}

CyclicAdjacencyGraph cyclic_adjacency(const PlaneGraph& g) {
  CyclicAdjacencyGraph h;
  h.n = g.vertex_count();
  h.adj.assign(h.n, std::vector<char>(h.n, 0));
  for (const auto& f : g.faces())
    for (int u : f.vertices)
      for (int v : f.vertices)
        if (u != v) h.adj[u][v] = 1;
  return h;
}

CyclicAdjacencyGraph adjacency_from_edges(int n, std::span<const std::pair<int, int>> edges) {
  CyclicAdjacencyGraph h;
  h.n = n;
  h.adj.assign(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : edges)
    if (a != b) h.adj[a][b] = h.adj[b][a] = 1;
  return h;
}

bool connected_without(const CyclicAdjacencyGraph& h, std::span<const int> removed) {
  std::vector<char> mask(h.n, 0);
  for (int v : removed) mask[v] = 1;
  return count_components(neighbor_lists(h), mask) == 1;
}

bool is_biconnected(const CyclicAdjacencyGraph& h) { return biconnected(neighbor_lists(h)); }

Subgraph edge_subgraph(const PlaneGraph& g, const std::vector<bool>& keep) {
  std::vector<int> vertex_id(g.vertex_count(), -1);
  std::vector<int> edge_id(g.edge_count(), -1);
  std::vector<int> vertex_origin, edge_origin;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!keep[e]) continue;
    edge_id[e] = static_cast<int>(edge_origin.size());
    edge_origin.push_back(e);
    const auto [a, b] = g.endpoints(e);
    vertex_id[a] = vertex_id[b] = 0;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (vertex_id[v] == 0) {
      vertex_id[v] = static_cast<int>(vertex_origin.size());
      vertex_origin.push_back(v);
    }
  if (vertex_origin.empty()) throw precondition_error("edge subgraph is empty");
  std::vector<std::vector<Incidence>> rotation(vertex_origin.size());
  for (std::size_t i = 0; i < vertex_origin.size(); ++i)
    for (int d : g.rotation(vertex_origin[i])) {
      const int e = PlaneGraph::edge_of(d);
      if (keep[e]) rotation[i].push_back({vertex_id[g.head(d)], edge_id[e]});
    }
  const int n = static_cast<int>(rotation.size());
  PlaneGraph sub(n, std::move(rotation));
  return {std::move(sub), std::move(vertex_origin), std::move(edge_origin)};
}

PlaneGraph remove_edge(const PlaneGraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw precondition_error("edge id out of range");
  auto rotation = g.incidences();
  for (auto& rot : rotation) {
    std::erase_if(rot, [e](const Incidence& inc) { return inc.edge == e; });
    for (auto& inc : rot)
      if (inc.edge > e) --inc.edge;
  }
  return PlaneGraph(g.vertex_count(), std::move(rotation));
}

std::optional<std::vector<int>> rotation_isomorphism(const PlaneGraph& a, const PlaneGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (a.dart_count() == 0) return std::vector<int>(a.vertex_count(), 0);
  for (int candidate = 0; candidate < b.dart_count(); ++candidate) {
    std::vector<int> map(a.dart_count(), -1);
    std::vector<int> inverse(b.dart_count(), -1);
    std::queue<int> todo;
    bool ok = true;
    auto bind = [&](int x, int y) {
      if (map[x] == -1 && inverse[y] == -1) {
        map[x] = y;
        inverse[y] = x;
        todo.push(x);
      } else if (map[x] != y) {
        ok = false;
      }
    };
    bind(0, candidate);
    while (ok && !todo.empty()) {
      const int x = todo.front();
      todo.pop();
      bind(PlaneGraph::twin(x), PlaneGraph::twin(map[x]));
      if (ok) bind(a.rot_next(x), b.rot_next(map[x]));
    }
    if (!ok || std::count(map.begin(), map.end(), -1) != 0) continue;
    std::vector<int> vmap(a.vertex_count(), -1);
    for (int x = 0; x < a.dart_count() && ok; ++x) {
      int& slot = vmap[a.origin(x)];
      if (slot == -1) slot = b.origin(map[x]);
      else if (slot != b.origin(map[x])) ok = false;
    }
    if (ok) return vmap;
  }
  return std::nullopt;
}

}  // namespace cyclic
