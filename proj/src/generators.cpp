#include "cyclic/generators.hpp"

#include <algorithm>
#include <array>

#include "cyclic/embedding.hpp"
#include "cyclic/errors.hpp"

namespace cyclic {

PlaneGraph theta(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw precondition_error("theta path lengths must be at least 1");
  const int n = a + b + c - 1;
  std::vector<std::vector<Incidence>> rot(n);
  int next_vertex = 2;
  int next_edge = 0;
  // First and last edge of each path, as (neighbor of hub, edge id).
  std::vector<Incidence> at_u, at_v;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      const int cur = (i == len - 1) ? 1 : next_vertex++;
      const int e = next_edge++;
      if (prev == 0) at_u.push_back({cur, e});
      else rot[prev].push_back({cur, e});
      if (cur == 1) at_v.push_back({prev, e});
      else rot[cur].push_back({prev, e});
      prev = cur;
    }
  }
  rot[0] = at_u;
  rot[1] = {at_v[0], at_v[2], at_v[1]};
  return PlaneGraph(n, std::move(rot));
}

PlaneGraph prism() {
  return PlaneGraph::from_oriented_faces(
      6, {{0, 1, 2}, {3, 5, 4}, {0, 3, 4, 1}, {1, 4, 5, 2}, {2, 5, 3, 0}});
}

namespace {

int edge_between(const PlaneGraph& g, int a, int b) {
  for (int d : g.rotation(a))
    if (g.head(d) == b) return PlaneGraph::edge_of(d);
  throw precondition_error("no edge between " + std::to_string(a) + " and " + std::to_string(b));
}

PlaneGraph icosahedron() {
  std::vector<std::vector<int>> faces;
  const auto up = [](int i) { return 1 + (i % 5); };
  const auto low = [](int i) { return 6 + (i % 5); };
  for (int i = 0; i < 5; ++i) {
    faces.push_back({0, up(i), up(i + 1)});
    faces.push_back({up(i), low(i), up(i + 1)});
    faces.push_back({up(i + 1), low(i), low(i + 1)});
    faces.push_back({11, low(i + 1), low(i)});
  }
  return PlaneGraph::from_oriented_faces(12, faces);
}

// Vertices are the faces of g; each face walk becomes a rotation.
PlaneGraph dual(const PlaneGraph& g) {
  std::vector<std::vector<Incidence>> rot(g.face_count());
  for (int f = 0; f < g.face_count(); ++f)
    for (int d : g.faces()[f].walk)
      rot[f].push_back({g.face_of(PlaneGraph::twin(d)), PlaneGraph::edge_of(d)});
  return PlaneGraph(g.face_count(), std::move(rot));
}

}  // namespace

PlaneGraph thm6_prism(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw precondition_error("subdivision counts must be non-negative");
  const PlaneGraph base = prism();
  return subdivide_edges(base, std::map<int, int>{{edge_between(base, 0, 3), a},
                                                  {edge_between(base, 1, 4), b},
                                                  {edge_between(base, 2, 5), c}});
}

PlaneGraph prism_subdiv(int t) {
  if (t < 0) throw precondition_error("t must be non-negative");
  return thm6_prism(t, t, t);
}

const std::vector<std::string>& platonic_names() {
  static const std::vector<std::string> names{"tetrahedron", "cube", "octahedron", "dodecahedron",
                                              "icosahedron"};
  return names;
}

PlaneGraph platonic(std::string_view name) {
  if (name == "tetrahedron")
    return PlaneGraph::from_oriented_faces(4, {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}});
  if (name == "cube")
    return PlaneGraph::from_oriented_faces(8, {{0, 1, 2, 3},
                                               {4, 7, 6, 5},
                                               {0, 4, 5, 1},
                                               {1, 5, 6, 2},
                                               {2, 6, 7, 3},
                                               {3, 7, 4, 0}});
  if (name == "octahedron")
    return PlaneGraph::from_oriented_faces(6, {{0, 1, 2},
                                               {0, 2, 3},
                                               {0, 3, 4},
                                               {0, 4, 1},
                                               {5, 2, 1},
                                               {5, 3, 2},
                                               {5, 4, 3},
                                               {5, 1, 4}});
  if (name == "icosahedron") return icosahedron();
  if (name == "dodecahedron") return dual(icosahedron());
  throw precondition_error("unknown platonic solid '" + std::string(name) + "'");
}

PlaneGraph cycle_graph(int n) {
  if (n < 2) throw precondition_error("a cycle needs at least two vertices");
  std::vector<std::vector<Incidence>> rot(n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    rot[i].push_back({j, i});
    rot[j].push_back({i, i});
  }
  return PlaneGraph(n, std::move(rot));
}

PlaneGraph subdivide_edges(const PlaneGraph& g, std::span<const int> plan) {
  if (static_cast<int>(plan.size()) != g.edge_count())
    throw precondition_error("subdivision plan must give a count for every edge");
  for (int k : plan)
    if (k < 0) throw precondition_error("subdivision counts must be non-negative");

  int n = g.vertex_count();
  int next_edge = 0;
  // Replacement incidence for each original dart at its origin.
  std::vector<Incidence> at_dart(g.dart_count());
  std::vector<std::vector<Incidence>> inner;  // rotations of new vertices
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    int prev = a;
    for (int i = 0; i < plan[e]; ++i) {
      const int x = n++;
      const int id = next_edge++;
      inner.push_back({});
      if (prev == a) at_dart[2 * e] = {x, id};
      else inner[prev - g.vertex_count()].push_back({x, id});
      inner.back().push_back({prev, id});
      prev = x;
    }
    const int id = next_edge++;
    if (prev == a) at_dart[2 * e] = {b, id};
    else inner[prev - g.vertex_count()].push_back({b, id});
    at_dart[2 * e + 1] = {prev, id};
  }
  std::vector<std::vector<Incidence>> rot(n);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int d : g.rotation(v)) rot[v].push_back(at_dart[d]);
  for (std::size_t i = 0; i < inner.size(); ++i) rot[g.vertex_count() + i] = inner[i];
  return PlaneGraph(n, std::move(rot));
}

PlaneGraph subdivide_edges(const PlaneGraph& g, const std::map<int, int>& plan) {
  std::vector<int> full(g.edge_count(), 0);
  for (const auto& [e, k] : plan) {
    if (e < 0 || e >= g.edge_count()) throw precondition_error("edge id out of range in plan");
    full[e] = k;
  }
  return subdivide_edges(g, full);
}

PlaneGraph regular_subdivide(const PlaneGraph& g, int k) {
  if (k < 0) throw precondition_error("k must be non-negative");
  return subdivide_edges(g, std::vector<int>(g.edge_count(), k));
}

namespace {

// Position in the rotation of `v` after which a face's angle at v lies:
// the face walk arrives at v by dart p and leaves by rot_next(twin(p)).
int angle_dart(const PlaneGraph& g, int face, int v) {
  const auto& walk = g.faces()[face].walk;
  for (std::size_t i = 0; i < walk.size(); ++i)
    if (g.origin(walk[i]) == v) return PlaneGraph::twin(walk[(i + walk.size() - 1) % walk.size()]);
  throw std::logic_error("vertex not on face");
}

int face_with_both(const PlaneGraph& g, int u, int v) {
  for (int f = 0; f < g.face_count(); ++f)
    if (g.faces()[f].contains(u) && g.faces()[f].contains(v)) return f;
  return -1;
}

}  // namespace

PlaneGraph glue_at_two_cut(const PlaneGraph& g1, const PlaneGraph& g2, int u1, int v1, int u2, int v2) {
  if (u1 == v1 || u2 == v2) throw precondition_error("glue vertices must be distinct");
  const int f1 = face_with_both(g1, u1, v1);
  const int f2 = face_with_both(g2, u2, v2);
  if (f1 < 0 || f2 < 0) throw precondition_error("glue vertices must share a face in each graph");

  const int n1 = g1.vertex_count();
  const int m1 = g1.edge_count();
  std::vector<int> vmap(g2.vertex_count(), -1);
  int next = n1;
  for (int x = 0; x < g2.vertex_count(); ++x) vmap[x] = x == u2 ? u1 : x == v2 ? v1 : next++;

  auto rot = g1.incidences();
  rot.resize(next);
  const auto inc2 = g2.incidences();
  const auto map_inc = [&](const Incidence& inc) { return Incidence{vmap[inc.neighbor], inc.edge + m1}; };
  for (int x = 0; x < g2.vertex_count(); ++x)
    if (x != u2 && x != v2)
      for (const auto& inc : inc2[x]) rot[vmap[x]].push_back(map_inc(inc));

  for (const auto& [a, b] : {std::pair{u1, u2}, std::pair{v1, v2}}) {
    // Splice g2's rotation at b, cut open at f2's angle, into f1's angle at a.
    const int after1 = angle_dart(g1, f1, a);
    const int after2 = angle_dart(g2, f2, b);
    std::vector<Incidence> piece;
    for (int d = g2.rot_next(after2);; d = g2.rot_next(d)) {
      piece.push_back(map_inc({g2.head(d), PlaneGraph::edge_of(d)}));
      if (d == after2) break;
    }
    auto& target = rot[a];
    const auto pos = std::find(g1.rotation(a).begin(), g1.rotation(a).end(), after1) - g1.rotation(a).begin();
    target.insert(target.begin() + pos + 1, piece.begin(), piece.end());
  }
  PlaneGraph glued(next, std::move(rot));
  const auto report = validate(glued);
  if (!report.valid()) throw precondition_error("gluing failed: " + report.violations.front());
  return glued;
}

PlaneGraph double_prism(bool keep_shared_edges) {
  const PlaneGraph p = prism();
  const PlaneGraph glued = glue_at_two_cut(p, p, 0, 3, 0, 3);
  if (keep_shared_edges) return glued;
  return remove_edge(glued, edge_between(p, 0, 3));
}

std::vector<NamedGraph> glued_corpus() {
  std::vector<NamedGraph> out;
  out.push_back({"double-prism", double_prism(false)});
  out.push_back({"double-prism-keep", double_prism(true)});
  out.push_back({"prism+theta", glue_at_two_cut(prism(), theta(1, 2, 3), 0, 4, 0, 1)});
  out.push_back({"prism+cube", glue_at_two_cut(prism(), platonic("cube"), 1, 4, 0, 1)});
  out.push_back({"cube+octahedron", glue_at_two_cut(platonic("cube"), platonic("octahedron"), 0, 2, 1, 2)});
  out.push_back({"prism+prism-subdiv1", glue_at_two_cut(prism(), prism_subdiv(1), 1, 2, 0, 1)});
  {
    const PlaneGraph twice = glue_at_two_cut(double_prism(false), platonic("tetrahedron"), 6, 7, 0, 1);
    out.push_back({"double-prism+tetrahedron", twice});
  }
  out.push_back({"cube+theta", glue_at_two_cut(platonic("cube"), theta(2, 2, 3), 0, 5, 0, 1)});
  return out;
}

std::vector<NamedGraph> corpus() {
  std::vector<NamedGraph> out;
  for (const auto& name : platonic_names()) out.push_back({name, platonic(name)});
  for (int t = 0; t <= 3; ++t) out.push_back({"prism-subdiv-" + std::to_string(t), prism_subdiv(t)});
  using Triple = std::array<int, 3>;
  for (const auto& [a, b, c] : std::vector<Triple>{{1, 1, 1}, {1, 2, 2}, {2, 2, 2}, {2, 3, 4}, {3, 3, 3}, {4, 4, 4}})
    out.push_back({"theta-" + std::to_string(a) + "-" + std::to_string(b) + "-" + std::to_string(c),
                   theta(a, b, c)});
  for (const auto& [a, b, c] : std::vector<Triple>{{2, 2, 2}, {3, 3, 3}, {1, 2, 3}, {1, 1, 3}})
    out.push_back({"thm6-prism-" + std::to_string(a) + "-" + std::to_string(b) + "-" + std::to_string(c),
                   thm6_prism(a, b, c)});
  for (const auto& [name, k] : std::vector<std::pair<std::string, int>>{
           {"tetrahedron", 1}, {"tetrahedron", 2}, {"tetrahedron", 3}, {"cube", 1}, {"cube", 2},
           {"octahedron", 1}, {"octahedron", 2}})
    out.push_back({"regular-" + name + "-" + std::to_string(k), regular_subdivide(platonic(name), k)});
  {
    const PlaneGraph cube = platonic("cube");
    out.push_back({"cube-one-edge-2", subdivide_edges(cube, std::map<int, int>{{0, 2}})});
    const PlaneGraph octa = platonic("octahedron");
    std::vector<int> plan(octa.edge_count());
    for (int e = 0; e < octa.edge_count(); ++e) plan[e] = e % 3;
    out.push_back({"octahedron-mixed", subdivide_edges(octa, plan)});
    const PlaneGraph dodeca = platonic("dodecahedron");
    out.push_back({"dodecahedron-one-edge-1", subdivide_edges(dodeca, std::map<int, int>{{0, 1}})});
    const PlaneGraph icosa = platonic("icosahedron");
    std::vector<int> iplan(icosa.edge_count(), 0);
    for (int e = 0; e < icosa.edge_count(); e += 4) iplan[e] = 1;
    out.push_back({"icosahedron-sparse", subdivide_edges(icosa, iplan)});
  }
  out.push_back({"cycle-6", cycle_graph(6)});
  for (auto& g : glued_corpus()) out.push_back(std::move(g));
  return out;
}

}  // namespace cyclic
