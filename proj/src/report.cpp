#include "cyclic/report.hpp"

#include "cyclic/edgecolor.hpp"
#include "cyclic/embedding.hpp"
#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::string connectivity_class(const PlaneGraph& g) {
  if (!is_connected(g)) return "disconnected";
  if (is_three_connected_simple(g)) return "simple-3-connected";
  if (is_two_connected(g)) return "2-connected";
  return "connected";
}

}  // namespace

Json faces_json(const PlaneGraph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  Json faces = Json::array();
  for (int i = 0; i < g.face_count(); ++i) {
    const Face& f = g.faces()[i];
    Json walk = Json::array();
    for (int d : f.walk) walk.push_back(g.origin(d));
    faces.push_back(Json{{"index", i}, {"degree", f.degree()}, {"vertices", f.vertices}, {"walk", walk}});
  }
  j["faces"] = faces;
  j["face_count"] = g.face_count();
  j["delta_star"] = delta_star(g);
  j["max_degree"] = max_vertex_degree(g);
  j["min_degree"] = min_vertex_degree(g);
  std::optional<int> ks, t;
  try {
    ks = k_star(g);
  } catch (const precondition_error&) {
  }
  try {
    t = t_of(g);
  } catch (const precondition_error&) {
  }
  j["k_star"] = optional_int(ks);
  j["t"] = optional_int(t);
  j["connectivity"] = connectivity_class(g);
  if (is_two_connected(g) && !is_cycle(g))
    j["reduction_class"] = to_string(classify(reduce(g)).tag);
  else
    j["reduction_class"] = nullptr;
  return j;
}

Json coloring_json(const PlaneGraph& g, const CyclicColoring& c) {
  Json j;
  j["method"] = to_string(c.method);
  j["vertices"] = g.vertex_count();
  j["colors_used"] = c.colors_used;
  j["delta_star"] = delta_star(g);
  j["ccc_bound"] = bound_ccc(g);
  j["verified"] = verify_cyclic(g, c);
  j["assignment"] = c.assignment;
  return j;
}

Json bound_report_json(const BoundReport& report) {
  Json j;
  j["graph_id"] = report.graph_id;
  j["vertices"] = report.vertex_count;
  j["delta_star"] = report.delta_star;
  j["t"] = optional_int(report.t);
  j["k_star"] = optional_int(report.k_star);
  j["exact"] = optional_int(report.exact);
  Json entries = Json::array();
  for (const auto& e : report.entries)
    entries.push_back(Json{{"name", e.name},
                           {"kind", to_string(e.kind)},
                           {"applicable", e.applicable()},
                           {"value", optional_int(e.value)},
                           {"note", e.note}});
  j["entries"] = entries;
  Json flags = Json::array();
  for (const auto& f : report.flags)
    flags.push_back(Json{{"name", f.name},
                         {"bound", optional_int(f.bound)},
                         {"verdict", to_string(f.verdict)},
                         {"certified_by", f.certified_by.empty() ? Json(nullptr) : Json(f.certified_by)},
                         {"note", f.note}});
  j["conjectures"] = flags;
  j["bbc_raw"] = report.bbc_raw ? Json(*report.bbc_raw) : Json(nullptr);
  j["violation"] = report.violation();
  return j;
}

Json reduction_json(const PlaneGraph& g, const ReductionResult& r) {
  Json j;
  j["reduced_vertices"] = r.reduced.vertex_count();
  j["reduced_edges"] = r.reduced.edge_count();
  j["kept_vertices"] = r.kept_vertices;
  Json paths = Json::array();
  for (int e = 0; e < r.reduced.edge_count(); ++e)
    paths.push_back(Json{{"edge", e}, {"path", r.edge_to_path[e]}, {"interior", r.interior_count(e)}});
  j["paths"] = paths;
  j["face_map"] = r.face_map;
  j["class"] = to_string(classify(r).tag);

  const SubdivisionMultigraph s = subdivision_multigraph(g, r);
  Json sj;
  sj["vertices"] = s.graph.vertex_count;
  Json edges = Json::array();
  for (std::size_t i = 0; i < s.graph.edges.size(); ++i)
    edges.push_back(Json{{"link_vertex", s.link_vertex[i]}, {"faces", {s.graph.edges[i].first, s.graph.edges[i].second}}});
  sj["edges"] = edges;
  sj["max_degree"] = s.max_degree;
  sj["multiplicity"] = s.multiplicity;
  sj["default_budget"] = default_budget(s.graph);
  const EdgeColoring ec = edge_color(s.graph);
  sj["edge_coloring"] = ec.color;
  sj["edge_colors_used"] = ec.colors_used;
  j["subdivision_multigraph"] = sj;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cyclic
