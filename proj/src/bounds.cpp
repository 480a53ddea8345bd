#include "cyclic/bounds.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cyclic/edgecolor.hpp"
#include "cyclic/embedding.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/reduction.hpp"

namespace cyclic {

int bound_ccc(const PlaneGraph& g) { return 3 * delta_star(g) / 2; }

int bound_bbgh(const PlaneGraph& g) {
  const int d = delta_star(g);
  if (d < 5) throw hypothesis_error("needs max face degree >= 5, got " + std::to_string(d));
  return std::max(d + 3 * k_star(g) + 2, d + 14);
}

int plummer_toft_r(const PlaneGraph& r_graph) {
  if (!is_three_connected_simple(r_graph)) throw hypothesis_error("graph is not simple 3-connected");
  const int d = delta_star(r_graph);
  const int delta = min_vertex_degree(r_graph);
  if (d >= 60 || d == 3 || faces_ge4_pairwise_disjoint(r_graph)) return 1;
  if (d >= 16 || d == 4 || (delta == 4 && d >= 6) || delta == 5 || is_locally_connected(r_graph)) return 2;
  if (d >= 5 && d <= 6) return 3;
  if (d == 7) return 4;
  return 5;
}

bool is_subdivision_of_3_connected(const PlaneGraph& g) {
  if (!is_two_connected(g) || is_cycle(g)) return false;
  return is_three_connected_simple(reduce(g).reduced);
}

namespace {

ReductionResult require_subdivision(const PlaneGraph& g) {
  if (!is_two_connected(g)) throw hypothesis_error("graph is not 2-connected");
  if (is_cycle(g)) throw hypothesis_error("graph is a cycle");
  ReductionResult r = reduce(g);
  if (!is_three_connected_simple(r.reduced)) throw hypothesis_error("reduction is not simple 3-connected");
  return r;
}

// Shared ingredients of the subdivision theorems.
struct SubdivisionData {
  ReductionResult reduction;
  int surplus = 0;
  int t = 0;
  ReducedChromatic chi_r;
  int chi_index = 0;
  bool chi_index_exact = false;
};

SubdivisionData subdivision_data(const PlaneGraph& g, const BoundOptions& opts) {
  SubdivisionData d{require_subdivision(g), 0, 0, {}, 0, false};
  d.surplus = face_surplus(g, d.reduction);
  d.t = t_of(g);
  d.chi_r = reduced_chromatic(d.reduction.reduced, opts.guard);
  const SubdivisionMultigraph s = subdivision_multigraph(g, d.reduction);
  if (static_cast<int>(s.graph.edges.size()) <= opts.edge_guard) {
    d.chi_index = chromatic_index(s.graph, opts.edge_guard);
    d.chi_index_exact = true;
  } else {
    d.chi_index = default_budget(s.graph);
  }
  return d;
}

std::string chi_r_note(const SubdivisionData& d) {
  return d.chi_r.exact ? "chi_c(R)=" + std::to_string(d.chi_r.value) + " exact"
                       : "chi_c(R)<=" + std::to_string(d.chi_r.value) + " via D*(R)+r";
}

BoundValue thm6_from(const SubdivisionData& d) {
  const std::string index_note = d.chi_index_exact
                                     ? "chi'(S)=" + std::to_string(d.chi_index) + " exact"
                                     : "chi'(S)<=" + std::to_string(d.chi_index) + " via default budget";
  return {d.chi_index + d.chi_r.value, index_note + "; " + chi_r_note(d)};
}

BoundValue thm7_from(const SubdivisionData& d) {
  return {3 * d.surplus / 2 + d.chi_r.value, "Delta(S)=" + std::to_string(d.surplus) + "; " + chi_r_note(d)};
}

BoundValue thm8_from(const SubdivisionData& d) {
  return {d.surplus + d.t + d.chi_r.value,
          "Delta(S)=" + std::to_string(d.surplus) + "; t=" + std::to_string(d.t) + "; " + chi_r_note(d)};
}

}  // namespace

ReducedChromatic reduced_chromatic(const PlaneGraph& r_graph, int guard) {
  if (r_graph.vertex_count() <= guard) return {chi_c_exact(r_graph, guard).chi, true};
  return {delta_star(r_graph) + plummer_toft_r(r_graph), false};
}

int bound_thm4(const PlaneGraph& g) {
  require_subdivision(g);
  const int d = delta_star(g);
  if (d < 5) throw hypothesis_error("needs max face degree >= 5, got " + std::to_string(d));
  return std::max(d + 3 * t_of(g) + 8, d + 14);
}

BoundValue bound_thm6(const PlaneGraph& g, const BoundOptions& opts) { return thm6_from(subdivision_data(g, opts)); }
BoundValue bound_thm7(const PlaneGraph& g, const BoundOptions& opts) { return thm7_from(subdivision_data(g, opts)); }
BoundValue bound_thm8(const PlaneGraph& g, const BoundOptions& opts) { return thm8_from(subdivision_data(g, opts)); }

int bound_cor9(const PlaneGraph& g) {
  const ReductionResult r = require_subdivision(g);
  if (regular_subdivision_order(r) < 0) throw hypothesis_error("subdivision is not regular");
  return delta_star(g) + t_of(g) + plummer_toft_r(r.reduced);
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::conjecture: return "conjecture";
    case BoundKind::theorem: return "theorem";
    case BoundKind::literature: return "literature";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "HOLDS";
    case Verdict::holds_by_bound: return "HOLDS-by-bound";
    case Verdict::violated: return "VIOLATED";
    case Verdict::unknown: return "UNKNOWN";
    case Verdict::not_applicable: return "N/A";
  }
  return "?";
}

std::vector<BoundEntry> evaluate_bounds(const PlaneGraph& g, const BoundOptions& opts) {
  std::vector<BoundEntry> entries;
  const auto add = [&](std::string name, BoundKind kind, const std::function<BoundValue()>& fn) {
    BoundEntry e{std::move(name), kind, std::nullopt, {}};
    try {
      const BoundValue v = fn();
      e.value = v.value;
      e.note = v.note;
    } catch (const precondition_error& ex) {
      e.note = ex.what();
    }
    entries.push_back(std::move(e));
  };
  const auto plain = [](int v) { return BoundValue{v, {}}; };
  const int d = delta_star(g);
  const bool subdivision = is_subdivision_of_3_connected(g);
  const auto need_subdivision = [&] {
    if (!subdivision) throw hypothesis_error("not a subdivision of a simple 3-connected graph");
  };

  add("ccc", BoundKind::conjecture, [&] { return plain(bound_ccc(g)); });
  add("ccc-subdiv", BoundKind::conjecture, [&] {
    need_subdivision();
    return plain(bound_ccc(g));
  });
  add("conjecture-5", BoundKind::conjecture, [&] {
    need_subdivision();
    return plain(d + t_of(g) + 2);
  });
  add("bbgh", BoundKind::theorem, [&] { return plain(bound_bbgh(g)); });
  add("thm4", BoundKind::theorem, [&] { return plain(bound_thm4(g)); });

  std::optional<SubdivisionData> data;
  if (subdivision) data = subdivision_data(g, opts);
  const auto with_data = [&](BoundValue (*fn)(const SubdivisionData&)) {
    return [&, fn] {
      if (!data) throw hypothesis_error("not a subdivision of a simple 3-connected graph");
      return fn(*data);
    };
  };
  add("thm6", BoundKind::theorem, with_data(thm6_from));
  add("thm7", BoundKind::theorem, with_data(thm7_from));
  add("thm8", BoundKind::theorem, with_data(thm8_from));
  add("cor9", BoundKind::theorem, [&] { return plain(bound_cor9(g)); });

  add("ore-plummer", BoundKind::literature, [&] { return plain(2 * d); });
  add("borodin-sanders-zhao", BoundKind::literature, [&] { return plain(9 * d / 5); });
  add("sanders-zhao", BoundKind::literature, [&] { return plain((5 * d + 2) / 3); });
  return entries;
}

std::vector<ConjectureFlag> check_conjectures(const PlaneGraph&, std::optional<int> exact,
                                              const std::vector<BoundEntry>& entries) {
  const auto find = [&](const std::string& name) -> const BoundEntry* {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  };
  std::vector<ConjectureFlag> flags;
  const auto decide = [&](const std::string& flag_name, const std::string& entry_name, bool certifiable) {
    ConjectureFlag f;
    f.name = flag_name;
    const BoundEntry* e = find(entry_name);
    if (!e || !e->applicable()) {
      f.verdict = Verdict::not_applicable;
      f.note = e ? e->note : "not evaluated";
      flags.push_back(f);
      return;
    }
    f.bound = e->value;
    if (certifiable) {
      const BoundEntry* best = nullptr;
      for (const auto& other : entries) {
        if (other.kind == BoundKind::conjecture || !other.applicable() || other.name == entry_name) continue;
        if (*other.value <= *e->value && (!best || *other.value < *best->value)) best = &other;
      }
      if (best) f.certified_by = best->name;
    }
    if (exact)
      f.verdict = *exact <= *e->value ? Verdict::holds : Verdict::violated;
    else
      f.verdict = f.certified_by.empty() ? Verdict::unknown : Verdict::holds_by_bound;
    flags.push_back(f);
  };
  decide("CCC", "ccc", true);
  decide("CCC-subdiv", "ccc-subdiv", true);
  decide("Conjecture-5", "conjecture-5", true);
  decide("BBGH", "bbgh", false);
  return flags;
}

bool BoundReport::violation() const {
  for (const auto& f : flags)
    if (f.verdict == Verdict::violated) return true;
  if (!exact) return false;
  for (const auto& e : entries)
    if (e.applicable() && *e.value < *exact) return true;
  return false;
}

const BoundEntry* BoundReport::entry(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

const ConjectureFlag* BoundReport::flag(const std::string& name) const {
  for (const auto& f : flags)
    if (f.name == name) return &f;
  return nullptr;
}

std::optional<int> BoundReport::min_applicable(bool proven_only) const {
  std::optional<int> best;
  for (const auto& e : entries) {
    if (!e.applicable() || (proven_only && e.kind == BoundKind::conjecture)) continue;
    if (!best || *e.value < *best) best = e.value;
  }
  return best;
}

BoundReport make_bound_report(const std::string& graph_id, const PlaneGraph& g, const BoundOptions& opts) {
  BoundReport report;
  report.graph_id = graph_id;
  report.vertex_count = g.vertex_count();
  report.delta_star = delta_star(g);
  try {
    report.t = t_of(g);
  } catch (const precondition_error&) {
  }
  try {
    report.k_star = k_star(g);
  } catch (const precondition_error&) {
  }
  if (g.vertex_count() <= opts.guard) report.exact = chi_c_exact(g, opts.guard).chi;
  report.entries = evaluate_bounds(g, opts);
  report.flags = check_conjectures(g, report.exact, report.entries);
  if (report.exact && report.k_star) report.bbc_raw = *report.exact <= report.delta_star + *report.k_star;
  return report;
}

std::string csv_header() { return "graph_id,delta_star,t,k_star,exact,ccc,bbgh,thm4,thm6,thm7,thm8,cor9,flags"; }

std::string csv_row(const BoundReport& report) {
  const auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("NA"); };
  const auto value = [&](const char* name) {
    const BoundEntry* e = report.entry(name);
    return e ? opt(e->value) : std::string("NA");
  };
  std::ostringstream out;
  out << report.graph_id << ',' << report.delta_star << ',' << opt(report.t) << ',' << opt(report.k_star) << ','
      << opt(report.exact);
  for (const char* name : {"ccc", "bbgh", "thm4", "thm6", "thm7", "thm8", "cor9"}) out << ',' << value(name);
  out << ',';
  for (std::size_t i = 0; i < report.flags.size(); ++i)
    out << (i ? ";" : "") << report.flags[i].name << '=' << to_string(report.flags[i].verdict);
  return out.str();
}

}  // namespace cyclic
