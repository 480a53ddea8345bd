#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cyclic/bounds.hpp"
#include "cyclic/coloring.hpp"
#include "cyclic/embedding.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/generators.hpp"
#include "cyclic/graph_io.hpp"
#include "cyclic/reduction.hpp"
#include "cyclic/report.hpp"

namespace fs = std::filesystem;
using namespace cyclic;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerification = 2, kViolation = 3 };

struct RunConfig {
  std::vector<std::string> inputs;
  int guard = kDefaultGuard;
  int budget = -1;
  std::string format;  // empty: json for files, csv for directories
  std::string out;
  std::string method = "exact";
  bool keep_shared = false;
};

// Reached for bad input files; maps to the usage/parse exit code.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PlaneGraph load(const fs::path& path) {
  if (!fs::exists(path) || fs::is_directory(path)) throw input_error("cannot open " + path.string());
  PlaneGraph g = [&] {
    try {
      return read_graph_file(path);
    } catch (const parse_error& e) {
      throw input_error(path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw input_error(path.string() + ": " + e.what());
    }
  }();
  const ValidationReport report = validate(g);
  if (!report.valid()) {
    std::string msg = path.string() + ": invalid embedding";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw input_error(msg);
  }
  return g;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw input_error("cannot write " + cfg.out);
  f << text;
}

std::string faces_text(const PlaneGraph& g, const Json& j) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << ", faces " << g.face_count() << "\n";
  for (const auto& f : j["faces"]) {
    out << "face " << f["index"].get<int>() << " degree " << f["degree"].get<int>() << ":";
    for (int v : f["vertices"]) out << ' ' << v;
    out << "\n";
  }
  const auto show = [](const Json& v) { return v.is_null() ? std::string("undefined") : v.dump(); };
  out << "delta_star " << j["delta_star"] << "\nmax_degree " << j["max_degree"] << "\nmin_degree "
      << j["min_degree"] << "\nk_star " << show(j["k_star"]) << "\nt " << show(j["t"]) << "\nconnectivity "
      << j["connectivity"].get<std::string>() << "\n";
  return out.str();
}

int cmd_faces(const RunConfig& cfg) {
  const PlaneGraph g = load(cfg.inputs.at(0));
  const Json j = faces_json(g);
  emit(cfg, cfg.format == "text" ? faces_text(g, j) : dump(j));
  return kOk;
}

std::string coloring_text(const Json& j) {
  std::ostringstream out;
  out << "method " << j["method"].get<std::string>() << ", colors_used " << j["colors_used"] << ", verified "
      << (j["verified"].get<bool>() ? "yes" : "no") << "\n";
  const auto& a = j["assignment"];
  for (std::size_t v = 0; v < a.size(); ++v) out << v << ": " << a[v] << "\n";
  return out.str();
}

int cmd_color(const RunConfig& cfg) {
  const PlaneGraph g = load(cfg.inputs.at(0));
  const ColoringOptions opts{cfg.guard, kDefaultEdgeGuard};
  const int ccc = bound_ccc(g);
  const int budget = cfg.budget >= 0 ? cfg.budget : ccc;
  CyclicColoring c;
  Json extra;
  if (cfg.method == "exact") {
    c = chi_c_exact(g, cfg.guard).coloring;
  } else if (cfg.method == "constructive") {
    const ConstructiveResult r = color_constructive_detailed(g, opts);
    c = r.coloring;
    extra["reduced_colors"] = r.reduced_colors;
    extra["reduced_exact"] = r.reduced_exact;
    extra["link_colors"] = r.link_colors;
    extra["link_exact"] = r.link_exact;
  } else {
    const DecomposedResult r = color_decomposed(g, budget, opts);
    c = r.coloring;
    extra["budget"] = r.budget;
    extra["budget_exceeded"] = r.budget_exceeded;
    extra["splits"] = r.splits;
    extra["pieces"] = r.pieces;
    extra["pieces_within_guard"] = r.pieces_within_guard;
  }
  Json j = coloring_json(g, c);
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  const bool ok = j["verified"].get<bool>();
  emit(cfg, cfg.format == "text" ? coloring_text(j) : dump(j));
  std::cerr << "colors_used " << c.colors_used << " vs floor(3*D*/2) = " << ccc
            << (c.colors_used > budget ? "  [over budget " + std::to_string(budget) + "]" : "")
            << (ok ? "" : "  [VERIFICATION FAILED]") << "\n";
  return ok ? kOk : kVerification;
}

std::string bounds_text(const BoundReport& r) {
  std::ostringstream out;
  const auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
  out << r.graph_id << ": D*=" << r.delta_star << " t=" << opt(r.t) << " k*=" << opt(r.k_star)
      << " exact=" << opt(r.exact) << "\n";
  for (const auto& e : r.entries)
    out << "  " << e.name << " = " << opt(e.value) << (e.note.empty() ? "" : "  (" + e.note + ")") << "\n";
  for (const auto& f : r.flags) out << "  " << f.name << ": " << to_string(f.verdict) << "\n";
  return out.str();
}

std::vector<fs::path> graph_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

// One report per file, computed on a small worker pool; order follows `files`.
std::vector<BoundReport> sweep(const std::vector<fs::path>& files, const BoundOptions& opts) {
  std::vector<BoundReport> reports(files.size());
  std::vector<std::string> errors(files.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) {
      try {
        reports[i] = make_bound_report(files[i].stem().string(), load(files[i]), opts);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  for (std::size_t i = 0; i < files.size(); ++i)
    if (!errors[i].empty()) throw input_error(errors[i]);
  return reports;
}

int cmd_bounds(const RunConfig& cfg) {
  const BoundOptions opts{cfg.guard, kDefaultEdgeGuard};
  const fs::path input = cfg.inputs.at(0);
  std::vector<BoundReport> reports;
  const bool directory = fs::is_directory(input);
  if (directory)
    reports = sweep(graph_files(input), opts);
  else
    reports.push_back(make_bound_report(input.stem().string(), load(input), opts));

  std::string text;
  if (cfg.format == "csv" || (directory && cfg.format.empty())) {
    text = csv_header() + "\n";
    for (const auto& r : reports) text += csv_row(r) + "\n";
  } else if (cfg.format == "text") {
    for (const auto& r : reports) text += bounds_text(r);
  } else if (directory) {
    Json all = Json::array();
    for (const auto& r : reports) all.push_back(bound_report_json(r));
    text = dump(all);
  } else {
    text = dump(bound_report_json(reports.front()));
  }
  emit(cfg, text);

  int violations = 0;
  for (const auto& r : reports)
    if (r.violation()) {
      ++violations;
      std::cerr << "VIOLATION: " << r.graph_id << "\n";
    }
  return violations ? kViolation : kOk;
}

std::string reduction_text(const Json& j) {
  std::ostringstream out;
  out << "R: vertices " << j["reduced_vertices"] << ", edges " << j["reduced_edges"] << ", class "
      << j["class"].get<std::string>() << "\n";
  for (const auto& p : j["paths"]) {
    out << "edge " << p["edge"] << ":";
    for (int v : p["path"]) out << ' ' << v;
    out << "\n";
  }
  const auto& s = j["subdivision_multigraph"];
  out << "S: vertices " << s["vertices"] << ", edges " << s["edges"].size() << ", max_degree " << s["max_degree"]
      << ", multiplicity " << s["multiplicity"] << ", edge colors " << s["edge_colors_used"] << " (budget "
      << s["default_budget"] << ")\n";
  return out.str();
}

int cmd_reduce(const RunConfig& cfg) {
  const PlaneGraph g = load(cfg.inputs.at(0));
  const Json j = reduction_json(g, reduce(g));
  emit(cfg, cfg.format == "text" ? reduction_text(j) : dump(j));
  return kOk;
}

int to_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw input_error("expected an integer, got '" + s + "'");
  return v;
}

PlaneGraph named_or_file(const std::string& arg) {
  const auto& names = platonic_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return platonic(arg);
  return load(arg);
}

int cmd_gen(const RunConfig& cfg) {
  const auto& a = cfg.inputs;
  const std::string family = a.at(0);
  const auto need = [&](std::size_t count) {
    if (a.size() != count + 1)
      throw input_error("gen " + family + " takes " + std::to_string(count) + " argument(s)");
  };

  if (family == "corpus") {
    if (cfg.out.empty()) throw input_error("gen corpus needs --out DIR");
    fs::create_directories(cfg.out);
    for (const auto& [id, g] : corpus()) {
      std::ofstream f(fs::path(cfg.out) / (id + ".graph"), std::ios::binary);
      write_graph(f, g);
    }
    return kOk;
  }

  PlaneGraph g = [&]() -> PlaneGraph {
    if (family == "theta") {
      need(3);
      return theta(to_int(a[1]), to_int(a[2]), to_int(a[3]));
    }
    if (family == "prism-subdiv") {
      need(1);
      return prism_subdiv(to_int(a[1]));
    }
    if (family == "thm6-prism") {
      need(3);
      return thm6_prism(to_int(a[1]), to_int(a[2]), to_int(a[3]));
    }
    if (family == "regular-subdiv") {
      need(2);
      return regular_subdivide(named_or_file(a[1]), to_int(a[2]));
    }
    if (family == "platonic") {
      need(1);
      return platonic(a[1]);
    }
    if (family == "cycle") {
      need(1);
      return cycle_graph(to_int(a[1]));
    }
    if (family == "double-prism") {
      need(0);
      return double_prism(cfg.keep_shared);
    }
    if (family == "subdivide-edges") {
      if (a.size() < 2) throw input_error("gen subdivide-edges takes <graph> [edge=count ...]");
      std::map<int, int> plan;
      for (std::size_t i = 2; i < a.size(); ++i) {
        const auto eq = a[i].find('=');
        if (eq == std::string::npos) throw input_error("expected edge=count, got '" + a[i] + "'");
        plan[to_int(a[i].substr(0, eq))] = to_int(a[i].substr(eq + 1));
      }
      return subdivide_edges(named_or_file(a[1]), plan);
    }
    if (family == "glued") {
      need(6);
      return glue_at_two_cut(named_or_file(a[1]), named_or_file(a[2]), to_int(a[3]), to_int(a[4]), to_int(a[5]),
                             to_int(a[6]));
    }
    throw input_error("unknown family '" + family + "'");
  }();
  emit(cfg, format_graph(g));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic coloring toolkit for plane graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--guard", cfg.guard, "Max vertices for the exact oracle")->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget, "Palette budget override")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.out, "Write output to PATH");
  };

  auto* faces = app.add_subcommand("faces", "Faces and degree parameters of a graph file");
  faces->add_option("path", cfg.inputs, "Graph file")->required()->expected(1);
  common(faces);

  auto* color = app.add_subcommand("color", "Cyclic coloring of a graph file");
  color->add_option("path", cfg.inputs, "Graph file")->required()->expected(1);
  color->add_option("--method", cfg.method, "exact, constructive or decompose")
      ->check(CLI::IsMember({"exact", "constructive", "decompose"}));
  common(color);

  auto* bounds = app.add_subcommand("bounds", "Bound and conjecture report for a file or a directory of .graph files");
  bounds->add_option("path", cfg.inputs, "Graph file or directory")->required()->expected(1);
  common(bounds);

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduction and subdivision multigraph of a graph file");
  reduce_cmd->add_option("path", cfg.inputs, "Graph file")->required()->expected(1);
  common(reduce_cmd);

  auto* gen = app.add_subcommand("gen", "Generate a graph: theta a b c | prism-subdiv t | thm6-prism a b c | "
                                        "regular-subdiv <name|file> k | platonic name | cycle n | double-prism | "
                                        "subdivide-edges <name|file> e=k... | glued g1 g2 u1 v1 u2 v2 | corpus");
  gen->add_option("args", cfg.inputs, "Family and parameters")->required()->expected(1, -1);
  gen->add_flag("--keep-shared-edges", cfg.keep_shared, "double-prism: keep both copies of the glued edge");
  common(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*faces) return cmd_faces(cfg);
    if (*color) return cmd_color(cfg);
    if (*bounds) return cmd_bounds(cfg);
    if (*reduce_cmd) return cmd_reduce(cfg);
    if (*gen) return cmd_gen(cfg);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const guard_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kVerification;
  }
  return kUsage;
}
