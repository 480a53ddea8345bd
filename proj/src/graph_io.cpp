#include "cyclic/graph_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

std::string strip(std::string line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

}  // namespace

PlaneGraph read_graph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, raw)) {
      ++line_no;
      out = strip(raw);
      if (!out.empty()) return true;
    }
    return false;
  };

  std::string line;
  if (!next_line(line)) throw parse_error(line_no, "empty input");
  if (line != "planegraph v1") throw parse_error(line_no, "expected header 'planegraph v1'");

  if (!next_line(line)) throw parse_error(line_no, "missing '<vertex_count> <edge_count>' line");
  int n = 0, m = 0;
  {
    std::istringstream counts(line);
    std::string extra;
    if (!(counts >> n >> m) || (counts >> extra) || n < 1 || m < 0)
      throw parse_error(line_no, "malformed count line '" + line + "'");
  }

  static const std::regex vertex_re(R"(^(\d+)\s*:(.*)$)");
  static const std::regex pair_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");

  std::vector<std::vector<Incidence>> rotation(n);
  std::vector<int> uses(m, 0);
  std::vector<int> first_line(m, 0);
  for (int v = 0; v < n; ++v) {
    if (!next_line(line)) throw parse_error(line_no, "missing line for vertex " + std::to_string(v));
    std::smatch match;
    if (!std::regex_match(line, match, vertex_re)) throw parse_error(line_no, "malformed vertex line");
    if (std::stoi(match[1]) != v)
      throw parse_error(line_no, "expected vertex " + std::to_string(v) + ", found " + match[1].str());
    const std::string body = match[2];
    std::string leftover = std::regex_replace(body, pair_re, "");
    if (leftover.find_first_not_of(" \t") != std::string::npos)
      throw parse_error(line_no, "unexpected text in rotation of vertex " + std::to_string(v));
    for (auto it = std::sregex_iterator(body.begin(), body.end(), pair_re);
         it != std::sregex_iterator(); ++it) {
      const int w = std::stoi((*it)[1]);
      const int e = std::stoi((*it)[2]);
      if (w >= n) throw parse_error(line_no, "neighbor " + std::to_string(w) + " out of range");
      if (e >= m) throw parse_error(line_no, "edge " + std::to_string(e) + " out of range");
      if (++uses[e] > 2) throw parse_error(line_no, "edge " + std::to_string(e) + " appears more than twice");
      if (uses[e] == 1) first_line[e] = line_no;
      rotation[v].push_back({w, e});
    }
  }
  if (next_line(line)) throw parse_error(line_no, "trailing content after vertex lines");
  for (int e = 0; e < m; ++e)
    if (uses[e] != 2)
      throw parse_error(uses[e] ? first_line[e] : line_no,
                        "edge " + std::to_string(e) + " listed " + std::to_string(uses[e]) +
                            " time(s), expected exactly 2");
  try {
    return PlaneGraph(n, std::move(rotation));
  } catch (const std::invalid_argument& ex) {
    throw parse_error(line_no, ex.what());
  }
}

PlaneGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_graph(in);
}

PlaneGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const PlaneGraph& g) {
  out << "planegraph v1\n" << g.vertex_count() << ' ' << g.edge_count() << '\n';
  const auto rot = g.incidences();
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << v << ':';
    for (const auto& inc : rot[v]) out << " (" << inc.neighbor << ',' << inc.edge << ')';
    out << '\n';
  }
}

std::string format_graph(const PlaneGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace cyclic
