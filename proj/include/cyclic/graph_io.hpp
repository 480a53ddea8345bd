#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cyclic/plane_graph.hpp"

namespace cyclic {

// Text format:
//   planegraph v1
//   <vertex_count> <edge_count>
//   <v>: (<neighbor>,<edge>) (<neighbor>,<edge>) ...   one line per vertex, clockwise
// Blank lines and '#' comments are ignored. Errors throw parse_error.
PlaneGraph read_graph(std::istream& in);
PlaneGraph read_graph_file(const std::filesystem::path& path);
PlaneGraph parse_graph(const std::string& text);

void write_graph(std::ostream& out, const PlaneGraph& g);
std::string format_graph(const PlaneGraph& g);

}  // namespace cyclic
