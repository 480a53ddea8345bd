#pragma once

#include <string>

#include <json.hpp>

#include "cyclic/bounds.hpp"
#include "cyclic/coloring.hpp"
#include "cyclic/plane_graph.hpp"
#include "cyclic/reduction.hpp"

namespace cyclic {

using Json = nlohmann::ordered_json;

// Faces, degree parameters and connectivity class.
Json faces_json(const PlaneGraph& g);

Json coloring_json(const PlaneGraph& g, const CyclicColoring& c);

Json bound_report_json(const BoundReport& report);

// Reduction, path table, face map and S(G) with an edge coloring at the
// default budget.
Json reduction_json(const PlaneGraph& g, const ReductionResult& r);

// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace cyclic
