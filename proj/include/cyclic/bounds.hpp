#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclic/coloring.hpp"
#include "cyclic/plane_graph.hpp"

namespace cyclic {

struct BoundOptions {
  int guard = kDefaultGuard;
  int edge_guard = kDefaultEdgeGuard;
};

// A bound value plus how its ingredients were obtained.
struct BoundValue {
  int value = 0;
  std::string note;
};

// floor(3 D*/2).
int bound_ccc(const PlaneGraph& g);

// max{D* + 3k* + 2, D* + 14}; needs D* >= 5.
int bound_bbgh(const PlaneGraph& g);

// Smallest r over all satisfied clauses of the "+r" list for a simple
// 3-connected plane graph.
int plummer_toft_r(const PlaneGraph& r_graph);

// True iff g is 2-connected, not a cycle, and its reduction is simple
// 3-connected.
bool is_subdivision_of_3_connected(const PlaneGraph& g);

// max{D* + 3t + 8, D* + 14} on subdivisions of simple 3-connected graphs with D* >= 5.
int bound_thm4(const PlaneGraph& g);

// chi'(S) + chi_c(R).
BoundValue bound_thm6(const PlaneGraph& g, const BoundOptions& opts = {});
// floor(3/2 max_f{deg_G(f) - deg_R(f')}) + chi_c(R).
BoundValue bound_thm7(const PlaneGraph& g, const BoundOptions& opts = {});
// max_f{deg_G(f) - deg_R(f')} + t + chi_c(R).
BoundValue bound_thm8(const PlaneGraph& g, const BoundOptions& opts = {});
// D* + t + r on regular subdivisions.
int bound_cor9(const PlaneGraph& g);

// chi_c(R) as used inside the subdivision theorems: the oracle when R fits
// the guard, else D*(R) + r.
struct ReducedChromatic {
  int value = 0;
  bool exact = false;
};
ReducedChromatic reduced_chromatic(const PlaneGraph& r_graph, int guard);

enum class BoundKind { conjecture, theorem, literature };
std::string to_string(BoundKind kind);

struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::theorem;
  std::optional<int> value;  // empty when inapplicable
  std::string note;          // unmet hypothesis, or ingredient provenance
  bool applicable() const { return value.has_value(); }
};

enum class Verdict { holds, holds_by_bound, violated, unknown, not_applicable };
std::string to_string(Verdict v);

struct ConjectureFlag {
  std::string name;
  std::optional<int> bound;
  Verdict verdict = Verdict::unknown;
  std::string certified_by;  // proven bound at or below the conjectured one
  std::string note;
};

struct BoundReport {
  std::string graph_id;
  int vertex_count = 0;
  int delta_star = 0;
  std::optional<int> t;
  std::optional<int> k_star;
  std::optional<int> exact;
  std::vector<BoundEntry> entries;
  std::vector<ConjectureFlag> flags;
  std::optional<bool> bbc_raw;  // exact <= D* + k*, no verdict attached

  bool violation() const;
  const BoundEntry* entry(const std::string& name) const;
  const ConjectureFlag* flag(const std::string& name) const;
  std::optional<int> min_applicable(bool proven_only) const;
};

std::vector<BoundEntry> evaluate_bounds(const PlaneGraph& g, const BoundOptions& opts = {});

std::vector<ConjectureFlag> check_conjectures(const PlaneGraph& g, std::optional<int> exact,
                                              const std::vector<BoundEntry>& entries);

// Runs the oracle when g fits the guard, then every bound and conjecture.
BoundReport make_bound_report(const std::string& graph_id, const PlaneGraph& g, const BoundOptions& opts = {});

std::string csv_header();
std::string csv_row(const BoundReport& report);

}  // namespace cyclic
