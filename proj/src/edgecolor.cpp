#include "cyclic/edgecolor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "cyclic/errors.hpp"

namespace cyclic {

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(vertex_count, 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

int Multigraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int Multigraph::multiplicity() const {
  std::map<std::pair<int, int>, int> count;
  int best = 0;
  for (const auto& [a, b] : edges) best = std::max(best, ++count[std::minmax(a, b)]);
  return best;
}

int default_budget(const Multigraph& m) {
  const int delta = m.max_degree();
  return std::min(3 * delta / 2, delta + m.multiplicity());
}

bool is_proper(const Multigraph& m, const EdgeColoring& c) {
  if (c.color.size() != m.edges.size()) return false;
  std::vector<std::vector<int>> at(m.vertex_count);
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (c.color[i] < 0) return false;
    at[m.edges[i].first].push_back(c.color[i]);
    at[m.edges[i].second].push_back(c.color[i]);
  }
  for (auto& colors : at) {
    std::sort(colors.begin(), colors.end());
    if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) return false;
  }
  std::vector<int> distinct = c.color;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return static_cast<int>(distinct.size()) == c.colors_used;
}

namespace {

class EdgeColorSearch {
 public:
  EdgeColorSearch(const Multigraph& m, int budget)
      : m_(m),
        budget_(budget),
        color_(m.edges.size(), -1),
        used_(m.vertex_count, std::vector<char>(budget, 0)),
        used_count_(m.vertex_count, 0),
        remaining_(m.degrees()) {
    const auto deg = m.degrees();
    order_.resize(m.edges.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      const auto [a, b] = m.edges[x];
      const auto [c, d] = m.edges[y];
      return deg[a] + deg[b] > deg[c] + deg[d];
    });
  }

  std::optional<EdgeColoring> run() {
    for (const auto& [a, b] : m_.edges)
      if (a == b) throw precondition_error("multigraph has a loop");
    if (m_.edges.empty()) return EdgeColoring{};
    for (int r : remaining_)
      if (r > budget_) return std::nullopt;
    if (!expand(0, 0)) return std::nullopt;
    EdgeColoring out;
    out.color = color_;
    out.colors_used = 1 + *std::max_element(color_.begin(), color_.end());
    return out;
  }

 private:
  bool fits(int v) const { return budget_ - used_count_[v] >= remaining_[v]; }

  bool expand(std::size_t depth, int opened) {
    if (depth == order_.size()) return true;
    const int e = order_[depth];
    const auto [a, b] = m_.edges[e];
    const int limit = std::min(budget_, opened + 1);
    for (int c = 0; c < limit; ++c) {
      if (used_[a][c] || used_[b][c]) continue;
      assign(e, a, b, c);
      if (fits(a) && fits(b) && expand(depth + 1, std::max(opened, c + 1))) return true;
      unassign(e, a, b, c);
    }
    return false;
  }

  void assign(int e, int a, int b, int c) {
    color_[e] = c;
    used_[a][c] = used_[b][c] = 1;
    ++used_count_[a];
    ++used_count_[b];
    --remaining_[a];
    --remaining_[b];
  }

  void unassign(int e, int a, int b, int c) {
    color_[e] = -1;
    used_[a][c] = used_[b][c] = 0;
    --used_count_[a];
    --used_count_[b];
    ++remaining_[a];
    ++remaining_[b];
  }

  const Multigraph& m_;
  int budget_;
  std::vector<int> order_;
  std::vector<int> color_;
  std::vector<std::vector<char>> used_;
  std::vector<int> used_count_;
  std::vector<int> remaining_;
};

}  // namespace

std::optional<EdgeColoring> try_edge_color(const Multigraph& m, int budget) {
  if (budget < 0) return std::nullopt;
  return EdgeColorSearch(m, budget).run();
}

EdgeColoring edge_color(const Multigraph& m, int budget) {
  auto result = try_edge_color(m, budget);
  if (!result)
    throw infeasible_budget("no proper edge coloring with " + std::to_string(budget) + " colors");
  return *result;
}

EdgeColoring edge_color(const Multigraph& m) { return edge_color(m, default_budget(m)); }

EdgeColoring minimum_edge_coloring(const Multigraph& m, int guard) {
  if (static_cast<int>(m.edges.size()) > guard)
    throw guard_exceeded("multigraph has " + std::to_string(m.edges.size()) +
                         " edges, exact chromatic index guard is " + std::to_string(guard));
  for (int k = m.max_degree();; ++k)
    if (auto c = try_edge_color(m, k)) return *c;
}

int chromatic_index(const Multigraph& m, int guard) {
  return minimum_edge_coloring(m, guard).colors_used;
}

}  // namespace cyclic
